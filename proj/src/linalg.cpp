#include "qsep/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qsep {

namespace {

constexpr int kMaxSweeps = 100;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!m.all_finite()) {
    throw Error(ErrorKind::NonFinite, std::string(op) + ": matrix has NaN or Inf entries");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = 0; q < a.cols(); ++q) {
      if (p != q) s += std::norm(a(p, q));
    }
  }
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q) of a Hermitian matrix.
// The (p, q) entry is first made real by a diagonal phase on index q, then a
// real Givens rotation finishes the job.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double apq_abs = std::abs(a(p, q));
  if (apq_abs == 0.0) return;

  const Complex phase = std::conj(a(p, q)) / apq_abs;  // e^{-i phi}
  for (std::size_t k = 0; k < n; ++k) a(k, q) *= phase;
  for (std::size_t k = 0; k < n; ++k) a(q, k) *= std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * apq_abs);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * apq_abs;
  a(q, q) = aqq + t * apq_abs;
}

// Scatter the bits of `value` (most significant first) onto the given parties.
std::size_t scatter_bits(std::span<const Party> parties, std::size_t value, int n_qubits) {
  const std::size_t width = parties.size();
  std::size_t index = 0;
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t bit = (value >> (width - 1 - i)) & 1U;
    index |= bit << (n_qubits - 1 - static_cast<int>(parties[i]));
  }
  return index;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    std::ostringstream msg;
    msg << "expected " << rows_ * cols_ << " entries, got " << entries_.size();
    throw Error(ErrorKind::BadDimension, msg.str());
  }
  require_finite(*this, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  ComplexMatrix m(diag.size());
  std::size_t i = 0;
  for (double d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(n_rows * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw Error(ErrorKind::BadDimension, "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n_rows, n_cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) throw Error(ErrorKind::WrongDim, "matrix is not square");
  return rows_;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::BadDimension, "shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::BadDimension, "shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::BadDimension, "shape mismatch in *");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::BadDimension, "shape mismatch in max_abs_diff");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Spectra

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  require_finite(m, "hermitian_eigenvalues");
  const std::size_t n = m.dim();

  double asym = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
  }
  if (asym > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (max |M - M^dagger| = " << asym << ")";
    throw Error(ErrorKind::NonHermitian, msg.str(), asym);
  }

  ComplexMatrix a = m;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(c, r) = std::conj(a(r, c));
    }
  }

  const double target = 1e-12 * std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) >= target) {
    if (++sweep > kMaxSweeps) throw Error(ErrorKind::NoConvergence, "Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, p, q);
    }
  }

  Spectrum spec;
  spec.eigenvalues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues.push_back(a(i, i).real());
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  return spec;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  // Orthogonalize the shorter family of vectors: columns of m, or of m^dagger.
  ComplexMatrix w = m.rows() >= m.cols() ? m : m.adjoint();
  const std::size_t len = w.rows();
  const std::size_t count = w.cols();
  const double eps = 1e-15;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < count; ++p) {
      for (std::size_t q = p + 1; q < count; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          gamma += std::conj(w(k, p)) * w(k, q);
        }
        const double g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < len; ++k) {
          const Complex wp = w(k, p);
          const Complex wq = w(k, q) * phase;
          w(k, p) = c * wp - s * wq;
          w(k, q) = s * wp + c * wq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(count);
  for (std::size_t j = 0; j < count; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k) s += std::norm(w(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

int matrix_rank(const ComplexMatrix& m, double tol) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = tol * sv.front();
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parties

char party_name(Party p) { return static_cast<char>('A' + static_cast<int>(p)); }

Party party_from_char(char c) {
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u < 'A' || u > 'D') throw Error(ErrorKind::BadLabel, std::string("unknown party '") + c + "'");
  return static_cast<Party>(u - 'A');
}

std::size_t basis_index(std::span<const int> bits) {
  std::size_t index = 0;
  for (int b : bits) index = (index << 1U) | static_cast<std::size_t>(b & 1);
  return index;
}

// ---------------------------------------------------------------------------
// Density matrices

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, int n_qubits, double tol) {
  if (!m.is_square() || m.rows() != (std::size_t{1} << n_qubits)) {
    throw Error(ErrorKind::BadDimension, "matrix dimension does not match 2^n_qubits");
  }
  return DensityMatrix(std::move(m), n_qubits, tol, false);
}

DensityMatrix validate_density(const ComplexMatrix& m, int n_qubits, double tol) {
  if (n_qubits < 1 || !m.is_square() || m.rows() != (std::size_t{1} << n_qubits)) {
    std::ostringstream msg;
    msg << "expected a " << (std::size_t{1} << std::max(n_qubits, 0)) << "x" << (std::size_t{1} << std::max(n_qubits, 0))
        << " matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::BadDimension, msg.str());
  }
  require_finite(m, "validate_density");

  const std::size_t n = m.rows();
  double delta = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) delta = std::max(delta, std::abs(m(r, c) - std::conj(m(c, r))));
  }
  if (delta > tol) {
    std::ostringstream msg;
    msg << "NotHermitian(" << delta << ")";
    throw Error(ErrorKind::NotHermitian, msg.str(), delta);
  }

  const double trace_err = std::abs(m.trace() - 1.0);
  if (trace_err > tol) {
    std::ostringstream msg;
    msg << "TraceNotOne(" << trace_err << ")";
    throw Error(ErrorKind::TraceNotOne, msg.str(), trace_err);
  }

  const double lambda_min = hermitian_eigenvalues(m, tol).min();
  if (lambda_min < -tol) {
    std::ostringstream msg;
    msg << "NotPSD(" << lambda_min << ")";
    throw Error(ErrorKind::NotPSD, msg.str(), lambda_min);
  }
  return DensityMatrix(m, n_qubits, tol, true);
}

DensityMatrix derive_density(const DensityMatrix& parent, ComplexMatrix m, int n_qubits) {
  if (parent.validated()) return validate_density(m, n_qubits, parent.tol());
  return DensityMatrix::unchecked(std::move(m), n_qubits, parent.tol());
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int n_qubits, std::span<const Party> keep) {
  if (keep.empty() || static_cast<int>(keep.size()) >= n_qubits) {
    throw Error(ErrorKind::BadSubset, "keep must be a nonempty strict subset of the parties");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
  for (Party p : keep) {
    const int q = static_cast<int>(p);
    if (q < 0 || q >= n_qubits || seen[q]) {
      throw Error(ErrorKind::BadSubset, std::string("invalid or repeated party ") + party_name(p));
    }
    seen[q] = true;
  }
  std::vector<Party> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (!seen[q]) traced.push_back(static_cast<Party>(q));
  }
  if (m.rows() != (std::size_t{1} << n_qubits) || !m.is_square()) {
    throw Error(ErrorKind::BadDimension, "matrix dimension does not match 2^n_qubits");
  }

  const std::size_t out_dim = std::size_t{1} << keep.size();
  const std::size_t env_dim = std::size_t{1} << traced.size();
  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    const std::size_t row_base = scatter_bits(keep, r, n_qubits);
    for (std::size_t c = 0; c < out_dim; ++c) {
      const std::size_t col_base = scatter_bits(keep, c, n_qubits);
      Complex sum = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e) {
        const std::size_t env = scatter_bits(traced, e, n_qubits);
        sum += m(row_base | env, col_base | env);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Party> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.n_qubits(), keep);
  return derive_density(rho, std::move(reduced), static_cast<int>(keep.size()));
}

// ---------------------------------------------------------------------------
// Pure states

PureState::PureState(std::vector<Complex> coeffs, double tol) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || !is_power_of_two(coeffs_.size())) {
    throw Error(ErrorKind::BadDimension, "pure state length must be 2^n with n >= 1");
  }
  n_qubits_ = std::countr_zero(coeffs_.size());
  double norm2 = 0.0;
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::NonFinite, "pure state has NaN or Inf coefficients");
    }
    norm2 += std::norm(c);
  }
  if (std::abs(norm2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "pure state is not normalized (sum |c|^2 = " << norm2 << ")";
    throw Error(ErrorKind::NotNormalized, msg.str(), norm2 - 1.0);
  }
}

DensityMatrix PureState::density(double tol) const {
  return validate_density(ComplexMatrix::outer(coeffs_), n_qubits_, tol);
}

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::WrongDim: return "WrongDim";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadWay: return "BadWay";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadGamma: return "BadGamma";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qsep
