#include "qsep/states.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsep {

namespace {

std::size_t idx3(int a, int b, int c) { return static_cast<std::size_t>(4 * a + 2 * b + c); }

// Exact projector v v^dagger / |v|^2 for a vector with small integer entries.
ComplexMatrix integer_projector(const std::vector<int>& v) {
  int norm2 = 0;
  for (int e : v) norm2 += e * e;
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = static_cast<double>(v[r] * v[c]) / norm2;
  }
  return m;
}

// Unnormalized integer forms of the UPB vectors.
std::array<std::vector<int>, 4> upb_integer_vectors() {
  std::array<std::vector<int>, 4> vs;
  for (auto& v : vs) v.assign(8, 0);
  vs[0][idx3(0, 1, 0)] = vs[0][idx3(0, 1, 1)] = 1;  // |0>|1>|+>
  vs[1][idx3(1, 0, 0)] = vs[1][idx3(1, 1, 0)] = 1;  // |1>|+>|0>
  vs[2][idx3(0, 0, 1)] = vs[2][idx3(1, 0, 1)] = 1;  // |+>|0>|1>
  for (std::size_t b = 0; b < 8; ++b) vs[3][b] = std::popcount(b) % 2 == 0 ? 1 : -1;  // |->|->|->
  return vs;
}

void require_unit(const Qubit& v, double tol) {
  const double n2 = std::norm(v[0]) + std::norm(v[1]);
  if (std::abs(n2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "single-qubit factor is not normalized (|v|^2 = " << n2 << ")";
    throw Error(ErrorKind::NotNormalized, msg.str(), n2 - 1.0);
  }
}

}  // namespace

DensityMatrix maximally_mixed(int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  return validate_density(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)), n_qubits);
}

DensityMatrix ghz(int n_qubits) {
  if (n_qubits < 2) throw Error(ErrorKind::WrongArity, "GHZ needs at least two qubits");
  const std::size_t last = (std::size_t{1} << n_qubits) - 1;
  ComplexMatrix m(last + 1);
  m(0, 0) = m(0, last) = m(last, 0) = m(last, last) = 0.5;
  return validate_density(m, n_qubits);
}

PureState ghz_pure(int n_qubits) {
  if (n_qubits < 2) throw Error(ErrorKind::WrongArity, "GHZ needs at least two qubits");
  std::vector<Complex> c(std::size_t{1} << n_qubits, 0.0);
  c.front() = c.back() = 1.0 / std::sqrt(2.0);
  return PureState(std::move(c));
}

DensityMatrix bell() { return ghz(2); }

DensityMatrix werner_embedded(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "werner parameter x = " << x << " outside [0, 1]";
    throw Error(ErrorKind::OutOfRange, msg.str(), x);
  }
  // R: diagonal 1/4 on |010>, |011>, |100>, |101>; coherences -1/4 between
  // |010>,|101> and |011>,|100> (both orientations).
  ComplexMatrix r(8);
  for (auto b : {idx3(0, 1, 0), idx3(0, 1, 1), idx3(1, 0, 0), idx3(1, 0, 1)}) r(b, b) = 0.25;
  r(idx3(0, 1, 0), idx3(1, 0, 1)) = r(idx3(1, 0, 1), idx3(0, 1, 0)) = -0.25;
  r(idx3(0, 1, 1), idx3(1, 0, 0)) = r(idx3(1, 0, 0), idx3(0, 1, 1)) = -0.25;

  ComplexMatrix rho = r * Complex(x) + ComplexMatrix::identity(8) * Complex((1.0 - x) / 8.0);
  return validate_density(rho, 3);
}

DensityMatrix werner_two_qubit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::OutOfRange, "werner parameter outside [0, 1]", x);
  ComplexMatrix s(4);
  s(1, 1) = s(2, 2) = 0.5;
  s(1, 2) = s(2, 1) = -0.5;
  return validate_density(s * Complex(x) + ComplexMatrix::identity(4) * Complex((1.0 - x) / 4.0), 2);
}

DensityMatrix embed_bipartite(const DensityMatrix& r, int way) {
  if (r.n_qubits() != 2) throw Error(ErrorKind::WrongArity, "embed_bipartite needs a two-qubit state");
  if (way < 1 || way > 6) {
    throw Error(ErrorKind::BadWay, "embedding way must be 1..6, got " + std::to_string(way));
  }
  ComplexMatrix rho(8);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int rr = 0; rr < 2; ++rr) {
        for (int s = 0; s < 2; ++s) {
          const Complex half = 0.5 * r(static_cast<std::size_t>(2 * i + j), static_cast<std::size_t>(2 * rr + s));
          for (int p = 0; p < 2; ++p) {
            std::size_t row = 0, col = 0;
            switch (way) {
              case 1: row = idx3(i, j, j ^ p), col = idx3(rr, s, s ^ p); break;
              case 2: row = idx3(j ^ p, i, j), col = idx3(s ^ p, rr, s); break;
              case 3: row = idx3(j, j ^ p, i), col = idx3(s, s ^ p, rr); break;
              case 4: row = idx3(i, j, p), col = idx3(rr, s, p); break;
              case 5: row = idx3(i, p, j), col = idx3(rr, p, s); break;
              case 6: row = idx3(p, i, j), col = idx3(p, rr, s); break;
            }
            rho(row, col) = half;
          }
        }
      }
    }
  }
  if (!r.validated()) return DensityMatrix::unchecked(std::move(rho), 3, r.tol());
  return validate_density(rho, 3, r.tol());
}

ReductionLabel embedding_label(int way) {
  switch (way) {
    case 1: return split_label(Party::A, Party::B, Party::C);
    case 2: return split_label(Party::B, Party::C, Party::A);
    case 3: return split_label(Party::C, Party::A, Party::B);
    case 4: return pair_label(Party::A, Party::B);
    case 5: return pair_label(Party::A, Party::C);
    case 6: return pair_label(Party::B, Party::C);
    default: throw Error(ErrorKind::BadWay, "embedding way must be 1..6, got " + std::to_string(way));
  }
}

void validate_molecule_params(const MoleculeParams& params, double tol) {
  for (double p : {params.p_ab, params.p_ac, params.p_bc}) {
    if (!std::isfinite(p) || p < -tol || p > 1.0 + tol) {
      std::ostringstream msg;
      msg << "molecule weight " << p << " outside [0, 1]";
      throw Error(ErrorKind::BadParams, msg.str(), p);
    }
  }
  const double sum = params.p_ab + params.p_ac + params.p_bc;
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream msg;
    msg << "molecule weights sum to " << sum << ", expected 1";
    throw Error(ErrorKind::BadParams, msg.str(), sum - 1.0);
  }
}

DensityMatrix molecule_state(const MoleculeParams& params) {
  validate_molecule_params(params);
  ComplexMatrix rho(8);
  const auto add_pair = [&rho](double weight, std::size_t u, std::size_t v) {
    const double h = weight / 2.0;
    rho(u, u) += h;
    rho(v, v) += h;
    rho(u, v) += h;
    rho(v, u) += h;
  };
  add_pair(params.p_ab, idx3(0, 1, 0), idx3(1, 0, 0));
  add_pair(params.p_ac, idx3(0, 0, 1), idx3(1, 0, 0));
  add_pair(params.p_bc, idx3(0, 0, 1), idx3(0, 1, 0));
  return validate_density(rho, 3);
}

DensityMatrix molecule_pair_reduction_entries(const MoleculeParams& params, const ReductionLabel& pair) {
  return reduce_pair(molecule_state(params), pair);
}

std::array<PureState, 4> upb_vectors() {
  const auto ints = upb_integer_vectors();
  const auto normalize = [](const std::vector<int>& v) {
    int n2 = 0;
    for (int e : v) n2 += e * e;
    std::vector<Complex> c;
    for (int e : v) c.emplace_back(e / std::sqrt(static_cast<double>(n2)));
    return PureState(std::move(c));
  };
  return {normalize(ints[0]), normalize(ints[1]), normalize(ints[2]), normalize(ints[3])};
}

DensityMatrix upb_state() {
  const auto vs = upb_integer_vectors();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      int dot = 0;
      for (std::size_t k = 0; k < 8; ++k) dot += vs[a][k] * vs[b][k];
      if (dot != 0) throw std::logic_error("UPB vectors are not mutually orthogonal");
    }
  }
  ComplexMatrix rho = ComplexMatrix::identity(8);
  for (const auto& v : vs) rho -= integer_projector(v);
  return validate_density(rho * Complex(0.25), 3);
}

PureState product_pure_state(std::span<const Qubit> factors, double tol) {
  std::vector<Complex> coeffs{1.0};
  for (const Qubit& f : factors) {
    require_unit(f, tol);
    std::vector<Complex> next;
    next.reserve(coeffs.size() * 2);
    for (const Complex& c : coeffs) {
      next.push_back(c * f[0]);
      next.push_back(c * f[1]);
    }
    coeffs = std::move(next);
  }
  return PureState(std::move(coeffs), 3 * tol + 1e-12);
}

DensityMatrix product_pure(const Qubit& a, const Qubit& b, const Qubit& c, double tol) {
  const std::array<Qubit, 3> factors{a, b, c};
  return product_pure_state(factors, tol).density();
}

double coherence_factor(const Qubit& v) { return 2.0 * (v[0] * std::conj(v[1])).real(); }

ComplexMatrix omega_matrix(const Qubit& u, double gamma) {
  require_unit(u, kValidationTol);
  if (!(std::abs(gamma) <= 1.0)) {
    std::ostringstream msg;
    msg << "coherence factor " << gamma << " outside [-1, 1]";
    throw Error(ErrorKind::BadGamma, msg.str(), gamma);
  }
  ComplexMatrix w(2);
  w(0, 0) = std::norm(u[0]);
  w(1, 1) = std::norm(u[1]);
  w(0, 1) = gamma * u[0] * std::conj(u[1]);
  w(1, 0) = gamma * std::conj(u[0]) * u[1];
  return w;
}

}  // namespace qsep
