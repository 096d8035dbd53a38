#pragma once

// Dense complex linear algebra for small qubit operators (at most 16x16).
//
// Basis convention: a composite index packs one bit per party with party A
// as the most significant bit, b = sum_q bit_q * 2^(n-1-q). For three qubits
// the row of |i_A j_B k_C> is 4i + 2j + k.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qsep/error.hpp"

namespace qsep {

using Complex = std::complex<double>;

inline constexpr double kValidationTol = 1e-9;
inline constexpr double kRankTol = 1e-10;

/// Row-major dense complex matrix. Usually square; rectangular shapes are
/// allowed for coefficient matrices and Kraus operators.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}
  /// Throws BadDimension on a length mismatch and NonFinite on NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Side length of a square matrix; throws WrongDim otherwise.
  std::size_t dim() const;

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  bool all_finite() const noexcept;
  Complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending real eigenvalues.
struct Spectrum {
  std::vector<double> eigenvalues;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  double sum() const;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NonHermitian if |M - M^dagger| exceeds tol anywhere and NonFinite
/// on NaN/Inf entries.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol = kValidationTol);

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix& m);

/// Count of singular values above tol times the largest one.
int matrix_rank(const ComplexMatrix& m, double tol = kRankTol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// ---------------------------------------------------------------------------
// Parties and states

enum class Party : int { A = 0, B = 1, C = 2, D = 3 };

char party_name(Party p);
Party party_from_char(char c);  // case-insensitive, throws BadLabel

/// Composite index of a computational basis state, A most significant.
std::size_t basis_index(std::span<const int> bits);

/// Hermitian, unit-trace, PSD matrix on n_qubits qubits. Built only through
/// validate_density() or, for deliberately unvalidated input, unchecked().
class DensityMatrix {
 public:
  /// Wraps m without validation. validated() reports false on the result
  /// and on anything derived from it.
  static DensityMatrix unchecked(ComplexMatrix m, int n_qubits, double tol = kValidationTol);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  double tol() const noexcept { return tol_; }
  bool validated() const noexcept { return validated_; }

  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

 private:
  DensityMatrix(ComplexMatrix m, int n_qubits, double tol, bool validated)
      : mat_(std::move(m)), n_qubits_(n_qubits), tol_(tol), validated_(validated) {}

  friend DensityMatrix validate_density(const ComplexMatrix&, int, double);

  ComplexMatrix mat_;
  int n_qubits_ = 0;
  double tol_ = kValidationTol;
  bool validated_ = false;
};

/// Checks, in order, shape, finiteness, Hermiticity, unit trace and
/// positivity. Failures throw NotHermitian(delta), TraceNotOne(delta) or
/// NotPSD(lambda_min) with the measured value attached.
DensityMatrix validate_density(const ComplexMatrix& m, int n_qubits, double tol = kValidationTol);

/// Re-validates a matrix derived from `parent` with the parent's tolerance,
/// or wraps it unchecked when the parent itself was unchecked.
DensityMatrix derive_density(const DensityMatrix& parent, ComplexMatrix m, int n_qubits);

/// Reduced state on `keep` (nonempty strict subset, no repeats). Output
/// qubits follow the order given in keep.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Party> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, int n_qubits, std::span<const Party> keep);

/// Unit-norm coefficient vector of an n-qubit pure state.
class PureState {
 public:
  /// Throws BadDimension unless the length is 2^n (n >= 1) and
  /// NotNormalized when | sum |c|^2 - 1 | > tol.
  explicit PureState(std::vector<Complex> coeffs, double tol = kValidationTol);

  int n_qubits() const noexcept { return n_qubits_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  /// |psi><psi|
  DensityMatrix density(double tol = kValidationTol) const;

 private:
  std::vector<Complex> coeffs_;
  int n_qubits_ = 0;
};

}  // namespace qsep
