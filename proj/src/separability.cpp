#include "qsep/separability.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>

namespace qsep {

ComplexMatrix partial_transpose(const ComplexMatrix& sigma, Side side) {
  if (!sigma.is_square() || sigma.rows() != 4) throw Error(ErrorKind::WrongDim, "partial_transpose needs a 4x4 matrix");
  ComplexMatrix out(4);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          const auto row = static_cast<std::size_t>(2 * m + n);
          const auto col = static_cast<std::size_t>(2 * r + s);
          out(row, col) = side == Side::Y ? sigma(2 * m + s, 2 * r + n) : sigma(2 * r + n, 2 * m + s);
        }
      }
    }
  }
  return out;
}

PptVerdict ppt_separable(const DensityMatrix& sigma, double tol) { return ppt_separable(sigma, ReductionLabel{}, tol); }

PptVerdict ppt_separable(const DensityMatrix& sigma, const ReductionLabel& label, double tol) {
  if (sigma.n_qubits() != 2) throw Error(ErrorKind::WrongDim, "ppt_separable needs a two-qubit state");
  // Unvalidated input is diagonalized through its Hermitian part.
  const double herm_tol =
      sigma.validated() ? std::max(tol, sigma.tol()) : std::numeric_limits<double>::infinity();
  const double lambda = hermitian_eigenvalues(partial_transpose(sigma.matrix(), Side::Y), herm_tol).min();
  return PptVerdict{label, lambda, lambda >= -tol, tol};
}

std::string_view to_string(Conclusion c) { return c == Conclusion::Entangled ? "ENTANGLED" : "INCONCLUSIVE"; }

double WitnessReport::min_pt_eigenvalue() const {
  double m = verdicts.empty() ? 0.0 : verdicts.front().min_pt_eigenvalue;
  for (const auto& v : verdicts) m = std::min(m, v.min_pt_eigenvalue);
  return m;
}

WitnessReport witness_from_reductions(const ReductionSet& reductions, double tol) {
  WitnessReport report;
  report.verdicts.reserve(reductions.size());
  const PptVerdict* worst = nullptr;
  for (const auto& entry : reductions) {
    report.verdicts.push_back(ppt_separable(entry.state, entry.label, tol));
  }
  for (const auto& v : report.verdicts) {
    if (!v.separable && (worst == nullptr || v.min_pt_eigenvalue < worst->min_pt_eigenvalue)) worst = &v;
  }
  if (worst != nullptr) {
    report.conclusion = Conclusion::Entangled;
    report.culprit = worst->label;
  }
  return report;
}

WitnessReport witness_tripartite(const DensityMatrix& rho, double tol) {
  return witness_from_reductions(reduce_all_tripartite(rho), tol);
}

WitnessReport witness_quadripartite(const DensityMatrix& rho, double tol) {
  return witness_from_reductions(reduce_all_quadripartite(rho), tol);
}

WitnessReport witness(const DensityMatrix& rho, double tol) { return witness_from_reductions(reduce_all(rho), tol); }

bool necessary_condition_holds(const DensityMatrix& rho, double tol) {
  return witness(rho, tol).conclusion == Conclusion::Inconclusive;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Split split) {
  switch (split) {
    case Split::A_BC: return "A-BC";
    case Split::B_CA: return "B-CA";
    case Split::C_AB: return "C-AB";
  }
  return "?";
}

ComplexMatrix split_coefficient_matrix(const PureState& psi, Split split) {
  if (psi.n_qubits() != 3) throw Error(ErrorKind::WrongArity, "split tests need a three-qubit pure state");
  const auto c = [&psi](int i, int j, int k) { return psi[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
  ComplexMatrix m(2, 4);
  for (int row = 0; row < 2; ++row) {
    for (int u = 0; u < 2; ++u) {
      for (int v = 0; v < 2; ++v) {
        const auto col = static_cast<std::size_t>(2 * u + v);
        switch (split) {
          case Split::A_BC: m(row, col) = c(row, u, v); break;
          case Split::B_CA: m(row, col) = c(u, row, v); break;
          case Split::C_AB: m(row, col) = c(u, v, row); break;
        }
      }
    }
  }
  return m;
}

double max_minor_modulus(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 4) throw Error(ErrorKind::WrongDim, "max_minor_modulus needs a 2x4 matrix");
  double worst = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      worst = std::max(worst, std::abs(m(0, a) * m(1, b) - m(0, b) * m(1, a)));
    }
  }
  return worst;
}

SplitVerdict pure_split_separable(const PureState& psi, Split split, double tol) {
  const double minor = max_minor_modulus(split_coefficient_matrix(psi, split));
  return SplitVerdict{split, minor <= tol, minor};
}

bool pure_fully_separable(const PureState& psi, double tol) {
  constexpr std::array<Split, 3> kSplits{Split::A_BC, Split::B_CA, Split::C_AB};
  return std::all_of(kSplits.begin(), kSplits.end(), [&](Split s) { return pure_split_separable(psi, s, tol).separable; });
}

}  // namespace qsep
