#pragma once

// PPT decisions on two-qubit reductions and the multipartite witness built on
// them. For two qubits a positive partial transpose is equivalent to
// separability, so each per-reduction verdict is exact. The multipartite
// verdict is one-sided: ENTANGLED is a certificate, INCONCLUSIVE never
// claims separability of a mixed state.

#include <optional>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/reductions.hpp"

namespace qsep {

enum class Side { X, Y };

/// Partial transpose of a 4x4 matrix on one qubit of the pair.
///   Y: [s^T_Y]_{mn,rs} = s_{ms,rn}
///   X: [s^T_X]_{mn,rs} = s_{rn,ms}
ComplexMatrix partial_transpose(const ComplexMatrix& sigma, Side side);

struct PptVerdict {
  ReductionLabel label;
  double min_pt_eigenvalue = 0.0;
  bool separable = true;
  double tolerance_used = kValidationTol;
};

/// Smallest eigenvalue of sigma^T_Y; separable iff it is >= -tol.
PptVerdict ppt_separable(const DensityMatrix& sigma, double tol = kValidationTol);
PptVerdict ppt_separable(const DensityMatrix& sigma, const ReductionLabel& label, double tol = kValidationTol);

enum class Conclusion { Entangled, Inconclusive };

std::string_view to_string(Conclusion c);

struct WitnessReport {
  std::vector<PptVerdict> verdicts;
  Conclusion conclusion = Conclusion::Inconclusive;
  /// Label with the most negative PT eigenvalue, set only when entangled.
  std::optional<ReductionLabel> culprit;

  double min_pt_eigenvalue() const;
};

/// Evaluates every verdict, even after the first failure.
WitnessReport witness_from_reductions(const ReductionSet& reductions, double tol = kValidationTol);
WitnessReport witness_tripartite(const DensityMatrix& rho, double tol = kValidationTol);
WitnessReport witness_quadripartite(const DensityMatrix& rho, double tol = kValidationTol);
/// Dispatches on arity (3 or 4).
WitnessReport witness(const DensityMatrix& rho, double tol = kValidationTol);

/// True iff no reduction fails PPT. This is necessary for full separability
/// only; bound entangled states pass it.
bool necessary_condition_holds(const DensityMatrix& rho, double tol = kValidationTol);

// ---------------------------------------------------------------------------
// Pure three-qubit states

enum class Split { A_BC, B_CA, C_AB };

std::string_view to_string(Split split);

struct SplitVerdict {
  Split split = Split::A_BC;
  bool separable = true;
  double max_minor_modulus = 0.0;
};

/// 2x4 coefficient matrix whose rows are indexed by the single party's bit:
///   A_BC  c000 c001 c010 c011 / c100 c101 c110 c111
///   B_CA  c000 c001 c100 c101 / c010 c011 c110 c111
///   C_AB  c000 c010 c100 c110 / c001 c011 c101 c111
ComplexMatrix split_coefficient_matrix(const PureState& psi, Split split);

/// Largest modulus among the six 2x2 minors of a 2x4 matrix.
double max_minor_modulus(const ComplexMatrix& m);

/// Separable across the split iff the coefficient matrix has rank < 2, i.e.
/// every 2x2 minor vanishes within tol. Throws WrongArity for non-3-qubit
/// states.
SplitVerdict pure_split_separable(const PureState& psi, Split split, double tol = kRankTol);

/// Product of three single-qubit states iff separable across all three splits.
bool pure_fully_separable(const PureState& psi, double tol = kRankTol);

}  // namespace qsep
