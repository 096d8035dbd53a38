#pragma once

// Constructors for the state families used throughout the tests and the CLI.
// Entries are exact dyadic rationals wherever the family allows it.

#include <array>
#include <span>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/reductions.hpp"

namespace qsep {

/// Single-qubit amplitude pair (v0, v1).
using Qubit = std::array<Complex, 2>;

DensityMatrix maximally_mixed(int n_qubits);

/// (|0...0> + |1...1>)/sqrt(2) on 3 or 4 qubits.
DensityMatrix ghz(int n_qubits = 3);
PureState ghz_pure(int n_qubits = 3);

/// (|00> + |11>)/sqrt(2).
DensityMatrix bell();

/// x R + (1 - x) I/8, where R is an equal mixture of (|010> - |101>)/sqrt(2)
/// and (|011> - |100>)/sqrt(2). Its A,BC reduction is the two-qubit Werner
/// state werner_two_qubit(x). Throws OutOfRange unless 0 <= x <= 1.
DensityMatrix werner_embedded(double x);

/// x |psi-><psi-| + (1 - x) I/4.
DensityMatrix werner_two_qubit(double x);

/// Lifts a two-qubit state R to three qubits in one of six ways so that a
/// single reduction returns R exactly:
///   1  A,BC    [rho]_{ijj,rss} = [rho]_{ij(1-j),rs(1-s)} = R_{ij,rs}/2
///   2  B,CA    [rho]_{jij,srs} = [rho]_{(1-j)ij,(1-s)rs} = R_{ij,rs}/2
///   3  C,AB    [rho]_{jji,ssr} = [rho]_{j(1-j)i,s(1-s)r} = R_{ij,rs}/2
///   4  A,B     R (x) I/2
///   5  A,C     R on A,C with B maximally mixed
///   6  B,C     I/2 (x) R
/// Throws BadWay for way outside 1..6.
DensityMatrix embed_bipartite(const DensityMatrix& r, int way);

/// The reduction that recovers R from embed_bipartite(R, way).
ReductionLabel embedding_label(int way);

/// Weights of the three "molecule" components. Each in [0, 1], summing to 1.
struct MoleculeParams {
  double p_ab = 0.0;
  double p_ac = 0.0;
  double p_bc = 0.0;
};

/// Throws BadParams with the violated constraint.
void validate_molecule_params(const MoleculeParams& params, double tol = kValidationTol);

/// sum_rs p_rs |Psi_rs><Psi_rs| with
/// |Psi_rs> = (|0_r 1_s> + |1_r 0_s>)/sqrt(2) (x) |0_rest>.
DensityMatrix molecule_state(const MoleculeParams& params);

/// Pair-trace reduction of molecule_state(params) on `pair`.
DensityMatrix molecule_pair_reduction_entries(const MoleculeParams& params, const ReductionLabel& pair);

/// The four mutually orthogonal product vectors of the three-qubit
/// unextendible product basis:
///   |0>|1>|+>,  |1>|+>|0>,  |+>|0>|1>,  |->|->|->.
std::array<PureState, 4> upb_vectors();

/// (I - sum_i |psi_i><psi_i|)/4 over upb_vectors(). Bound entangled: every
/// reduction passes PPT.
DensityMatrix upb_state();

/// Tensor product of single-qubit pure states, A first. Throws
/// NotNormalized when a factor is off unit norm by more than tol.
PureState product_pure_state(std::span<const Qubit> factors, double tol = kValidationTol);
DensityMatrix product_pure(const Qubit& a, const Qubit& b, const Qubit& c, double tol = kValidationTol);

/// 2 Re(v0 v1*).
double coherence_factor(const Qubit& v);

/// [[|u0|^2, g u0 u1*], [g u0* u1, |u1|^2]]. Throws BadGamma for |g| > 1
/// and NotNormalized when u is off unit norm.
ComplexMatrix omega_matrix(const Qubit& u, double gamma);

}  // namespace qsep
