#pragma once

// Bipartite two-qubit reductions of three- and four-qubit density matrices.
//
// Every reduction produces a 4x4 state on an output pair (X, Y). Each output
// qubit is fed by a group of parties: the first party of a group supplies
// the output bit, the remaining parties of the group are "linked" to it and
// enter only through the pattern bit (linked value XOR source value). The
// reduction sums over all pattern bits and over every party outside both
// groups. With no linked parties this is the ordinary partial trace.
//
//   A,BC   [r]_{ij,rs} = [rho]_{ijj,rss} + [rho]_{ij(1-j),rs(1-s)}
//   B,CA   [r]_{ij,rs} = [rho]_{jij,srs} + [rho]_{(1-j)ij,(1-s)rs}
//   C,AB   [r]_{ij,rs} = [rho]_{jji,ssr} + [rho]_{j(1-j)i,s(1-s)r}
//   AB,CD  [r]_{ij,rs} = sum_{p,q} [rho]_{i(i^p)j(j^q),r(r^p)s(s^q)}
//   A,BCD  [r]_{ij,rs} = sum_{p,q} [rho]_{ij(j^p)(j^q),rs(s^p)(s^q)}
//
// Each of these is a trace-preserving completely positive map with Kraus
// operators that send a pattern class of basis states onto |x y>.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

enum class ReductionKind { PairTrace, OneVsTwo, OneVsThree, TwoVsTwo };

std::string_view to_string(ReductionKind kind);

/// Names one reduction. Always canonical when obtained from the factory
/// functions or parse_label():
///   PairTrace   x={p}, y={q} with p < q
///   OneVsTwo    y is the cyclic successor pair of x inside the sorted
///               triple of involved parties: A,BC  B,CA  C,AB
///   OneVsThree  A,BCD  B,CDA  C,DAB  D,ABC
///   TwoVsTwo    both groups sorted, the group holding A first
struct ReductionLabel {
  ReductionKind kind = ReductionKind::PairTrace;
  std::vector<Party> x;
  std::vector<Party> y;

  std::string to_string() const;
  /// Parties traced out entirely on an n-qubit system.
  std::vector<Party> environment(int n_qubits) const;

  friend bool operator==(const ReductionLabel&, const ReductionLabel&) = default;
};

/// Report ordering: pair traces, one-vs-two, one-vs-three, two-vs-two, each
/// lexicographic by party sets.
bool canonical_less(const ReductionLabel& a, const ReductionLabel& b);

ReductionLabel pair_label(Party p, Party q);
ReductionLabel split_label(Party single, Party a, Party b);
ReductionLabel one_vs_three_label(Party single);
ReductionLabel two_vs_two_label(Party a, Party b, Party c, Party d);

/// Parses "A,BC", "bc,a", "AB,CD" and so on for an n-qubit system.
/// Throws BadLabel listing the valid labels.
ReductionLabel parse_label(std::string_view text, int n_qubits);

/// Every label of an n-qubit system (6 for n = 3, 25 for n = 4) in report
/// order. Throws WrongArity for other n.
std::vector<ReductionLabel> all_labels(int n_qubits);

/// Ordered label -> reduced state map.
class ReductionSet {
 public:
  struct Entry {
    ReductionLabel label;
    DensityMatrix state;
  };

  void insert(ReductionLabel label, DensityMatrix state);

  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  const DensityMatrix* find(const ReductionLabel& label) const;
  /// Throws BadLabel when absent.
  const DensityMatrix& at(const ReductionLabel& label) const;

 private:
  std::vector<Entry> entries_;
};

// --- tripartite ------------------------------------------------------------

DensityMatrix reduce_pair(const DensityMatrix& rho, const ReductionLabel& label);
DensityMatrix reduce_split(const DensityMatrix& rho, const ReductionLabel& label);
/// Same map as reduce_split evaluated as sum_p K_p rho K_p^dagger.
DensityMatrix reduce_split_channel(const DensityMatrix& rho, const ReductionLabel& label);
ReductionSet reduce_all_tripartite(const DensityMatrix& rho);

// --- quadripartite ---------------------------------------------------------

DensityMatrix reduce_one_vs_three(const DensityMatrix& rho, const ReductionLabel& label);
DensityMatrix reduce_two_vs_two(const DensityMatrix& rho, const ReductionLabel& label);
/// Traces out `traced`, then applies the three-qubit split named by `label`
/// to the remaining parties.
DensityMatrix reduce_trace_then_split(const DensityMatrix& rho, Party traced, const ReductionLabel& label);
ReductionSet reduce_all_quadripartite(const DensityMatrix& rho);

// --- generic ---------------------------------------------------------------

/// Dispatches on the label kind and the arity of rho.
DensityMatrix reduce(const DensityMatrix& rho, const ReductionLabel& label);
ReductionSet reduce_all(const DensityMatrix& rho);

/// Kraus operators (4 x 2^n each) of the reduction, built by sending every
/// basis state of the input to its output pair. sum_k K^dagger K = I.
std::vector<ComplexMatrix> kraus_operators(const ReductionLabel& label, int n_qubits);
ComplexMatrix apply_channel(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& kraus);
/// Channel form of any reduction.
DensityMatrix reduce_channel(const DensityMatrix& rho, const ReductionLabel& label);

}  // namespace qsep
