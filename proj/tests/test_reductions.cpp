#include <set>

#include "doctest.h"
#include "qsep/reductions.hpp"
#include "qsep/separability.hpp"
#include "qsep/states.hpp"
#include "support/oracles.hpp"

using namespace qsep;

namespace {

const ComplexMatrix& bell4() {
  static const ComplexMatrix m =
      ComplexMatrix::from_rows({{0.5, 0, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0.5, 0, 0, 0.5}});
  return m;
}

ComplexMatrix quarter_identity() { return ComplexMatrix::identity(4) * Complex(0.25); }

DensityMatrix ghz4() { return ghz(4); }

}  // namespace

TEST_CASE("labels round-trip through text") {
  for (int n : {3, 4}) {
    for (const auto& label : all_labels(n)) {
      CHECK(parse_label(label.to_string(), n) == label);
    }
  }
  CHECK(parse_label("a,bc", 3) == split_label(Party::A, Party::B, Party::C));
  CHECK(parse_label("(B, AC)", 3) == split_label(Party::B, Party::C, Party::A));
  CHECK(parse_label("cd,ab", 4) == two_vs_two_label(Party::A, Party::B, Party::C, Party::D));
  CHECK(parse_label("B,A", 3) == pair_label(Party::A, Party::B));
  CHECK(split_label(Party::B, Party::A, Party::C).to_string() == "B,CA");
  CHECK(split_label(Party::C, Party::B, Party::A).to_string() == "C,AB");
}

TEST_CASE("bad labels list the valid ones") {
  for (const char* text : {"", "A", "A,", "A,A", "X,Y", "A,B,C", "AB,C,D", "ABC,D"}) {
    CAPTURE(text);
    try {
      parse_label(text, 3);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadLabel);
      CHECK(std::string(e.what()).find("A,BC") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_label("A,D", 3), Error);
  CHECK_THROWS_AS(parse_label("AB,CD", 3), Error);
  CHECK_THROWS_AS(all_labels(2), Error);
}

TEST_CASE("label enumeration") {
  const auto three = all_labels(3);
  REQUIRE(three.size() == 6);
  std::vector<std::string> names;
  for (const auto& l : three) names.push_back(l.to_string());
  CHECK(names == std::vector<std::string>{"A,B", "A,C", "B,C", "A,BC", "B,CA", "C,AB"});

  const auto four = all_labels(4);
  CHECK(four.size() == 25);
  std::set<std::string> unique;
  for (const auto& l : four) unique.insert(l.to_string());
  CHECK(unique.size() == 25);
  CHECK(std::is_sorted(four.begin(), four.end(), canonical_less));
}

TEST_CASE("pair reductions") {
  CHECK(reduce_pair(ghz(3), pair_label(Party::A, Party::B)).matrix() == ComplexMatrix::diagonal({0.5, 0, 0, 0.5}));

  oracle::Rng rng(21);
  const auto a = oracle::random_qubit(rng);
  const auto b = oracle::random_qubit(rng);
  const auto c = oracle::random_qubit(rng);
  const DensityMatrix prod = product_pure(a, b, c);
  const ComplexMatrix rb = ComplexMatrix::outer(std::span<const Complex>(b));
  const ComplexMatrix rc = ComplexMatrix::outer(std::span<const Complex>(c));
  CHECK(max_abs_diff(reduce_pair(prod, pair_label(Party::B, Party::C)).matrix(), kron(rb, rc)) < 1e-15);

  for (const auto& l : all_labels(3)) {
    CHECK(max_abs_diff(reduce(maximally_mixed(3), l).matrix(), quarter_identity()) < 1e-15);
  }
}

TEST_CASE("split reductions of GHZ and the embedded Werner family") {
  for (const auto& l : all_labels(3)) {
    if (l.kind != ReductionKind::OneVsTwo) continue;
    CHECK(max_abs_diff(reduce_split(ghz(3), l).matrix(), bell4()) < 1e-15);
    CHECK(max_abs_diff(reduce_split_channel(ghz(3), l).matrix(), reduce_split(ghz(3), l).matrix()) < 1e-15);
  }

  for (double x : {0.0, 0.2, 0.5, 1.0}) {
    const ComplexMatrix got = reduce_split(werner_embedded(x), parse_label("A,BC", 3)).matrix();
    CHECK(max_abs_diff(got, werner_two_qubit(x).matrix()) < 1e-15);
    ComplexMatrix singlet(4);
    singlet(1, 1) = singlet(2, 2) = 0.5;
    singlet(1, 2) = singlet(2, 1) = -0.5;
    CHECK(max_abs_diff(got, singlet * Complex(x) + quarter_identity() * Complex(1 - x)) < 1e-15);
  }
}

TEST_CASE("split reductions of product states factor as rho_X (x) omega") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const Qubit a = oracle::random_qubit(rng);
    const Qubit b = oracle::random_qubit(rng);
    const Qubit c = oracle::random_qubit(rng);
    const DensityMatrix rho = product_pure(a, b, c);
    const auto expect = [](const Qubit& single, const Qubit& carried, const Qubit& traced) {
      const double gamma = 2.0 * std::real(traced[0] * std::conj(traced[1]));
      ComplexMatrix w(2);
      w(0, 0) = std::norm(carried[0]);
      w(1, 1) = std::norm(carried[1]);
      w(0, 1) = gamma * carried[0] * std::conj(carried[1]);
      w(1, 0) = gamma * std::conj(carried[0]) * carried[1];
      return oracle::kron(ComplexMatrix::outer(std::span<const Complex>(single)), w);
    };
    CHECK(max_abs_diff(reduce_split(rho, parse_label("A,BC", 3)).matrix(), expect(a, b, c)) < 1e-12);
    CHECK(max_abs_diff(reduce_split(rho, parse_label("B,CA", 3)).matrix(), expect(b, c, a)) < 1e-12);
    CHECK(max_abs_diff(reduce_split(rho, parse_label("C,AB", 3)).matrix(), expect(c, a, b)) < 1e-12);
  }
}

TEST_CASE("channel form of the split reduction on a pure state") {
  // For |Ψ> the (B,CA) reduction is |Φ0><Φ0| + |Φ1><Φ1| with
  // Φp(j,k) = Ψ(k XOR p, j, k), i.e. A = C XOR p.
  oracle::Rng rng(8);
  const PureState psi(oracle::random_vector(rng, 8));
  ComplexMatrix expected(4);
  for (int p = 0; p < 2; ++p) {
    std::vector<Complex> phi(4);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) phi[2 * j + k] = psi[4 * (k ^ p) + 2 * j + k];
    expected += ComplexMatrix::outer(phi);
  }
  const ReductionLabel label = parse_label("B,CA", 3);
  CHECK(max_abs_diff(reduce_split_channel(psi.density(), label).matrix(), expected) < 1e-14);
  CHECK(max_abs_diff(reduce_split(psi.density(), label).matrix(), expected) < 1e-14);
}

TEST_CASE("Kraus operators are complete for every label") {
  for (int n : {3, 4}) {
    for (const auto& label : all_labels(n)) {
      CAPTURE(label.to_string());
      const auto ks = kraus_operators(label, n);
      ComplexMatrix sum(std::size_t{1} << n);
      for (const auto& k : ks) {
        CHECK(k.rows() == 4);
        sum += k.adjoint() * k;
      }
      CHECK(max_abs_diff(sum, ComplexMatrix::identity(std::size_t{1} << n)) < 1e-15);
    }
  }
}

TEST_CASE("every reduction matches the direct-summation oracle") {
  oracle::Rng rng(99);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = validate_density(oracle::random_density(rng, n), n);
      const ReductionSet set = reduce_all(rho);
      REQUIRE(set.size() == (n == 3 ? 6U : 25U));
      for (const auto& entry : set) {
        CAPTURE(entry.label.to_string());
        const ComplexMatrix expected = oracle::reduce(rho.matrix(), n, entry.label.x, entry.label.y);
        CHECK(max_abs_diff(entry.state.matrix(), expected) < 1e-14);
        CHECK(max_abs_diff(reduce_channel(rho, entry.label).matrix(), expected) < 1e-14);
        CHECK(entry.state.validated());
      }
    }
  }
}

TEST_CASE("quadripartite reductions of GHZ") {
  const DensityMatrix g = ghz4();
  for (const char* l : {"A,BCD", "B,CDA", "C,DAB", "D,ABC"}) {
    CAPTURE(l);
    CHECK(max_abs_diff(reduce_one_vs_three(g, parse_label(l, 4)).matrix(), bell4()) < 1e-15);
  }
  for (const char* l : {"AB,CD", "AC,BD", "AD,BC"}) {
    CAPTURE(l);
    CHECK(max_abs_diff(reduce_two_vs_two(g, parse_label(l, 4)).matrix(), bell4()) < 1e-15);
  }
  const ComplexMatrix traced = reduce_trace_then_split(g, Party::D, parse_label("A,BC", 4)).matrix();
  CHECK(max_abs_diff(traced, ComplexMatrix::diagonal({0.5, 0, 0, 0.5})) < 1e-15);
}

TEST_CASE("quadripartite reductions of mixed and product inputs") {
  const ReductionSet mixed = reduce_all_quadripartite(maximally_mixed(4));
  REQUIRE(mixed.size() == 25);
  for (const auto& entry : mixed) CHECK(max_abs_diff(entry.state.matrix(), quarter_identity()) < 1e-15);

  oracle::Rng rng(4);
  std::vector<Qubit> q{oracle::random_qubit(rng), oracle::random_qubit(rng), oracle::random_qubit(rng),
                       oracle::random_qubit(rng)};
  const DensityMatrix prod = product_pure_state(q).density();

  // (A,BCD): rho_A (x) omega with B carried and gamma = gamma_C * gamma_D.
  const auto gamma = [](const Qubit& v) { return 2.0 * std::real(v[0] * std::conj(v[1])); };
  ComplexMatrix w(2);
  w(0, 0) = std::norm(q[1][0]);
  w(1, 1) = std::norm(q[1][1]);
  w(0, 1) = gamma(q[2]) * gamma(q[3]) * q[1][0] * std::conj(q[1][1]);
  w(1, 0) = std::conj(w(0, 1));
  const ComplexMatrix expected = oracle::kron(ComplexMatrix::outer(std::span<const Complex>(q[0])), w);
  CHECK(max_abs_diff(reduce_one_vs_three(prod, parse_label("A,BCD", 4)).matrix(), expected) < 1e-14);

  // tr_A then (B,CD) matches the three-party pattern on B, C, D.
  const DensityMatrix bcd = product_pure(q[1], q[2], q[3]);
  CHECK(max_abs_diff(reduce_trace_then_split(prod, Party::A, parse_label("B,CD", 4)).matrix(),
                     reduce_split(bcd, parse_label("A,BC", 3)).matrix()) < 1e-14);
}

TEST_CASE("two-vs-two of a product of Bell pairs") {
  const ComplexMatrix b = bell4();
  const DensityMatrix rho = validate_density(kron(b, b), 4);
  const DensityMatrix r = reduce_two_vs_two(rho, parse_label("AB,CD", 4));
  CHECK(r.validated());
  CHECK(ppt_separable(r).separable);
}

TEST_CASE("reduction errors") {
  CHECK_THROWS_AS(reduce_pair(ghz(4), pair_label(Party::A, Party::B)), Error);
  CHECK_THROWS_AS(reduce_split(ghz(3), pair_label(Party::A, Party::B)), Error);
  CHECK_THROWS_AS(reduce_one_vs_three(ghz(3), one_vs_three_label(Party::A)), Error);
  CHECK_THROWS_AS(reduce_two_vs_two(ghz(4), one_vs_three_label(Party::A)), Error);
  CHECK_THROWS_AS(reduce_all(bell()), Error);
  try {
    reduce_all_tripartite(ghz(4));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongArity);
  }
  const ReductionSet set = reduce_all(ghz(3));
  CHECK(set.find(one_vs_three_label(Party::A)) == nullptr);
  CHECK_THROWS_AS(set.at(one_vs_three_label(Party::A)), Error);
}

TEST_CASE("unchecked inputs propagate the unchecked flag") {
  const DensityMatrix raw = DensityMatrix::unchecked(ComplexMatrix::diagonal({1, 0, 0, 0, 0, 0, 0, -0.1}), 3);
  const ReductionSet set = reduce_all(raw);
  for (const auto& entry : set) CHECK_FALSE(entry.state.validated());
}
