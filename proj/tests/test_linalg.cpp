#include "doctest.h"
#include "qsep/error.hpp"
#include "qsep/linalg.hpp"
#include "support/oracles.hpp"

using namespace qsep;

namespace {

ComplexMatrix bell_matrix() {
  const double h = 0.5;
  return ComplexMatrix::from_rows({{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}});
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no qsep::Error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("eigenvalues of small fixed matrices") {
  const Spectrum id = hermitian_eigenvalues(ComplexMatrix::identity(2));
  CHECK(id.eigenvalues == std::vector<double>{1.0, 1.0});

  const Spectrum x = hermitian_eigenvalues(ComplexMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(x.min() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(x.max() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of the partially transposed Bell state") {
  // det(PT - λI) for PT = [[.5,0,0,0],[0,0,.5,0],[0,.5,0,0],[0,0,0,.5]]
  // factors as (.5-λ)^2 (λ^2 - .25), so the roots are -1/2 and 1/2 (x3).
  const ComplexMatrix pt = oracle::transpose_y(bell_matrix());
  const auto charpoly = [&](double lambda) {
    return (0.5 - lambda) * (0.5 - lambda) * (lambda * lambda - 0.25);
  };
  for (double root : {-0.5, 0.5}) CHECK(std::abs(charpoly(root)) < 1e-15);

  const Spectrum s = hermitian_eigenvalues(pt);
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(std::abs(s.eigenvalues[0] + 0.5) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(s.eigenvalues[k] - 0.5) < 1e-12);
}

TEST_CASE("Jacobi eigenvalues agree with Eigen on random Hermitian matrices") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = std::size_t{1} + rng.below(16);
    ComplexMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      h(r, r) = rng.normal();
      for (std::size_t c = r + 1; c < dim; ++c) {
        h(r, c) = rng.gaussian();
        h(c, r) = std::conj(h(r, c));
      }
    }
    const auto expected = oracle::eigenvalues(h);
    const auto got = hermitian_eigenvalues(h).eigenvalues;
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < dim; ++k) CHECK(std::abs(got[k] - expected[k]) < 1e-10);
  }
}

TEST_CASE("eigenvalues of degenerate and diagonal inputs") {
  const Spectrum d = hermitian_eigenvalues(ComplexMatrix::diagonal({3, -1, 3, 0}));
  CHECK(d.eigenvalues == std::vector<double>{-1, 0, 3, 3});
  CHECK(d.sum() == doctest::Approx(5.0));

  const Spectrum zero = hermitian_eigenvalues(ComplexMatrix(16));
  for (double e : zero.eigenvalues) CHECK(e == 0.0);
}

TEST_CASE("eigenvalue errors") {
  CHECK(kind_of([] { hermitian_eigenvalues(ComplexMatrix::from_rows({{0, 1}, {0, 0}})); }) ==
        ErrorKind::NonHermitian);
  CHECK(kind_of([] { hermitian_eigenvalues(ComplexMatrix(2, 3)); }) == ErrorKind::WrongDim);
  CHECK(kind_of([] {
          ComplexMatrix m(2);
          m(0, 0) = std::numeric_limits<double>::quiet_NaN();
          hermitian_eigenvalues(m);
        }) == ErrorKind::NonFinite);
}

TEST_CASE("kron") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({1, 0})) ==
        ComplexMatrix::diagonal({1, 0, 0, 0}));

  const ComplexMatrix k = kron(ComplexMatrix::diagonal({1, 0}), bell_matrix());
  REQUIRE(k.rows() == 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const Complex expected = (r < 4 && c < 4) ? bell_matrix()(r, c) : Complex{};
      CHECK(k(r, c) == expected);
    }

  oracle::Rng rng(5);
  const ComplexMatrix a = oracle::random_density(rng, 1);
  const ComplexMatrix b = oracle::random_density(rng, 2);
  CHECK(oracle::max_diff(kron(a, b), oracle::kron(a, b)) < 1e-15);
}

TEST_CASE("partial trace") {
  const double h = 0.5;
  ComplexMatrix ghz(8);
  ghz(0, 0) = ghz(0, 7) = ghz(7, 0) = ghz(7, 7) = h;
  const Party ab[] = {Party::A, Party::B};
  CHECK(partial_trace(ghz, 3, ab) == ComplexMatrix::diagonal({0.5, 0, 0, 0.5}));

  const Party b[] = {Party::B};
  CHECK(max_abs_diff(partial_trace(ComplexMatrix::identity(8) * Complex(0.125), 3, b),
                     ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);

  oracle::Rng rng(17);
  const ComplexMatrix ra = oracle::random_density(rng, 1);
  const ComplexMatrix rb = oracle::random_density(rng, 1);
  const ComplexMatrix rc = oracle::random_density(rng, 1);
  const Party ac[] = {Party::A, Party::C};
  CHECK(max_abs_diff(partial_trace(kron(kron(ra, rb), rc), 3, ac), kron(ra, rc)) < 1e-15);

  const Party ca[] = {Party::C, Party::A};
  CHECK(max_abs_diff(partial_trace(kron(kron(ra, rb), rc), 3, ca), kron(rc, ra)) < 1e-15);

  const Party bad[] = {Party::A, Party::A};
  CHECK(kind_of([&] { partial_trace(ghz, 3, bad); }) == ErrorKind::BadSubset);
  const Party d[] = {Party::D};
  CHECK(kind_of([&] { partial_trace(ghz, 3, d); }) == ErrorKind::BadSubset);
}

TEST_CASE("validate_density accepts states and reports the first failure") {
  const DensityMatrix ok = validate_density(ComplexMatrix::identity(4) * Complex(0.25), 2);
  CHECK(ok.validated());
  CHECK(ok.n_qubits() == 2);

  try {
    validate_density(ComplexMatrix::diagonal({1, 0, 0, 0.1}), 2);
    FAIL("expected TraceNotOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TraceNotOne);
    REQUIRE(e.magnitude());
    CHECK(*e.magnitude() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(std::string(e.what()).find("TraceNotOne(0.1)") != std::string::npos);
  }

  try {
    validate_density(ComplexMatrix::diagonal({1.5, -0.5}), 1);
    FAIL("expected NotPSD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPSD);
    CHECK(*e.magnitude() == doctest::Approx(-0.5));
  }

  CHECK(kind_of([] { validate_density(ComplexMatrix::from_rows({{0.5, 0.1}, {0.2, 0.5}}), 1); }) ==
        ErrorKind::NotHermitian);
  CHECK(kind_of([] { validate_density(ComplexMatrix::identity(4) * Complex(0.25), 3); }) ==
        ErrorKind::BadDimension);
  CHECK(kind_of([] { validate_density(ComplexMatrix(2, 4), 1); }) == ErrorKind::BadDimension);
}

TEST_CASE("validate_density respects its tolerance") {
  ComplexMatrix m = ComplexMatrix::diagonal({0.5, 0.5 + 1e-11});
  CHECK_NOTHROW(validate_density(m, 1));
  CHECK(kind_of([&] { validate_density(m, 1, 1e-13); }) == ErrorKind::TraceNotOne);
}

TEST_CASE("singular values and rank") {
  CHECK(matrix_rank(ComplexMatrix(2, 4)) == 0);

  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix ghz(2, 4);
  ghz(0, 0) = r;
  ghz(1, 3) = r;
  CHECK(matrix_rank(ghz) == 2);

  oracle::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = oracle::random_vector(rng, 2);
    const auto v = oracle::random_vector(rng, 4);
    ComplexMatrix m(2, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = u[i] * v[j];
    CHECK(matrix_rank(m) == 1);

    ComplexMatrix g(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) g(i, j) = rng.gaussian();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(oracle::to_eigen(g));
    const auto got = singular_values(g);
    REQUIRE(got.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(got[k] - svd.singularValues()(k)) < 1e-12);
  }
}

TEST_CASE("pure states") {
  const double r = 1.0 / std::sqrt(2.0);
  const PureState psi({r, 0, 0, r});
  CHECK(psi.n_qubits() == 2);
  CHECK(max_abs_diff(psi.density().matrix(), bell_matrix()) < 1e-15);

  CHECK(kind_of([] { PureState({1.0, 1.0}); }) == ErrorKind::NotNormalized);
  CHECK(kind_of([] { PureState({1.0, 0.0, 0.0}); }) == ErrorKind::BadDimension);
  CHECK(kind_of([] { PureState({1.0}); }) == ErrorKind::BadDimension);
}

TEST_CASE("parties and basis indices") {
  CHECK(party_from_char('c') == Party::C);
  CHECK(party_name(Party::D) == 'D');
  CHECK(kind_of([] { party_from_char('E'); }) == ErrorKind::BadLabel);
  const int bits[] = {1, 0, 1};
  CHECK(basis_index(bits) == 5);
}

TEST_CASE("matrix construction errors") {
  CHECK(kind_of([] { ComplexMatrix(2, 2, std::vector<Complex>(3)); }) == ErrorKind::BadDimension);
  CHECK(kind_of([] { ComplexMatrix(1, 1, {Complex(std::numeric_limits<double>::infinity(), 0)}); }) ==
        ErrorKind::NonFinite);
}
