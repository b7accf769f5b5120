#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"
#include "oracles.hpp"

using namespace h1lat;

namespace {

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool is_hermite(const HermiteForm& hf) {
  const IntMatrix& h = hf.H;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t lead = 0;
    while (lead < h.cols() && h(i, lead) == 0) ++lead;
    if (i >= hf.rank) {
      if (lead != h.cols()) return false;
      continue;
    }
    if (lead != hf.pivot_cols[i] || (i > 0 && lead <= prev) || h(i, lead) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, lead) < 0 || h(k, lead) >= h(i, lead)) return false;
    prev = lead;
  }
  return true;
}

bool divisibility_chain(const IntVector& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] % d[i] != 0) return false;
  return true;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hermite_form: reference examples") {
  auto id = hermite_form(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.H == IntMatrix{{1, 0}, {0, 1}});

  // r2 <- r2 - 3 r1 gives (0, -4); negate; reduce r1 = (2, 4) by (0, 4).
  auto hf = hermite_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(hf.H == IntMatrix{{2, 0}, {0, 4}});
  CHECK(hf.U * IntMatrix{{2, 4}, {6, 8}} == hf.H);
  CHECK(abs(hf.U.det()) == 1);

  auto zero = hermite_form(IntMatrix{{0, 0}});
  CHECK(zero.rank == 0);
  CHECK(zero.H.is_zero());
}

TEST_CASE("smith_form: reference examples") {
  CHECK(smith_form(IntMatrix{{2, 0}, {0, 4}}).invariant_factors == ints({2, 4}));
  // d1 = gcd of entries = 1, d1 d2 = |det| = 6
  CHECK(smith_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == ints({1, 6}));
  CHECK(smith_form(IntMatrix{{1, 1}}).invariant_factors == ints({1}));
  CHECK(smith_form(IntMatrix(0, 0)).invariant_factors.empty());
  CHECK(smith_form(IntMatrix(3, 2)).invariant_factors.empty());
}

TEST_CASE("kernel_basis: reference examples") {
  CHECK(kernel_basis(IntMatrix{{1, 1}, {1, 1}}) == IntMatrix{{1, -1}});
  CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);
  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 3);
  CHECK(kernel_basis(IntMatrix(1, 3)) == IntMatrix::identity(3));
  // saturation: 2x = 0 over Z^1 x Z^1 forces x = 0 but leaves y free
  CHECK(kernel_basis(IntMatrix{{2, 0}}) == IntMatrix{{0, 1}});
  CHECK(kernel_basis(IntMatrix{{2, 4}}) == IntMatrix{{2, -1}});
}

TEST_CASE("subquotient: reference examples") {
  const IntMatrix z2 = IntMatrix::identity(2);
  auto g = subquotient(z2, IntMatrix{{2, 0}, {0, 3}});
  CHECK(g.invariant_factors() == ints({6}));
  CHECK(g.free_rank() == 0);
  // brute-force coset enumeration agrees
  CHECK(oracle::quotient_torsion_profile(IntMatrix{{2, 0}, {0, 3}}, 6) ==
        oracle::profile_of(g, 6));

  CHECK(subquotient(z2, z2).is_trivial());

  // Z^2 / <(2,0)>: the cosets are (a mod 2, b) so torsion Z/2 and one free Z.
  auto h = subquotient(z2, IntMatrix{{2, 0}});
  CHECK(h.invariant_factors() == ints({2}));
  CHECK(h.free_rank() == 1);

  CHECK(subquotient(z2, IntMatrix(0, 2)).free_rank() == 2);
}

TEST_CASE("subquotient: containment violation names the generator") {
  const IntMatrix evens{{2, 0}, {0, 2}};
  try {
    subquotient(evens, IntMatrix{{2, 0}, {1, 0}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_input);
    CHECK(std::string(e.what()).find("not a sublattice: generator 1") != std::string::npos);
  }
}

TEST_CASE("char_poly: reference examples") {
  CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});  // (t-1)^2
  CHECK(char_poly(IntMatrix{{0, -1}, {1, -1}}) == IntPolynomial{1, 1, 1});
  CHECK(char_poly(-IntMatrix::identity(7)) == IntPolynomial{1, 1}.pow(7));
  CHECK(char_poly(IntMatrix(0, 0)) == IntPolynomial{1});
  CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), Error);
}

TEST_CASE("IntPolynomial formatting and arithmetic") {
  CHECK(IntPolynomial::cyclotomic_prime(3).to_string() == "t^2 + t + 1");
  CHECK(IntPolynomial{-1, 0, 2}.to_string() == "2t^2 - 1");
  CHECK(IntPolynomial{1, 1}.pow(2) == IntPolynomial{1, 2, 1});
  CHECK(IntPolynomial::cyclotomic_prime(5).eval(1) == 5);
}

TEST_CASE("FinAbGroup canonical form") {
  auto g = FinAbGroup::from_cyclic_orders(ints({2, 3, 1, 4}));
  CHECK(g.invariant_factors() == ints({2, 12}));
  CHECK(g.order() == 24);
  CHECK(g == FinAbGroup::from_cyclic_orders(ints({4, 6})));
  CHECK(FinAbGroup::elementary(2, 6).to_string() == "(Z/2)^6");
  CHECK(FinAbGroup{}.to_string() == "0");
  CHECK((FinAbGroup::elementary(2, 1) + FinAbGroup::elementary(3, 1)).invariant_factors() ==
        ints({6}));
  CHECK_THROWS_AS(FinAbGroup::from_cyclic_orders(ints({0})), Error);
}

TEST_CASE("IntMatrix basics") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.det() == -2);
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.pow(0).is_identity());
  CHECK(IntMatrix{{0, -1}, {1, -1}}.pow(3).is_identity());
  IntMatrix u{{2, 1}, {1, 1}};
  CHECK(u * u.inverse_unimodular() == IntMatrix::identity(2));
  CHECK_THROWS_AS(a.inverse_unimodular(), Error);
  CHECK(IntMatrix(0, 0).det() == 1);
  CHECK_THROWS_AS(a * IntMatrix(3, 1), Error);
}

TEST_CASE("arbitrary precision: no overflow on large entries") {
  // A 10x10 matrix whose entries exceed 64 bits after a few products.
  IntMatrix big = IntMatrix::identity(10);
  for (std::size_t i = 0; i < 10; ++i) big(i, (i + 1) % 10) = 1000000007;
  IntMatrix p = big.pow(6);
  auto sf = smith_form(p);
  CHECK(sf.U * p * sf.V == sf.D);
  Integer prod = 1;
  for (const auto& d : sf.invariant_factors) prod *= d;
  CHECK(prod == abs(p.det()));
  CHECK(abs(p.det()) > Integer("18446744073709551616"));
}

TEST_CASE("property: Smith and Hermite forms of random matrices") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    IntMatrix a = testing::random_matrix(rng, m, n, -20, 20);
    if (trial % 5 == 0 && m > 1)  // force rank deficiency sometimes
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = 2 * a(0, j);

    auto sf = smith_form(a);
    REQUIRE(sf.U * a * sf.V == sf.D);
    CHECK(abs(sf.U.det()) == 1);
    CHECK(abs(sf.V.det()) == 1);
    CHECK(is_diagonal(sf.D));
    CHECK(divisibility_chain(sf.invariant_factors));
    if (!sf.invariant_factors.empty())
      CHECK(sf.invariant_factors.front() == oracle::gcd_of_entries(a));
    if (m == n) {
      Integer det = oracle::leibniz_det(a);
      if (det != 0) {
        Integer prod = 1;
        for (const auto& d : sf.invariant_factors) prod *= d;
        CHECK(prod == abs(det));
      }
    }

    auto hf = hermite_form(a);
    CHECK(hf.U * a == hf.H);
    CHECK(abs(hf.U.det()) == 1);
    CHECK(is_hermite(hf));
    CHECK(hf.rank == sf.invariant_factors.size());
  }
}

TEST_CASE("property: kernel bases are saturated and exact") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    IntMatrix a = testing::random_matrix(rng, m, n, -6, 6);
    IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == n - rank(a));
    CHECK((a * k.transpose()).is_zero());
    // saturated: Z^n / span(k) is torsion-free
    CHECK(subquotient(IntMatrix::identity(n), k).invariant_factors().empty());
    // v / q is never integral for a primitive lattice basis in HNF
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (long q : {2L, 3L, 5L, 7L}) CHECK(content(k.row(i)) % q != 0);
  }
}

TEST_CASE("property: subquotient against brute-force coset enumeration") {
  testing::Rng rng(5);
  int checked = 0;
  while (checked < 40) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    IntMatrix b = testing::random_matrix(rng, n + 1, n, -4, 4);
    IntMatrix basis = lattice_basis(b);
    if (basis.rows() != n) continue;
    Integer det = abs(basis.det());
    if (det > 24) continue;
    auto g = subquotient(IntMatrix::identity(n), b);
    CHECK(g.order() == det);
    const long modulus = det.get_si();
    CHECK(oracle::quotient_torsion_profile(b, modulus) == oracle::profile_of(g, modulus));
    ++checked;
  }
}

TEST_CASE("property: subquotient invariant under change of basis and generators") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    IntMatrix a = testing::random_matrix(rng, n, n + 1, -4, 4);
    if (rank(a) != n) continue;
    IntMatrix coeffs = testing::random_matrix(rng, n, n, -3, 3);
    IntMatrix b = coeffs * a;
    auto reference = subquotient(a, b);
    IntMatrix a2 = testing::random_unimodular(rng, n) * a;
    IntMatrix b2 = (testing::random_unimodular(rng, n) * b).stack(Integer(2) * b.first_rows(1));
    CHECK(subquotient(a2, b2) == reference);
  }
}

TEST_CASE("property: char_poly is a conjugacy invariant and matches det(kI - A)") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
    IntMatrix a = testing::random_matrix(rng, n, n, -5, 5);
    IntPolynomial chi = char_poly(a);
    CHECK(chi.degree() == static_cast<long>(n));
    CHECK(chi.coefficient(n) == 1);
    IntMatrix p = testing::random_unimodular(rng, n);
    CHECK(char_poly(p * a * p.inverse_unimodular()) == chi);
    for (long k = -2; k <= 2; ++k)
      CHECK(chi.eval(k) == (Integer(k) * IntMatrix::identity(n) - a).det());
  }
}
