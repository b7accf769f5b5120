#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "h1lat/cohomology.hpp"
#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"
#include "h1lat/picard.hpp"

using namespace h1lat;

namespace {

FinAbGroup elem(unsigned long p, std::size_t k) { return FinAbGroup::elementary(p, k); }

const IntMatrix kSwap{{0, 1}, {1, 0}};
const IntMatrix kMinus2{{-1, 0}, {0, -1}};

GLattice klein_four() {
  return GLattice::make(2, Explicit{{IntMatrix::identity(2), kMinus2, kSwap, -kSwap}});
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("validate_and_close") {
  CHECK(validate_and_close(1, Cyclic{IntMatrix{{-1}}}).size() == 2);
  CHECK(validate_and_close(2, Generated{{kSwap, kMinus2}, 10}).size() == 4);
  CHECK(error_of([] { validate_and_close(2, Cyclic{IntMatrix{{1, 1}, {0, 1}}}); })
            .find("group too large or infinite") != std::string::npos);
  CHECK(error_of([] { validate_and_close(1, Cyclic{IntMatrix{{2}}}); })
            .find("not unimodular") != std::string::npos);
  CHECK(error_of([] {
          validate_and_close(2, Cyclic{kSwap}, 10, IntMatrix{{1, 0}, {0, 2}});
        }).find("form not preserved") != std::string::npos);
  CHECK(error_of([] { validate_and_close(2, Explicit{{IntMatrix::identity(2), kSwap, kMinus2}}); })
            .find("not closed") != std::string::npos);
  CHECK(error_of([] { validate_and_close(1, Explicit{{IntMatrix{{-1}}}}); })
            .find("identity") != std::string::npos);
  CHECK(error_of([] { validate_and_close(2, Cyclic{IntMatrix{{1}}}); })
            .find("expected 2x2") != std::string::npos);
  CHECK(error_of([] { validate_and_close(2, Generated{{kSwap, kMinus2}, 3}); })
            .find("group too large") != std::string::npos);
}

TEST_CASE("invariants_h0") {
  CHECK(invariants_h0(GLattice::trivial(3)).rows() == 3);
  CHECK(invariants_h0(GLattice::make(2, Cyclic{kMinus2})).rows() == 0);
  CHECK(invariants_h0(GLattice::make(2, Cyclic{kSwap})) == IntMatrix{{1, 1}});
  for (int g = 1; g <= 4; ++g) CHECK(invariants_h0(dejonquieres(g).lattice()).rows() == 2);
}

TEST_CASE("h1_cyclic") {
  auto sign = GLattice::make(1, Cyclic{IntMatrix{{-1}}});
  CHECK(h1_cyclic(sign).h1 == elem(2, 1));
  CHECK(h1_cyclic(GLattice::make(2, Cyclic{kSwap})).h1.is_trivial());
  // de Jonquieres, g = 1: the fiber-component lattice has H1 = (Z/2)^3
  CHECK(h1_cyclic(dejonquieres(1).fiber_components()).h1 == elem(2, 3));
  CHECK(h1_cyclic(GLattice::trivial(0)).h1.is_trivial());
  CHECK_THROWS_AS(h1_cyclic(klein_four()), Error);

  H1Options opts;
  opts.witness = true;
  auto w = h1_cyclic(sign, opts);
  REQUIRE(w.witness);
  CHECK(w.witness->cocycles == IntMatrix{{1}});
  CHECK(w.witness->coboundaries == IntMatrix{{2}});
}

TEST_CASE("h1_cocycle") {
  CHECK(h1_cocycle(GLattice::trivial(3)).h1.is_trivial());
  auto regular3 = permutation_module({{1, 2, 0}}, GroupKind::cyclic);
  CHECK(h1_cocycle(regular3).h1.is_trivial());
  CHECK(h1_cocycle(GLattice::make(1, Cyclic{IntMatrix{{-1}}})).h1 == elem(2, 1));
  // Klein four group acting on Z^2 through {±1, ±swap}
  auto k4 = h1_cocycle(klein_four());
  CHECK(k4.method == H1Method::cocycle);
  CHECK(k4.h0_rank == 0);

  H1Options small;
  small.max_order = 3;
  CHECK(error_of([&] { h1_cocycle(klein_four(), small); }).find("group too large") !=
        std::string::npos);
  small.max_order = 200;
  small.max_rank = 1;
  CHECK(error_of([&] { h1_cocycle(klein_four(), small); }).find("too large") !=
        std::string::npos);
}

TEST_CASE("Klein four group on Z^2: cocycle result against a hand count") {
  // Restricted to <swap> the module is a permutation module, so H1 vanishes
  // there; inflation-restriction leaves H1(<-1>, Z(1,1)) = Z/2.
  auto k4 = h1(klein_four());
  CHECK(k4.h1.is_finite());
  for (const auto& d : k4.h1.invariant_factors()) CHECK(d == 2);
  CHECK(k4.h1 == elem(2, 1));
}

TEST_CASE("h1 dispatch") {
  CHECK(h1(geiser_involution()).h1 == elem(2, 6));
  CHECK(h1(bertini_involution()).h1 == elem(2, 8));
  CHECK(h1(GLattice::trivial(4)).h1.is_trivial());
  // an Explicit list that happens to be cyclic takes the cyclic route
  auto c4 = GLattice::make(
      2, Explicit{{IntMatrix::identity(2), IntMatrix{{0, -1}, {1, 0}}, kMinus2,
                   IntMatrix{{0, 1}, {-1, 0}}}});
  CHECK(h1(c4).method == H1Method::cyclic);
  CHECK(h1(klein_four()).method == H1Method::cocycle);

  H1Options verify;
  verify.cross_check = true;
  CHECK(h1(geiser_involution(), verify).h1 == elem(2, 6));
}

TEST_CASE("permutation_module") {
  auto swap = permutation_module({{1, 0}}, GroupKind::cyclic);
  CHECK(std::get<Cyclic>(swap.group()).generator == kSwap);
  auto z4 = permutation_module({{1, 2, 3, 0}}, GroupKind::cyclic);
  CHECK(z4.rank() == 4);
  CHECK(z4.order() == 4);
  CHECK(permutation_module({{0, 1, 2}}, GroupKind::cyclic).order() == 1);
  CHECK(permutation_module({{0, 1}, {1, 0}}, GroupKind::list).order() == 2);
  CHECK(permutation_module({{1, 0, 2}, {0, 2, 1}}, GroupKind::generated).order() == 6);

  CHECK(error_of([] { permutation_module({{0, 0}}, GroupKind::cyclic); })
            .starts_with("inconsistent permutations"));
  CHECK(error_of([] { permutation_module({{1, 0}, {0, 1, 2}}, GroupKind::generated); })
            .starts_with("inconsistent permutations"));
  CHECK(error_of([] { permutation_module({{1, 0}}, GroupKind::list); })
            .starts_with("inconsistent permutations"));
}

TEST_CASE("direct_sum") {
  auto sign = GLattice::make(1, Cyclic{IntMatrix{{-1}}});
  auto same = direct_sum(sign, GLattice::trivial(0));
  CHECK(same.rank() == 1);
  CHECK(h1(direct_sum(sign, sign)).h1 == elem(2, 2));

  auto regular2 = permutation_module({{1, 0}}, GroupKind::cyclic);
  auto stable = direct_sum(geiser_involution(), regular2);
  CHECK(stable.rank() == 10);
  CHECK(h1(stable).h1 == elem(2, 6));

  CHECK(error_of([&] { direct_sum(sign, klein_four()); }).starts_with("direct_sum: group mismatch"));
  // list shapes with different lengths
  auto two = GLattice::make(1, Explicit{{IntMatrix{{1}}, IntMatrix{{-1}}}});
  CHECK(error_of([&] { direct_sum(two, klein_four()); }).starts_with("direct_sum: group mismatch"));
  // element-by-element pairing stays a group
  auto k4_sum = direct_sum(klein_four(), klein_four());
  CHECK(k4_sum.order() == 4);
  CHECK(h1(k4_sum).h1 == h1(klein_four()).h1 + h1(klein_four()).h1);
}

TEST_CASE("restrict_subgroup") {
  auto k4 = klein_four();
  CHECK(h1(restrict_subgroup(k4, {IntMatrix::identity(2)})).h1.is_trivial());
  CHECK(h1(restrict_subgroup(k4, {kMinus2})).h1 == elem(2, 2));
  auto full = restrict_subgroup(k4, k4.elements());
  CHECK(full.elements() == k4.elements());
  CHECK(error_of([&] { restrict_subgroup(k4, {IntMatrix::identity(2), kSwap, kMinus2}); })
            .starts_with("subset not a subgroup"));
  CHECK(error_of([&] { restrict_subgroup(k4, {IntMatrix{{0, -1}, {1, 0}}}); })
            .starts_with("subset not a subgroup"));
}

TEST_CASE("obstruction_scan") {
  auto geiser = obstruction_scan(geiser_involution());
  CHECK(geiser.obstructed);
  CHECK(geiser.full.h1 == elem(2, 6));
  REQUIRE(geiser.cyclic_subgroups.size() == 2);  // {1} and the whole group
  CHECK(geiser.cyclic_subgroups[0].generator_index == 0);
  CHECK(geiser.cyclic_subgroups[1].result.h1 == elem(2, 6));
  CHECK(!geiser.witnesses.empty());

  auto perm = obstruction_scan(permutation_module({{1, 2, 3, 4, 5, 0}}, GroupKind::cyclic));
  CHECK(!perm.obstructed);
  CHECK(perm.cyclic_subgroups.size() == 4);  // subgroups of Z/6

  CHECK(!obstruction_scan(GLattice::trivial(3)).obstructed);

  // non-cyclic group whose subgroup <-1> carries the obstruction
  auto k4 = obstruction_scan(klein_four());
  CHECK(k4.obstructed);
  CHECK(k4.cyclic_subgroups.size() == 4);
}

TEST_CASE("property: Shapiro, permutation modules have trivial H1") {
  testing::Rng rng(100);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 12));
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
    auto m = permutation_module({testing::random_permutation_dividing(rng, n, k)},
                                GroupKind::cyclic);
    CHECK(h1(m).h1.is_trivial());
  }
}

TEST_CASE("property: stability under adding permutation modules") {
  testing::Rng rng(200);
  for (int trial = 0; trial < 100; ++trial) {
    GLattice m = testing::random_cyclic_lattice(rng, 6, 6);
    const std::size_t n = m.order();
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    auto pi = permutation_module({testing::random_permutation_dividing(rng, n, k)},
                                 GroupKind::cyclic);
    CHECK(h1(direct_sum(m, pi)).h1 == h1(m).h1);
  }
}

TEST_CASE("property: basis change invariance") {
  testing::Rng rng(300);
  for (int trial = 0; trial < 100; ++trial) {
    GLattice m = testing::random_cyclic_lattice(rng, 8, 6);
    IntMatrix p = testing::random_unimodular(rng, m.rank());
    IntMatrix g = std::get<Cyclic>(m.group()).generator;
    GLattice conj = GLattice::make(m.rank(), Cyclic{p * g * p.inverse_unimodular()});
    auto a = h1(m), b = h1(conj);
    CHECK(a.h1 == b.h1);
    CHECK(a.h0_rank == b.h0_rank);
  }
}

TEST_CASE("property: cyclic and cocycle methods agree") {
  testing::Rng rng(400);
  for (int trial = 0; trial < 100; ++trial) {
    GLattice m = testing::random_cyclic_lattice(rng, 8, 8);
    auto a = h1_cyclic(m), b = h1_cocycle(m);
    CHECK(a.h1 == b.h1);
    CHECK(a.h0_rank == b.h0_rank);
  }
}

TEST_CASE("property: additivity and annihilation") {
  testing::Rng rng(500);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto r1 = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto r2 = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    auto m1 = GLattice::make(r1, Cyclic{testing::random_finite_order(rng, n, r1)});
    auto m2 = GLattice::make(r2, Cyclic{testing::random_finite_order(rng, n, r2)});
    auto sum = direct_sum(m1, m2);
    const FinAbGroup total = h1(sum).h1;
    CHECK(total == h1(m1).h1 + h1(m2).h1);
    for (const auto& d : total.invariant_factors())
      CHECK(Integer(static_cast<unsigned long>(sum.order())) % d == 0);
  }
}

TEST_CASE("sublattice_action") {
  auto pic = del_pezzo_pic(2);
  auto mq = sublattice_action(geiser_involution(), q_sublattice(pic).basis);
  CHECK(mq.rank() == 7);
  CHECK(std::get<Cyclic>(mq.group()).generator == -IntMatrix::identity(7));
  CHECK(h1(mq).h1 == elem(2, 7));
}
