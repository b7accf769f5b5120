#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <omp.h>

#include "generators.hpp"
#include "h1lat/cohomology.hpp"
#include "h1lat/normal_form.hpp"
#include "h1lat/weyl_search.hpp"

using namespace h1lat;

namespace {

// Oversubscribe so the parallel branches really run with several threads
// even on a single-core machine.
struct ThreadGuard {
  int saved = omp_get_max_threads();
  ThreadGuard() { omp_set_num_threads(4); }
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("parallel elimination kernels match the serial reference bit for bit") {
  ThreadGuard threads;
  testing::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 40, 120));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 20, 60));
    IntMatrix a = testing::random_matrix(rng, m, n, -9, 9);

    auto hs = hermite_form(a, Exec::serial);
    auto hp = hermite_form(a, Exec::parallel);
    CHECK(hs.H == hp.H);
    CHECK(hs.U == hp.U);

    IntMatrix sq = a.submatrix(0, 0, 24, 24);
    auto ss = smith_form(sq, Exec::serial);
    auto sp = smith_form(sq, Exec::parallel);
    CHECK(ss.D == sp.D);
    CHECK(ss.U == sp.U);
    CHECK(ss.V == sp.V);

    CHECK(kernel_basis(a.transpose(), Exec::serial) == kernel_basis(a.transpose(), Exec::parallel));
  }
}

TEST_CASE("cocycle method is policy independent") {
  ThreadGuard threads;
  testing::Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    GLattice m = testing::random_cyclic_lattice(rng, 8, 8);
    H1Options serial, parallel;
    serial.exec = Exec::serial;
    serial.witness = parallel.witness = true;
    auto a = h1_cocycle(m, serial);
    auto b = h1_cocycle(m, parallel);
    CHECK(a.h1 == b.h1);
    CHECK(a.witness->cocycles == b.witness->cocycles);
  }
}

TEST_CASE("obstruction scan report order is independent of scheduling") {
  ThreadGuard threads;
  auto m = permutation_module({{1, 2, 3, 4, 5, 0}}, GroupKind::cyclic);
  H1Options serial;
  serial.exec = Exec::serial;
  auto a = obstruction_scan(m, serial);
  auto b = obstruction_scan(m, {});
  REQUIRE(a.cyclic_subgroups.size() == b.cyclic_subgroups.size());
  for (std::size_t i = 0; i < a.cyclic_subgroups.size(); ++i) {
    CHECK(a.cyclic_subgroups[i].generator_index == b.cyclic_subgroups[i].generator_index);
    CHECK(a.cyclic_subgroups[i].result.h1 == b.cyclic_subgroups[i].result.h1);
  }
}

TEST_CASE("weyl search: parallel trials merge to the serial result") {
  ThreadGuard threads;
  WeylSearchConfig serial;
  serial.exec = Exec::serial;
  serial.seed = 5;
  WeylSearchConfig parallel = serial;
  parallel.exec = Exec::parallel;
  auto a = weyl_search(3, 3, serial);
  auto b = weyl_search(3, 3, parallel);
  CHECK(a.trial == b.trial);
  CHECK(a.element == b.element);
}
