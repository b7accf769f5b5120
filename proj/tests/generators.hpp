#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "h1lat/cohomology.hpp"
#include "h1lat/int_matrix.hpp"

namespace h1lat::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Signed permutation times unit lower times unit upper triangular, entries of
/// the triangular factors in [-2, 2].
inline IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix lower = IntMatrix::identity(n), upper = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = uniform(rng, -2, 2);
      upper(j, i) = uniform(rng, -2, 2);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(perm[j], j) = uniform(rng, 0, 1) ? 1 : -1;
  return p * lower * upper;
}

inline IntMatrix companion(const std::vector<long>& low_coeffs) {
  // monic polynomial t^k + c_{k-1} t^{k-1} + ... + c_0
  const std::size_t k = low_coeffs.size();
  IntMatrix c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -low_coeffs[i];
  return c;
}

inline IntMatrix cycle_matrix(std::size_t len) {
  Permutation p(len);
  for (std::size_t i = 0; i < len; ++i) p[i] = (i + 1) % len;
  return permutation_matrix(p);
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

/// Block-diagonal generator of order dividing n built from sign, permutation
/// and cyclotomic companion blocks, then conjugated by a random unimodular
/// matrix. Rank is exactly `rank` (>= 1).
inline IntMatrix random_finite_order(Rng& rng, std::size_t n, std::size_t rank) {
  struct Block {
    IntMatrix m;
    std::size_t order;
  };
  std::vector<Block> menu{{IntMatrix{{1}}, 1}, {IntMatrix{{-1}}, 2}};
  for (std::size_t len = 2; len <= 8; ++len) {
    menu.push_back({cycle_matrix(len), len});
    menu.push_back({-cycle_matrix(len), len % 2 == 0 ? len : 2 * len});
  }
  menu.push_back({companion({1, 1}), 3});
  menu.push_back({companion({1, 0}), 4});
  menu.push_back({companion({1, -1}), 6});
  menu.push_back({companion({1, 1, 1, 1}), 5});
  menu.push_back({companion({1, 0, 0, 0}), 8});
  menu.push_back({companion({1, 1, 1, 1, 1, 1}), 7});
  IntMatrix g(0, 0);
  while (g.rows() < rank) {
    const std::size_t room = rank - g.rows();
    std::vector<const Block*> ok;
    for (const auto& b : menu)
      if (n % b.order == 0 && b.m.rows() <= room) ok.push_back(&b);
    const Block* pick = ok[static_cast<std::size_t>(uniform(rng, 0, long(ok.size()) - 1))];
    g = IntMatrix::block_diagonal(g, pick->m);
  }
  IntMatrix p = random_unimodular(rng, rank);
  return p * g * p.inverse_unimodular();
}

inline GLattice random_cyclic_lattice(Rng& rng, std::size_t max_order, std::size_t max_rank) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, long(max_order)));
  const auto r = static_cast<std::size_t>(uniform(rng, 1, long(max_rank)));
  return GLattice::make(r, Cyclic{random_finite_order(rng, n, r)});
}

/// Permutation of {0..k-1} whose cycle lengths all divide n (so its order
/// divides n). Points are shuffled so orbits are not contiguous.
inline Permutation random_permutation_dividing(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> points(k);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  Permutation perm(k);
  std::size_t pos = 0;
  while (pos < k) {
    std::vector<std::size_t> lens;
    for (auto d : divisors(n))
      if (d <= k - pos) lens.push_back(d);
    const std::size_t len = lens[static_cast<std::size_t>(uniform(rng, 0, long(lens.size()) - 1))];
    for (std::size_t i = 0; i < len; ++i) perm[points[pos + i]] = points[pos + (i + 1) % len];
    pos += len;
  }
  return perm;
}

}  // namespace h1lat::testing
