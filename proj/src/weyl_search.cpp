#include "h1lat/weyl_search.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {
namespace {

// Elements of a finite Weyl group have small entries, so word products run in
// machine integers; the bound below is far above anything W(E8) produces.
constexpr std::int64_t kEntryBound = std::int64_t{1} << 40;

struct SearchContext {
  const PicardLattice& pic;
  std::vector<IntVector> roots;
  std::vector<std::vector<std::int64_t>> small_roots;
  std::vector<std::vector<std::int64_t>> small_gram_roots;  // gram * root
  unsigned long p;
  Integer target_trace;  // 1 on K plus -1 per Phi_p block
  IntPolynomial target_q_poly;
  const WeylSearchConfig& cfg;
};

struct Hit {
  IntMatrix element;
  std::size_t word_length;
};

std::optional<Hit> run_trial(const SearchContext& ctx, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(ctx.cfg.seed),
                    static_cast<std::uint32_t>(ctx.cfg.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> length_dist(ctx.cfg.min_word_length,
                                                         ctx.cfg.max_word_length);
  std::uniform_int_distribution<std::size_t> root_dist(0, ctx.roots.size() - 1);
  const std::size_t len = length_dist(rng);
  const std::size_t n = ctx.pic.rank();

  std::vector<std::int64_t> w(n * n, 0), v(n);
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1;
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t k = root_dist(rng);
    const auto& a = ctx.small_roots[k];
    const auto& ga = ctx.small_gram_roots[k];
    // w <- s_a w = w + a (a^T gram w)
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (ga[i] != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] += ga[i] * w[i * n + j];
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] += a[i] * v[j];
  }

  std::int64_t trace = 0;
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t x = w[i * n + j];
      if (x > kEntryBound || x < -kEntryBound)
        fail_verification("weyl_search: entry bound exceeded in trial " + std::to_string(trial));
      if (x != (i == j ? 1 : 0)) identity = false;
      if (i == j) trace += x;
    }
  if (identity || Integer(static_cast<long>(trace)) != ctx.target_trace) return std::nullopt;

  IntMatrix exact(n, n);
  for (std::size_t i = 0; i < n * n; ++i) exact(i / n, i % n) = static_cast<long>(w[i]);
  if (!exact.pow(ctx.p).is_identity()) return std::nullopt;
  if (q_char_poly(ctx.pic, exact) != ctx.target_q_poly) return std::nullopt;
  return Hit{std::move(exact), len};
}

std::vector<std::int64_t> to_small(const IntVector& x) {
  std::vector<std::int64_t> out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(e.get_si());
  return out;
}

}  // namespace

std::size_t cyclotomic_multiplicity(int d, unsigned long p) {
  if (d < 1 || d > 6) fail("weyl_search: degree " + std::to_string(d) + " outside [1, 6]");
  if (p < 2 || !mpz_probab_prime_p(Integer(p).get_mpz_t(), 25))
    fail("weyl_search: " + std::to_string(p) + " is not prime");
  if ((9 - d) % (p - 1) != 0)
    fail("weyl_search: p - 1 = " + std::to_string(p - 1) + " does not divide 9 - d = " +
         std::to_string(9 - d));
  return static_cast<std::size_t>(9 - d) / (p - 1);
}

WeylSearchResult weyl_search(int d, unsigned long p, const WeylSearchConfig& cfg) {
  const std::size_t s = cyclotomic_multiplicity(d, p);
  if (cfg.max_trials < 1) fail("weyl_search: max_trials must be at least 1");
  if (cfg.min_word_length < 1 || cfg.min_word_length > cfg.max_word_length)
    fail("weyl_search: invalid word length range");

  const PicardLattice pic = del_pezzo_pic(d);
  SearchContext ctx{pic, roots(pic), {}, {}, p, Integer(1) - Integer(s),
                    IntPolynomial::cyclotomic_prime(p).pow(s), cfg};
  for (const auto& a : ctx.roots) {
    ctx.small_roots.push_back(to_small(a));
    ctx.small_gram_roots.push_back(to_small(pic.gram.apply(a)));
  }

  std::optional<Hit> hit;
  std::size_t hit_trial = 0;
  if (cfg.exec == Exec::serial) {
    for (std::size_t t = 0; t < cfg.max_trials && !hit; ++t)
      if ((hit = run_trial(ctx, t))) hit_trial = t;
  } else {
    constexpr std::size_t kChunk = 1024;
    std::vector<std::optional<Hit>> slots(kChunk);
    for (std::size_t base = 0; base < cfg.max_trials && !hit; base += kChunk) {
      const std::size_t count = std::min(kChunk, cfg.max_trials - base);
      const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t k = 0; k < signed_count; ++k)
        slots[k] = run_trial(ctx, base + static_cast<std::size_t>(k));
      for (std::size_t k = 0; k < count; ++k)
        if (slots[k]) {
          hit = std::move(slots[k]);
          hit_trial = base + k;
          break;
        }
    }
  }
  if (!hit)
    throw Error(ErrorKind::search_exhausted,
                "weyl_search: no element of order " + std::to_string(p) +
                    " with the required characteristic polynomial in " +
                    std::to_string(cfg.max_trials) + " trials (seed " +
                    std::to_string(cfg.seed) + ")");

  GLattice lattice = GLattice::make(pic.rank(), Cyclic{hit->element}, pic.gram);
  return WeylSearchResult{pic,      std::move(lattice), hit->element, ctx.target_q_poly,
                          hit_trial, hit->word_length};
}

}  // namespace h1lat
