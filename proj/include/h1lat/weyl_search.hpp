#pragma once

#include <cstddef>
#include <cstdint>

#include "h1lat/group.hpp"
#include "h1lat/kernels.hpp"
#include "h1lat/picard.hpp"

namespace h1lat {

struct WeylSearchConfig {
  std::uint64_t seed = 1;
  std::size_t max_trials = 1'000'000;
  std::size_t min_word_length = 2;
  std::size_t max_word_length = 16;
  /// Parallel trials are merged by lowest trial index, so the result does not
  /// depend on the policy or the thread count.
  Exec exec = Exec::parallel;
};

struct WeylSearchResult {
  PicardLattice pic;
  GLattice lattice;  // Pic with the cyclic group generated by `element`
  IntMatrix element;
  IntPolynomial q_char_poly;
  std::size_t trial = 0;
  std::size_t word_length = 0;
};

/// Number of Phi_p factors the characteristic polynomial on Q must have:
/// (9 - d) / (p - 1). Throws unless p is prime and p - 1 divides 9 - d.
std::size_t cyclotomic_multiplicity(int d, unsigned long p);

/// Seeded random products of root reflections of Pic(dP_d) until one has
/// order exactly p and characteristic polynomial Phi_p(t)^s on Q.
/// Throws ErrorKind::search_exhausted after cfg.max_trials trials.
WeylSearchResult weyl_search(int d, unsigned long p, const WeylSearchConfig& cfg = {});

}  // namespace h1lat
