#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "h1lat/fin_ab_group.hpp"
#include "h1lat/group.hpp"
#include "h1lat/kernels.hpp"

namespace h1lat {

enum class H1Method { cyclic, cocycle };

std::string to_string(H1Method method);

/// Certificate for H^1 = cocycles / coboundaries. For the cyclic method the
/// cocycles are a basis of ker(N) and the coboundaries generate (1 - g)M; for
/// the cocycle method they are a basis of Z^1 and generators of B^1 in
/// Z^(|G| * rank), block k holding the value on elements()[k].
struct H1Witness {
  IntMatrix cocycles;
  IntMatrix coboundaries;
};

struct CohomologyResult {
  std::size_t h0_rank = 0;
  FinAbGroup h1;
  H1Method method = H1Method::cyclic;
  std::optional<H1Witness> witness;
};

struct H1Options {
  bool witness = false;
  /// Run both methods on cyclic groups and require equal answers.
  bool cross_check = false;
  /// Refusal caps for the cocycle method.
  std::size_t max_order = 200;
  std::size_t max_rank = 32;
  Exec exec = Exec::parallel;
};

/// Canonical basis (rows) of the fixed sublattice M^G.
IntMatrix invariants_h0(const GLattice& m, Exec exec = Exec::parallel);

/// H^1 = ker(N) / (1 - g)M for a cyclic group with generator g and norm
/// N = 1 + g + ... + g^(n-1). Throws for non-cyclic groups.
CohomologyResult h1_cyclic(const GLattice& m, const H1Options& opts = {});

/// H^1 = Z^1 / B^1 from crossed homomorphisms f(gh) = f(g) + g f(h), solved
/// over all pairs of elements.
CohomologyResult h1_cocycle(const GLattice& m, const H1Options& opts = {});

/// Cyclic method when the group is cyclic, cocycle method otherwise.
CohomologyResult h1(const GLattice& m, const H1Options& opts = {});

/// Permutation module on Z^k. `shape` decides how the permutations are read:
/// cyclic (exactly one generator), list (the full group), generated.
/// Throws "inconsistent permutations" for malformed input.
GLattice permutation_module(const std::vector<Permutation>& perms, GroupKind shape,
                            std::size_t order_bound = kDefaultOrderBound);

/// Block-diagonal sum. The two group specs must have the same shape and be
/// matched element by element (generator by generator). A rank-0 summand is
/// absorbed.
GLattice direct_sum(const GLattice& a, const GLattice& b);

/// Restriction to the subgroup formed by `subset`. A single matrix is closed
/// cyclically; a longer list must be a subgroup of m's group.
GLattice restrict_subgroup(const GLattice& m, const std::vector<IntMatrix>& subset);

/// The G-stable sublattice spanned by the rows of `basis`, with the action
/// written in that basis (g' e_j = coordinates of g b_j) and the induced form.
GLattice sublattice_action(const GLattice& m, const IntMatrix& basis);

struct SubgroupH1 {
  std::size_t generator_index = 0;  // into elements()
  std::size_t order = 0;
  CohomologyResult result;
};

struct ObstructionReport {
  CohomologyResult full;
  /// One entry per distinct cyclic subgroup, ordered by generator index.
  std::vector<SubgroupH1> cyclic_subgroups;
  bool obstructed = false;
  std::vector<std::string> witnesses;
};

/// H^1 of the full group and of every cyclic subgroup. A nonzero value for any
/// of them obstructs stable linearization. With Exec::parallel the subgroups
/// are evaluated concurrently; the report is identical either way.
ObstructionReport obstruction_scan(const GLattice& m, const H1Options& opts = {});

}  // namespace h1lat
