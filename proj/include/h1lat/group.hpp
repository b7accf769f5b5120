#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "h1lat/int_matrix.hpp"

namespace h1lat {

inline constexpr std::size_t kDefaultOrderBound = 10000;

struct Cyclic {
  IntMatrix generator;
};

/// Full element list; must contain the identity and be closed under products.
struct Explicit {
  std::vector<IntMatrix> elements;
};

struct Generated {
  std::vector<IntMatrix> generators;
  std::size_t closure_bound = kDefaultOrderBound;
};

using GroupSpec = std::variant<Cyclic, Explicit, Generated>;

enum class GroupKind { cyclic, list, generated };

GroupKind kind_of(const GroupSpec& spec);
std::string to_string(GroupKind kind);

/// Full element list of the finite matrix group described by `spec`, acting on
/// Z^rank. Cyclic yields the powers I, g, g^2, ...; Generated yields the
/// closure in breadth-first order starting from I; Explicit is checked and
/// returned in the given order.
///
/// Throws on: wrong matrix shape, non-unimodular matrices, a `form` that is not
/// preserved (g^T form g != form), Explicit sets that are not closed or lack
/// the identity, and groups larger than the bound ("group too large or
/// infinite"). Cyclic uses `order_bound`, Generated its own closure_bound.
std::vector<IntMatrix> validate_and_close(std::size_t rank, const GroupSpec& spec,
                                          std::size_t order_bound = kDefaultOrderBound,
                                          const std::optional<IntMatrix>& form = std::nullopt);

/// Free Z-module of finite rank with a finite group acting by unimodular
/// matrices (on column vectors), optionally with an invariant Gram form.
/// Immutable; construction validates everything.
class GLattice {
 public:
  static GLattice make(std::size_t rank, GroupSpec group,
                       std::optional<IntMatrix> form = std::nullopt,
                       std::size_t order_bound = kDefaultOrderBound);
  /// Z^rank with the trivial action.
  static GLattice trivial(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const GroupSpec& group() const { return group_; }
  GroupKind kind() const { return kind_of(group_); }
  const std::optional<IntMatrix>& form() const { return form_; }
  const std::vector<IntMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// Generators of the group: the cyclic generator, the generator list, or
  /// (Explicit) every element.
  std::vector<IntMatrix> generators() const;

  std::optional<std::size_t> index_of(const IntMatrix& g) const;
  /// Order of elements()[i].
  std::size_t element_order(std::size_t i) const;
  /// Index of an element generating the whole group, if the group is cyclic.
  /// For Cyclic specs this is the declared generator.
  std::optional<std::size_t> cyclic_generator_index() const;

 private:
  GLattice() = default;

  std::size_t rank_ = 0;
  GroupSpec group_;
  std::optional<IntMatrix> form_;
  std::vector<IntMatrix> elements_;
  std::map<IntMatrix, std::size_t> index_;
};

/// Images of 0..k-1 under a permutation, 0-based.
using Permutation = std::vector<std::size_t>;

/// 0/1 matrix with e_j -> e_perm[j].
IntMatrix permutation_matrix(const Permutation& perm);

}  // namespace h1lat
