#include "h1lat/group.hpp"

#include <deque>

#include "h1lat/error.hpp"

namespace h1lat {
namespace {

void check_matrix(std::size_t rank, const IntMatrix& g, const std::string& where,
                  const std::optional<IntMatrix>& form) {
  if (g.rows() != rank || g.cols() != rank)
    fail(where + ": expected " + std::to_string(rank) + "x" + std::to_string(rank) +
         " matrix, got " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  if (!g.is_unimodular()) fail(where + ": not unimodular (det = " + g.det().get_str() + ")");
  if (form && g.transpose() * *form * g != *form) fail(where + ": form not preserved");
}

[[noreturn]] void too_large(std::size_t bound) {
  fail("group too large or infinite: order exceeds bound " + std::to_string(bound));
}

}  // namespace

GroupKind kind_of(const GroupSpec& spec) {
  switch (spec.index()) {
    case 0: return GroupKind::cyclic;
    case 1: return GroupKind::list;
    default: return GroupKind::generated;
  }
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::list: return "list";
    case GroupKind::generated: return "generated";
  }
  return "?";
}

std::vector<IntMatrix> validate_and_close(std::size_t rank, const GroupSpec& spec,
                                          std::size_t order_bound,
                                          const std::optional<IntMatrix>& form) {
  if (order_bound < 1) fail("order_bound must be at least 1");
  if (form) {
    if (form->rows() != rank || form->cols() != rank)
      fail("form: expected " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
    if (form->transpose() != *form) fail("form: not symmetric");
  }
  const IntMatrix id = IntMatrix::identity(rank);
  std::vector<IntMatrix> out;

  if (const auto* c = std::get_if<Cyclic>(&spec)) {
    check_matrix(rank, c->generator, "generator", form);
    out.push_back(id);
    IntMatrix power = c->generator;
    while (!power.is_identity()) {
      if (out.size() >= order_bound) too_large(order_bound);
      out.push_back(power);
      power = power * c->generator;
    }
    return out;
  }

  if (const auto* e = std::get_if<Explicit>(&spec)) {
    std::map<IntMatrix, std::size_t> seen;
    for (std::size_t i = 0; i < e->elements.size(); ++i) {
      check_matrix(rank, e->elements[i], "element " + std::to_string(i), form);
      if (!seen.emplace(e->elements[i], i).second)
        fail("element " + std::to_string(i) + ": duplicate of element " +
             std::to_string(seen[e->elements[i]]));
    }
    if (e->elements.size() > order_bound) too_large(order_bound);
    if (!seen.contains(id)) fail("element list does not contain the identity");
    // A finite product-closed set of invertible matrices is a group.
    for (std::size_t i = 0; i < e->elements.size(); ++i)
      for (std::size_t j = 0; j < e->elements.size(); ++j)
        if (!seen.contains(e->elements[i] * e->elements[j]))
          fail("element list not closed under multiplication: element " + std::to_string(i) +
               " * element " + std::to_string(j) + " is missing");
    return e->elements;
  }

  const auto& gen = std::get<Generated>(spec);
  for (std::size_t i = 0; i < gen.generators.size(); ++i)
    check_matrix(rank, gen.generators[i], "generator " + std::to_string(i), form);
  std::map<IntMatrix, std::size_t> seen{{id, 0}};
  out.push_back(id);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : gen.generators) {
      IntMatrix next = out[cur] * g;
      if (seen.contains(next)) continue;
      if (out.size() >= gen.closure_bound) too_large(gen.closure_bound);
      seen.emplace(next, out.size());
      queue.push_back(out.size());
      out.push_back(std::move(next));
    }
  }
  return out;
}

GLattice GLattice::make(std::size_t rank, GroupSpec group, std::optional<IntMatrix> form,
                        std::size_t order_bound) {
  GLattice m;
  m.elements_ = validate_and_close(rank, group, order_bound, form);
  m.rank_ = rank;
  m.group_ = std::move(group);
  m.form_ = std::move(form);
  for (std::size_t i = 0; i < m.elements_.size(); ++i) m.index_.emplace(m.elements_[i], i);
  return m;
}

GLattice GLattice::trivial(std::size_t rank) {
  return make(rank, Cyclic{IntMatrix::identity(rank)});
}

std::vector<IntMatrix> GLattice::generators() const {
  if (const auto* c = std::get_if<Cyclic>(&group_)) return {c->generator};
  if (const auto* g = std::get_if<Generated>(&group_)) return g->generators;
  return elements_;
}

std::optional<std::size_t> GLattice::index_of(const IntMatrix& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GLattice::element_order(std::size_t i) const {
  const IntMatrix& g = elements_.at(i);
  std::size_t n = 1;
  for (IntMatrix p = g; !p.is_identity(); p = p * g) ++n;
  return n;
}

std::optional<std::size_t> GLattice::cyclic_generator_index() const {
  if (std::holds_alternative<Cyclic>(group_)) return order() == 1 ? 0 : 1;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (element_order(i) == order()) return i;
  return std::nullopt;
}

IntMatrix permutation_matrix(const Permutation& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace h1lat
