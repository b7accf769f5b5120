#include "h1lat/cohomology.hpp"

#include <exception>
#include <set>

#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {
namespace {

IntMatrix stacked_fixed_conditions(const GLattice& m) {
  IntMatrix rows(0, m.rank());
  const IntMatrix id = IntMatrix::identity(m.rank());
  for (const auto& g : m.generators()) rows = rows.stack(g - id);
  return rows;
}

void check_annihilation(const FinAbGroup& h1, std::size_t order) {
  if (!h1.is_finite()) fail_verification("H^1 has positive free rank: " + h1.to_string());
  for (const auto& d : h1.invariant_factors())
    if (Integer(static_cast<unsigned long>(order)) % d != 0)
      fail_verification("H^1 factor " + d.get_str() + " does not divide |G| = " +
                        std::to_string(order));
}

}  // namespace

std::string to_string(H1Method method) {
  return method == H1Method::cyclic ? "cyclic" : "cocycle";
}

IntMatrix invariants_h0(const GLattice& m, Exec exec) {
  if (m.rank() == 0) return IntMatrix(0, 0);
  return kernel_basis(stacked_fixed_conditions(m), exec);
}

CohomologyResult h1_cyclic(const GLattice& m, const H1Options& opts) {
  auto gi = m.cyclic_generator_index();
  if (!gi) fail("h1_cyclic: group of order " + std::to_string(m.order()) + " is not cyclic");
  const std::size_t r = m.rank();
  const IntMatrix& g = m.elements()[*gi];

  IntMatrix norm(r, r);
  for (const auto& e : m.elements()) norm = norm + e;
  const IntMatrix eta = IntMatrix::identity(r) - g;

  CohomologyResult out;
  out.method = H1Method::cyclic;
  out.h0_rank = r - rank(eta, opts.exec);
  IntMatrix ker_norm = r == 0 ? IntMatrix(0, 0) : kernel_basis(norm, opts.exec);
  // Columns of eta generate eta(M).
  IntMatrix eta_image = eta.transpose();
  try {
    out.h1 = subquotient(ker_norm, eta_image, opts.exec);
  } catch (const Error& e) {
    fail_verification(std::string("eta(M) is not contained in ker(N): ") + e.what());
  }
  check_annihilation(out.h1, m.order());
  if (opts.witness) out.witness = H1Witness{std::move(ker_norm), lattice_basis(eta_image)};
  return out;
}

CohomologyResult h1_cocycle(const GLattice& m, const H1Options& opts) {
  const std::size_t n = m.order();
  const std::size_t r = m.rank();
  if (n > opts.max_order)
    fail("group too large for the cocycle method: order " + std::to_string(n) + " > cap " +
         std::to_string(opts.max_order));
  if (r > opts.max_rank)
    fail("lattice too large for the cocycle method: rank " + std::to_string(r) + " > cap " +
         std::to_string(opts.max_rank));
  const auto& els = m.elements();
  const std::size_t unknowns = n * r;

  // f(ab) - f(a) - a f(b) = 0 for every pair (a, b); duplicates dropped.
  std::set<IntVector> constraints;
  IntVector row(unknowns);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = *m.index_of(els[a] * els[b]);
      for (std::size_t i = 0; i < r; ++i) {
        std::fill(row.begin(), row.end(), Integer(0));
        row[ab * r + i] += 1;
        row[a * r + i] -= 1;
        for (std::size_t j = 0; j < r; ++j) row[b * r + j] -= els[a](i, j);
        bool zero = std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
        if (!zero) constraints.insert(row);
      }
    }
  IntMatrix system(0, unknowns);
  for (const auto& c : constraints) system.append_row(c);

  IntMatrix z1;
  if (system.rows() == 0)
    z1 = IntMatrix::identity(unknowns);
  else
    z1 = kernel_basis(lattice_basis(system, opts.exec), opts.exec);

  // B^1 generated by the coboundaries of the basis vectors e_j: (g e_j - e_j)_g.
  IntMatrix b1(r, unknowns);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < r; ++i)
        b1(j, k * r + i) = els[k](i, j) - (i == j ? 1 : 0);

  CohomologyResult out;
  out.method = H1Method::cocycle;
  out.h0_rank = invariants_h0(m, opts.exec).rows();
  try {
    out.h1 = subquotient(z1, b1, opts.exec);
  } catch (const Error& e) {
    fail_verification(std::string("B^1 is not contained in Z^1: ") + e.what());
  }
  check_annihilation(out.h1, n);
  if (opts.witness) out.witness = H1Witness{std::move(z1), std::move(b1)};
  return out;
}

CohomologyResult h1(const GLattice& m, const H1Options& opts) {
  if (!m.cyclic_generator_index()) return h1_cocycle(m, opts);
  CohomologyResult out = h1_cyclic(m, opts);
  if (opts.cross_check && m.order() <= opts.max_order && m.rank() <= opts.max_rank) {
    H1Options plain = opts;
    plain.witness = false;
    CohomologyResult other = h1_cocycle(m, plain);
    if (other.h1 != out.h1 || other.h0_rank != out.h0_rank)
      fail_verification("cyclic and cocycle methods disagree: " + out.h1.to_string() + " vs " +
                        other.h1.to_string());
  }
  return out;
}

GLattice permutation_module(const std::vector<Permutation>& perms, GroupKind shape,
                            std::size_t order_bound) {
  const std::size_t k = perms.empty() ? 0 : perms.front().size();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].size() != k)
      fail("inconsistent permutations: permutation " + std::to_string(i) + " acts on " +
           std::to_string(perms[i].size()) + " points, expected " + std::to_string(k));
    std::vector<bool> hit(k, false);
    for (std::size_t x : perms[i]) {
      if (x >= k || hit[x])
        fail("inconsistent permutations: permutation " + std::to_string(i) +
             " is not a bijection of {0.." + std::to_string(k == 0 ? 0 : k - 1) + "}");
      hit[x] = true;
    }
  }
  std::vector<IntMatrix> mats;
  for (const auto& p : perms) mats.push_back(permutation_matrix(p));
  try {
    switch (shape) {
      case GroupKind::cyclic:
        if (mats.size() != 1)
          fail("inconsistent permutations: cyclic shape needs exactly one permutation, got " +
               std::to_string(mats.size()));
        return GLattice::make(k, Cyclic{mats.front()}, std::nullopt, order_bound);
      case GroupKind::list:
        return GLattice::make(k, Explicit{mats}, std::nullopt, order_bound);
      case GroupKind::generated:
        return GLattice::make(k, Generated{mats, order_bound}, std::nullopt, order_bound);
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.starts_with("inconsistent permutations")) throw;
    fail("inconsistent permutations: " + what);
  }
  fail("permutation_module: unknown shape");
}

namespace {

std::optional<IntMatrix> sum_forms(const GLattice& a, const GLattice& b) {
  if (a.form() && b.form()) return IntMatrix::block_diagonal(*a.form(), *b.form());
  return std::nullopt;
}

std::vector<IntMatrix> pair_up(const std::vector<IntMatrix>& x, const std::vector<IntMatrix>& y,
                               const char* what) {
  if (x.size() != y.size())
    fail(std::string("direct_sum: group mismatch (") + what + " counts " +
         std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(IntMatrix::block_diagonal(x[i], y[i]));
  return out;
}

}  // namespace

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (b.rank() == 0) return a;
  if (a.rank() == 0) return b;
  if (a.kind() != b.kind())
    fail("direct_sum: group mismatch (" + to_string(a.kind()) + " vs " + to_string(b.kind()) +
         ")");
  const std::size_t bound = std::max(a.order(), b.order()) * std::max(a.order(), b.order());
  const std::size_t rank = a.rank() + b.rank();
  try {
    switch (a.kind()) {
      case GroupKind::cyclic:
        return GLattice::make(
            rank,
            Cyclic{IntMatrix::block_diagonal(std::get<Cyclic>(a.group()).generator,
                                             std::get<Cyclic>(b.group()).generator)},
            sum_forms(a, b), bound);
      case GroupKind::list:
        return GLattice::make(rank, Explicit{pair_up(a.elements(), b.elements(), "element")},
                              sum_forms(a, b), bound);
      case GroupKind::generated:
        return GLattice::make(
            rank, Generated{pair_up(a.generators(), b.generators(), "generator"), bound},
            sum_forms(a, b), bound);
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.starts_with("direct_sum")) throw;
    fail("direct_sum: group mismatch (" + what + ")");
  }
  fail("direct_sum: unknown group kind");
}

GLattice restrict_subgroup(const GLattice& m, const std::vector<IntMatrix>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    if (!m.index_of(subset[i]))
      fail("subset not a subgroup: matrix " + std::to_string(i) + " is not a group element");
  if (subset.size() == 1) return GLattice::make(m.rank(), Cyclic{subset.front()}, m.form());
  try {
    return GLattice::make(m.rank(), Explicit{subset}, m.form());
  } catch (const Error& e) {
    fail(std::string("subset not a subgroup: ") + e.what());
  }
}

GLattice sublattice_action(const GLattice& m, const IntMatrix& basis) {
  if (basis.cols() != m.rank())
    fail("sublattice_action: basis vectors have length " + std::to_string(basis.cols()) +
         ", lattice rank is " + std::to_string(m.rank()));
  auto restrict = [&](const IntMatrix& g) {
    // Rows of basis * g^T are the images g b_j.
    return lattice_coordinates(basis, basis * g.transpose()).transpose();
  };
  std::optional<IntMatrix> form;
  if (m.form()) form = basis * *m.form() * basis.transpose();
  const std::size_t k = basis.rows();
  return std::visit(
      [&](const auto& spec) -> GLattice {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return GLattice::make(k, Cyclic{restrict(spec.generator)}, form);
        } else if constexpr (std::is_same_v<T, Explicit>) {
          std::vector<IntMatrix> els;
          for (const auto& g : spec.elements) els.push_back(restrict(g));
          return GLattice::make(k, Explicit{els}, form);
        } else {
          std::vector<IntMatrix> gens;
          for (const auto& g : spec.generators) gens.push_back(restrict(g));
          return GLattice::make(k, Generated{gens, spec.closure_bound}, form);
        }
      },
      m.group());
}

ObstructionReport obstruction_scan(const GLattice& m, const H1Options& opts) {
  ObstructionReport report;
  report.full = h1(m, opts);

  // One representative generator per distinct cyclic subgroup, lowest index first.
  std::set<std::set<std::size_t>> seen;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < m.order(); ++i) {
    std::set<std::size_t> sub{0};
    const IntMatrix& g = m.elements()[i];
    for (IntMatrix p = g; !p.is_identity(); p = p * g) sub.insert(*m.index_of(p));
    if (seen.insert(std::move(sub)).second) reps.push_back(i);
  }

  std::vector<SubgroupH1> results(reps.size());
  std::vector<std::exception_ptr> errors(reps.size());
  H1Options inner = opts;
  inner.exec = Exec::serial;
  const bool par = opts.exec == Exec::parallel && reps.size() > 1;
  const auto count = static_cast<std::ptrdiff_t>(reps.size());
#pragma omp parallel for if (par) schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    try {
      const std::size_t i = reps[static_cast<std::size_t>(s)];
      GLattice sub = GLattice::make(m.rank(), Cyclic{m.elements()[i]}, m.form());
      results[s] = SubgroupH1{i, sub.order(), h1_cyclic(sub, inner)};
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  report.cyclic_subgroups = std::move(results);

  if (!report.full.h1.is_trivial())
    report.witnesses.push_back("full group (order " + std::to_string(m.order()) +
                               "): H1 = " + report.full.h1.to_string());
  for (const auto& s : report.cyclic_subgroups)
    if (!s.result.h1.is_trivial())
      report.witnesses.push_back("cyclic subgroup <g" + std::to_string(s.generator_index) +
                                 "> (order " + std::to_string(s.order) +
                                 "): H1 = " + s.result.h1.to_string());
  report.obstructed = !report.witnesses.empty();
  return report;
}

}  // namespace h1lat
