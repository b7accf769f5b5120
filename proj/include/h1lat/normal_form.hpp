#pragma once

#include <cstddef>
#include <vector>

#include "h1lat/fin_ab_group.hpp"
#include "h1lat/int_matrix.hpp"
#include "h1lat/kernels.hpp"
#include "h1lat/polynomial.hpp"

namespace h1lat {

/// U * A = H with U unimodular. H is upper echelon (row style), pivots are
/// positive and entries above each pivot lie in [0, pivot). The first `rank`
/// rows of H are a basis of the row lattice of A, the rest are zero.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_form(const IntMatrix& a, Exec exec = Exec::parallel);

/// U * A * V = D, D diagonal with nonnegative entries d1 | d2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Nonzero diagonal entries of D in divisibility order (1s included).
  IntVector invariant_factors;
};

/// Pivot = minimal nonzero absolute value of the remaining submatrix.
SmithForm smith_form(const IntMatrix& a, Exec exec = Exec::parallel);

/// Smith form without the transforms; same invariant factors.
IntVector smith_invariants(const IntMatrix& a, Exec exec = Exec::parallel);

std::size_t rank(const IntMatrix& a, Exec exec = Exec::parallel);

/// Rows form the HNF-reduced basis of the saturated lattice {x : A x^T = 0}.
/// The result has a.cols() columns (possibly zero rows).
IntMatrix kernel_basis(const IntMatrix& a, Exec exec = Exec::parallel);

/// Nonzero rows of the HNF of `gens`: the canonical basis of their row lattice.
IntMatrix lattice_basis(const IntMatrix& gens, Exec exec = Exec::parallel);

/// Integer coordinates X with X * basis = vectors. `basis` rows must be linearly
/// independent. Throws "not a sublattice" naming the first offending row.
IntMatrix lattice_coordinates(const IntMatrix& basis, const IntMatrix& vectors,
                              Exec exec = Exec::parallel);

/// Isomorphism type of span(A rows) / span(B rows).
/// Precondition: span(B) is contained in span(A); otherwise throws
/// "not a sublattice: generator k".
FinAbGroup subquotient(const IntMatrix& a_basis, const IntMatrix& b_gens,
                       Exec exec = Exec::parallel);

/// det(t I - A) by the division-free Berkowitz recurrence.
IntPolynomial char_poly(const IntMatrix& a);

}  // namespace h1lat
