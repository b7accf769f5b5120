#include "h1lat/normal_form.hpp"

#include <optional>

#include "h1lat/error.hpp"

namespace h1lat {
namespace {

// Row index in [from, rows) holding the smallest nonzero |m(i, col)|.
std::optional<std::size_t> min_pivot_in_column(const IntMatrix& m, std::size_t col,
                                               std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col) == 0) continue;
    if (!best || mpz_cmpabs(m(i, col).get_mpz_t(), m(*best, col).get_mpz_t()) < 0) best = i;
  }
  return best;
}

HermiteForm hermite_impl(const IntMatrix& a, bool with_transform, Exec exec) {
  HermiteForm out;
  out.H = a;
  out.U = with_transform ? IntMatrix::identity(a.rows()) : IntMatrix();
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool found = false;
    for (;;) {
      auto p = min_pivot_in_column(h, c, r);
      if (!p) break;
      found = true;
      h.swap_rows(r, *p);
      if (with_transform) u.swap_rows(r, *p);
      if (!kernels::reduce_rows_trunc(h, u, r, c, r + 1, exec)) break;
    }
    if (!found) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if (with_transform) u.negate_row(r);
    }
    kernels::reduce_rows_floor(h, u, r, c, r, exec);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

// Finds the smallest nonzero |d(i, j)| with i, j >= t.
bool min_pivot_in_block(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
        pi = i;
        pj = j;
        found = true;
        if (abs(d(i, j)) == 1) return true;
      }
    }
  return found;
}

SmithForm smith_impl(const IntMatrix& a, bool with_transform, Exec exec) {
  SmithForm out;
  out.D = a;
  if (with_transform) {
    out.U = IntMatrix::identity(a.rows());
    out.V = IntMatrix::identity(a.cols());
  }
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!min_pivot_in_block(d, t, pi, pj)) break;
    for (;;) {
      d.swap_rows(t, pi);
      d.swap_cols(t, pj);
      if (with_transform) {
        u.swap_rows(t, pi);
        v.swap_cols(t, pj);
      }
      bool col_left = kernels::reduce_rows_trunc(d, u, t, t, t + 1, exec);
      bool row_left = kernels::reduce_cols_trunc(d, v, t, t, t + 1, exec);
      if (col_left || row_left) {
        min_pivot_in_block(d, t, pi, pj);
        continue;
      }
      // Row and column are clear; enforce d(t,t) | every remaining entry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < d.cols(); ++k) d(t, k) += d(i, k);
            if (with_transform)
              for (std::size_t k = 0; k < u.cols(); ++k) u(t, k) += u(i, k);
            divides_all = false;
            break;
          }
      if (divides_all) break;
      pi = t;
      pj = t;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (with_transform) u.negate_row(t);
    }
  }
  for (std::size_t t = 0; t < n; ++t)
    if (d(t, t) != 0) out.invariant_factors.push_back(d(t, t));
  return out;
}

// Solves y * H = v for y, where the first `rank` rows of H are in echelon form
// with the given pivot columns. Returns false if v is not in the row lattice.
bool solve_echelon(const HermiteForm& hf, std::span<const Integer> v, IntVector& y) {
  IntVector rest(v.begin(), v.end());
  y.assign(hf.rank, Integer(0));
  for (std::size_t i = 0; i < hf.rank; ++i) {
    const std::size_t c = hf.pivot_cols[i];
    if (rest[c] == 0) continue;
    if (!mpz_divisible_p(rest[c].get_mpz_t(), hf.H(i, c).get_mpz_t())) return false;
    mpz_divexact(y[i].get_mpz_t(), rest[c].get_mpz_t(), hf.H(i, c).get_mpz_t());
    auto hrow = hf.H.row(i);
    for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= y[i] * hrow[j];
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& a, Exec exec) { return hermite_impl(a, true, exec); }

SmithForm smith_form(const IntMatrix& a, Exec exec) { return smith_impl(a, true, exec); }

IntVector smith_invariants(const IntMatrix& a, Exec exec) {
  return smith_impl(a, false, exec).invariant_factors;
}

std::size_t rank(const IntMatrix& a, Exec exec) { return hermite_impl(a, false, exec).rank; }

IntMatrix lattice_basis(const IntMatrix& gens, Exec exec) {
  auto hf = hermite_impl(gens, false, exec);
  return hf.H.first_rows(hf.rank);
}

IntMatrix kernel_basis(const IntMatrix& a, Exec exec) {
  // U * A^T = H; the rows of U past rank(H) span the (saturated) left kernel
  // of A^T because U is unimodular.
  auto hf = hermite_impl(a.transpose(), true, exec);
  const std::size_t n = a.cols();
  IntMatrix k = hf.U.submatrix(hf.rank, 0, n - hf.rank, n);
  return lattice_basis(k, exec);
}

IntMatrix lattice_coordinates(const IntMatrix& basis, const IntMatrix& vectors, Exec exec) {
  if (vectors.rows() > 0 && vectors.cols() != basis.cols())
    fail("lattice_coordinates: vectors have " + std::to_string(vectors.cols()) +
         " columns, basis has " + std::to_string(basis.cols()));
  auto hf = hermite_impl(basis, true, exec);
  if (hf.rank != basis.rows()) fail("lattice_coordinates: basis rows are linearly dependent");
  IntMatrix y(vectors.rows(), hf.rank);
  IntVector yi;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    if (!solve_echelon(hf, vectors.row(i), yi))
      fail("not a sublattice: vector " + std::to_string(i) + " = " +
           to_string(vectors.row(i)) + " is not in the span");
    std::copy(yi.begin(), yi.end(), y.row(i).begin());
  }
  // y * H = v and H = U * basis.
  return y * hf.U.first_rows(hf.rank);
}

FinAbGroup subquotient(const IntMatrix& a_basis, const IntMatrix& b_gens, Exec exec) {
  if (b_gens.rows() > 0 && b_gens.cols() != a_basis.cols())
    fail("subquotient: generator length " + std::to_string(b_gens.cols()) +
         " differs from lattice dimension " + std::to_string(a_basis.cols()));
  auto hf = hermite_impl(a_basis, false, exec);
  IntMatrix y(b_gens.rows(), hf.rank);
  IntVector yi;
  for (std::size_t i = 0; i < b_gens.rows(); ++i) {
    if (!solve_echelon(hf, b_gens.row(i), yi))
      fail("not a sublattice: generator " + std::to_string(i) + " = " +
           to_string(b_gens.row(i)) + " is not in the span of the ambient basis");
    std::copy(yi.begin(), yi.end(), y.row(i).begin());
  }
  IntVector inv = smith_invariants(y, exec);
  return FinAbGroup::from_cyclic_orders(inv, hf.rank - inv.size());
}

namespace {

// Coefficients of det(tI - M), highest degree first.
IntVector berkowitz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return {Integer(1)};
  if (n == 1) return {Integer(1), -m(0, 0)};
  IntMatrix r = m.submatrix(0, 1, 1, n - 1);
  IntMatrix c = m.submatrix(1, 0, n - 1, 1);
  IntMatrix a = m.submatrix(1, 1, n - 1, n - 1);
  // diags = [1, -m00, -R C, -R A C, ..., -R A^(n-2) C]
  IntVector diags{Integer(1), -m(0, 0)};
  IntMatrix power_c = c;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    diags.push_back(-(r * power_c)(0, 0));
    if (k + 2 < n) power_c = a * power_c;
  }
  IntVector sub = berkowitz(a);
  IntVector out(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n && j <= i; ++j) out[i] += diags[i - j] * sub[j];
  return out;
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square())
    fail("char_poly: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
         ", not square");
  IntVector high_first = berkowitz(a);
  return IntPolynomial(IntVector(high_first.rbegin(), high_first.rend()));
}

}  // namespace h1lat
