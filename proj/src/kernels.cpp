#include "h1lat/kernels.hpp"

#include <cstddef>

namespace h1lat::kernels {
namespace {

// row_i -= q * row_p on the entries where row_p is nonzero.
void submul_row(IntMatrix& m, std::size_t i, std::size_t p, const Integer& q) {
  auto dst = m.row(i);
  auto src = m.row(p);
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) mpz_submul(dst[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

void submul_col(IntMatrix& m, std::size_t j, std::size_t p, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, p) != 0) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(i, p).get_mpz_t());
}

bool run_parallel(Exec exec, std::size_t lines, std::size_t width) {
  return exec == Exec::parallel && lines * width >= kParallelGrain;
}

}  // namespace

bool reduce_rows_trunc(IntMatrix& m, IntMatrix& u, std::size_t pivot_row, std::size_t col,
                       std::size_t first, Exec exec) {
  const Integer& pivot = m(pivot_row, col);
  const auto n = static_cast<std::ptrdiff_t>(m.rows());
  const bool par = run_parallel(exec, m.rows() - first, m.cols() + u.cols());
  int remaining = 0;
#pragma omp parallel for if (par) schedule(static) reduction(| : remaining)
  for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(first); ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i == pivot_row || m(i, col) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), pivot.get_mpz_t());
    if (q != 0) {
      submul_row(m, i, pivot_row, q);
      if (!u.empty()) submul_row(u, i, pivot_row, q);
    }
    if (m(i, col) != 0) remaining |= 1;
  }
  return remaining != 0;
}

void reduce_rows_floor(IntMatrix& m, IntMatrix& u, std::size_t pivot_row, std::size_t col,
                       std::size_t last, Exec exec) {
  const Integer& pivot = m(pivot_row, col);
  const auto n = static_cast<std::ptrdiff_t>(last);
  const bool par = run_parallel(exec, last, m.cols() + u.cols());
#pragma omp parallel for if (par) schedule(static)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i == pivot_row || m(i, col) == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), pivot.get_mpz_t());
    if (q != 0) {
      submul_row(m, i, pivot_row, q);
      if (!u.empty()) submul_row(u, i, pivot_row, q);
    }
  }
}

bool reduce_cols_trunc(IntMatrix& m, IntMatrix& v, std::size_t row, std::size_t pivot_col,
                       std::size_t first, Exec exec) {
  const Integer& pivot = m(row, pivot_col);
  const auto n = static_cast<std::ptrdiff_t>(m.cols());
  const bool par = run_parallel(exec, m.cols() - first, m.rows() + v.rows());
  int remaining = 0;
#pragma omp parallel for if (par) schedule(static) reduction(| : remaining)
  for (std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(first); jj < n; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    if (j == pivot_col || m(row, j) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), m(row, j).get_mpz_t(), pivot.get_mpz_t());
    if (q != 0) {
      submul_col(m, j, pivot_col, q);
      if (!v.empty()) submul_col(v, j, pivot_col, q);
    }
    if (m(row, j) != 0) remaining |= 1;
  }
  return remaining != 0;
}

}  // namespace h1lat::kernels
