#pragma once

#include <cstddef>

#include "h1lat/int_matrix.hpp"

namespace h1lat {

/// Execution policy for the elimination kernels. Both policies produce
/// bit-identical results; serial is the reference path.
enum class Exec { serial, parallel };

namespace kernels {

/// Work (rows * row length) below which the parallel policy runs serially.
inline constexpr std::size_t kParallelGrain = 4096;

/// For every row i >= first other than `pivot_row`:
///   q_i = trunc(M(i, col) / M(pivot_row, col)),  row_i -= q_i * row_pivot
/// applied identically to `m` and to the companion transform `u` (which may be
/// empty). Returns true if some M(i, col), i >= first, i != pivot, is nonzero
/// afterwards.
bool reduce_rows_trunc(IntMatrix& m, IntMatrix& u, std::size_t pivot_row, std::size_t col,
                       std::size_t first, Exec exec);

/// Same as reduce_rows_trunc but uses floor division on rows [0, last), which
/// leaves those entries in [0, pivot) for a positive pivot.
void reduce_rows_floor(IntMatrix& m, IntMatrix& u, std::size_t pivot_row, std::size_t col,
                       std::size_t last, Exec exec);

/// Column analogue of reduce_rows_trunc: for every column j >= first other than
/// `pivot_col`, col_j -= trunc(M(row, j) / M(row, pivot_col)) * col_pivot,
/// applied to `m` and to the right transform `v`.
bool reduce_cols_trunc(IntMatrix& m, IntMatrix& v, std::size_t row, std::size_t pivot_col,
                       std::size_t first, Exec exec);

}  // namespace kernels
}  // namespace h1lat
