#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace h1lat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Zero-sized dimensions are legal: a 0x0 matrix is the identity on the
/// rank-0 lattice, and a 0xn matrix is an empty list of length-n rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix row_vector(const IntVector& v);
  static IntMatrix diagonal(const IntVector& d);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row_copy(std::size_t i) const;
  IntVector column(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void append_row(std::span<const Integer> r);

  IntMatrix transpose() const;
  IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix first_rows(std::size_t n) const { return submatrix(0, 0, n, cols_); }
  IntMatrix stack(const IntMatrix& below) const;

  bool is_zero() const;
  bool is_identity() const;
  Integer trace() const;
  /// Fraction-free (Bareiss) determinant.
  Integer det() const;
  bool is_unimodular() const;
  /// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
  IntMatrix inverse_unimodular() const;
  IntMatrix pow(std::size_t e) const;
  IntVector apply(std::span<const Integer> x) const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  /// Shape first, then lexicographic on entries. Gives matrices a total order
  /// so element sets can live in ordered containers.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
/// x^T * gram * y
Integer bilinear(const IntMatrix& gram, std::span<const Integer> x, std::span<const Integer> y);
Integer content(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

}  // namespace h1lat
