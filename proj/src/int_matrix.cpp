#include "h1lat/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail("IntMatrix: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntMatrix IntMatrix::row_vector(const IntVector& v) { return from_rows({v}, v.size()); }

IntMatrix IntMatrix::diagonal(const IntVector& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

IntVector IntMatrix::row_copy(std::size_t i) const {
  auto r = row(i);
  return IntVector(r.begin(), r.end());
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (auto& x : row(i)) x = -x;
}

void IntMatrix::append_row(std::span<const Integer> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) fail("IntMatrix::append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail("IntMatrix::submatrix: out of range");
  IntMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

IntMatrix IntMatrix::stack(const IntMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) fail("IntMatrix::stack: column mismatch");
  IntMatrix s = *this;
  s.data_.insert(s.data_.end(), below.data_.begin(), below.data_.end());
  s.rows_ += below.rows_;
  return s;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Integer IntMatrix::trace() const {
  if (!is_square()) fail("trace: matrix is not square");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::det() const {
  if (!is_square()) fail("det: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  return abs(det()) == 1;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  if (!is_square()) fail("inverse_unimodular: matrix is not square");
  // U * A = H, and H is the identity exactly when A is unimodular.
  auto hf = hermite_form(*this);
  if (!hf.H.is_identity()) fail("inverse_unimodular: matrix is not unimodular");
  return hf.U;
}

IntMatrix IntMatrix::pow(std::size_t e) const {
  if (!is_square()) fail("pow: matrix is not square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) fail("apply: length mismatch");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << h1lat::to_string(row(i));
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix difference: shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x = -x;
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) fail("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer bilinear(const IntMatrix& gram, std::span<const Integer> x, std::span<const Integer> y) {
  return dot(x, gram.apply(y));
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ']';
}

}  // namespace h1lat
