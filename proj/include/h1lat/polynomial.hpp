#pragma once

#include <string>

#include "h1lat/int_matrix.hpp"

namespace h1lat {

/// Integer polynomial in one variable t, coefficients stored lowest degree first.
/// Trailing zero coefficients are always trimmed, so == is structural.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVector coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t degree);
  /// 1 + t + ... + t^(p-1)
  static IntPolynomial cyclotomic_prime(unsigned long p);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const IntVector& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const;
  Integer eval(const Integer& t) const;
  IntPolynomial pow(std::size_t e) const;
  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  IntVector coeffs_;
};

}  // namespace h1lat
