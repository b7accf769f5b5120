#include "h1lat/polynomial.hpp"

#include <algorithm>

namespace h1lat {

IntPolynomial::IntPolynomial(IntVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  IntVector c(degree + 1);
  c[degree] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::cyclotomic_prime(unsigned long p) {
  return IntPolynomial(IntVector(p, Integer(1)));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result{1};
  for (std::size_t k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) s += mag.get_str();
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  IntVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

}  // namespace h1lat
