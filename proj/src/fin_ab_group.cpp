#include "h1lat/fin_ab_group.hpp"

#include "h1lat/error.hpp"
#include "h1lat/normal_form.hpp"

namespace h1lat {

FinAbGroup FinAbGroup::from_cyclic_orders(const IntVector& orders, std::size_t free_rank) {
  for (const auto& d : orders)
    if (d < 1) fail("FinAbGroup: cyclic orders must be positive, got " + d.get_str());
  FinAbGroup g;
  g.free_rank_ = free_rank;
  for (const auto& d : smith_invariants(IntMatrix::diagonal(orders), Exec::serial))
    if (d > 1) g.factors_.push_back(d);
  return g;
}

FinAbGroup FinAbGroup::elementary(unsigned long p, std::size_t k) {
  return from_cyclic_orders(IntVector(k, Integer(p)));
}

Integer FinAbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer FinAbGroup::order() const {
  if (!is_finite()) fail("FinAbGroup::order: group is infinite");
  return torsion_order();
}

Integer FinAbGroup::exponent() const {
  if (!is_finite()) fail("FinAbGroup::exponent: group is infinite");
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  auto add = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank_ > 0) add("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    std::string part = "Z/" + factors_[i].get_str();
    if (j - i > 1) part = "(" + part + ")^" + std::to_string(j - i);
    add(part);
    i = j;
  }
  return s;
}

FinAbGroup operator+(const FinAbGroup& a, const FinAbGroup& b) {
  IntVector all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return FinAbGroup::from_cyclic_orders(all, a.free_rank_ + b.free_rank_);
}

}  // namespace h1lat
