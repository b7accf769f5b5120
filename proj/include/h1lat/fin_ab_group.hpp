#pragma once

#include <string>

#include "h1lat/int_matrix.hpp"

namespace h1lat {

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk in
/// invariant-factor form: every d_i > 1 and d_i | d_{i+1}.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Canonicalizes an arbitrary list of cyclic orders (each >= 1).
  static FinAbGroup from_cyclic_orders(const IntVector& orders, std::size_t free_rank = 0);
  /// (Z/p)^k
  static FinAbGroup elementary(unsigned long p, std::size_t k);

  const IntVector& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  /// Throws if the group is infinite.
  Integer order() const;
  Integer exponent() const;

  /// e.g. "0", "(Z/2)^6", "Z/2 + Z/4", "Z^1 + Z/3"
  std::string to_string() const;

  friend FinAbGroup operator+(const FinAbGroup& a, const FinAbGroup& b);
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  IntVector factors_;
  std::size_t free_rank_ = 0;
};

}  // namespace h1lat
