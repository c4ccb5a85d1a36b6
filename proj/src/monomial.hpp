#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace coxhyp {

// Sparse exponent vector: sorted (variable index, exponent) pairs with all
// exponents positive. The empty vector is the unit monomial.
class Monomial {
 public:
  using Entry = std::pair<int32_t, int32_t>;

  Monomial() = default;
  static Monomial make(std::vector<Entry> entries);
  static Monomial variable(int32_t var, int32_t exp = 1);

  bool is_one() const { return entries_.empty(); }
  int32_t exponent(int32_t var) const;
  int64_t total_degree() const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;          // *this | o
  Monomial quotient_by(const Monomial& o) const;  // *this / o, must be exact
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  bool involves_any(const std::vector<bool>& var_mask) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  // Structural key order for canonical term maps; this is not a monomial order.
  std::strong_ordering operator<=>(const Monomial& o) const { return entries_ <=> o.entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace coxhyp
