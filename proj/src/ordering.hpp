#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace coxhyp {

// Total monomial order compatible with multiplication. Three kinds:
// lex, graded reverse lex, and block (elimination) orders whose front
// variables dominate every monomial free of them. Inside a block the front
// variables are compared by grevlex; ties fall through to the inner order
// on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  static MonomialOrder block(std::vector<int32_t> front_vars, MonomialOrder inner);

  Kind kind() const { return kind_; }
  const std::vector<int32_t>& front_vars() const { return front_; }
  const MonomialOrder& inner() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string str() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<int32_t> front_;                   // sorted, Block only
  std::shared_ptr<const MonomialOrder> inner_;   // Block only
};

}  // namespace coxhyp
