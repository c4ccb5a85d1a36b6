#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ordering.hpp"
#include "polynomial.hpp"

namespace coxhyp {

// Shared work meter. Charged once per S-pair reduction; all Groebner-based
// operations of one run share a meter so a command has a single global cap.
class Budget {
 public:
  static constexpr uint64_t kDefaultLimit = 1000000;

  explicit Budget(uint64_t limit = kDefaultLimit) : limit_(limit) {}
  void charge(uint64_t n = 1);
  uint64_t used() const { return used_; }
  uint64_t limit() const { return limit_; }

 private:
  uint64_t limit_;
  uint64_t used_ = 0;
};

using BudgetPtr = std::shared_ptr<Budget>;

BudgetPtr make_budget(uint64_t limit = Budget::kDefaultLimit);

// Finitely generated ideal; zero generators are dropped, the empty list is
// the zero ideal.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

// Reduced Groebner basis: every element monic, no term of any element
// divisible by the leading term of another. Unique for (ideal, order), so
// structural equality of `elements` decides ideal equality.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;  // sorted by ascending leading monomial
};

// Buchberger with the coprimality and chain criteria and degree-graded pair
// selection. Deterministic; throws ResourceLimit when the meter runs out.
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const BudgetPtr& budget = nullptr);

// Remainder of multivariate division by G; zero iff p lies in ideal(G).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

bool is_member(const Polynomial& p, const GroebnerBasis& g);

// Generators of I intersected with the subring omitting drop_vars, computed
// with a block order. The result lives in the same ambient ring.
Ideal eliminate(const Ideal& ideal, const std::vector<int32_t>& drop_vars,
                const BudgetPtr& budget = nullptr);

Ideal intersect(const Ideal& a, const Ideal& b, const BudgetPtr& budget = nullptr);

// (I : h) = {p : p*h in I}, h != 0. Returned with reduced-basis generators.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& h, const BudgetPtr& budget = nullptr);

// (I : h^inf) by iterated quotient until the reduced basis stabilizes.
Ideal saturate(const Ideal& ideal, const Polynomial& h, const BudgetPtr& budget = nullptr);

// Same ideal through the inverse-variable route: eliminate t from I + <1 - t*h>.
// Kept as an independent cross-check of `saturate`.
Ideal saturate_via_inverse_variable(const Ideal& ideal, const Polynomial& h,
                                    const BudgetPtr& budget = nullptr);

bool ideals_equal(const Ideal& a, const Ideal& b, const BudgetPtr& budget = nullptr);

// Ideal with reduced-basis generators under grevlex.
Ideal reduced(const Ideal& ideal, const BudgetPtr& budget = nullptr);

bool contains(const Ideal& ideal, const Polynomial& p, const BudgetPtr& budget = nullptr);

}  // namespace coxhyp
