#pragma once

#include <random>
#include <string>
#include <vector>

#include "grading.hpp"
#include "groebner.hpp"
#include "ordering.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

namespace coxhyp::test {

inline Polynomial P(const std::string& text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

inline RingPtr ring_xyz() { return make_poly_ring({"x", "y", "z"}); }

// The quadric-threefold Cox ring K[T1..T5] / <T1*T2 + T3*T4 + T5^2>,
// Cl = Z, every variable of degree 1.
inline GradedRing quadric_ring() {
  RingPtr ring = make_poly_ring({"T1", "T2", "T3", "T4", "T5"});
  GradingGroup group{1, {}};
  std::vector<MultiDegree> degrees(5, MultiDegree(group, {1}));
  return make_graded_ring(ring, group, degrees,
                          {parse_polynomial("T1*T2 + T3*T4 + T5^2", ring)});
}

inline Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  Monomial best;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first || order.greater(m, best)) {
      best = m;
      first = false;
    }
  }
  return best;
}

// Combinatorial Krull dimension oracle: dim(K[x]/I) equals the dimension of
// the leading-term ideal, which for a monomial ideal is the largest size of
// a variable subset S such that no generator's support lies inside S.
// Exhaustive over the 2^n subsets; intended for small test instances only.
inline int64_t krull_dim_oracle(const Ideal& ideal) {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  GroebnerBasis g = groebner_basis(ideal, grevlex);
  std::vector<Monomial> leads;
  for (const auto& e : g.elements) {
    Monomial lm = leading_monomial(e, grevlex);
    if (lm.is_one()) return -1;  // the unit ideal cuts out the empty set
    leads.push_back(lm);
  }
  int32_t n = ideal.ring->nvars();
  int64_t best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& lm : leads) {
      bool support_inside = true;
      for (const auto& [var, exp] : lm.entries())
        if (!(mask & (1u << var))) {
          support_inside = false;
          break;
        }
      if (support_inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<int64_t>(best, __builtin_popcount(mask));
  }
  return best;
}

// Deterministic random polynomials for property tests.
class PolyGen {
 public:
  PolyGen(RingPtr ring, uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng_), den(rng_));
  }

  Monomial monomial(int32_t max_exp = 3) {
    std::uniform_int_distribution<int32_t> exp(0, max_exp);
    std::vector<Monomial::Entry> entries;
    for (int32_t v = 0; v < ring_->nvars(); ++v) {
      int32_t e = exp(rng_);
      if (e > 0) entries.push_back({v, e});
    }
    return Monomial::make(std::move(entries));
  }

  Polynomial poly(int32_t max_terms = 4, int32_t max_exp = 3) {
    std::uniform_int_distribution<int32_t> nterms(0, max_terms);
    Polynomial p = Polynomial::zero(ring_);
    int32_t n = nterms(rng_);
    for (int32_t i = 0; i < n; ++i)
      p = p + Polynomial::term(ring_, monomial(max_exp), rational());
    return p;
  }

  Polynomial nonzero_poly(int32_t max_terms = 4, int32_t max_exp = 3) {
    for (;;) {
      Polynomial p = poly(max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

 private:
  RingPtr ring_;
  std::mt19937_64 rng_;
};

}  // namespace coxhyp::test
