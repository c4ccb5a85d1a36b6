#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace coxhyp {

// An ambient variable set. Immutable; polynomials keep a shared reference and
// all binary operations require both operands to agree on it.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> var_names);

  int32_t nvars() const { return static_cast<int32_t>(names_.size()); }
  const std::string& var_name(int32_t i) const;
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<int32_t> var_index(std::string_view name) const;

  bool operator==(const PolyRing& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int32_t, std::less<>> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(std::vector<std::string> var_names);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Sparse multivariate polynomial over Q in canonical form: no zero
// coefficients; equality is structural equality of the term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;  // empty placeholder; builders assign a real value
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(const RingPtr& ring, int32_t var, int32_t exp = 1);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);
  static Polynomial from_terms(RingPtr ring, TermMap terms);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  int64_t total_degree() const;  // -1 for the zero polynomial
  int64_t degree_in(const std::vector<bool>& var_mask) const;
  bool involves_var(int32_t var) const;
  bool involves_any(const std::vector<bool>& var_mask) const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(uint32_t e) const;

  bool operator==(const Polynomial& o) const;

  // Reinterprets the term map in another ring. Every variable that actually
  // occurs must exist in the target ring; indices are kept as-is, so this is
  // only meaningful between rings sharing a common variable prefix.
  Polynomial with_ring(RingPtr target) const;

  // Canonical display: terms in descending grevlex order; round-trips
  // through parse_polynomial.
  std::string str() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

// Exact evaluation at a full assignment (one value per ring variable).
Rational evaluate(const Polynomial& p, const std::vector<Rational>& values);

}  // namespace coxhyp
