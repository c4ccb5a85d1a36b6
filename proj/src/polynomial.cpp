#include "polynomial.hpp"

#include <algorithm>

#include "errors.hpp"
#include "ordering.hpp"

namespace coxhyp {

PolyRing::PolyRing(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  for (int32_t i = 0; i < static_cast<int32_t>(names_.size()); ++i) {
    if (names_[i].empty()) fail(ErrorCode::InvalidArgument, "empty variable name");
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) fail(ErrorCode::InvalidArgument, "duplicate variable name '" + names_[i] + "'");
  }
}

const std::string& PolyRing::var_name(int32_t i) const {
  if (i < 0 || i >= nvars()) fail(ErrorCode::Internal, "variable index out of range");
  return names_[i];
}

std::optional<int32_t> PolyRing::var_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_poly_ring(std::vector<std::string> var_names) {
  return std::make_shared<const PolyRing>(std::move(var_names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int32_t var, int32_t exp) {
  if (!ring || var < 0 || var >= ring->nvars())
    fail(ErrorCode::Internal, "variable index out of range");
  Polynomial p(ring);
  if (exp == 0)
    p.terms_.emplace(Monomial(), Rational(1));
  else
    p.terms_.emplace(Monomial::variable(var, exp), Rational(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, TermMap terms) {
  Polynomial p(std::move(ring));
  for (auto& [m, c] : terms)
    if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int64_t Polynomial::total_degree() const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int64_t Polynomial::degree_in(const std::vector<bool>& var_mask) const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    int64_t dm = 0;
    for (const auto& [var, exp] : m.entries())
      if (var < static_cast<int32_t>(var_mask.size()) && var_mask[var]) dm += exp;
    d = std::max(d, dm);
  }
  return d;
}

bool Polynomial::involves_var(int32_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(var) > 0) return true;
  return false;
}

bool Polynomial::involves_any(const std::vector<bool>& var_mask) const {
  for (const auto& [m, c] : terms_)
    if (m.involves_any(var_mask)) return true;
  return false;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      Rational c = ca * cb;
      auto [it, fresh] = r.terms_.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
  return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial r = Polynomial::constant(ring_, Rational(1));
  for (uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::with_ring(RingPtr target) const {
  if (!target) fail(ErrorCode::Internal, "with_ring: null target");
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.entries())
      if (var >= target->nvars())
        fail(ErrorCode::RingMismatch,
             "polynomial mentions variable index outside the target ring");
  }
  Polynomial r(std::move(target));
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Display order: descending grevlex, independent of any active basis order.
  std::vector<const std::pair<const Monomial, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  MonomialOrder grevlex = MonomialOrder::grevlex();
  std::sort(order.begin(), order.end(),
            [&](const auto* a, const auto* b) { return grevlex.greater(a->first, b->first); });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    const Rational& c = t->second;
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rational mag = c.abs();
    std::string mon;
    for (size_t i = 0; i < m.entries().size(); ++i) {
      const auto& [var, exp] = m.entries()[i];
      if (i) mon += "*";
      mon += ring_->var_name(var);
      if (exp != 1) mon += "^" + std::to_string(exp);
    }
    if (mon.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mon;
    } else {
      out += mag.str() + "*" + mon;
    }
  }
  return out;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& values) {
  if (static_cast<int32_t>(values.size()) != p.ring()->nvars())
    fail(ErrorCode::ArityMismatch, "evaluation needs one value per variable");
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [var, exp] : m.entries())
      term *= values[var].pow(static_cast<unsigned long>(exp));
    total += term;
  }
  return total;
}

}  // namespace coxhyp
