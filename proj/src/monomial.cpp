#include "monomial.hpp"

#include <algorithm>

#include "errors.hpp"

namespace coxhyp {

Monomial Monomial::make(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (const auto& [var, exp] : entries) {
    if (var < 0) fail(ErrorCode::InvalidArgument, "negative variable index in monomial");
    if (exp < 0) fail(ErrorCode::InvalidArgument, "negative exponent in monomial");
    if (exp == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == var)
      m.entries_.back().second += exp;
    else
      m.entries_.emplace_back(var, exp);
  }
  return m;
}

Monomial Monomial::variable(int32_t var, int32_t exp) {
  return make({{var, exp}});
}

int32_t Monomial::exponent(int32_t var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  if (it != entries_.end() && it->first == var) return it->second;
  return 0;
}

int64_t Monomial::total_degree() const {
  int64_t d = 0;
  for (const auto& [var, exp] : entries_) d += exp;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      r.entries_.push_back(*a++);
    else if (b->first < a->first)
      r.entries_.push_back(*b++);
    else {
      r.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.entries_.insert(r.entries_.end(), a, entries_.end());
  r.entries_.insert(r.entries_.end(), b, o.entries_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.entries_.begin();
  for (const auto& [var, exp] : entries_) {
    while (b != o.entries_.end() && b->first < var) ++b;
    if (b == o.entries_.end() || b->first != var || b->second < exp) return false;
  }
  return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  Monomial r;
  auto b = o.entries_.begin();
  for (const auto& [var, exp] : entries_) {
    if (b != o.entries_.end() && b->first < var)
      fail(ErrorCode::InvalidArgument, "monomial quotient is not exact");
    int32_t sub = 0;
    if (b != o.entries_.end() && b->first == var) {
      sub = b->second;
      ++b;
    }
    if (sub > exp) fail(ErrorCode::InvalidArgument, "monomial quotient is not exact");
    if (exp - sub > 0) r.entries_.emplace_back(var, exp - sub);
  }
  if (b != o.entries_.end()) fail(ErrorCode::InvalidArgument, "monomial quotient is not exact");
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() && y != b.entries_.end()) {
    if (x->first < y->first)
      r.entries_.push_back(*x++);
    else if (y->first < x->first)
      r.entries_.push_back(*y++);
    else {
      r.entries_.emplace_back(x->first, std::max(x->second, y->second));
      ++x;
      ++y;
    }
  }
  r.entries_.insert(r.entries_.end(), x, a.entries_.end());
  r.entries_.insert(r.entries_.end(), y, b.entries_.end());
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else
      return false;
  }
  return true;
}

bool Monomial::involves_any(const std::vector<bool>& var_mask) const {
  for (const auto& [var, exp] : entries_)
    if (var < static_cast<int32_t>(var_mask.size()) && var_mask[var]) return true;
  return false;
}

}  // namespace coxhyp
