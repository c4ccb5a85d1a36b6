#include "ordering.hpp"

#include <algorithm>

#include "errors.hpp"

namespace coxhyp {

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto x = ea.begin();
  auto y = eb.begin();
  while (x != ea.end() || y != eb.end()) {
    // Smallest variable index where the exponents can differ.
    if (y == eb.end() || (x != ea.end() && x->first < y->first))
      return std::strong_ordering::greater;  // a has a positive exponent, b has zero
    if (x == ea.end() || y->first < x->first) return std::strong_ordering::less;
    if (x->second != y->second)
      return x->second > y->second ? std::strong_ordering::greater : std::strong_ordering::less;
    ++x;
    ++y;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
  int64_t da = a.total_degree();
  int64_t db = b.total_degree();
  if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
  // Equal degree: scan from the largest variable down; at the first index
  // where the exponents differ, the smaller exponent wins.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto x = ea.rbegin();
  auto y = eb.rbegin();
  while (x != ea.rend() || y != eb.rend()) {
    if (y == eb.rend() || (x != ea.rend() && x->first > y->first))
      return std::strong_ordering::less;  // a has a positive exponent at a later variable
    if (x == ea.rend() || y->first > x->first) return std::strong_ordering::greater;
    if (x->second != y->second)
      return x->second < y->second ? std::strong_ordering::greater : std::strong_ordering::less;
    ++x;
    ++y;
  }
  return std::strong_ordering::equal;
}

Monomial restrict_to(const Monomial& m, const std::vector<int32_t>& sorted_vars, bool keep_members) {
  std::vector<Monomial::Entry> kept;
  for (const auto& e : m.entries()) {
    bool member = std::binary_search(sorted_vars.begin(), sorted_vars.end(), e.first);
    if (member == keep_members) kept.push_back(e);
  }
  return Monomial::make(std::move(kept));
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<int32_t> front_vars, MonomialOrder inner) {
  std::sort(front_vars.begin(), front_vars.end());
  front_vars.erase(std::unique(front_vars.begin(), front_vars.end()), front_vars.end());
  if (front_vars.empty()) return inner;
  MonomialOrder o(Kind::Block);
  o.front_ = std::move(front_vars);
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

const MonomialOrder& MonomialOrder::inner() const {
  if (!inner_) fail(ErrorCode::Internal, "inner() on a non-block order");
  return *inner_;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return compare_lex(a, b);
    case Kind::GrevLex:
      return compare_grevlex(a, b);
    case Kind::Block: {
      Monomial fa = restrict_to(a, front_, true);
      Monomial fb = restrict_to(b, front_, true);
      auto c = compare_grevlex(fa, fb);
      if (c != std::strong_ordering::equal) return c;
      return inner_->compare(restrict_to(a, front_, false), restrict_to(b, front_, false));
    }
  }
  fail(ErrorCode::Internal, "unreachable order kind");
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Block: {
      std::string s = "block(front={";
      for (size_t i = 0; i < front_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(front_[i]);
      }
      s += "}, " + inner_->str() + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace coxhyp
