#include "grading.hpp"

#include "errors.hpp"

namespace coxhyp {

namespace {

int64_t mod_reduce(int64_t v, int64_t n) {
  int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::string GradingGroup::str() const {
  std::string s = "Z^" + std::to_string(free_rank);
  for (int64_t n : torsion_moduli) s += " + Z/" + std::to_string(n);
  return s;
}

void validate_group(const GradingGroup& g) {
  if (g.free_rank < 0) fail(ErrorCode::InvalidArgument, "negative free rank");
  for (int64_t n : g.torsion_moduli)
    if (n < 2) fail(ErrorCode::InvalidArgument, "torsion modulus must be >= 2");
}

MultiDegree::MultiDegree(GradingGroup group, std::vector<int64_t> free, std::vector<int64_t> torsion)
    : group_(std::move(group)), free_(std::move(free)), torsion_(std::move(torsion)) {
  validate_group(group_);
  if (static_cast<int32_t>(free_.size()) != group_.free_rank)
    fail(ErrorCode::ArityMismatch, "free part size does not match the grading group rank");
  if (torsion_.empty()) torsion_.resize(group_.torsion_moduli.size(), 0);
  if (torsion_.size() != group_.torsion_moduli.size())
    fail(ErrorCode::ArityMismatch, "torsion part size does not match the grading group");
  for (size_t i = 0; i < torsion_.size(); ++i)
    torsion_[i] = mod_reduce(torsion_[i], group_.torsion_moduli[i]);
}

MultiDegree MultiDegree::zero(const GradingGroup& group) {
  return MultiDegree(group, std::vector<int64_t>(group.free_rank, 0),
                     std::vector<int64_t>(group.torsion_moduli.size(), 0));
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  if (group_ != o.group_) fail(ErrorCode::GroupMismatch, "degrees live in different grading groups");
  std::vector<int64_t> free(free_);
  for (size_t i = 0; i < free.size(); ++i) free[i] += o.free_[i];
  std::vector<int64_t> tor(torsion_);
  for (size_t i = 0; i < tor.size(); ++i) tor[i] = mod_reduce(tor[i] + o.torsion_[i], group_.torsion_moduli[i]);
  return MultiDegree(group_, std::move(free), std::move(tor));
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  if (group_ != o.group_) fail(ErrorCode::GroupMismatch, "degrees live in different grading groups");
  std::vector<int64_t> free(free_);
  for (size_t i = 0; i < free.size(); ++i) free[i] -= o.free_[i];
  std::vector<int64_t> tor(torsion_);
  for (size_t i = 0; i < tor.size(); ++i) tor[i] = mod_reduce(tor[i] - o.torsion_[i], group_.torsion_moduli[i]);
  return MultiDegree(group_, std::move(free), std::move(tor));
}

std::string MultiDegree::str() const {
  std::string s = "(";
  for (size_t i = 0; i < free_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(free_[i]);
  }
  if (!torsion_.empty()) {
    s += "; ";
    for (size_t i = 0; i < torsion_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(torsion_[i]) + " mod " + std::to_string(group_.torsion_moduli[i]);
    }
  }
  s += ")";
  return s;
}

MultiDegree monomial_degree(const Monomial& m, const GradedRing& ring) {
  std::vector<int64_t> free(ring.group.free_rank, 0);
  std::vector<int64_t> tor(ring.group.torsion_moduli.size(), 0);
  for (const auto& [var, exp] : m.entries()) {
    const MultiDegree& dv = ring.var_degree(var);
    for (size_t i = 0; i < free.size(); ++i) free[i] += dv.free_part()[i] * exp;
    for (size_t i = 0; i < tor.size(); ++i) tor[i] += dv.torsion_part()[i] * exp;
  }
  return MultiDegree(ring.group, std::move(free), std::move(tor));
}

MultiDegree degree_of(const Polynomial& p, const GradedRing& ring) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no degree");
  require_same_ring(p.ring(), ring.ring);
  auto it = p.terms().begin();
  const Monomial& first = it->first;
  MultiDegree d = monomial_degree(first, ring);
  for (++it; it != p.terms().end(); ++it) {
    MultiDegree di = monomial_degree(it->first, ring);
    if (!(di == d)) {
      Polynomial a = Polynomial::term(p.ring(), first, Rational(1));
      Polynomial b = Polynomial::term(p.ring(), it->first, Rational(1));
      fail(ErrorCode::NotHomogeneous, "not homogeneous: monomial " + a.str() + " has degree " +
                                          d.str() + " but " + b.str() + " has degree " + di.str());
    }
  }
  return d;
}

bool is_homogeneous(const Polynomial& p, const GradedRing& ring) {
  if (p.is_zero()) return true;
  try {
    degree_of(p, ring);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotHomogeneous) return false;
    throw;
  }
}

GradedRing make_graded_ring(RingPtr ring, GradingGroup group, std::vector<MultiDegree> degrees,
                            std::vector<Polynomial> relations) {
  if (!ring) fail(ErrorCode::Internal, "make_graded_ring: null ring");
  validate_group(group);
  if (static_cast<int32_t>(degrees.size()) != ring->nvars())
    fail(ErrorCode::ArityMismatch, "need exactly one degree per variable");
  for (const auto& d : degrees)
    if (!(d.group() == group))
      fail(ErrorCode::GroupMismatch, "variable degree lives in a different grading group");
  GradedRing g{std::move(ring), std::move(group), std::move(degrees), {}};
  for (auto& rel : relations) {
    if (rel.is_zero()) continue;  // zero generators are dropped
    require_same_ring(rel.ring(), g.ring);
    degree_of(rel, g);  // throws NotHomogeneous with the offending relation's monomials
    g.relations.push_back(std::move(rel));
  }
  return g;
}

}  // namespace coxhyp
