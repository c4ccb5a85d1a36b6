#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "errors.hpp"

namespace coxhyp {

void Budget::charge(uint64_t n) {
  used_ += n;
  if (used_ > limit_)
    fail(ErrorCode::ResourceLimit,
         "step budget exceeded (" + std::to_string(limit_) + " S-pair reductions)");
}

BudgetPtr make_budget(uint64_t limit) { return std::make_shared<Budget>(limit); }

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
  Ideal ideal{std::move(ring), {}};
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), ideal.ring);
    ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

namespace {

// Working representation during division/Buchberger: a term map sorted in
// descending order, so begin() is the leading term.
struct DescCmp {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using WorkPoly = std::map<Monomial, Rational, DescCmp>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly w(DescCmp{&order});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

Polynomial to_polynomial(const RingPtr& ring, const WorkPoly& w) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : w) terms.emplace(m, c);
  return Polynomial::from_terms(ring, std::move(terms));
}

// w += c * m * g
void add_scaled(WorkPoly& w, const Rational& c, const Monomial& m, const WorkPoly& g) {
  for (const auto& [gm, gc] : g) {
    Monomial key = gm * m;
    Rational val = gc * c;
    auto [it, fresh] = w.emplace(std::move(key), val);
    if (!fresh) {
      it->second += val;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

struct BasisEntry {
  WorkPoly poly;
  Monomial lead;
  Rational lead_coeff;
};

BasisEntry make_entry(WorkPoly w) {
  BasisEntry e{std::move(w), {}, Rational(0)};
  e.lead = e.poly.begin()->first;
  e.lead_coeff = e.poly.begin()->second;
  return e;
}

// Full multivariate division: returns the remainder, no term of which is
// divisible by any basis leading term. Divisors are tried in basis order.
WorkPoly reduce_full(WorkPoly p, const std::vector<BasisEntry>& basis, const MonomialOrder& order) {
  WorkPoly remainder(DescCmp{&order});
  while (!p.empty()) {
    const Monomial& lm = p.begin()->first;
    const Rational lc = p.begin()->second;
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.lead.divides(lm)) {
        add_scaled(p, -(lc / g.lead_coeff), lm.quotient_by(g.lead), g.poly);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.emplace(lm, lc);
      p.erase(p.begin());
    }
  }
  return remainder;
}

void make_monic(WorkPoly& w) {
  if (w.empty()) return;
  Rational inv = w.begin()->second.inverse();
  for (auto& [m, c] : w) c *= inv;
}

struct Pair {
  int64_t degree;  // total degree of the lcm (normal selection strategy)
  Monomial lcm;
  int32_t i, j;
};

struct PairCmp {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = order->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order, const BudgetPtr& budget) {
  BudgetPtr meter = budget ? budget : make_budget();

  std::vector<BasisEntry> basis;
  for (const auto& g : ideal.generators) {
    WorkPoly w = to_work(g, order);
    make_monic(w);
    basis.push_back(make_entry(std::move(w)));
  }

  std::set<Pair, PairCmp> pending(PairCmp{&order});
  std::set<std::pair<int32_t, int32_t>> in_queue;
  auto push_pairs_for = [&](int32_t j) {
    for (int32_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].lead, basis[j].lead);
      pending.insert(Pair{l.total_degree(), std::move(l), i, j});
      in_queue.insert({i, j});
    }
  };
  for (int32_t j = 0; j < static_cast<int32_t>(basis.size()); ++j) push_pairs_for(j);

  auto chain_criterion = [&](const Pair& p) {
    // Buchberger's second criterion: skip (i,j) when some basis element k
    // divides the lcm and both (i,k) and (j,k) were already treated.
    for (int32_t k = 0; k < static_cast<int32_t>(basis.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].lead.divides(p.lcm)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (!in_queue.count({key_ik.first, key_ik.second}) &&
          !in_queue.count({key_jk.first, key_jk.second}))
        return true;
    }
    return false;
  };

  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    in_queue.erase({p.i, p.j});

    if (basis[p.i].lead.coprime(basis[p.j].lead)) continue;  // product criterion
    if (chain_criterion(p)) continue;

    meter->charge();

    // S-polynomial of two monic elements.
    WorkPoly s(DescCmp{&order});
    add_scaled(s, Rational(1), p.lcm.quotient_by(basis[p.i].lead), basis[p.i].poly);
    add_scaled(s, Rational(-1), p.lcm.quotient_by(basis[p.j].lead), basis[p.j].poly);
    WorkPoly r = reduce_full(std::move(s), basis, order);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(make_entry(std::move(r)));
    push_pairs_for(static_cast<int32_t>(basis.size()) - 1);
  }

  // Minimize: drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].lead.divides(basis[i].lead)) {
        // Break ties between equal leading terms by keeping the first.
        if (basis[i].lead == basis[j].lead && j > i) continue;
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<BasisEntry> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Inter-reduce tails until stable; leading terms are already minimal so
  // they never change here.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<BasisEntry> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      WorkPoly r = reduce_full(minimal[i].poly, others, order);
      make_monic(r);
      if (r != minimal[i].poly) {
        minimal[i] = make_entry(std::move(r));
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const BasisEntry& a, const BasisEntry& b) { return order.less(a.lead, b.lead); });

  GroebnerBasis result{ideal.ring, order, {}};
  for (const auto& e : minimal) result.elements.push_back(to_polynomial(ideal.ring, e.poly));
  return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  require_same_ring(p.ring(), g.ring);
  std::vector<BasisEntry> basis;
  for (const auto& e : g.elements) basis.push_back(make_entry(to_work(e, g.order)));
  WorkPoly r = reduce_full(to_work(p, g.order), basis, g.order);
  return to_polynomial(p.ring(), r);
}

bool is_member(const Polynomial& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

namespace {

// Appends one auxiliary variable to the ring; existing indices are unchanged.
RingPtr extend_ring(const RingPtr& ring, const std::string& aux_name) {
  std::vector<std::string> names = ring->var_names();
  std::string name = aux_name;
  while (ring->var_index(name)) name += "_";
  names.push_back(name);
  return make_poly_ring(std::move(names));
}

std::vector<Polynomial> drop_aux_and_restrict(const GroebnerBasis& g, int32_t aux_var,
                                              const RingPtr& base) {
  std::vector<Polynomial> kept;
  for (const auto& e : g.elements)
    if (!e.involves_var(aux_var)) kept.push_back(e.with_ring(base));
  return kept;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<int32_t>& drop_vars, const BudgetPtr& budget) {
  for (int32_t v : drop_vars)
    if (v < 0 || v >= ideal.ring->nvars())
      fail(ErrorCode::InvalidArgument, "eliminate: variable index out of range");
  if (drop_vars.empty()) return reduced(ideal, budget);

  MonomialOrder order = MonomialOrder::block(drop_vars, MonomialOrder::grevlex());
  GroebnerBasis g = groebner_basis(ideal, order, budget);
  std::vector<bool> mask(ideal.ring->nvars(), false);
  for (int32_t v : drop_vars) mask[v] = true;
  std::vector<Polynomial> kept;
  for (const auto& e : g.elements)
    if (!e.involves_any(mask)) kept.push_back(e);
  return Ideal::make(ideal.ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b, const BudgetPtr& budget) {
  require_same_ring(a.ring, b.ring);
  RingPtr ext = extend_ring(a.ring, "t#");
  int32_t t = ext->nvars() - 1;
  Polynomial tp = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - tp;

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators) gens.push_back(g.with_ring(ext) * tp);
  for (const auto& g : b.generators) gens.push_back(g.with_ring(ext) * one_minus_t);
  Ideal mixed = Ideal::make(ext, std::move(gens));

  MonomialOrder order = MonomialOrder::block({t}, MonomialOrder::grevlex());
  GroebnerBasis g = groebner_basis(mixed, order, budget);
  return Ideal::make(a.ring, drop_aux_and_restrict(g, t, a.ring));
}

namespace {

// Exact division by a single polynomial; the remainder must vanish.
Polynomial exact_divide(const Polynomial& p, const Polynomial& h, const MonomialOrder& order) {
  WorkPoly rem = to_work(p, order);
  WorkPoly hw = to_work(h, order);
  const Monomial& hl = hw.begin()->first;
  const Rational hc = hw.begin()->second;
  WorkPoly quotient(DescCmp{&order});
  while (!rem.empty()) {
    const Monomial& lm = rem.begin()->first;
    const Rational lc = rem.begin()->second;
    if (!hl.divides(lm))
      fail(ErrorCode::Internal, "exact_divide: generator of I * <h> not divisible by h");
    Monomial q = lm.quotient_by(hl);
    Rational qc = lc / hc;
    quotient.emplace(q, qc);
    add_scaled(rem, -qc, q, hw);
  }
  return to_polynomial(p.ring(), quotient);
}

}  // namespace

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& h, const BudgetPtr& budget) {
  require_same_ring(ideal.ring, h.ring());
  if (h.is_zero()) fail(ErrorCode::InvalidArgument, "ideal quotient by zero");
  if (h.is_constant()) return reduced(ideal, budget);  // (I : unit) = I

  Ideal hk = Ideal::make(ideal.ring, {h});
  Ideal common = intersect(ideal, hk, budget);
  MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (const auto& g : common.generators) gens.push_back(exact_divide(g, h, grevlex));
  return reduced(Ideal::make(ideal.ring, std::move(gens)), budget);
}

Ideal saturate(const Ideal& ideal, const Polynomial& h, const BudgetPtr& budget) {
  require_same_ring(ideal.ring, h.ring());
  if (h.is_zero()) fail(ErrorCode::InvalidArgument, "saturation by zero");
  if (h.is_constant()) return reduced(ideal, budget);

  Ideal current = reduced(ideal, budget);
  for (;;) {
    Ideal next = ideal_quotient(current, h, budget);
    if (next.generators == current.generators) return current;
    current = std::move(next);
  }
}

Ideal saturate_via_inverse_variable(const Ideal& ideal, const Polynomial& h, const BudgetPtr& budget) {
  require_same_ring(ideal.ring, h.ring());
  if (h.is_zero()) fail(ErrorCode::InvalidArgument, "saturation by zero");
  if (h.is_constant()) return reduced(ideal, budget);

  RingPtr ext = extend_ring(ideal.ring, "t#");
  int32_t t = ext->nvars() - 1;
  Polynomial rel = Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, t) * h.with_ring(ext);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.with_ring(ext));
  gens.push_back(std::move(rel));
  Ideal mixed = Ideal::make(ext, std::move(gens));

  MonomialOrder order = MonomialOrder::block({t}, MonomialOrder::grevlex());
  GroebnerBasis g = groebner_basis(mixed, order, budget);
  return reduced(Ideal::make(ideal.ring, drop_aux_and_restrict(g, t, ideal.ring)), budget);
}

bool ideals_equal(const Ideal& a, const Ideal& b, const BudgetPtr& budget) {
  require_same_ring(a.ring, b.ring);
  MonomialOrder order = MonomialOrder::grevlex();
  GroebnerBasis ga = groebner_basis(a, order, budget);
  GroebnerBasis gb = groebner_basis(b, order, budget);
  return ga.elements == gb.elements;
}

Ideal reduced(const Ideal& ideal, const BudgetPtr& budget) {
  GroebnerBasis g = groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  return Ideal{ideal.ring, g.elements};
}

bool contains(const Ideal& ideal, const Polynomial& p, const BudgetPtr& budget) {
  GroebnerBasis g = groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  return is_member(p, g);
}

}  // namespace coxhyp
