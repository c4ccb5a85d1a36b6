#include "verifier.hpp"

#include <algorithm>

#include "errors.hpp"

namespace coxhyp {

using nlohmann::ordered_json;

GradedRing target_ring(const CoxEquation& eq, const GradedRing& z_ring) {
  GradedRing product = product_ring(z_ring, eq.p1_names);
  product.relations.push_back(reassemble(eq, z_ring));
  return product;
}

Certificate verify_regular_sequence_in_B(const PresentedCoxRing& p, const BudgetPtr& budget) {
  BudgetPtr meter = budget ? budget : make_budget();
  uint64_t before = meter->used();

  const RingPtr& ring = p.ambient.ring;
  std::vector<Polynomial> seq;
  seq.push_back(Polynomial::variable(ring, p.p1_vars[0]));
  seq.push_back(Polynomial::variable(ring, p.p1_vars[1]));
  for (const auto& g : p.relations_g) seq.push_back(g);

  RegSeqResult r = regular_sequence_check(ring, p.relations_j, seq, meter);

  Certificate cert;
  cert.name = "regular_sequence_in_B";
  cert.verdict = r.passed;
  cert.steps = meter->used() - before;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json js;
    js["index"] = s.index;
    js["element"] = s.element;
    js["passed"] = s.passed;
    if (!s.reason.empty()) js["reason"] = s.reason;
    js["quotient_basis"] = s.quotient_basis;
    steps.push_back(std::move(js));
  }
  cert.witness["sequence"] = "T1, T2, g_0..g_d modulo J";
  cert.witness["steps"] = std::move(steps);
  cert.witness["proper_ideal"] = r.proper;
  if (r.failed_index >= 0) cert.witness["failed_index"] = r.failed_index;
  return cert;
}

std::vector<Polynomial> elimination_assignments(const CoxEquation& eq, const GradedRing& z_ring,
                                                P1Side side) {
  GradedRing product = product_ring(z_ring, eq.p1_names);
  const RingPtr& ring = product.ring;
  int32_t d = eq.d;
  Polynomial t1 = Polynomial::variable(ring, ring->nvars() - 2);
  Polynomial t2 = Polynomial::variable(ring, ring->nvars() - 1);
  auto coeff = [&](int32_t i) { return eq.coefficients[i].with_ring(ring); };

  std::vector<Polynomial> s(d, Polynomial::zero(ring));
  if (side == P1Side::T2) {
    // S_i = Shat_i / T2^i.
    s[0] = -coeff(0);
    for (int32_t i = 1; i <= d - 1; ++i)
      s[i] = -(coeff(i) * t2.pow(static_cast<uint32_t>(i)) + t1 * s[i - 1]);
  } else {
    // S_i = Shat'_i / T1^(d-i+1).
    s[d - 1] = -coeff(d);
    for (int32_t i = d - 1; i >= 1; --i)
      s[i - 1] = -(coeff(i) * t1.pow(static_cast<uint32_t>(d - i)) + t2 * s[i]);
  }
  return s;
}

namespace {

// Substitutes S_j -> value_j / clear^(weight_j) into a relation over the
// ambient ring, multiplied through by clear^W with W the largest total
// weight of any term; the result is an exact polynomial over the product ring.
Polynomial substitute_cleared(const Polynomial& g, const PresentedCoxRing& p,
                              const std::vector<Polynomial>& values,
                              const std::vector<int64_t>& weights, const Polynomial& clear_var,
                              const RingPtr& product) {
  int64_t max_weight = 0;
  for (const auto& [m, c] : g.terms()) {
    int64_t w = 0;
    for (size_t j = 0; j < p.s_vars.size(); ++j) w += weights[j] * m.exponent(p.s_vars[j]);
    max_weight = std::max(max_weight, w);
  }

  Polynomial out = Polynomial::zero(product);
  for (const auto& [m, c] : g.terms()) {
    int64_t w = 0;
    std::vector<Monomial::Entry> rest;
    std::vector<int32_t> s_exp(p.s_vars.size(), 0);
    for (const auto& e : m.entries()) {
      bool is_s = false;
      for (size_t j = 0; j < p.s_vars.size(); ++j) {
        if (e.first == p.s_vars[j]) {
          s_exp[j] = e.second;
          w += weights[j] * e.second;
          is_s = true;
          break;
        }
      }
      if (!is_s) rest.push_back(e);
    }
    Polynomial term = Polynomial::term(product, Monomial::make(std::move(rest)), c);
    for (size_t j = 0; j < p.s_vars.size(); ++j)
      if (s_exp[j] > 0) term = term * values[j].pow(static_cast<uint32_t>(s_exp[j]));
    term = term * clear_var.pow(static_cast<uint32_t>(max_weight - w));
    out = out + term;
  }
  return out;
}

}  // namespace

Certificate verify_elimination_identity(const PresentedCoxRing& p) {
  const CoxEquation& eq = p.eq;
  const GradedRing& z_ring = p.z_ring;
  int32_t d = eq.d;

  GradedRing product = product_ring(z_ring, eq.p1_names);
  const RingPtr& prod = product.ring;
  Polynomial t1 = Polynomial::variable(prod, prod->nvars() - 2);
  Polynomial t2 = Polynomial::variable(prod, prod->nvars() - 1);
  Polynomial f = reassemble(eq, z_ring);
  auto coeff = [&](int32_t i) { return eq.coefficients[i].with_ring(prod); };

  Certificate cert;
  cert.name = "elimination_identity";
  cert.witness["sides"] = ordered_json::object();

  // The stored relations must be exactly the structural g_i; a tampered
  // presentation fails here even when the tampering generates the same ideal.
  PresentedCoxRing rebuilt = build_presentation(eq, z_ring);
  bool structural = rebuilt.relations_g.size() == p.relations_g.size() &&
                    rebuilt.relations_j.size() == p.relations_j.size();
  if (structural) {
    for (size_t i = 0; i < p.relations_g.size(); ++i)
      structural = structural && rebuilt.relations_g[i].terms() == p.relations_g[i].terms();
    for (size_t i = 0; i < p.relations_j.size(); ++i)
      structural = structural && rebuilt.relations_j[i].terms() == p.relations_j[i].terms();
  }
  cert.witness["relations_structural"] = structural;

  bool all_ok = structural;
  for (P1Side side : {P1Side::T2, P1Side::T1}) {
    bool is_t2 = side == P1Side::T2;
    std::vector<Polynomial> values = elimination_assignments(eq, z_ring, side);
    std::vector<int64_t> weights(d);
    for (int32_t j = 1; j <= d; ++j) weights[j - 1] = is_t2 ? j : (d - j + 1);
    const Polynomial& clear_var = is_t2 ? t2 : t1;

    // Identity on the equation itself: substituting the assignments into the
    // remaining relation and clearing denominators recovers f exactly.
    Polynomial lhs = is_t2 ? t2.pow(static_cast<uint32_t>(d)) * coeff(d) + t1 * values[d - 1]
                           : t1.pow(static_cast<uint32_t>(d)) * coeff(0) + t2 * values[0];
    Polynomial rhs = (is_t2 && d % 2 == 1) ? -f : f;
    bool identity = lhs == rhs;

    // Every stored relation must vanish under the substitution, except the
    // terminal one which becomes (+/-) f times the cleared power.
    bool substitution = p.relations_g.size() == static_cast<size_t>(d) + 1;
    for (size_t i = 0; substitution && i < p.relations_g.size(); ++i) {
      Polynomial cleared =
          substitute_cleared(p.relations_g[i], p, values, weights, clear_var, prod);
      size_t terminal = is_t2 ? static_cast<size_t>(d) : 0;
      if (i != terminal) {
        substitution = cleared.is_zero();
        continue;
      }
      int64_t max_weight = 0;
      for (const auto& [m, c] : p.relations_g[i].terms()) {
        int64_t w = 0;
        for (size_t j = 0; j < p.s_vars.size(); ++j)
          w += weights[j] * m.exponent(p.s_vars[j]);
        max_weight = std::max(max_weight, w);
      }
      if (max_weight < d) {
        substitution = false;
        continue;
      }
      Polynomial expected = rhs * clear_var.pow(static_cast<uint32_t>(max_weight - d));
      substitution = cleared == expected;
    }

    ordered_json js;
    js["identity"] = identity;
    js["substituted_relations_vanish"] = substitution;
    js["cleared_assignments"] = ordered_json::array();
    for (const auto& v : values) js["cleared_assignments"].push_back(v.str());
    js["identity_lhs"] = lhs.str();
    js["identity_rhs"] = rhs.str();
    cert.witness["sides"][is_t2 ? "T2" : "T1"] = std::move(js);
    all_ok = all_ok && identity && substitution;
  }

  cert.verdict = all_ok;
  return cert;
}

Certificate verify_localization(const PresentedCoxRing& p, const GradedRing& target, P1Side side,
                                const BudgetPtr& budget) {
  BudgetPtr meter = budget ? budget : make_budget();
  uint64_t before = meter->used();
  bool is_t2 = side == P1Side::T2;

  const RingPtr& ambient = p.ambient.ring;
  Polynomial t_ambient = Polynomial::variable(ambient, p.p1_vars[is_t2 ? 1 : 0]);

  // Presentation side: saturate at T, then eliminate the S variables.
  Ideal presentation_ideal = Ideal::make(ambient, p.ambient.relations);
  Ideal saturated = saturate(presentation_ideal, t_ambient, meter);
  Ideal eliminated = eliminate(saturated, p.s_vars, meter);

  const RingPtr& prod = target.ring;
  std::vector<Polynomial> mapped;
  for (const auto& g : eliminated.generators) mapped.push_back(g.with_ring(prod));
  Ideal presentation_side = Ideal::make(prod, std::move(mapped));

  // Hypersurface side: saturate <J, f> at T.
  Polynomial t_prod = Polynomial::variable(prod, prod->nvars() - (is_t2 ? 1 : 2));
  Ideal hypersurface_side = saturate(Ideal::make(prod, target.relations), t_prod, meter);

  MonomialOrder grevlex = MonomialOrder::grevlex();
  GroebnerBasis ge = groebner_basis(presentation_side, grevlex, meter);
  GroebnerBasis gf = groebner_basis(hypersurface_side, grevlex, meter);
  bool equal = ge.elements == gf.elements;

  Certificate cert;
  cert.name = is_t2 ? "localization_T2" : "localization_T1";
  cert.verdict = equal;
  cert.steps = meter->used() - before;
  cert.witness["inverted_variable"] = prod->var_name(prod->nvars() - (is_t2 ? 1 : 2));
  cert.witness["presentation_side_basis"] = ordered_json::array();
  for (const auto& e : ge.elements) cert.witness["presentation_side_basis"].push_back(e.str());
  cert.witness["hypersurface_side_basis"] = ordered_json::array();
  for (const auto& e : gf.elements) cert.witness["hypersurface_side_basis"].push_back(e.str());
  return cert;
}

CertificateBundle full_certificate(const PresentedCoxRing& p, const GradedRing& target,
                                   const HypothesisReport& hypotheses, const BudgetPtr& budget) {
  BudgetPtr meter = budget ? budget : make_budget();
  CertificateBundle bundle;
  bundle.hypotheses = hypotheses;
  bundle.certificates.push_back(verify_regular_sequence_in_B(p, meter));
  bundle.certificates.push_back(verify_elimination_identity(p));
  bundle.certificates.push_back(verify_localization(p, target, P1Side::T1, meter));
  bundle.certificates.push_back(verify_localization(p, target, P1Side::T2, meter));

  bundle.machine_verdict = hypotheses.machine_verdict();
  for (const auto& c : bundle.certificates) bundle.machine_verdict = bundle.machine_verdict && c.verdict;
  bundle.all_flags_asserted = hypotheses.flags.all_true();
  return bundle;
}

}  // namespace coxhyp
