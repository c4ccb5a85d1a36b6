#include "presentation.hpp"

#include <algorithm>

#include "errors.hpp"

namespace coxhyp {

namespace {

void validate_p1_names(const GradedRing& z_ring, const std::array<std::string, 2>& p1_names) {
  if (p1_names[0] == p1_names[1])
    fail(ErrorCode::InvalidArgument, "the two P^1 variables must have distinct names");
  for (const auto& name : p1_names)
    if (z_ring.ring->var_index(name))
      fail(ErrorCode::InvalidArgument, "P^1 variable '" + name + "' collides with a Z variable");
}

}  // namespace

CoxEquation make_cox_equation(int32_t d, const std::array<std::string, 2>& p1_names,
                              std::vector<Polynomial> coefficients, const GradedRing& z_ring) {
  validate_p1_names(z_ring, p1_names);
  if (d < 1) fail(ErrorCode::DegreeZeroInP1, "the equation must have degree d >= 1 in T1, T2");
  if (static_cast<int32_t>(coefficients.size()) != d + 1)
    fail(ErrorCode::ArityMismatch,
         "expected " + std::to_string(d + 1) + " coefficients, got " +
             std::to_string(coefficients.size()));
  bool any_nonzero = false;
  for (const auto& f : coefficients) {
    require_same_ring(f.ring(), z_ring.ring);
    if (!f.is_zero()) any_nonzero = true;
  }
  if (!any_nonzero) fail(ErrorCode::ZeroPolynomial, "all coefficients are zero");
  if (coefficients.front().is_zero() && coefficients.back().is_zero())
    fail(ErrorCode::InvalidEquation, "f_0 and f_d must not both be zero");
  return CoxEquation{d, p1_names, std::move(coefficients)};
}

GradedRing product_ring(const GradedRing& z_ring, const std::array<std::string, 2>& p1_names) {
  validate_p1_names(z_ring, p1_names);
  std::vector<std::string> names = z_ring.ring->var_names();
  names.push_back(p1_names[0]);
  names.push_back(p1_names[1]);
  RingPtr ring = make_poly_ring(std::move(names));

  GradingGroup group{z_ring.group.free_rank + 1, z_ring.group.torsion_moduli};
  auto extend_degree = [&](const MultiDegree& dz, int64_t p1_component) {
    std::vector<int64_t> free;
    free.reserve(group.free_rank);
    free.push_back(p1_component);
    free.insert(free.end(), dz.free_part().begin(), dz.free_part().end());
    return MultiDegree(group, std::move(free), dz.torsion_part());
  };

  std::vector<MultiDegree> degrees;
  degrees.reserve(ring->nvars());
  for (const auto& dz : z_ring.degrees) degrees.push_back(extend_degree(dz, 0));
  MultiDegree p1_class = extend_degree(MultiDegree::zero(z_ring.group), 1);
  degrees.push_back(p1_class);
  degrees.push_back(p1_class);

  std::vector<Polynomial> relations;
  relations.reserve(z_ring.relations.size());
  for (const auto& rel : z_ring.relations) relations.push_back(rel.with_ring(ring));

  return make_graded_ring(std::move(ring), std::move(group), std::move(degrees),
                          std::move(relations));
}

CoxEquation expand_cox_equation(const Polynomial& f, const GradedRing& z_ring,
                                const std::array<std::string, 2>& p1_names) {
  GradedRing product = product_ring(z_ring, p1_names);
  require_same_ring(f.ring(), product.ring);
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "the equation is the zero polynomial");

  MultiDegree deg = degree_of(f, product);  // NotHomogeneous propagates
  int64_t d64 = deg.free_part()[0];
  if (d64 < 1)
    fail(ErrorCode::DegreeZeroInP1, "the equation does not involve the P^1 variables");
  int32_t d = static_cast<int32_t>(d64);

  int32_t t1 = product.ring->nvars() - 2;
  int32_t t2 = product.ring->nvars() - 1;
  std::vector<Polynomial::TermMap> raw(d + 1);
  for (const auto& [m, c] : f.terms()) {
    int32_t b = m.exponent(t2);
    // Homogeneity in the P^1 component guarantees exp(t1) + exp(t2) = d.
    std::vector<Monomial::Entry> z_part;
    for (const auto& e : m.entries())
      if (e.first != t1 && e.first != t2) z_part.push_back(e);
    raw[b].emplace(Monomial::make(std::move(z_part)), c);
  }

  std::vector<Polynomial> coefficients;
  coefficients.reserve(d + 1);
  for (int32_t i = 0; i <= d; ++i) {
    Polynomial fi = Polynomial::from_terms(z_ring.ring, std::move(raw[i]));
    if (i % 2 == 1) fi = -fi;
    coefficients.push_back(std::move(fi));
  }
  return make_cox_equation(d, p1_names, std::move(coefficients), z_ring);
}

Polynomial reassemble(const CoxEquation& eq, const GradedRing& z_ring) {
  GradedRing product = product_ring(z_ring, eq.p1_names);
  int32_t t1 = product.ring->nvars() - 2;
  int32_t t2 = product.ring->nvars() - 1;
  Polynomial f = Polynomial::zero(product.ring);
  for (int32_t i = 0; i <= eq.d; ++i) {
    Polynomial term = eq.coefficients[i].with_ring(product.ring);
    Monomial t_power = Monomial::make({{t1, eq.d - i}, {t2, i}});
    term = term.mul_term(t_power, i % 2 == 0 ? Rational(1) : Rational(-1));
    f = f + term;
  }
  return f;
}

RegSeqResult regular_sequence_check(const RingPtr& ring, const std::vector<Polynomial>& base,
                                    const std::vector<Polynomial>& seq, const BudgetPtr& budget) {
  RegSeqResult result;
  std::vector<Polynomial> prefix = base;
  bool failed = false;
  for (int32_t i = 0; i < static_cast<int32_t>(seq.size()); ++i) {
    RegSeqStep step;
    step.index = i;
    step.element = seq[i].str();
    if (seq[i].is_zero()) {
      step.passed = false;
      step.reason = "element " + std::to_string(i) + " is the zero polynomial";
      result.steps.push_back(std::move(step));
      result.failed_index = i;
      failed = true;
      break;
    }
    Ideal before = Ideal::make(ring, prefix);
    Ideal quotient = ideal_quotient(before, seq[i], budget);
    bool equal = ideals_equal(quotient, before, budget);
    step.passed = equal;
    for (const auto& g : quotient.generators) step.quotient_basis.push_back(g.str());
    if (!equal) {
      step.reason = "element " + std::to_string(i) +
                    " is a zerodivisor modulo its predecessors: the quotient ideal is strictly larger";
      result.steps.push_back(std::move(step));
      result.failed_index = i;
      failed = true;
      break;
    }
    result.steps.push_back(std::move(step));
    prefix.push_back(seq[i]);
  }

  if (!failed) {
    Polynomial one = Polynomial::constant(ring, Rational(1));
    result.proper = !contains(Ideal::make(ring, prefix), one, budget);
    result.passed = result.proper;
  } else {
    result.proper = false;
    result.passed = false;
  }
  return result;
}

HypothesisReport check_hypotheses(const CoxEquation& eq, const GradedRing& z_ring,
                                  const AssertedFlags& flags, const BudgetPtr& budget) {
  HypothesisReport report;
  report.flags = flags;

  report.equal_degrees = true;
  for (int32_t i = 0; i <= eq.d && report.equal_degrees; ++i) {
    const Polynomial& fi = eq.coefficients[i];
    if (fi.is_zero()) continue;
    try {
      MultiDegree di = degree_of(fi, z_ring);
      if (!report.common_degree) {
        report.common_degree = di;
      } else if (!(di == *report.common_degree)) {
        report.equal_degrees = false;
        report.equal_degrees_detail = "f_" + std::to_string(i) + " has degree " + di.str() +
                                      " but earlier coefficients have degree " +
                                      report.common_degree->str();
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotHomogeneous) throw;
      report.equal_degrees = false;
      report.equal_degrees_detail = "f_" + std::to_string(i) + ": " + e.what();
    }
  }
  if (report.equal_degrees && report.common_degree)
    report.equal_degrees_detail = "all nonzero coefficients have degree " + report.common_degree->str();

  report.regular_sequence =
      regular_sequence_check(z_ring.ring, z_ring.relations, eq.coefficients, budget);
  return report;
}

PresentedCoxRing build_presentation(const CoxEquation& eq, const GradedRing& z_ring) {
  validate_p1_names(z_ring, eq.p1_names);
  if (eq.d < 1 || static_cast<int32_t>(eq.coefficients.size()) != eq.d + 1)
    fail(ErrorCode::InvalidArgument, "malformed equation: need d >= 1 and d+1 coefficients");
  int32_t nz = z_ring.ring->nvars();
  int32_t d = eq.d;

  std::vector<std::string> names = z_ring.ring->var_names();
  names.push_back(eq.p1_names[0]);
  names.push_back(eq.p1_names[1]);
  for (int32_t i = 1; i <= d; ++i) {
    std::string s = "S" + std::to_string(i);
    if (std::find(names.begin(), names.end(), s) != names.end())
      fail(ErrorCode::InvalidArgument,
           "generated variable name '" + s + "' collides with an existing variable");
    names.push_back(s);
  }
  RingPtr ring = make_poly_ring(std::move(names));

  GradingGroup group{z_ring.group.free_rank + 1, z_ring.group.torsion_moduli};
  auto extend_degree = [&](const MultiDegree& dz, int64_t p1_component) {
    std::vector<int64_t> free;
    free.reserve(group.free_rank);
    free.push_back(p1_component);
    free.insert(free.end(), dz.free_part().begin(), dz.free_part().end());
    return MultiDegree(group, std::move(free), dz.torsion_part());
  };

  // deg S_i = deg f_i - deg T1, with deg T1 = deg T2 = the P^1 class.
  const Polynomial* nonzero = nullptr;
  for (const auto& f : eq.coefficients)
    if (!f.is_zero()) {
      nonzero = &f;
      break;
    }
  if (!nonzero) fail(ErrorCode::Internal, "equation with all coefficients zero");
  MultiDegree coeff_degree = extend_degree(degree_of(*nonzero, z_ring), 0);
  MultiDegree p1_class = extend_degree(MultiDegree::zero(z_ring.group), 1);
  MultiDegree s_degree = coeff_degree - p1_class;

  std::vector<MultiDegree> degrees;
  degrees.reserve(ring->nvars());
  for (const auto& dz : z_ring.degrees) degrees.push_back(extend_degree(dz, 0));
  degrees.push_back(p1_class);
  degrees.push_back(p1_class);
  for (int32_t i = 0; i < d; ++i) degrees.push_back(s_degree);

  PresentedCoxRing p;
  p.z_ring = z_ring;
  p.eq = eq;
  p.num_z_vars = nz;
  p.p1_vars = {nz, nz + 1};
  for (int32_t i = 0; i < d; ++i) p.s_vars.push_back(nz + 2 + i);
  p.s_degree = s_degree;

  Polynomial t1 = Polynomial::variable(ring, p.p1_vars[0]);
  Polynomial t2 = Polynomial::variable(ring, p.p1_vars[1]);
  auto s = [&](int32_t i) { return Polynomial::variable(ring, p.s_vars.at(i - 1)); };
  auto coeff = [&](int32_t i) { return eq.coefficients[i].with_ring(ring); };

  for (const auto& rel : z_ring.relations) p.relations_j.push_back(rel.with_ring(ring));
  p.relations_g.push_back(coeff(0) + t2 * s(1));
  for (int32_t i = 1; i <= d - 1; ++i)
    p.relations_g.push_back(coeff(i) + t1 * s(i) + t2 * s(i + 1));
  p.relations_g.push_back(coeff(d) + t1 * s(d));

  std::vector<Polynomial> all_relations = p.relations_j;
  all_relations.insert(all_relations.end(), p.relations_g.begin(), p.relations_g.end());
  try {
    p.ambient = make_graded_ring(ring, group, std::move(degrees), std::move(all_relations));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotHomogeneous)
      fail(ErrorCode::Internal,
           std::string("presentation relation unexpectedly inhomogeneous: ") + e.what());
    throw;
  }

  if (static_cast<int32_t>(p.relations_g.size()) != d + 1 ||
      static_cast<int32_t>(p.s_vars.size()) != d)
    fail(ErrorCode::Internal, "presentation size invariant violated");
  return p;
}

}  // namespace coxhyp
