#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "presentation.hpp"
#include "test_support.hpp"

using namespace coxhyp;
using coxhyp::test::P;

namespace {

const std::array<std::string, 2> kP1 = {"T6", "T7"};

CoxEquation golden_equation(const GradedRing& z) {
  return make_cox_equation(2, kP1,
                           {P("T1^3", z.ring), P("T2^3", z.ring), P("T5^3", z.ring)}, z);
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("expand: reads signed coefficients off the equation") {
    GradedRing z = test::quadric_ring();
    GradedRing product = product_ring(z, kP1);
    Polynomial f = P("T1^3*T6^2 - T2^3*T6*T7 + T5^3*T7^2", product.ring);
    CoxEquation eq = expand_cox_equation(f, z, kP1);
    CHECK(eq.d == 2);
    CHECK(eq.coefficients[0] == P("T1^3", z.ring));
    CHECK(eq.coefficients[1] == P("T2^3", z.ring));  // sign absorbed
    CHECK(eq.coefficients[2] == P("T5^3", z.ring));
    CHECK(reassemble(eq, z) == f);

    // monomial case: f = T6 has f_0 = 1, f_1 = 0
    CoxEquation mono = expand_cox_equation(P("T6", product.ring), z, kP1);
    CHECK(mono.d == 1);
    CHECK(mono.coefficients[0] == P("1", z.ring));
    CHECK(mono.coefficients[1].is_zero());

    CHECK_THROWS_AS(expand_cox_equation(P("T3*T4", product.ring), z, kP1), Error);
    try {
      expand_cox_equation(P("T3*T4", product.ring), z, kP1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeZeroInP1);
    }
    CHECK_THROWS_AS(expand_cox_equation(Polynomial::zero(product.ring), z, kP1), Error);
    // inhomogeneous equations are rejected
    CHECK_THROWS_AS(expand_cox_equation(P("T6^2 + T1*T6*T7", product.ring), z, kP1), Error);
    // f_0 = f_d = 0 means the equation is divisible by T6*T7
    try {
      expand_cox_equation(P("T1*T6*T7", product.ring), z, kP1);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidEquation);
    }
  }

  TEST_CASE("property: expand and reassemble are mutually inverse") {
    GradedRing z = test::quadric_ring();
    GradedRing product = product_ring(z, kP1);
    std::vector<std::string> samples = {
        "T1^3*T6^2 - T2^3*T6*T7 + T5^3*T7^2",
        "T6",
        "T1*T6 - T2*T7",
        "2*T5^2*T6^3 + T3*T4*T6*T7^2 - 7*T1*T2*T7^3",
    };
    for (const auto& s : samples) {
      Polynomial f = P(s, product.ring);
      CoxEquation eq = expand_cox_equation(f, z, kP1);
      CHECK(reassemble(eq, z) == f);
      CHECK(static_cast<int32_t>(eq.coefficients.size()) == eq.d + 1);
    }
  }

  TEST_CASE("check_hypotheses: golden instance passes with a codimension oracle") {
    GradedRing z = test::quadric_ring();
    CoxEquation eq = golden_equation(z);
    HypothesisReport report = check_hypotheses(eq, z, {});
    CHECK(report.equal_degrees);
    CHECK(report.common_degree == MultiDegree(z.group, {3}));
    CHECK(report.regular_sequence.passed);
    CHECK(report.regular_sequence.proper);
    CHECK(report.machine_verdict());
    CHECK(report.regular_sequence.steps.size() == 3);

    // Independent oracle: in the Cohen-Macaulay ring R = K[T1..T5]/J the
    // sequence is regular iff the dimension drops by its length.
    std::vector<Polynomial> all = z.relations;
    int64_t dim_r = test::krull_dim_oracle(Ideal::make(z.ring, all));
    for (const auto& f : eq.coefficients) all.push_back(f);
    int64_t dim_quotient = test::krull_dim_oracle(Ideal::make(z.ring, all));
    CHECK(dim_r == 4);
    CHECK(dim_quotient == 1);
    CHECK(dim_r - dim_quotient == 3);
  }

  TEST_CASE("check_hypotheses: repeated coefficient fails at step 1") {
    GradedRing z = test::quadric_ring();
    CoxEquation eq = make_cox_equation(
        2, kP1, {P("T1^3", z.ring), P("T1^3", z.ring), P("T5^3", z.ring)}, z);
    HypothesisReport report = check_hypotheses(eq, z, {});
    CHECK(report.equal_degrees);
    CHECK_FALSE(report.regular_sequence.passed);
    CHECK(report.regular_sequence.failed_index == 1);
    CHECK_FALSE(report.machine_verdict());
  }

  TEST_CASE("check_hypotheses: zero coefficient is accepted at expansion, rejected here") {
    GradedRing z = test::quadric_ring();
    CoxEquation eq = make_cox_equation(1, kP1, {P("1", z.ring), P("0", z.ring)}, z);
    HypothesisReport report = check_hypotheses(eq, z, {});
    CHECK_FALSE(report.regular_sequence.passed);
    REQUIRE(report.regular_sequence.failed_index == 1);
    CHECK(report.regular_sequence.steps[1].reason.find("zero polynomial") != std::string::npos);
  }

  TEST_CASE("regular_sequence_check: single nonzero element of a domain") {
    GradedRing z = test::quadric_ring();
    RegSeqResult r = regular_sequence_check(z.ring, z.relations, {P("T1", z.ring)});
    CHECK(r.passed);
    CHECK(r.proper);
  }

  TEST_CASE("regular_sequence_check: improper sequences are rejected") {
    RingPtr rx = make_poly_ring({"x"});
    // x, x - 1 is regular step-by-step but generates the unit ideal
    RegSeqResult r = regular_sequence_check(rx, {}, {P("x", rx), P("x - 1", rx)});
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.proper);
    CHECK(r.failed_index == -1);  // no quotient step failed
  }

  TEST_CASE("property: permuting a homogeneous regular sequence keeps the verdict") {
    GradedRing z = test::quadric_ring();
    std::vector<Polynomial> seq = {P("T1^3", z.ring), P("T2^3", z.ring), P("T5^3", z.ring)};
    std::sort(seq.begin(), seq.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.str() < b.str(); });
    do {
      RegSeqResult r = regular_sequence_check(z.ring, z.relations, seq);
      CHECK(r.passed);
    } while (std::next_permutation(seq.begin(), seq.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.str() < b.str();
    }));
  }

  TEST_CASE("build_presentation: the golden presentation") {
    GradedRing z = test::quadric_ring();
    CoxEquation eq = golden_equation(z);
    PresentedCoxRing p = build_presentation(eq, z);

    REQUIRE(p.ambient.ring->nvars() == 9);
    std::vector<std::string> names = p.ambient.ring->var_names();
    CHECK(names == std::vector<std::string>{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "S1", "S2"});

    REQUIRE(p.ambient.relations.size() == 4);
    CHECK(p.ambient.relations[0] == P("T1*T2 + T3*T4 + T5^2", p.ambient.ring));
    CHECK(p.ambient.relations[1] == P("T1^3 + T7*S1", p.ambient.ring));
    CHECK(p.ambient.relations[2] == P("T2^3 + T6*S1 + T7*S2", p.ambient.ring));
    CHECK(p.ambient.relations[3] == P("T5^3 + T6*S2", p.ambient.ring));

    GradingGroup rank2{2, {}};
    for (int v = 0; v < 5; ++v) CHECK(p.ambient.var_degree(v) == MultiDegree(rank2, {0, 1}));
    CHECK(p.ambient.var_degree(5) == MultiDegree(rank2, {1, 0}));
    CHECK(p.ambient.var_degree(6) == MultiDegree(rank2, {1, 0}));
    CHECK(p.ambient.var_degree(7) == MultiDegree(rank2, {-1, 3}));
    CHECK(p.ambient.var_degree(8) == MultiDegree(rank2, {-1, 3}));

    // every g_i is homogeneous of the common coefficient degree
    for (const auto& g : p.relations_g)
      CHECK(degree_of(g, p.ambient) == MultiDegree(rank2, {0, 3}));

    // exactly d+1 new relations and d new variables beyond R[T1,T2]
    CHECK(p.relations_g.size() == 3);
    CHECK(p.s_vars.size() == 2);
  }

  TEST_CASE("build_presentation: d = 1 specialization") {
    GradedRing z = test::quadric_ring();
    CoxEquation eq = make_cox_equation(1, kP1, {P("T1", z.ring), P("T2", z.ring)}, z);
    PresentedCoxRing p = build_presentation(eq, z);
    REQUIRE(p.relations_g.size() == 2);
    CHECK(p.relations_g[0] == P("T1 + T7*S1", p.ambient.ring));
    CHECK(p.relations_g[1] == P("T2 + T6*S1", p.ambient.ring));
    GradingGroup rank2{2, {}};
    CHECK(p.s_degree == MultiDegree(rank2, {-1, 1}));
  }

  TEST_CASE("build_presentation: torsion flows through the grading") {
    RingPtr ring = make_poly_ring({"x", "y"});
    GradingGroup g{1, {2}};
    GradedRing z = make_graded_ring(ring, g, {MultiDegree(g, {1}, {1}), MultiDegree(g, {1}, {1})}, {});
    CoxEquation eq = make_cox_equation(1, kP1, {P("x", ring), P("y", ring)}, z);
    HypothesisReport report = check_hypotheses(eq, z, {});
    CHECK(report.machine_verdict());
    PresentedCoxRing p = build_presentation(eq, z);
    GradingGroup rank2{2, {2}};
    CHECK(p.s_degree == MultiDegree(rank2, {-1, 1}, {1}));
    for (const auto& rel : p.relations_g)
      CHECK(degree_of(rel, p.ambient) == MultiDegree(rank2, {0, 1}, {1}));
  }

  TEST_CASE("build_presentation: name collisions are rejected") {
    RingPtr ring = make_poly_ring({"S1", "y"});
    GradingGroup g{1, {}};
    GradedRing z = make_graded_ring(ring, g, {MultiDegree(g, {1}), MultiDegree(g, {1})}, {});
    CoxEquation eq = make_cox_equation(1, kP1, {P("S1", ring), P("y", ring)}, z);
    CHECK_THROWS_AS(build_presentation(eq, z), Error);
  }
}
