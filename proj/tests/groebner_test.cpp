#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "groebner.hpp"
#include "test_support.hpp"

using namespace coxhyp;
using coxhyp::test::P;

namespace {

// Independent oracle for univariate ideals: a Groebner basis of <p, q> in
// Q[x] must be the single monic gcd, computed here by the Euclidean
// algorithm with naive coefficient-wise division.
int64_t uni_degree(const Polynomial& p) { return p.total_degree(); }

Rational uni_lead(const Polynomial& p) {
  return p.coefficient(Monomial::variable(0, static_cast<int32_t>(uni_degree(p))));
}

Polynomial uni_rem(Polynomial a, const Polynomial& b) {
  while (!a.is_zero() && uni_degree(a) >= uni_degree(b)) {
    int32_t shift = static_cast<int32_t>(uni_degree(a) - uni_degree(b));
    Rational c = uni_lead(a) / uni_lead(b);
    Monomial xs = shift > 0 ? Monomial::variable(0, shift) : Monomial();
    a = a - b.mul_term(xs, c);  // cancels the leading term exactly
  }
  return a;
}

Polynomial uni_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = uni_rem(a, b);
    a = b;
    b = r;
  }
  return a.scaled(uni_lead(a).inverse());
}

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(P(g, ring));
  return Ideal::make(ring, std::move(polys));
}

bool subset_of(const Ideal& inner, const Ideal& outer) {
  GroebnerBasis g = groebner_basis(outer, MonomialOrder::grevlex());
  return std::all_of(inner.generators.begin(), inner.generators.end(),
                     [&](const Polynomial& p) { return is_member(p, g); });
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("univariate ideals reduce to the monic gcd") {
    RingPtr rx = make_poly_ring({"x"});
    GroebnerBasis g = groebner_basis(ideal_of(rx, {"x^2 - 1", "x - 1"}), MonomialOrder::lex());
    REQUIRE(g.elements.size() == 1);
    CHECK(g.elements[0] == P("x - 1", rx));

    // oracle sweep: random univariate pairs
    test::PolyGen gen(rx, 2024);
    int checked = 0;
    for (int rep = 0; rep < 40; ++rep) {
      Polynomial a = gen.nonzero_poly(3, 4);
      Polynomial b = gen.nonzero_poly(3, 4);
      Polynomial expect = uni_gcd(a, b);
      GroebnerBasis gb = groebner_basis(Ideal::make(rx, {a, b}), MonomialOrder::lex());
      REQUIRE(gb.elements.size() == 1);
      CHECK(gb.elements[0] == expect);
      ++checked;
    }
    CHECK(checked == 40);
  }

  TEST_CASE("zero ideal and linear elimination") {
    RingPtr rx = make_poly_ring({"x"});
    CHECK(groebner_basis(Ideal::make(rx, {}), MonomialOrder::lex()).elements.empty());

    RingPtr ring = test::ring_xyz();
    GroebnerBasis g = groebner_basis(ideal_of(ring, {"x - y", "y - z"}), MonomialOrder::lex());
    REQUIRE(g.elements.size() == 2);
    // reduced basis under lex(x > y > z), sorted by ascending leading monomial
    CHECK(g.elements[0] == P("y - z", ring));
    CHECK(g.elements[1] == P("x - z", ring));
  }

  TEST_CASE("normal form: membership and non-membership") {
    RingPtr ring = test::ring_xyz();
    Ideal ideal = ideal_of(ring, {"x^2 - y", "x*y - z"});
    GroebnerBasis g = groebner_basis(ideal, MonomialOrder::grevlex());
    for (const auto& gen : ideal.generators) CHECK(normal_form(gen, g).is_zero());

    GroebnerBasis gxy = groebner_basis(ideal_of(ring, {"x", "y"}), MonomialOrder::grevlex());
    CHECK(normal_form(P("1", ring), gxy) == P("1", ring));

    // quadric - T2*(T1) shows membership of T5^2 + T3*T4
    RingPtr rq = make_poly_ring({"T1", "T2", "T3", "T4", "T5"});
    GroebnerBasis gq = groebner_basis(ideal_of(rq, {"T1*T2 + T3*T4 + T5^2", "T1"}),
                                      MonomialOrder::grevlex());
    CHECK(normal_form(P("T5^2 + T3*T4", rq), gq).is_zero());
  }

  TEST_CASE("eliminate") {
    RingPtr rxy = make_poly_ring({"x", "y"});
    Ideal parabola = ideal_of(rxy, {"y - x^2", "y^2 - 1"});
    Ideal elim = eliminate(parabola, {1});
    // substituting y = x^2 into y^2 - 1 gives exactly <x^4 - 1>
    CHECK(ideals_equal(elim, ideal_of(rxy, {"x^4 - 1"})));

    CHECK(eliminate(parabola, {}).generators ==
          reduced(parabola).generators);

    RingPtr r3 = make_poly_ring({"f0", "T2", "S1"});
    Ideal single = ideal_of(r3, {"f0 + T2*S1"});
    CHECK(eliminate(single, {2}).generators.empty());
  }

  TEST_CASE("ideal quotient") {
    RingPtr rxy = make_poly_ring({"x", "y"});
    CHECK(ideals_equal(ideal_quotient(ideal_of(rxy, {"x*y"}), P("x", rxy)),
                       ideal_of(rxy, {"y"})));
    Ideal ideal = ideal_of(rxy, {"x^2 - y", "y^3"});
    CHECK(ideals_equal(ideal_quotient(ideal, P("1", rxy)), ideal));

    RingPtr rq = make_poly_ring({"T5"});
    CHECK(ideals_equal(ideal_quotient(ideal_of(rq, {"T5^2"}), P("T5", rq)),
                       ideal_of(rq, {"T5"})));
    CHECK_THROWS_AS(ideal_quotient(ideal, Polynomial::zero(rxy)), Error);
  }

  TEST_CASE("saturation") {
    RingPtr r = make_poly_ring({"T1", "T2", "x"});
    CHECK(ideals_equal(saturate(ideal_of(r, {"T2*x"}), P("T2", r)), ideal_of(r, {"x"})));
    Ideal ideal = ideal_of(r, {"T1*x", "T2^2"});
    CHECK(ideals_equal(saturate(ideal, P("1", r)), ideal));
    CHECK(ideals_equal(saturate(ideal_of(r, {"T1", "T2"}), P("T2", r)), ideal_of(r, {"1"})));
  }

  TEST_CASE("ideals_equal") {
    RingPtr rx = make_poly_ring({"x"});
    CHECK(ideals_equal(ideal_of(rx, {"x - 1"}), ideal_of(rx, {"2*x - 2"})));
    CHECK_FALSE(ideals_equal(ideal_of(rx, {"x"}), ideal_of(rx, {"x^2"})));
    Ideal with_zero = Ideal::make(rx, {P("x", rx), Polynomial::zero(rx)});
    CHECK(with_zero.generators.size() == 1);  // zero generators dropped
    CHECK(ideals_equal(with_zero, ideal_of(rx, {"x"})));
  }

  TEST_CASE("resource budget is a distinct error") {
    RingPtr ring = test::ring_xyz();
    Ideal ideal = ideal_of(ring, {"x^3 - y^2*z", "x*y - z^2", "y^3 - x*z"});
    BudgetPtr tiny = make_budget(1);
    try {
      groebner_basis(ideal, MonomialOrder::grevlex(), tiny);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceLimit);
      CHECK(exit_class(e.code()) == 3);
    }
  }

  TEST_CASE("property: normal form is idempotent and p - nf(p) is a member") {
    RingPtr ring = test::ring_xyz();
    test::PolyGen gen(ring, 808);
    for (int rep = 0; rep < 25; ++rep) {
      Ideal ideal = Ideal::make(ring, {gen.nonzero_poly(3, 2), gen.nonzero_poly(3, 2)});
      GroebnerBasis g = groebner_basis(ideal, MonomialOrder::grevlex());
      Polynomial p = gen.poly(4, 3);
      Polynomial r = normal_form(p, g);
      CHECK(normal_form(r, g) == r);
      CHECK(is_member(p - r, g));
    }
  }

  TEST_CASE("property: reduced basis is independent of generator order") {
    RingPtr ring = test::ring_xyz();
    test::PolyGen gen(ring, 515);
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 15; ++rep) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < 4; ++i) gens.push_back(gen.nonzero_poly(3, 2));
      GroebnerBasis a = groebner_basis(Ideal::make(ring, gens), MonomialOrder::grevlex());
      std::shuffle(gens.begin(), gens.end(), rng);
      GroebnerBasis b = groebner_basis(Ideal::make(ring, gens), MonomialOrder::grevlex());
      CHECK(a.elements == b.elements);
    }
  }

  TEST_CASE("property: saturation grows, stabilizes, and matches the inverse-variable route") {
    RingPtr ring = make_poly_ring({"x", "y", "z", "w"});
    test::PolyGen gen(ring, 271828);
    int agreements = 0;
    for (int rep = 0; rep < 24; ++rep) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < 2; ++i) gens.push_back(gen.nonzero_poly(2, 3));
      Ideal ideal = Ideal::make(ring, gens);
      Polynomial h = gen.nonzero_poly(2, 2);
      Ideal sat = saturate(ideal, h);
      CHECK(subset_of(ideal, sat));
      CHECK(ideals_equal(saturate(sat, h), sat));
      CHECK(ideals_equal(sat, saturate_via_inverse_variable(ideal, h)));
      ++agreements;
    }
    CHECK(agreements >= 20);
  }

  TEST_CASE("property: elimination respects containment") {
    RingPtr ring = test::ring_xyz();
    test::PolyGen gen(ring, 6174);
    for (int rep = 0; rep < 12; ++rep) {
      Polynomial a = gen.nonzero_poly(2, 2);
      Polynomial b = gen.nonzero_poly(2, 2);
      Ideal small = Ideal::make(ring, {a});
      Ideal large = Ideal::make(ring, {a, b});
      Ideal es = eliminate(small, {2});
      Ideal el = eliminate(large, {2});
      CHECK(subset_of(es, el));
    }
  }
}
