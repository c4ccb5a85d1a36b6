#include <doctest.h>

#include "errors.hpp"
#include "ordering.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "test_support.hpp"

using namespace coxhyp;
using coxhyp::test::P;
using coxhyp::test::PolyGen;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 6).numerator() == 1);
    CHECK(Rational(3, 6).denominator() == 2);
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
  }

  TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  }

  TEST_CASE("string round trip") {
    CHECK(Rational::from_string("3/4").str() == "3/4");
    CHECK(Rational::from_string("-6/4").str() == "-3/2");
    CHECK(Rational::from_string("17").str() == "17");
    CHECK(Rational::from_string("-0").str() == "0");
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
    CHECK_THROWS_AS(Rational::from_string("a/2"), Error);
    CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
  }
}

TEST_SUITE("monomial") {
  TEST_CASE("canonical sparse form") {
    Monomial m = Monomial::make({{2, 1}, {0, 2}, {1, 0}});
    CHECK(m.exponent(0) == 2);
    CHECK(m.exponent(1) == 0);
    CHECK(m.exponent(2) == 1);
    CHECK(m.entries().size() == 2);  // no stored zero exponents
    CHECK(m.total_degree() == 3);
    CHECK(Monomial().is_one());
  }

  TEST_CASE("divisibility and quotient") {
    Monomial xy2 = Monomial::make({{0, 1}, {1, 2}});
    Monomial y = Monomial::variable(1);
    CHECK(y.divides(xy2));
    CHECK_FALSE(xy2.divides(y));
    CHECK(xy2.quotient_by(y) == Monomial::make({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(y.quotient_by(xy2), Error);
    CHECK(Monomial::lcm(xy2, Monomial::variable(2)) == Monomial::make({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(Monomial::variable(0).coprime(Monomial::variable(1)));
    CHECK_FALSE(xy2.coprime(y));
  }
}

TEST_SUITE("monomial order") {
  TEST_CASE("lex: x > y when x comes first") {
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(lex.compare(Monomial::variable(0), Monomial::variable(1)) > 0);
    CHECK(lex.compare(Monomial::variable(1), Monomial::variable(0)) < 0);
    CHECK(lex.compare(Monomial::variable(0), Monomial::variable(0)) == 0);
    // x^2 > x*y^5 under lex
    CHECK(lex.compare(Monomial::make({{0, 2}}), Monomial::make({{0, 1}, {1, 5}})) > 0);
  }

  TEST_CASE("grevlex: x*y^2 < x^2*y") {
    MonomialOrder grevlex = MonomialOrder::grevlex();
    Monomial xy2 = Monomial::make({{0, 1}, {1, 2}});
    Monomial x2y = Monomial::make({{0, 2}, {1, 1}});
    CHECK(grevlex.compare(xy2, x2y) < 0);
    // degree dominates
    CHECK(grevlex.compare(Monomial::make({{1, 3}}), Monomial::make({{0, 2}})) > 0);
    // ties broken at the last variable: smaller exponent wins
    CHECK(grevlex.compare(Monomial::make({{0, 1}, {2, 1}}), Monomial::make({{1, 2}})) < 0);
  }

  TEST_CASE("block order: any front monomial beats any front-free monomial") {
    // S1 vs T1^100 under block({S-vars}, grevlex): S1 wins.
    MonomialOrder block = MonomialOrder::block({3, 4}, MonomialOrder::grevlex());
    Monomial s1 = Monomial::variable(3);
    Monomial t1_100 = Monomial::make({{0, 100}});
    CHECK(block.compare(s1, t1_100) > 0);
    CHECK(block.compare(t1_100, s1) < 0);
    // front-free monomials fall through to the inner order
    CHECK(block.compare(Monomial::make({{0, 1}, {1, 2}}), Monomial::make({{0, 2}, {1, 1}})) < 0);
  }

  TEST_CASE("property: total and multiplicative on random samples") {
    RingPtr ring = test::ring_xyz();
    PolyGen gen(ring, 12345);
    std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                      MonomialOrder::block({0}, MonomialOrder::grevlex())};
    for (int rep = 0; rep < 300; ++rep) {
      Monomial a = gen.monomial();
      Monomial b = gen.monomial();
      Monomial m = gen.monomial();
      for (const auto& order : orders) {
        auto c = order.compare(a, b);
        // antisymmetry
        auto c_rev = order.compare(b, a);
        CHECK(((c == std::strong_ordering::equal) == (c_rev == std::strong_ordering::equal)));
        if (c == std::strong_ordering::equal) CHECK(a == b);
        // compatibility with multiplication
        CHECK(order.compare(a * m, b * m) == c);
      }
    }
  }

  TEST_CASE("property: block elimination property on random samples") {
    RingPtr ring = make_poly_ring({"a", "b", "c", "d"});
    PolyGen gen(ring, 777);
    MonomialOrder block = MonomialOrder::block({0, 1}, MonomialOrder::grevlex());
    std::vector<bool> front_mask{true, true, false, false};
    for (int rep = 0; rep < 200; ++rep) {
      Monomial a = gen.monomial();
      Monomial b = gen.monomial();
      if (a.involves_any(front_mask) && !b.involves_any(front_mask))
        CHECK(block.compare(a, b) > 0);
    }
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("parse examples") {
    RingPtr ring = make_poly_ring({"T1", "T2", "T3", "T4", "T5"});
    Polynomial q = P("T1*T2 + T3*T4 + T5^2", ring);
    CHECK(q.term_count() == 3);
    CHECK(q.total_degree() == 2);

    CHECK(P("0", ring).is_zero());
    RingPtr rx = make_poly_ring({"x"});
    CHECK(P("x^2 - x^2", rx).is_zero());
  }

  TEST_CASE("parse errors carry positions") {
    RingPtr ring = make_poly_ring({"x", "y"});
    CHECK_THROWS_AS(P("x + ", ring), Error);
    CHECK_THROWS_AS(P("x ** y", ring), Error);
    CHECK_THROWS_AS(P("2x", ring), Error);      // implicit multiplication rejected
    CHECK_THROWS_AS(P("x y", ring), Error);     // implicit multiplication rejected
    CHECK_THROWS_AS(P("x^0", ring), Error);     // exponents are positive
    CHECK_THROWS_AS(P("x^(2)", ring), Error);
    CHECK_THROWS_AS(P("(x", ring), Error);
    try {
      P("x + q", ring);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownVariable);
      CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
  }

  TEST_CASE("arithmetic examples") {
    RingPtr rx = make_poly_ring({"x"});
    CHECK(P("(x+1)*(x-1)", rx) == P("x^2 - 1", rx));
    PolyGen gen(rx, 5);
    Polynomial a = gen.poly();
    CHECK(a + Polynomial::zero(rx) == a);

    RingPtr rt = make_poly_ring({"T1", "T2"});
    // (T1+T2)^2, hand-expanded
    CHECK(P("(T1+T2)*(T1+T2)", rt) == P("T1^2 + 2*T1*T2 + T2^2", rt));
  }

  TEST_CASE("ring mismatch is rejected") {
    RingPtr a = make_poly_ring({"x"});
    RingPtr b = make_poly_ring({"y"});
    CHECK_THROWS_AS(P("x", a) + P("y", b), Error);
  }

  TEST_CASE("property: ring axioms on random samples") {
    RingPtr ring = test::ring_xyz();
    PolyGen gen(ring, 99);
    for (int rep = 0; rep < 120; ++rep) {
      Polynomial a = gen.poly();
      Polynomial b = gen.poly();
      Polynomial c = gen.poly();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Polynomial::zero(ring));
    }
  }

  TEST_CASE("property: parse(print(p)) == p") {
    RingPtr ring = test::ring_xyz();
    PolyGen gen(ring, 4242);
    CHECK(Polynomial::zero(ring).str() == "0");
    for (int rep = 0; rep < 200; ++rep) {
      Polynomial p = gen.poly();
      CHECK(P(p.str(), ring) == p);
    }
    // rational and negative-leading coefficients survive the round trip
    Polynomial tricky = P("-3/2*x^2*y + z - 1/7", ring);
    CHECK(P(tricky.str(), ring) == tricky);
  }
}
