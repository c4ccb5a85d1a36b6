#include <doctest.h>

#include "errors.hpp"
#include "grading.hpp"
#include "test_support.hpp"

using namespace coxhyp;
using coxhyp::test::P;

namespace {

// Random homogeneous polynomial of the given total degree over a ring whose
// variables all have degree (1).
Polynomial random_homogeneous(test::PolyGen& gen, const RingPtr& ring, int32_t degree,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int32_t> pick(0, ring->nvars() - 1);
  Polynomial p = Polynomial::zero(ring);
  for (int t = 0; t < 3; ++t) {
    std::vector<Monomial::Entry> entries;
    for (int32_t i = 0; i < degree; ++i) entries.push_back({pick(rng), 1});
    p = p + Polynomial::term(ring, Monomial::make(std::move(entries)), gen.rational());
  }
  return p;
}

}  // namespace

TEST_SUITE("grading") {
  TEST_CASE("degree_of on the quadric ring") {
    GradedRing ring = test::quadric_ring();
    CHECK(degree_of(P("T1*T2", ring.ring), ring) == MultiDegree(ring.group, {2}));
    CHECK(degree_of(P("5", ring.ring), ring) == MultiDegree(ring.group, {0}));
    CHECK_THROWS_AS(degree_of(P("T1 + T1^2", ring.ring), ring), Error);
    CHECK_THROWS_AS(degree_of(Polynomial::zero(ring.ring), ring), Error);
    try {
      degree_of(P("T1 + T1^2", ring.ring), ring);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotHomogeneous);
      // the message names two offending monomials
      CHECK(std::string(e.what()).find("T1") != std::string::npos);
      CHECK(std::string(e.what()).find("T1^2") != std::string::npos);
    }
  }

  TEST_CASE("degree arithmetic") {
    GradingGroup rank2{2, {}};
    MultiDegree a(rank2, {0, 3});
    MultiDegree t1(rank2, {1, 0});
    CHECK(a - t1 == MultiDegree(rank2, {-1, 3}));
    CHECK(a + MultiDegree::zero(rank2) == a);
    CHECK(a - a == MultiDegree::zero(rank2));  // subtraction to the identity

    GradingGroup with_torsion{1, {2}};
    MultiDegree one(with_torsion, {0}, {1});
    CHECK(one + one == MultiDegree(with_torsion, {0}, {0}));
    CHECK(MultiDegree(with_torsion, {0}, {0}) - one == one);  // -1 = 1 mod 2

    CHECK_THROWS_AS(a + MultiDegree(GradingGroup{1, {}}, {1}), Error);
  }

  TEST_CASE("make_graded_ring validates") {
    CHECK_NOTHROW(test::quadric_ring());

    RingPtr rx = make_poly_ring({"x"});
    GradingGroup g{1, {}};
    CHECK_NOTHROW(make_graded_ring(rx, g, {MultiDegree(g, {1})}, {}));
    CHECK_THROWS_AS(
        make_graded_ring(rx, g, {MultiDegree(g, {1})}, {P("x + 1", rx)}), Error);
    // one degree per variable
    CHECK_THROWS_AS(make_graded_ring(rx, g, {}, {}), Error);

    // zero relations are dropped, not stored
    GradedRing free_ring = make_graded_ring(rx, g, {MultiDegree(g, {1})}, {P("x - x", rx)});
    CHECK(free_ring.relations.empty());
  }

  TEST_CASE("property: degree of products and scalar invariance") {
    GradedRing ring = test::quadric_ring();
    test::PolyGen gen(ring.ring, 31337);
    std::mt19937_64 rng(171);
    std::uniform_int_distribution<int32_t> deg(1, 3);
    for (int rep = 0; rep < 60; ++rep) {
      Polynomial a = random_homogeneous(gen, ring.ring, deg(rng), rng);
      Polynomial b = random_homogeneous(gen, ring.ring, deg(rng), rng);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(degree_of(a * b, ring) == degree_of(a, ring) + degree_of(b, ring));
      CHECK(degree_of(a.scaled(Rational(-7, 3)), ring) == degree_of(a, ring));
    }
  }
}
