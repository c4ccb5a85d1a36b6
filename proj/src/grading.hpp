#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace coxhyp {

// The grading group Z^r (+) Z/n_1 (+) ... (+) Z/n_k.
struct GradingGroup {
  int32_t free_rank = 0;
  std::vector<int64_t> torsion_moduli;  // each >= 2

  bool operator==(const GradingGroup&) const = default;
  std::string str() const;
};

void validate_group(const GradingGroup& g);

// Element of a GradingGroup; torsion residues kept reduced to [0, n_i).
class MultiDegree {
 public:
  MultiDegree() = default;
  MultiDegree(GradingGroup group, std::vector<int64_t> free, std::vector<int64_t> torsion = {});
  static MultiDegree zero(const GradingGroup& group);

  const GradingGroup& group() const { return group_; }
  const std::vector<int64_t>& free_part() const { return free_; }
  const std::vector<int64_t>& torsion_part() const { return torsion_; }

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-(const MultiDegree& o) const;

  bool operator==(const MultiDegree& o) const { return free_ == o.free_ && torsion_ == o.torsion_; }

  // "(1, 0)" for free parts, torsion appended as "(0; 1 mod 2)".
  std::string str() const;

 private:
  GradingGroup group_;
  std::vector<int64_t> free_;
  std::vector<int64_t> torsion_;
};

// A graded ring presentation: named variables with multidegrees plus a
// homogeneous relation ideal.
struct GradedRing {
  RingPtr ring;
  GradingGroup group;
  std::vector<MultiDegree> degrees;   // one per variable
  std::vector<Polynomial> relations;  // nonzero, homogeneous

  const MultiDegree& var_degree(int32_t v) const { return degrees.at(v); }
};

MultiDegree monomial_degree(const Monomial& m, const GradedRing& ring);

// The common degree of all terms of p.
// Errors: ZeroPolynomial; NotHomogeneous naming two offending monomials.
MultiDegree degree_of(const Polynomial& p, const GradedRing& ring);

bool is_homogeneous(const Polynomial& p, const GradedRing& ring);

// Validates sizes and relation homogeneity; zero relations are dropped.
GradedRing make_graded_ring(RingPtr ring, GradingGroup group, std::vector<MultiDegree> degrees,
                            std::vector<Polynomial> relations);

}  // namespace coxhyp
