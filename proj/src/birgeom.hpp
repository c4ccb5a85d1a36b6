#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "presentation.hpp"

namespace coxhyp {

// Degeneracy matrices of the hypersurface. All entries use the unsigned
// coefficients c_i = (-1)^i f_i, so the displayed band structures apply
// verbatim; det(M) = sum_i T1^(d-i) T2^i c_i equals the signed equation f.
//
// M is (d+1)x(d+1) over z-vars + (T1, T2): column j < d carries T2 at row j
// and -T1 at row j+1, the last column carries c_0..c_d.
// N is (d+1)x3 over z-vars + (Tp1..Tpd): columns (0,-Tp1..-Tpd),
// (Tp1..Tpd,0), (c_0..c_d).
struct DegeneracyMatrices {
  int32_t d = 0;
  GradedRing z_ring;
  std::array<std::string, 2> p1_names;
  RingPtr source_ring;  // z-vars, T1, T2
  RingPtr image_ring;   // z-vars, Tp1..Tpd
  PolyMatrix m;
  PolyMatrix n;
  std::vector<Polynomial> unsigned_coeffs;  // c_i over the z-ring
  Polynomial f;                             // signed equation over source_ring
  Polynomial det_m;                         // cached determinant of M
};

// Builds both matrices and symbolically verifies the determinant identity.
DegeneracyMatrices build_matrices(const CoxEquation& eq, const GradedRing& z_ring);

// Maximal minors of N: the 3x3 minors for d >= 2, listed by ascending row
// triples. For d = 1 the image lives in P^0 x Z and the list is empty.
std::vector<Polynomial> maximal_minors_of_n(const DegeneracyMatrices& mat);

// A rational point of the source hypersurface: coordinates on the total
// coordinate space of Z (satisfying J exactly) plus (t1, t2), not both zero.
struct SourcePoint {
  std::vector<Rational> z;
  std::array<Rational, 2> t;
};

// A rational point of the image: z coordinates plus (tp_1 .. tp_d), not all zero.
struct ImagePoint {
  std::vector<Rational> z;
  std::vector<Rational> tprime;
};

// Evaluates M at the point, solves for the one-dimensional kernel
// (t'_1, .., t'_d, 1), and returns the image point.
// Errors: IndeterminacyLocus, NotOnHypersurface, PointNotOnVariety,
// KernelRankUnexpected.
ImagePoint forward_map(const DegeneracyMatrices& mat, const SourcePoint& pt);

// Kernel of N at the point. The kernel generator is normalized so its last
// coordinate is 1 and read as (t1, t2, 1); the first two coordinates are the
// P^1 coordinates of the source point.
SourcePoint inverse_map(const DegeneracyMatrices& mat, const ImagePoint& pt);

// Scales so the last nonzero coordinate is 1; errors if all vanish.
std::vector<Rational> normalize_projective(std::vector<Rational> coords);

// Cone case analysis in the basis (H1, H2). case_id 1: 1 < d < m,
// case_id 2: d = 1, case_id 3: d = m.
struct ConeReport {
  int32_t d = 0;
  int32_t m = 0;
  int32_t case_id = 0;
  std::array<std::array<int64_t, 2>, 2> eff{};
  std::array<std::array<int64_t, 2>, 2> mov{};
  std::array<std::array<int64_t, 2>, 2> nef{};
  std::vector<std::string> descriptors;
};

// Requires m >= 3 and 1 <= d <= m (OutOfRange otherwise).
ConeReport cones(int32_t d, int32_t m);

// Containment of 2-generator cones in the plane.
bool cone2_contains(const std::array<std::array<int64_t, 2>, 2>& outer,
                    const std::array<std::array<int64_t, 2>, 2>& inner);

}  // namespace coxhyp
