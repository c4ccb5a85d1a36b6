#include "birgeom.hpp"

#include <algorithm>

#include "errors.hpp"

namespace coxhyp {

DegeneracyMatrices build_matrices(const CoxEquation& eq, const GradedRing& z_ring) {
  if (eq.d < 1) fail(ErrorCode::InvalidArgument, "build_matrices requires d >= 1");
  int32_t d = eq.d;
  int32_t nz = z_ring.ring->nvars();

  DegeneracyMatrices mat;
  mat.d = d;
  mat.z_ring = z_ring;
  mat.p1_names = eq.p1_names;

  {
    std::vector<std::string> names = z_ring.ring->var_names();
    names.push_back(eq.p1_names[0]);
    names.push_back(eq.p1_names[1]);
    mat.source_ring = make_poly_ring(std::move(names));
  }
  {
    std::vector<std::string> names = z_ring.ring->var_names();
    for (int32_t i = 1; i <= d; ++i) {
      std::string name = "Tp" + std::to_string(i);
      if (z_ring.ring->var_index(name))
        fail(ErrorCode::InvalidArgument,
             "generated variable name '" + name + "' collides with a Z variable");
      names.push_back(name);
    }
    mat.image_ring = make_poly_ring(std::move(names));
  }

  for (int32_t i = 0; i <= d; ++i) {
    Polynomial ci = eq.coefficients[i];
    if (i % 2 == 1) ci = -ci;
    mat.unsigned_coeffs.push_back(std::move(ci));
  }

  Polynomial t1 = Polynomial::variable(mat.source_ring, nz);
  Polynomial t2 = Polynomial::variable(mat.source_ring, nz + 1);
  Polynomial zero_src = Polynomial::zero(mat.source_ring);

  mat.m.assign(d + 1, std::vector<Polynomial>(d + 1, zero_src));
  for (int32_t col = 0; col < d; ++col) {
    mat.m[col][col] = t2;
    mat.m[col + 1][col] = -t1;
  }
  for (int32_t row = 0; row <= d; ++row)
    mat.m[row][d] = mat.unsigned_coeffs[row].with_ring(mat.source_ring);

  Polynomial zero_img = Polynomial::zero(mat.image_ring);
  auto tp = [&](int32_t i) { return Polynomial::variable(mat.image_ring, nz + i - 1); };
  mat.n.assign(d + 1, std::vector<Polynomial>(3, zero_img));
  mat.n[0][0] = zero_img;
  mat.n[0][1] = tp(1);
  for (int32_t row = 1; row <= d - 1; ++row) {
    mat.n[row][0] = -tp(row);
    mat.n[row][1] = tp(row + 1);
  }
  mat.n[d][0] = -tp(d);
  mat.n[d][1] = zero_img;
  for (int32_t row = 0; row <= d; ++row)
    mat.n[row][2] = mat.unsigned_coeffs[row].with_ring(mat.image_ring);

  mat.f = reassemble(eq, z_ring).with_ring(mat.source_ring);

  // det(M) = sum_i T1^(d-i) T2^i c_i, verified symbolically at build time.
  mat.det_m = poly_det(mat.m);
  Polynomial expected = Polynomial::zero(mat.source_ring);
  for (int32_t i = 0; i <= d; ++i) {
    Monomial t_power = Monomial::make({{nz, d - i}, {nz + 1, i}});
    expected = expected + mat.m[i][d].mul_term(t_power, Rational(1));
  }
  if (!(mat.det_m == expected) || !(mat.det_m == mat.f))
    fail(ErrorCode::Internal, "determinant identity violated for the degeneracy matrix");

  return mat;
}

std::vector<Polynomial> maximal_minors_of_n(const DegeneracyMatrices& mat) {
  std::vector<Polynomial> minors;
  int32_t rows = mat.d + 1;
  if (rows < 3) return minors;  // d = 1: the image is P^0 x Z, no conditions
  for (int32_t a = 0; a < rows; ++a)
    for (int32_t b = a + 1; b < rows; ++b)
      for (int32_t c = b + 1; c < rows; ++c) {
        PolyMatrix sub{mat.n[a], mat.n[b], mat.n[c]};
        minors.push_back(poly_det(sub));
      }
  return minors;
}

namespace {

void check_z_on_variety(const DegeneracyMatrices& mat, const std::vector<Rational>& z) {
  if (static_cast<int32_t>(z.size()) != mat.z_ring.ring->nvars())
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(z.size()) +
                                       " z-coordinates, expected " +
                                       std::to_string(mat.z_ring.ring->nvars()));
  for (const auto& rel : mat.z_ring.relations) {
    if (!evaluate(rel, z).is_zero())
      fail(ErrorCode::PointNotOnVariety,
           "z-coordinates do not satisfy the relation " + rel.str());
  }
}

std::vector<Rational> evaluate_coeffs(const DegeneracyMatrices& mat,
                                      const std::vector<Rational>& z) {
  std::vector<Rational> c;
  c.reserve(mat.unsigned_coeffs.size());
  for (const auto& ci : mat.unsigned_coeffs) c.push_back(evaluate(ci, z));
  return c;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<Rational> kernel_vector(const QMatrix& m, size_t ncols, const char* what) {
  auto basis = nullspace(m, ncols);
  if (basis.size() != 1)
    fail(ErrorCode::KernelRankUnexpected,
         std::string(what) + ": kernel dimension is " + std::to_string(basis.size()) +
             ", expected 1");
  std::vector<Rational> v = std::move(basis[0]);
  if (v.back().is_zero())
    fail(ErrorCode::KernelRankUnexpected,
         std::string(what) + ": kernel generator has vanishing last coordinate");
  Rational inv = v.back().inverse();
  for (auto& x : v) x *= inv;
  return v;
}

}  // namespace

std::vector<Rational> normalize_projective(std::vector<Rational> coords) {
  size_t last = coords.size();
  for (size_t i = coords.size(); i-- > 0;) {
    if (!coords[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last == coords.size())
    fail(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
  Rational inv = coords[last].inverse();
  for (auto& x : coords) x *= inv;
  return coords;
}

ImagePoint forward_map(const DegeneracyMatrices& mat, const SourcePoint& pt) {
  check_z_on_variety(mat, pt.z);
  if (pt.t[0].is_zero() && pt.t[1].is_zero())
    fail(ErrorCode::InvalidArgument, "(0, 0) is not a point of P^1");

  std::vector<Rational> c = evaluate_coeffs(mat, pt.z);
  if (all_zero(c))
    fail(ErrorCode::IndeterminacyLocus,
         "all coefficients c_0..c_d vanish at this point; the map is undefined there");

  std::vector<Rational> values = pt.z;
  values.push_back(pt.t[0]);
  values.push_back(pt.t[1]);
  if (!evaluate(mat.f, values).is_zero())
    fail(ErrorCode::NotOnHypersurface, "the point does not satisfy the hypersurface equation");

  QMatrix m = evaluate_matrix(mat.m, values);
  std::vector<Rational> v = kernel_vector(m, mat.d + 1, "forward map");

  ImagePoint image;
  image.z = pt.z;
  image.tprime.assign(v.begin(), v.end() - 1);

  std::vector<Rational> image_values = image.z;
  image_values.insert(image_values.end(), image.tprime.begin(), image.tprime.end());
  for (const auto& minor : maximal_minors_of_n(mat))
    if (!evaluate(minor, image_values).is_zero())
      fail(ErrorCode::Internal, "forward image does not satisfy the minors of N");
  return image;
}

SourcePoint inverse_map(const DegeneracyMatrices& mat, const ImagePoint& pt) {
  check_z_on_variety(mat, pt.z);
  if (static_cast<int32_t>(pt.tprime.size()) != mat.d)
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(pt.tprime.size()) +
                                       " image coordinates, expected " + std::to_string(mat.d));
  if (all_zero(pt.tprime))
    fail(ErrorCode::IndeterminacyLocus,
         "all P^(d-1) coordinates vanish; the point lies outside U'");

  std::vector<Rational> c = evaluate_coeffs(mat, pt.z);
  if (all_zero(c))
    fail(ErrorCode::IndeterminacyLocus,
         "all coefficients c_0..c_d vanish at this point; the map is undefined there");

  std::vector<Rational> values = pt.z;
  values.insert(values.end(), pt.tprime.begin(), pt.tprime.end());
  for (const auto& minor : maximal_minors_of_n(mat))
    if (!evaluate(minor, values).is_zero())
      fail(ErrorCode::NotOnHypersurface, "the point does not satisfy the minors of N");

  QMatrix n = evaluate_matrix(mat.n, values);
  std::vector<Rational> v = kernel_vector(n, 3, "inverse map");

  SourcePoint source;
  source.z = pt.z;
  source.t = {v[0], v[1]};

  std::vector<Rational> source_values = source.z;
  source_values.push_back(source.t[0]);
  source_values.push_back(source.t[1]);
  if (!evaluate(mat.f, source_values).is_zero())
    fail(ErrorCode::Internal, "inverse image does not satisfy the hypersurface equation");
  return source;
}

namespace {

bool in_cone(const std::array<std::array<int64_t, 2>, 2>& gens, const std::array<int64_t, 2>& u) {
  const auto& p = gens[0];
  const auto& q = gens[1];
  int64_t det = p[0] * q[1] - p[1] * q[0];
  if (det == 0) fail(ErrorCode::Internal, "degenerate cone generators");
  int64_t alpha = u[0] * q[1] - u[1] * q[0];  // det * coefficient of p
  int64_t beta = p[0] * u[1] - p[1] * u[0];   // det * coefficient of q
  if (det < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  return alpha >= 0 && beta >= 0;
}

}  // namespace

bool cone2_contains(const std::array<std::array<int64_t, 2>, 2>& outer,
                    const std::array<std::array<int64_t, 2>, 2>& inner) {
  return in_cone(outer, inner[0]) && in_cone(outer, inner[1]);
}

ConeReport cones(int32_t d, int32_t m) {
  if (m < 3) fail(ErrorCode::OutOfRange, "m must be at least 3");
  if (d < 1 || d > m)
    fail(ErrorCode::OutOfRange, "d must satisfy 1 <= d <= m, got d=" + std::to_string(d) +
                                    ", m=" + std::to_string(m));

  const std::array<int64_t, 2> h1{1, 0};
  const std::array<int64_t, 2> h2{0, 1};
  const std::array<int64_t, 2> h2_minus_h1{-1, 1};
  const std::array<std::array<int64_t, 2>, 2> wide{h1, h2_minus_h1};
  const std::array<std::array<int64_t, 2>, 2> quadrant{h1, h2};

  ConeReport r;
  r.d = d;
  r.m = m;
  std::string pd1 = "P^" + std::to_string(d - 1);
  if (d == 1) {
    r.case_id = 2;
    r.eff = wide;
    r.mov = quadrant;
    r.nef = quadrant;
    r.descriptors = {"divisorial contraction", "fibration onto P^1"};
  } else if (d == m) {
    r.case_id = 3;
    r.eff = wide;
    r.mov = wide;
    r.nef = wide;
    r.descriptors = {"fibration onto " + pd1, "fibration onto P^1"};
  } else {
    r.case_id = 1;
    r.eff = wide;
    r.mov = wide;
    r.nef = quadrant;
    r.descriptors = {"unique small Q-factorial modification", "fibration onto P^1",
                     "dominant rational fibration to " + pd1};
  }

  if (!cone2_contains(r.mov, r.nef) || !cone2_contains(r.eff, r.mov))
    fail(ErrorCode::Internal, "cone nesting violated");
  return r;
}

}  // namespace coxhyp
