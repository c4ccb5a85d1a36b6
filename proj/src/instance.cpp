#include "instance.hpp"

#include <json.hpp>

#include <set>

#include "errors.hpp"
#include "parser.hpp"

namespace coxhyp {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidInstance, msg); }

const json& expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where + " must be a JSON object");
  return j;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) bad(where + ": unknown key '" + key + "'");
}

int64_t expect_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  return j.get<int64_t>();
}

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

Rational expect_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<int64_t>())));
  if (j.is_string()) {
    try {
      return Rational::from_string(j.get<std::string>());
    } catch (const Error& e) {
      bad(where + ": " + e.what());
    }
  }
  bad(where + " must be an integer or a \"p/q\" string");
}

std::vector<Rational> expect_rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(expect_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

MultiDegree parse_degree(const json& j, const GradingGroup& group, const std::string& where) {
  expect_object(j, where);
  reject_unknown_keys(j, {"free", "torsion"}, where);
  if (!j.contains("free")) bad(where + " needs a 'free' array");
  const json& fr = j["free"];
  if (!fr.is_array()) bad(where + ".free must be an array");
  std::vector<int64_t> free;
  for (size_t i = 0; i < fr.size(); ++i)
    free.push_back(expect_int(fr[i], where + ".free[" + std::to_string(i) + "]"));
  std::vector<int64_t> torsion;
  if (j.contains("torsion")) {
    const json& tj = j["torsion"];
    if (!tj.is_array()) bad(where + ".torsion must be an array");
    if (tj.size() != group.torsion_moduli.size())
      bad(where + ".torsion must have one entry per torsion modulus");
    for (size_t i = 0; i < tj.size(); ++i) {
      std::string w = where + ".torsion[" + std::to_string(i) + "]";
      expect_object(tj[i], w);
      reject_unknown_keys(tj[i], {"mod", "val"}, w);
      if (!tj[i].contains("mod") || !tj[i].contains("val")) bad(w + " needs 'mod' and 'val'");
      int64_t mod = expect_int(tj[i]["mod"], w + ".mod");
      if (mod != group.torsion_moduli[i])
        bad(w + ".mod = " + std::to_string(mod) + " does not match the grading group modulus " +
            std::to_string(group.torsion_moduli[i]));
      torsion.push_back(expect_int(tj[i]["val"], w + ".val"));
    }
  }
  try {
    return MultiDegree(group, std::move(free), std::move(torsion));
  } catch (const Error& e) {
    bad(where + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SyntaxError, std::string("instance is not valid JSON: ") + e.what());
  }
  expect_object(doc, "instance");
  reject_unknown_keys(doc, {"schema", "ring", "equation", "asserted", "points"}, "instance");
  if (!doc.contains("schema") || expect_int(doc["schema"], "schema") != 1)
    bad("instance must declare \"schema\": 1");
  if (!doc.contains("ring")) bad("instance needs a 'ring' section");
  if (!doc.contains("equation")) bad("instance needs an 'equation' section");

  // ring section
  const json& ring = expect_object(doc["ring"], "ring");
  reject_unknown_keys(ring, {"grading", "variables", "relations"}, "ring");
  if (!ring.contains("grading")) bad("ring needs a 'grading' object");
  const json& grading = expect_object(ring["grading"], "ring.grading");
  reject_unknown_keys(grading, {"free_rank", "torsion_moduli"}, "ring.grading");
  GradingGroup group;
  if (!grading.contains("free_rank")) bad("ring.grading needs 'free_rank'");
  group.free_rank = static_cast<int32_t>(expect_int(grading["free_rank"], "ring.grading.free_rank"));
  if (group.free_rank != 1)
    bad("the divisor class group of Z must have free rank 1 (got free_rank = " +
        std::to_string(group.free_rank) + ")");
  if (grading.contains("torsion_moduli")) {
    const json& tm = grading["torsion_moduli"];
    if (!tm.is_array()) bad("ring.grading.torsion_moduli must be an array");
    for (size_t i = 0; i < tm.size(); ++i) {
      int64_t n = expect_int(tm[i], "ring.grading.torsion_moduli[" + std::to_string(i) + "]");
      if (n < 2) bad("torsion moduli must be >= 2");
      group.torsion_moduli.push_back(n);
    }
  }

  if (!ring.contains("variables") || !ring["variables"].is_array())
    bad("ring needs a 'variables' array");
  std::vector<std::string> z_names;
  std::vector<MultiDegree> z_degrees;
  std::vector<std::string> p1_names;
  for (size_t i = 0; i < ring["variables"].size(); ++i) {
    std::string where = "ring.variables[" + std::to_string(i) + "]";
    const json& v = expect_object(ring["variables"][i], where);
    reject_unknown_keys(v, {"name", "role", "degree"}, where);
    if (!v.contains("name") || !v.contains("role")) bad(where + " needs 'name' and 'role'");
    std::string name = expect_string(v["name"], where + ".name");
    if (!is_valid_identifier(name)) bad(where + ": '" + name + "' is not a valid identifier");
    std::string role = expect_string(v["role"], where + ".role");
    if (role == "z") {
      if (!v.contains("degree")) bad(where + ": z variables must declare a degree");
      z_names.push_back(name);
      z_degrees.push_back(parse_degree(v["degree"], group, where + ".degree"));
    } else if (role == "p1") {
      if (v.contains("degree"))
        bad(where + ": p1 variables carry the P^1 class implicitly; remove 'degree'");
      p1_names.push_back(name);
    } else {
      bad(where + ".role must be 'z' or 'p1'");
    }
  }
  if (z_names.empty()) bad("ring needs at least one z variable");
  if (p1_names.size() != 2) bad("ring needs exactly two p1 variables, got " +
                                std::to_string(p1_names.size()));

  Instance instance;
  instance.p1_names = {p1_names[0], p1_names[1]};

  RingPtr z_poly_ring;
  try {
    z_poly_ring = make_poly_ring(z_names);
  } catch (const Error& e) {
    bad(std::string("ring variables: ") + e.what());
  }

  std::vector<Polynomial> relations;
  if (ring.contains("relations")) {
    if (!ring["relations"].is_array()) bad("ring.relations must be an array");
    for (size_t i = 0; i < ring["relations"].size(); ++i) {
      std::string where = "ring.relations[" + std::to_string(i) + "]";
      std::string text = expect_string(ring["relations"][i], where);
      relations.push_back(parse_polynomial(text, z_poly_ring));
    }
  }
  try {
    instance.z_ring = make_graded_ring(z_poly_ring, group, std::move(z_degrees), std::move(relations));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotHomogeneous)
      bad(std::string("ring relation is not homogeneous: ") + e.what());
    throw;
  }

  // equation section
  const json& eqj = expect_object(doc["equation"], "equation");
  reject_unknown_keys(eqj, {"f", "d", "coefficients"}, "equation");
  bool has_f = eqj.contains("f");
  bool has_coeffs = eqj.contains("coefficients");
  if (has_f == has_coeffs)
    bad("equation needs exactly one of 'f' or 'coefficients'");
  if (has_f) {
    if (eqj.contains("d")) bad("equation.d is only valid with 'coefficients'");
    GradedRing product = product_ring(instance.z_ring, instance.p1_names);
    Polynomial f = parse_polynomial(expect_string(eqj["f"], "equation.f"), product.ring);
    instance.eq = expand_cox_equation(f, instance.z_ring, instance.p1_names);
  } else {
    const json& cj = eqj["coefficients"];
    if (!cj.is_array() || cj.empty()) bad("equation.coefficients must be a nonempty array");
    std::vector<Polynomial> coeffs;
    for (size_t i = 0; i < cj.size(); ++i)
      coeffs.push_back(parse_polynomial(
          expect_string(cj[i], "equation.coefficients[" + std::to_string(i) + "]"), z_poly_ring));
    int32_t d = static_cast<int32_t>(coeffs.size()) - 1;
    if (eqj.contains("d")) {
      int64_t declared = expect_int(eqj["d"], "equation.d");
      if (declared != d)
        bad("equation.d = " + std::to_string(declared) + " does not match " +
            std::to_string(coeffs.size()) + " coefficients");
    }
    instance.eq = make_cox_equation(d, instance.p1_names, std::move(coeffs), instance.z_ring);
  }

  // asserted flags
  if (doc.contains("asserted")) {
    const json& a = expect_object(doc["asserted"], "asserted");
    reject_unknown_keys(a, {"cartier", "normality_outside_p1_axes", "class_group_pullback_iso"},
                        "asserted");
    auto read_flag = [&](const char* key) -> std::optional<bool> {
      if (!a.contains(key)) return std::nullopt;
      if (!a[key].is_boolean()) bad(std::string("asserted.") + key + " must be a boolean");
      return a[key].get<bool>();
    };
    instance.flags.cartier = read_flag("cartier");
    instance.flags.normality_outside_p1_axes = read_flag("normality_outside_p1_axes");
    instance.flags.class_group_pullback_iso = read_flag("class_group_pullback_iso");
  }

  // points section
  if (doc.contains("points")) {
    if (!doc["points"].is_array()) bad("points must be an array");
    for (size_t i = 0; i < doc["points"].size(); ++i) {
      std::string where = "points[" + std::to_string(i) + "]";
      const json& pj = expect_object(doc["points"][i], where);
      instance.points.push_back(parse_point(pj.dump(), instance));
    }
  }
  return instance;
}

InstancePoint parse_point(const std::string& json_text, const Instance& instance) {
  json pj;
  try {
    pj = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SyntaxError, std::string("point is not valid JSON: ") + e.what());
  }
  expect_object(pj, "point");
  reject_unknown_keys(pj, {"z", "p1", "p1_image"}, "point");
  if (!pj.contains("z")) bad("point needs 'z' coordinates");

  InstancePoint pt;
  pt.z = expect_rational_array(pj["z"], "point.z");
  if (static_cast<int32_t>(pt.z.size()) != instance.z_ring.ring->nvars())
    bad("point.z has " + std::to_string(pt.z.size()) + " coordinates, expected " +
        std::to_string(instance.z_ring.ring->nvars()));
  if (pj.contains("p1")) {
    auto t = expect_rational_array(pj["p1"], "point.p1");
    if (t.size() != 2) bad("point.p1 must have exactly 2 coordinates");
    if (t[0].is_zero() && t[1].is_zero()) bad("point.p1 must not be (0, 0)");
    pt.p1 = std::array<Rational, 2>{t[0], t[1]};
  }
  if (pj.contains("p1_image")) {
    auto t = expect_rational_array(pj["p1_image"], "point.p1_image");
    if (static_cast<int32_t>(t.size()) != instance.eq.d)
      bad("point.p1_image must have d = " + std::to_string(instance.eq.d) + " coordinates");
    pt.p1_image = std::move(t);
  }
  return pt;
}

}  // namespace coxhyp
