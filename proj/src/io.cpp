#include "io.hpp"

#include <sstream>

namespace coxhyp {

using nlohmann::ordered_json;

ordered_json degree_to_json(const MultiDegree& d) {
  ordered_json j;
  j["free"] = d.free_part();
  j["torsion"] = ordered_json::array();
  for (size_t i = 0; i < d.torsion_part().size(); ++i) {
    ordered_json t;
    t["mod"] = d.group().torsion_moduli[i];
    t["val"] = d.torsion_part()[i];
    j["torsion"].push_back(std::move(t));
  }
  return j;
}

namespace {

const char* var_role(const PresentedCoxRing& p, int32_t v) {
  if (v < p.num_z_vars) return "z";
  if (v == p.p1_vars[0] || v == p.p1_vars[1]) return "p1";
  return "s";
}

}  // namespace

ordered_json presentation_to_json(const PresentedCoxRing& p) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json group;
  group["free_rank"] = p.ambient.group.free_rank;
  group["torsion_moduli"] = p.ambient.group.torsion_moduli;
  j["grading_group"] = std::move(group);
  j["variables"] = ordered_json::array();
  for (int32_t v = 0; v < p.ambient.ring->nvars(); ++v) {
    ordered_json vj;
    vj["name"] = p.ambient.ring->var_name(v);
    vj["role"] = var_role(p, v);
    vj["degree"] = degree_to_json(p.ambient.var_degree(v));
    j["variables"].push_back(std::move(vj));
  }
  j["relations"] = ordered_json::array();
  for (const auto& rel : p.ambient.relations) j["relations"].push_back(rel.str());
  return j;
}

std::string presentation_to_text(const PresentedCoxRing& p) {
  std::ostringstream out;
  out << "Cox ring presentation\n";
  out << "  grading group: " << p.ambient.group.str() << "\n";
  out << "  variables:\n";
  for (int32_t v = 0; v < p.ambient.ring->nvars(); ++v)
    out << "    " << p.ambient.ring->var_name(v) << "  deg " << p.ambient.var_degree(v).str()
        << "  [" << var_role(p, v) << "]\n";
  out << "  relations:\n";
  for (const auto& rel : p.ambient.relations) out << "    " << rel.str() << "\n";
  return out.str();
}

namespace {

ordered_json flags_to_json(const AssertedFlags& flags) {
  auto one = [](const std::optional<bool>& f) {
    ordered_json j;
    j["asserted"] = f.has_value();
    if (f) j["value"] = *f;
    j["provenance"] = "user input";
    return j;
  };
  ordered_json j;
  j["cartier"] = one(flags.cartier);
  j["normality_outside_p1_axes"] = one(flags.normality_outside_p1_axes);
  j["class_group_pullback_iso"] = one(flags.class_group_pullback_iso);
  return j;
}

ordered_json regseq_to_json(const RegSeqResult& r) {
  ordered_json j;
  j["passed"] = r.passed;
  j["proper_ideal"] = r.proper;
  if (r.failed_index >= 0) j["failed_index"] = r.failed_index;
  j["steps"] = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json sj;
    sj["index"] = s.index;
    sj["element"] = s.element;
    sj["passed"] = s.passed;
    if (!s.reason.empty()) sj["reason"] = s.reason;
    sj["quotient_basis"] = s.quotient_basis;
    j["steps"].push_back(std::move(sj));
  }
  return j;
}

void regseq_to_text(std::ostringstream& out, const RegSeqResult& r) {
  out << "  regular sequence: " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& s : r.steps) {
    out << "    step " << s.index << ": " << s.element << "  "
        << (s.passed ? "regular" : "FAILED") << "\n";
    if (!s.reason.empty()) out << "      " << s.reason << "\n";
  }
  out << "    proper ideal: " << (r.proper ? "yes" : "no") << "\n";
}

}  // namespace

ordered_json hypothesis_report_to_json(const HypothesisReport& r) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json eq;
  eq["passed"] = r.equal_degrees;
  eq["detail"] = r.equal_degrees_detail;
  if (r.common_degree) eq["common_degree"] = degree_to_json(*r.common_degree);
  j["equal_degrees"] = std::move(eq);
  j["regular_sequence"] = regseq_to_json(r.regular_sequence);
  j["asserted"] = flags_to_json(r.flags);
  j["verdict"] = r.machine_verdict();
  return j;
}

std::string hypothesis_report_to_text(const HypothesisReport& r) {
  std::ostringstream out;
  out << "Hypothesis report\n";
  out << "  equal degrees: " << (r.equal_degrees ? "PASS" : "FAIL");
  if (!r.equal_degrees_detail.empty()) out << "  (" << r.equal_degrees_detail << ")";
  out << "\n";
  regseq_to_text(out, r.regular_sequence);
  auto flag = [&](const char* name, const std::optional<bool>& f) {
    out << "  " << name << ": ";
    if (!f)
      out << "not asserted";
    else
      out << (*f ? "asserted true" : "asserted false") << " (user input)";
    out << "\n";
  };
  flag("cartier", r.flags.cartier);
  flag("normality outside V(T1,T2)", r.flags.normality_outside_p1_axes);
  flag("class group pullback isomorphism", r.flags.class_group_pullback_iso);
  out << "  verdict: " << (r.machine_verdict() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

ordered_json bundle_to_json(const CertificateBundle& b) {
  ordered_json j;
  j["schema"] = 1;
  j["hypotheses"] = hypothesis_report_to_json(b.hypotheses);
  j["certificates"] = ordered_json::array();
  for (const auto& c : b.certificates) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.verdict;
    cj["steps"] = c.steps;
    cj["witness"] = c.witness;
    j["certificates"].push_back(std::move(cj));
  }
  j["machine_verdict"] = b.machine_verdict;
  j["all_flags_asserted"] = b.all_flags_asserted;
  if (!b.all_flags_asserted) j["note"] = "hypotheses not asserted";
  return j;
}

std::string bundle_to_text(const CertificateBundle& b) {
  std::ostringstream out;
  out << "Certificate bundle\n";
  out << hypothesis_report_to_text(b.hypotheses);
  out << "  checks:\n";
  for (const auto& c : b.certificates)
    out << "    " << c.name << ": " << (c.verdict ? "PASS" : "FAIL") << "  (" << c.steps
        << " steps)\n";
  out << "  machine verdict: " << (b.machine_verdict ? "PASS" : "FAIL") << "\n";
  if (!b.all_flags_asserted) out << "  note: hypotheses not asserted\n";
  return out.str();
}

ordered_json cone_report_to_json(const ConeReport& r) {
  auto gens = [](const std::array<std::array<int64_t, 2>, 2>& g) {
    ordered_json j = ordered_json::array();
    j.push_back(ordered_json::array({g[0][0], g[0][1]}));
    j.push_back(ordered_json::array({g[1][0], g[1][1]}));
    return j;
  };
  ordered_json j;
  j["schema"] = 1;
  j["d"] = r.d;
  j["m"] = r.m;
  j["case"] = r.case_id;
  j["eff"] = gens(r.eff);
  j["mov"] = gens(r.mov);
  j["nef"] = gens(r.nef);
  j["descriptors"] = r.descriptors;
  return j;
}

std::string cone_report_to_text(const ConeReport& r) {
  auto gens = [](const std::array<std::array<int64_t, 2>, 2>& g) {
    std::ostringstream s;
    s << "cone[(" << g[0][0] << ", " << g[0][1] << "), (" << g[1][0] << ", " << g[1][1] << ")]";
    return s.str();
  };
  std::ostringstream out;
  const char* label = r.case_id == 1 ? "1 < d < m" : (r.case_id == 2 ? "d = 1" : "d = m");
  out << "Cone report (d = " << r.d << ", m = " << r.m << ", case " << r.case_id << ": " << label
      << ")\n";
  out << "  basis: (H1, H2)\n";
  out << "  Eff(Y) = " << gens(r.eff) << "\n";
  out << "  Mov(Y) = " << gens(r.mov) << "\n";
  out << "  Nef(Y) = " << gens(r.nef) << "\n";
  out << "  structure:\n";
  for (const auto& s : r.descriptors) out << "    " << s << "\n";
  return out.str();
}

namespace {

ordered_json rationals_to_json(const std::vector<Rational>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

std::string rationals_to_text(const std::vector<Rational>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

}  // namespace

ordered_json map_result_to_json(bool forward, const SourcePoint& source,
                                const ImagePoint& image) {
  ordered_json j;
  j["schema"] = 1;
  j["direction"] = forward ? "forward" : "inverse";
  ordered_json src;
  src["z"] = rationals_to_json(source.z);
  src["p1"] = rationals_to_json({source.t[0], source.t[1]});
  ordered_json img;
  img["z"] = rationals_to_json(image.z);
  img["p1_image"] = rationals_to_json(image.tprime);
  if (forward) {
    j["source"] = std::move(src);
    j["image"] = std::move(img);
  } else {
    j["source"] = std::move(img);
    j["image"] = std::move(src);
  }
  return j;
}

std::string map_result_to_text(bool forward, const SourcePoint& source, const ImagePoint& image) {
  std::ostringstream out;
  std::string t = "(" + source.t[0].str() + " : " + source.t[1].str() + ")";
  std::string tp = "(" + rationals_to_text(image.tprime, " : ") + ")";
  std::string z = "(" + rationals_to_text(source.z, ", ") + ")";
  if (forward)
    out << "forward: " << t << " x z -> " << tp << " x z,  z = " << z << "\n";
  else
    out << "inverse: " << tp << " x z -> " << t << " x z,  z = " << z << "\n";
  return out.str();
}

}  // namespace coxhyp
