#include "pipeline.hpp"

#include "errors.hpp"
#include "io.hpp"

namespace coxhyp {

namespace {

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

RunResult error_result(const Error& e, Format format) {
  return RunResult{exit_class(e.code()), render_error(e, format), true};
}

BudgetPtr budget_for(uint64_t limit) {
  return make_budget(limit == 0 ? Budget::kDefaultLimit : limit);
}

}  // namespace

std::string render_error(const Error& e, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["error"] = nlohmann::ordered_json::object();
    j["error"]["code"] = error_code_name(e.code());
    j["error"]["message"] = e.what();
    j["error"]["exit"] = exit_class(e.code());
    return dump(j);
  }
  return std::string("error[") + error_code_name(e.code()) + "]: " + e.what() + "\n";
}

RunResult run_check(const Instance& instance, Format format, uint64_t budget_limit) {
  try {
    HypothesisReport report =
        check_hypotheses(instance.eq, instance.z_ring, instance.flags, budget_for(budget_limit));
    std::string out = format == Format::Json ? dump(hypothesis_report_to_json(report))
                                             : hypothesis_report_to_text(report);
    return RunResult{report.machine_verdict() ? 0 : 1, std::move(out), false};
  } catch (const Error& e) {
    return error_result(e, format);
  }
}

RunResult run_present(const Instance& instance, Format format, uint64_t budget_limit) {
  try {
    HypothesisReport report =
        check_hypotheses(instance.eq, instance.z_ring, instance.flags, budget_for(budget_limit));
    if (!report.machine_verdict()) {
      // No partial dump: report the failing hypotheses instead.
      std::string out = format == Format::Json ? dump(hypothesis_report_to_json(report))
                                               : hypothesis_report_to_text(report);
      return RunResult{1, std::move(out), false};
    }
    PresentedCoxRing p = build_presentation(instance.eq, instance.z_ring);
    std::string out =
        format == Format::Json ? dump(presentation_to_json(p)) : presentation_to_text(p);
    return RunResult{0, std::move(out), false};
  } catch (const Error& e) {
    return error_result(e, format);
  }
}

RunResult run_verify(const Instance& instance, Format format, uint64_t budget_limit) {
  try {
    BudgetPtr budget = budget_for(budget_limit);
    HypothesisReport report = check_hypotheses(instance.eq, instance.z_ring, instance.flags, budget);
    if (!report.machine_verdict()) {
      std::string out = format == Format::Json ? dump(hypothesis_report_to_json(report))
                                               : hypothesis_report_to_text(report);
      return RunResult{1, std::move(out), false};
    }
    PresentedCoxRing p = build_presentation(instance.eq, instance.z_ring);
    GradedRing target = target_ring(instance.eq, instance.z_ring);
    CertificateBundle bundle = full_certificate(p, target, report, budget);
    std::string out =
        format == Format::Json ? dump(bundle_to_json(bundle)) : bundle_to_text(bundle);
    return RunResult{bundle.machine_verdict ? 0 : 1, std::move(out), false};
  } catch (const Error& e) {
    return error_result(e, format);
  }
}

RunResult run_cones(int32_t d, int32_t m, Format format) {
  try {
    ConeReport r = cones(d, m);
    std::string out = format == Format::Json ? dump(cone_report_to_json(r)) : cone_report_to_text(r);
    return RunResult{0, std::move(out), false};
  } catch (const Error& e) {
    return error_result(e, format);
  }
}

RunResult run_map(const Instance& instance, bool forward, int32_t point_index,
                  const std::string* point_json, Format format) {
  try {
    InstancePoint pt;
    if (point_json) {
      pt = parse_point(*point_json, instance);
    } else {
      if (point_index < 0 || point_index >= static_cast<int32_t>(instance.points.size()))
        fail(ErrorCode::InvalidArgument,
             "point index " + std::to_string(point_index) + " out of range; the instance has " +
                 std::to_string(instance.points.size()) + " points");
      pt = instance.points[point_index];
    }

    DegeneracyMatrices mat = build_matrices(instance.eq, instance.z_ring);
    SourcePoint source;
    ImagePoint image;
    if (forward) {
      if (!pt.p1)
        fail(ErrorCode::InvalidArgument, "the forward map needs 'p1' coordinates on the point");
      source.z = pt.z;
      source.t = *pt.p1;
      image = forward_map(mat, source);
    } else {
      if (!pt.p1_image)
        fail(ErrorCode::InvalidArgument,
             "the inverse map needs 'p1_image' coordinates on the point");
      image.z = pt.z;
      image.tprime = *pt.p1_image;
      source = inverse_map(mat, image);
    }
    std::string out = format == Format::Json
                          ? dump(map_result_to_json(forward, source, image))
                          : map_result_to_text(forward, source, image);
    return RunResult{0, std::move(out), false};
  } catch (const Error& e) {
    return error_result(e, format);
  }
}

}  // namespace coxhyp
