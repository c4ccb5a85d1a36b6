#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "instance.hpp"

namespace coxhyp {

enum class Format { Text, Json };

// status: 0 success, 1 mathematical failure, 2 input error, 3 resource limit.
// `output` is the rendered report, or an error message when is_error is set.
struct RunResult {
  int status = 0;
  std::string output;
  bool is_error = false;
};

RunResult run_check(const Instance& instance, Format format, uint64_t budget_limit);
RunResult run_present(const Instance& instance, Format format, uint64_t budget_limit);
RunResult run_verify(const Instance& instance, Format format, uint64_t budget_limit);
RunResult run_cones(int32_t d, int32_t m, Format format);
RunResult run_map(const Instance& instance, bool forward, int32_t point_index,
                  const std::string* point_json, Format format);

std::string render_error(const Error& e, Format format);

}  // namespace coxhyp
