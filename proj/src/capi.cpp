#include "coxhyp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>

#include "errors.hpp"
#include "instance.hpp"
#include "pipeline.hpp"

using coxhyp::Format;
using coxhyp::Instance;
using coxhyp::RunResult;

struct coxhyp_instance {
  Instance instance;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

Format to_format(int format) { return format == COXHYP_FORMAT_JSON ? Format::Json : Format::Text; }

int finish(const RunResult& r, char** out) {
  set_out(out, r.output);
  return r.status;
}

int unexpected(char** out, const char* what) {
  set_out(out, std::string("error[Internal]: ") + what + "\n");
  return COXHYP_FAIL;
}

}  // namespace

extern "C" {

const char* coxhyp_version(void) { return "0.1.0"; }

const char* coxhyp_status_name(int status) {
  switch (status) {
    case COXHYP_OK: return "ok";
    case COXHYP_FAIL: return "check-failed";
    case COXHYP_INPUT_ERROR: return "input-error";
    case COXHYP_RESOURCE_LIMIT: return "resource-limit";
    default: return "unknown";
  }
}

int coxhyp_instance_parse(const char* json_text, coxhyp_instance** out, char** error_message) {
  if (error_message) *error_message = nullptr;
  if (!out) return COXHYP_INPUT_ERROR;
  *out = nullptr;
  if (!json_text) {
    if (error_message) *error_message = dup_string("error[InvalidArgument]: null instance text\n");
    return COXHYP_INPUT_ERROR;
  }
  try {
    auto handle = new coxhyp_instance{coxhyp::parse_instance(json_text)};
    *out = handle;
    return COXHYP_OK;
  } catch (const coxhyp::Error& e) {
    if (error_message) *error_message = dup_string(coxhyp::render_error(e, Format::Text));
    return coxhyp::exit_class(e.code());
  } catch (const std::exception& e) {
    if (error_message)
      *error_message = dup_string(std::string("error[Internal]: ") + e.what() + "\n");
    return COXHYP_FAIL;
  }
}

void coxhyp_instance_free(coxhyp_instance* instance) { delete instance; }

int coxhyp_check(const coxhyp_instance* instance, int format, unsigned long long budget,
                 char** out) {
  if (!instance) return COXHYP_INPUT_ERROR;
  try {
    return finish(coxhyp::run_check(instance->instance, to_format(format), budget), out);
  } catch (const std::exception& e) {
    return unexpected(out, e.what());
  }
}

int coxhyp_present(const coxhyp_instance* instance, int format, unsigned long long budget,
                   char** out) {
  if (!instance) return COXHYP_INPUT_ERROR;
  try {
    return finish(coxhyp::run_present(instance->instance, to_format(format), budget), out);
  } catch (const std::exception& e) {
    return unexpected(out, e.what());
  }
}

int coxhyp_verify(const coxhyp_instance* instance, int format, unsigned long long budget,
                  char** out) {
  if (!instance) return COXHYP_INPUT_ERROR;
  try {
    return finish(coxhyp::run_verify(instance->instance, to_format(format), budget), out);
  } catch (const std::exception& e) {
    return unexpected(out, e.what());
  }
}

int coxhyp_cones(int d, int m, int format, char** out) {
  try {
    return finish(coxhyp::run_cones(d, m, to_format(format)), out);
  } catch (const std::exception& e) {
    return unexpected(out, e.what());
  }
}

int coxhyp_map(const coxhyp_instance* instance, int direction, int point_index,
               const char* point_json, int format, char** out) {
  if (!instance) return COXHYP_INPUT_ERROR;
  try {
    std::string point_text;
    const std::string* point_ptr = nullptr;
    if (point_json) {
      point_text = point_json;
      point_ptr = &point_text;
    }
    return finish(coxhyp::run_map(instance->instance, direction == COXHYP_DIR_FORWARD, point_index,
                                  point_ptr, to_format(format)),
                  out);
  } catch (const std::exception& e) {
    return unexpected(out, e.what());
  }
}

void coxhyp_string_free(char* text) { std::free(text); }

}  // extern "C"
