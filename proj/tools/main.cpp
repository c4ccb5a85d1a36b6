// coxhyp command-line frontend. Thin by design: reads the instance file,
// drives the shared library through its C interface, prints the report, and
// exits with the library status (0 ok, 1 failed check, 2 input error,
// 3 resource limit).

#include <CLI11.hpp>
#include <coxhyp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct StringGuard {
  char* text = nullptr;
  ~StringGuard() { coxhyp_string_free(text); }
};

struct InstanceGuard {
  coxhyp_instance* handle = nullptr;
  ~InstanceGuard() { coxhyp_instance_free(handle); }
};

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error[InvalidArgument]: cannot open '" << path << "'\n";
    return COXHYP_INPUT_ERROR;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return COXHYP_OK;
}

int emit(int status, const char* text) {
  if (!text) return status;
  if (status >= COXHYP_INPUT_ERROR)
    std::cerr << text;
  else
    std::cout << text;
  return status;
}

int parse_instance_file(const std::string& path, InstanceGuard& instance) {
  std::string text;
  int status = read_file(path, text);
  if (status != COXHYP_OK) return status;
  StringGuard err;
  status = coxhyp_instance_parse(text.c_str(), &instance.handle, &err.text);
  if (status != COXHYP_OK && err.text) std::cerr << err.text;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cox rings of hypersurfaces in P^1 x Z: presentation builder, "
               "proof-step certificates, and birational-geometry reports"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  unsigned long long budget = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget,
                 "Cap on S-pair reductions per run (default 1000000)");

  std::string check_path, present_path, verify_path, map_path;
  auto* cmd_check = app.add_subcommand("check", "Verify the machine-checkable hypotheses");
  cmd_check->add_option("instance", check_path, "Instance file")->required();
  auto* cmd_present = app.add_subcommand("present", "Emit the presented Cox ring");
  cmd_present->add_option("instance", present_path, "Instance file")->required();
  auto* cmd_verify = app.add_subcommand("verify", "Run the full certificate suite");
  cmd_verify->add_option("instance", verify_path, "Instance file")->required();

  int cones_d = 0, cones_m = 0;
  auto* cmd_cones = app.add_subcommand("cones", "Report the Eff/Mov/Nef cones");
  cmd_cones->add_option("--d", cones_d, "Degree in the P^1 factor")->required();
  cmd_cones->add_option("--m", cones_m, "Dimension of Z (at least 3)")->required();

  bool map_forward = false, map_inverse = false;
  int map_point = 0;
  std::string map_point_json;
  auto* cmd_map = app.add_subcommand("map", "Evaluate the small-modification map at a point");
  cmd_map->add_option("instance", map_path, "Instance file")->required();
  cmd_map->add_flag("--forward", map_forward, "Map from Y to Y'");
  cmd_map->add_flag("--inverse", map_inverse, "Map from Y' back to Y");
  cmd_map->add_option("--point", map_point, "Index into the instance's points section");
  cmd_map->add_option("--point-json", map_point_json, "Inline point object");

  CLI11_PARSE(app, argc, argv);

  int fmt = format == "json" ? COXHYP_FORMAT_JSON : COXHYP_FORMAT_TEXT;

  if (cmd_cones->parsed()) {
    StringGuard out;
    int status = coxhyp_cones(cones_d, cones_m, fmt, &out.text);
    return emit(status, out.text);
  }

  if (cmd_check->parsed() || cmd_present->parsed() || cmd_verify->parsed()) {
    const std::string& path =
        cmd_check->parsed() ? check_path : (cmd_present->parsed() ? present_path : verify_path);
    InstanceGuard instance;
    int status = parse_instance_file(path, instance);
    if (status != COXHYP_OK) return status;
    StringGuard out;
    if (cmd_check->parsed())
      status = coxhyp_check(instance.handle, fmt, budget, &out.text);
    else if (cmd_present->parsed())
      status = coxhyp_present(instance.handle, fmt, budget, &out.text);
    else
      status = coxhyp_verify(instance.handle, fmt, budget, &out.text);
    return emit(status, out.text);
  }

  if (cmd_map->parsed()) {
    if (map_forward == map_inverse) {
      std::cerr << "error[InvalidArgument]: pass exactly one of --forward or --inverse\n";
      return COXHYP_INPUT_ERROR;
    }
    InstanceGuard instance;
    int status = parse_instance_file(map_path, instance);
    if (status != COXHYP_OK) return status;
    StringGuard out;
    status = coxhyp_map(instance.handle, map_forward ? COXHYP_DIR_FORWARD : COXHYP_DIR_INVERSE,
                        map_point, map_point_json.empty() ? nullptr : map_point_json.c_str(), fmt,
                        &out.text);
    return emit(status, out.text);
  }

  return COXHYP_INPUT_ERROR;
}
