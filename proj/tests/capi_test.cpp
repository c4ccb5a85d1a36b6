#include <doctest.h>

#include <coxhyp.h>

#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Owned {
  char* text = nullptr;
  ~Owned() { coxhyp_string_free(text); }
};

struct Handle {
  coxhyp_instance* h = nullptr;
  ~Handle() { coxhyp_instance_free(h); }
};

}  // namespace

TEST_SUITE("c api") {
  TEST_CASE("lifecycle and status names") {
    CHECK(std::string(coxhyp_version()) == "0.1.0");
    CHECK(std::string(coxhyp_status_name(COXHYP_OK)) == "ok");
    CHECK(std::string(coxhyp_status_name(COXHYP_RESOURCE_LIMIT)) == "resource-limit");

    Handle inst;
    Owned err;
    std::string text = slurp(std::string(COXHYP_INSTANCE_DIR) + "/golden_quadric.json");
    REQUIRE(coxhyp_instance_parse(text.c_str(), &inst.h, &err.text) == COXHYP_OK);
    REQUIRE(inst.h != nullptr);
    CHECK(err.text == nullptr);

    Owned out;
    CHECK(coxhyp_check(inst.h, COXHYP_FORMAT_TEXT, 0, &out.text) == COXHYP_OK);
    CHECK(std::string(out.text).find("PASS") != std::string::npos);

    Owned present;
    CHECK(coxhyp_present(inst.h, COXHYP_FORMAT_JSON, 0, &present.text) == COXHYP_OK);
    CHECK(std::string(present.text).find("\"S2\"") != std::string::npos);

    Owned cones;
    CHECK(coxhyp_cones(2, 3, COXHYP_FORMAT_TEXT, &cones.text) == COXHYP_OK);
    CHECK(std::string(cones.text).find("unique small Q-factorial modification") !=
          std::string::npos);
    Owned cones_bad;
    CHECK(coxhyp_cones(4, 3, COXHYP_FORMAT_TEXT, &cones_bad.text) == COXHYP_FAIL);

    Owned mapped;
    CHECK(coxhyp_map(inst.h, COXHYP_DIR_FORWARD, 0, nullptr, COXHYP_FORMAT_TEXT, &mapped.text) ==
          COXHYP_OK);
    CHECK(std::string(mapped.text).find("(-1 : -1)") != std::string::npos);

    Owned inline_pt;
    const char* pt = R"({"z": ["1", "0", "1", "0", "0"], "p1": ["0", "1"]})";
    CHECK(coxhyp_map(inst.h, COXHYP_DIR_FORWARD, 0, pt, COXHYP_FORMAT_TEXT, &inline_pt.text) ==
          COXHYP_OK);
    CHECK(std::string(inline_pt.text).find("(-1 : 0)") != std::string::npos);
  }

  TEST_CASE("error paths") {
    Handle bad;
    Owned err;
    CHECK(coxhyp_instance_parse("{", &bad.h, &err.text) == COXHYP_INPUT_ERROR);
    CHECK(bad.h == nullptr);
    REQUIRE(err.text != nullptr);
    CHECK(std::string(err.text).find("JSON") != std::string::npos);

    CHECK(coxhyp_instance_parse(nullptr, &bad.h, nullptr) == COXHYP_INPUT_ERROR);
    CHECK(coxhyp_check(nullptr, COXHYP_FORMAT_TEXT, 0, nullptr) == COXHYP_INPUT_ERROR);
    coxhyp_instance_free(nullptr);  // harmless
    coxhyp_string_free(nullptr);

    // budget exhaustion surfaces as the resource status
    Handle inst;
    std::string text = slurp(std::string(COXHYP_INSTANCE_DIR) + "/golden_quadric.json");
    REQUIRE(coxhyp_instance_parse(text.c_str(), &inst.h, nullptr) == COXHYP_OK);
    Owned out;
    CHECK(coxhyp_verify(inst.h, COXHYP_FORMAT_TEXT, 5, &out.text) == COXHYP_RESOURCE_LIMIT);
  }
}
