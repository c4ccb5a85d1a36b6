#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace coxhyp {

// One instance document fully determines a run. Schema (version 1):
//
// {
//   "schema": 1,
//   "ring": {
//     "grading": {"free_rank": 1, "torsion_moduli": []},
//     "variables": [
//       {"name": "T1", "role": "z", "degree": {"free": [1], "torsion": []}},
//       ...,
//       {"name": "T6", "role": "p1"},
//       {"name": "T7", "role": "p1"}
//     ],
//     "relations": ["T1*T2 + T3*T4 + T5^2"]
//   },
//   "equation": {"f": "..."} or {"d": 2, "coefficients": ["...", ...]},
//   "asserted": {"cartier": true, "normality_outside_p1_axes": true,
//                "class_group_pullback_iso": true},
//   "points": [{"z": ["1", "-1", "1", "1", "0"], "p1": ["0", "1"]},
//              {"z": [...], "p1_image": ["-1", "-1"]}]
// }
//
// Roles partition the variables: "z" variables carry a degree over the
// declared grading group (free rank must be 1); the exactly two "p1"
// variables carry the P^1 class implicitly and must not declare a degree.
// Rational coordinates are integers or "p/q" strings. Unknown keys are
// rejected.
struct InstancePoint {
  std::vector<Rational> z;
  std::optional<std::array<Rational, 2>> p1;
  std::optional<std::vector<Rational>> p1_image;
};

struct Instance {
  GradedRing z_ring;
  std::array<std::string, 2> p1_names;
  CoxEquation eq;
  AssertedFlags flags;
  std::vector<InstancePoint> points;
};

// Errors: SyntaxError (JSON or polynomial text), UnknownVariable,
// InvalidInstance; equation-shape failures (DegreeZeroInP1, InvalidEquation,
// NotHomogeneous, ZeroPolynomial) propagate as mathematical failures.
Instance parse_instance(const std::string& json_text);

// Parses a standalone point object, validated against the instance.
InstancePoint parse_point(const std::string& json_text, const Instance& instance);

}  // namespace coxhyp
