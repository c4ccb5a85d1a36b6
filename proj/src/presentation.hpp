#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grading.hpp"
#include "groebner.hpp"

namespace coxhyp {

// The hypersurface equation in signed coefficient form,
//   f = f_0 T1^d - f_1 T1^(d-1) T2 + ... + (-1)^d f_d T2^d,
// with f_0..f_d in the Cox ring of Z. The signed convention is fixed; the
// unsigned coefficients c_i = (-1)^i f_i used by the degeneracy matrices are
// derived at that module's boundary.
struct CoxEquation {
  int32_t d = 0;
  std::array<std::string, 2> p1_names;   // the two P^1 Cox variables, in order
  std::vector<Polynomial> coefficients;  // f_0..f_d over the z-ring
};

// Structural validation only: d >= 1, d+1 coefficients, not all zero, and
// f_0, f_d not both zero. Homogeneity and equal degrees are hypotheses
// checked (and reported) by check_hypotheses, not construction errors.
CoxEquation make_cox_equation(int32_t d, const std::array<std::string, 2>& p1_names,
                              std::vector<Polynomial> coefficients, const GradedRing& z_ring);

// The Cox ring of P^1 x Z: z-variables followed by the two P^1 variables,
// graded by Z x Cl(Z) with the P^1 class first.
GradedRing product_ring(const GradedRing& z_ring, const std::array<std::string, 2>& p1_names);

// Reads the signed coefficients off a polynomial over the product ring:
// f_i = (-1)^i * (coefficient of T1^(d-i) T2^i). Reassembling the result
// returns f exactly.
CoxEquation expand_cox_equation(const Polynomial& f, const GradedRing& z_ring,
                                const std::array<std::string, 2>& p1_names);

// Sum (-1)^i f_i T1^(d-i) T2^i in the product ring.
Polynomial reassemble(const CoxEquation& eq, const GradedRing& z_ring);

// Stepwise regular-sequence certificate over ring/base: for each i,
// (<base, seq_0..seq_{i-1}> : seq_i) must equal <base, seq_0..seq_{i-1}>,
// and 1 must not lie in <base, seq>. Stops at the first failing step.
struct RegSeqStep {
  int32_t index = 0;
  std::string element;
  bool passed = false;
  std::string reason;                       // empty when passed
  std::vector<std::string> quotient_basis;  // reduced basis of the step quotient
};

struct RegSeqResult {
  bool passed = false;
  int32_t failed_index = -1;  // -1 when no step failed
  bool proper = false;        // 1 not in <base, seq>
  std::vector<RegSeqStep> steps;
};

RegSeqResult regular_sequence_check(const RingPtr& ring, const std::vector<Polynomial>& base,
                                    const std::vector<Polynomial>& seq,
                                    const BudgetPtr& budget = nullptr);

// The three hypotheses of the presentation theorem that cannot be decided
// from the ring presentation alone; recorded with provenance "user input".
struct AssertedFlags {
  std::optional<bool> cartier;
  std::optional<bool> normality_outside_p1_axes;
  std::optional<bool> class_group_pullback_iso;

  bool all_true() const {
    return cartier.value_or(false) && normality_outside_p1_axes.value_or(false) &&
           class_group_pullback_iso.value_or(false);
  }
};

struct HypothesisReport {
  bool equal_degrees = false;
  std::string equal_degrees_detail;
  std::optional<MultiDegree> common_degree;
  RegSeqResult regular_sequence;
  AssertedFlags flags;

  bool machine_verdict() const { return equal_degrees && regular_sequence.passed; }
};

HypothesisReport check_hypotheses(const CoxEquation& eq, const GradedRing& z_ring,
                                  const AssertedFlags& flags, const BudgetPtr& budget = nullptr);

// The presented Cox ring B/I: ambient variables z-vars, T1, T2, S_1..S_d;
// relations J together with
//   g_0 = f_0 + T2 S_1,
//   g_i = f_i + T1 S_i + T2 S_{i+1}   (1 <= i <= d-1),
//   g_d = f_d + T1 S_d,
// graded so that deg T1 = deg T2 = the P^1 class and
// deg S_i = deg f_i - deg T1.
struct PresentedCoxRing {
  GradedRing ambient;
  GradedRing z_ring;
  CoxEquation eq;
  int32_t num_z_vars = 0;
  std::array<int32_t, 2> p1_vars{};
  std::vector<int32_t> s_vars;
  std::vector<Polynomial> relations_j;  // J lifted to the ambient ring
  std::vector<Polynomial> relations_g;  // g_0..g_d
  MultiDegree s_degree;
};

// Requires that check_hypotheses passed its two machine-checkable items.
PresentedCoxRing build_presentation(const CoxEquation& eq, const GradedRing& z_ring);

}  // namespace coxhyp
