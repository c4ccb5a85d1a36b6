#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace coxhyp {

enum class P1Side { T1, T2 };

// One machine check with a reproducible witness. Serialization carries the
// deterministic step count, never wall-clock time, so certificates for the
// same input are byte-identical across runs.
struct Certificate {
  std::string name;
  bool verdict = false;
  uint64_t steps = 0;  // S-pair reductions consumed by this check
  nlohmann::ordered_json witness;
};

// The hypersurface coordinate ring A = R[T1,T2]/<J, f>.
GradedRing target_ring(const CoxEquation& eq, const GradedRing& z_ring);

// Stepwise quotient test for the sequence T1, T2, g_0..g_d in B modulo J.
Certificate verify_regular_sequence_in_B(const PresentedCoxRing& p,
                                         const BudgetPtr& budget = nullptr);

// Cleared-denominator assignments eliminating the S variables after
// inverting one P^1 coordinate. For side T2 these are
//   Shat_1 = -f_0,  Shat_{i+1} = -(f_i T2^i + T1 Shat_i),
// with S_i = Shat_i / T2^i; mirrored for side T1 starting from
// Shat'_d = -f_d with S_i = Shat'_i / T1^(d-i+1). Returned over the product
// ring, index i-1 holding the assignment for S_i.
std::vector<Polynomial> elimination_assignments(const CoxEquation& eq, const GradedRing& z_ring,
                                                P1Side side);

// Exact polynomial identities behind "the last relation becomes
// (-1)^d f / T2^d" (and f / T1^d on the other side), checked on both sides
// against the stored relations with denominators cleared. Any tampering
// with the relation polynomials fails this certificate.
Certificate verify_elimination_identity(const PresentedCoxRing& p);

// Certifies that inverting the chosen P^1 coordinate collapses the
// presentation onto the hypersurface ring:
//   eliminate(saturate(<J, g_0..g_d>, T), S-vars) == saturate(<J, f>, T).
Certificate verify_localization(const PresentedCoxRing& p, const GradedRing& target, P1Side side,
                                const BudgetPtr& budget = nullptr);

struct CertificateBundle {
  HypothesisReport hypotheses;
  std::vector<Certificate> certificates;
  bool machine_verdict = false;     // hypotheses' machine items and all certificates
  bool all_flags_asserted = false;  // every user flag present and true
};

CertificateBundle full_certificate(const PresentedCoxRing& p, const GradedRing& target,
                                   const HypothesisReport& hypotheses,
                                   const BudgetPtr& budget = nullptr);

}  // namespace coxhyp
