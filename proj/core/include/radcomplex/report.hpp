#pragma once

#include <string>

#include "radcomplex/engine.hpp"

namespace radcomplex {

enum class Verdict { Holds, HoldsWithinTolerance, Violated, Inconclusive };
enum class VerdictMode { Exact, Statistical };

const char* to_string(Verdict verdict);

// Outcome of checking lhs <= constant * rhs for one inequality instance.
struct VerificationReport {
  ComplexityEstimate lhs;
  ComplexityEstimate rhs;
  double constant = 1.0;  // multiplier applied to rhs.mean
  double margin = 0.0;    // constant * rhs.mean - lhs.mean
  Verdict verdict = Verdict::Inconclusive;
  VerdictMode mode = VerdictMode::Statistical;
};

// Verdict rules: exact mode (both sides enumerated) uses tolerance 1e-9;
// statistical mode allows 3 standard errors on each side. VIOLATED is
// emitted only when both sup oracles are exact, since an
// under-approximated side cannot certify a counterexample. When
// rhs_prescaled is set the constant is already folded into rhs.mean and
// is echoed for reporting only.
VerificationReport make_verification_report(const ComplexityEstimate& lhs,
                                            const ComplexityEstimate& rhs,
                                            double constant,
                                            bool rhs_prescaled = false);

}  // namespace radcomplex
