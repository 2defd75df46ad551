#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "radcomplex/engine.hpp"
#include "radcomplex/report.hpp"

namespace radcomplex {

// E | sum_k v_k X_k | with X_k iid from dist: exact enumeration for
// Rademacher when dim(v) <= 20, Monte Carlo otherwise.
ComplexityEstimate expected_abs_combination(const Eigen::VectorXd& v,
                                            const SubgaussianDist& dist,
                                            const ExpectationEngine& engine);

// Checks ||v|| <= C * E|sum_k X_k v_k| with the distribution's Khintchine
// constant. lhs of the report is ||v|| (exact), rhs the expectation
// estimate.
VerificationReport khintchine_lower_check(const Eigen::VectorXd& v,
                                          const SubgaussianDist& dist,
                                          const ExpectationEngine& engine);

struct PartialSumRow {
  int truncation = 0;               // K
  ComplexityEstimate estimate;      // E | sum_{K < k <= 2K} v_k X_k |
  double jensen_bound = 0.0;        // sqrt(sum of tail v_k^2)
  bool within_bound = false;        // estimate <= bound + 3 se
};

// Tail increments E|Y_{2K} - Y_K| for a square-summable coefficient rule
// (1-based index -> coefficient), one row per requested truncation.
std::vector<PartialSumRow> partial_sum_convergence(
    const std::function<double(int)>& rule, std::span<const int> truncations,
    const SubgaussianDist& dist, const ExpectationEngine& engine);

}  // namespace radcomplex
