#pragma once

#include <optional>

#include "radcomplex/engine.hpp"

namespace radcomplex {

// The orthonormal construction refuting the norm-form conjecture:
// x_i = e_i and the class is the operator unit ball with the Euclidean
// norm as loss. Both suprema are closed-form:
//   lhs = E sup_{||T|| <= 1} sum_i eps_i ||T x_i||       = n / 2,
//   rhs = E sup_{||T|| <= 1} || sum_i eps_i T x_i ||     = sqrt(n),
// so lhs / rhs = sqrt(n) / 2 is unbounded in n.
struct CounterexampleInstance {
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

CounterexampleInstance counterexample_instance(int n);

// Smallest n <= n_max with n/2 > candidate_k * sqrt(n) (that is,
// n > 4 candidate_k^2), or nullopt when n_max is too small.
std::optional<int> refute_conjecture(double candidate_k, int n_max);

// Reproduces both closed forms by averaging the per-pattern inner suprema
// (|{i : eps_i = +1}| and sqrt(n)) over sign patterns.
struct CounterexampleCrosscheck {
  CounterexampleInstance exact;
  ComplexityEstimate lhs_estimate;
  ComplexityEstimate rhs_estimate;
  bool ok = false;
};

CounterexampleCrosscheck counterexample_mc_crosscheck(
    int n, const ExpectationEngine& engine);

}  // namespace radcomplex
