#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>

#include "radcomplex/classes.hpp"
#include "radcomplex/engine.hpp"

namespace radcomplex {

// E_sigma max_s sum_i sigma_i values(s, i) over all 2^n Rademacher
// vectors, n = values.cols() <= 20. Gray-code enumeration with
// compensated summation.
double exact_sign_expectation_of_max(const Eigen::MatrixXd& values);

// E sup_f sum_i eps_i h_i(f(x_i)) with Rademacher signs (the noise law of
// the engine does not apply to this side).
ComplexityEstimate complexity_scalar(const FunctionClass& cls,
                                     std::span<const LipschitzLoss> losses,
                                     const ExpectationEngine& engine);

// E sup_f sum_{i,k} X_{ik} f_k(x_i) with X drawn iid from engine.dist.
ComplexityEstimate complexity_vector(const FunctionClass& cls,
                                     const ExpectationEngine& engine);

// E || sum_i eps_i x_i ||.
ComplexityEstimate rademacher_sum_norm(const Sample& sample,
                                       const ExpectationEngine& engine);

namespace detail {

// Deterministic Monte Carlo average of value(draw): per-draw results are
// stored and reduced in draw order, so the estimate is independent of the
// thread count. `threads` overrides the process budget (tests only).
ComplexityEstimate monte_carlo_estimate(
    const ExpectationEngine& engine, Exactness exactness,
    const std::function<double(std::uint64_t)>& value, int threads = -1);

// Enumeration average of value(signs) over all 2^bits Rademacher
// patterns (generic path; no Gray-code speedup).
ComplexityEstimate enumerate_estimate(
    int bits, Exactness exactness,
    const std::function<double(const Eigen::VectorXd&)>& value);

}  // namespace detail

}  // namespace radcomplex
