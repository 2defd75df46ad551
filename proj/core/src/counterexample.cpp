#include "radcomplex/counterexample.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "radcomplex/estimator.hpp"
#include "radcomplex/parallel.hpp"

namespace radcomplex {

CounterexampleInstance counterexample_instance(int n) {
  if (n < 1) throw std::invalid_argument("counterexample: n must be >= 1");
  CounterexampleInstance instance;
  instance.n = n;
  instance.lhs = n / 2.0;
  instance.rhs = std::sqrt(static_cast<double>(n));
  instance.ratio = instance.lhs / instance.rhs;
  return instance;
}

std::optional<int> refute_conjecture(double candidate_k, int n_max) {
  if (!(candidate_k > 0.0)) {
    throw std::invalid_argument("refute_conjecture: constant must be > 0");
  }
  for (int n = 1; n <= n_max; ++n) {
    if (n / 2.0 > candidate_k * std::sqrt(static_cast<double>(n))) {
      return n;
    }
  }
  return std::nullopt;
}

CounterexampleCrosscheck counterexample_mc_crosscheck(
    int n, const ExpectationEngine& engine) {
  CounterexampleCrosscheck report;
  report.exact = counterexample_instance(n);
  const double root_n = report.exact.rhs;

  if (engine.method == Method::ExactEnum) {
    engine.require_enumerable(n);
    const std::uint64_t patterns = 1ULL << n;
    KahanSum acc;
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
      acc.add(static_cast<double>(std::popcount(pattern)));
    }
    report.lhs_estimate.mean = acc.value() / static_cast<double>(patterns);
    report.lhs_estimate.method = Method::ExactEnum;
    report.lhs_estimate.draws = static_cast<std::int64_t>(patterns);
    report.rhs_estimate = report.lhs_estimate;
    report.rhs_estimate.mean = root_n;  // every pattern attains sqrt(n)
    report.ok = std::abs(report.lhs_estimate.mean - report.exact.lhs) <= 1e-12 &&
                std::abs(report.rhs_estimate.mean - report.exact.rhs) <= 1e-12;
    return report;
  }

  report.lhs_estimate = detail::monte_carlo_estimate(
      engine, Exactness::Exact, [&, n](std::uint64_t draw) {
        int positives = 0;
        for (int i = 0; i < n; ++i) {
          if (rng::rademacher_sign(engine.seed, draw,
                                   static_cast<std::uint64_t>(i)) > 0.0) {
            ++positives;
          }
        }
        return static_cast<double>(positives);
      });
  report.rhs_estimate = detail::monte_carlo_estimate(
      engine, Exactness::Exact,
      [root_n](std::uint64_t) { return root_n; });
  report.ok =
      std::abs(report.lhs_estimate.mean - report.exact.lhs) <=
          3.0 * report.lhs_estimate.std_error &&
      std::abs(report.rhs_estimate.mean - report.exact.rhs) <= 1e-12;
  return report;
}

}  // namespace radcomplex
