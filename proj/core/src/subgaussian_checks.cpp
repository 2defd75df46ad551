#include "radcomplex/subgaussian_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "radcomplex/estimator.hpp"

namespace radcomplex {

ComplexityEstimate expected_abs_combination(const Eigen::VectorXd& v,
                                            const SubgaussianDist& dist,
                                            const ExpectationEngine& engine) {
  const int dim = static_cast<int>(v.size());
  const bool enumerable = dist.kind() == DistKind::Rademacher &&
                          dim <= ExpectationEngine::kExactEnumBits;
  if (engine.method == Method::ExactEnum) {
    if (!enumerable) {
      throw std::invalid_argument(
          "expected_abs_combination: exact enumeration needs Rademacher "
          "coefficients in dimension <= 20");
    }
    return detail::enumerate_estimate(
        dim, Exactness::Exact,
        [&](const Eigen::VectorXd& signs) { return std::abs(signs.dot(v)); });
  }
  return detail::monte_carlo_estimate(
      engine, Exactness::Exact, [&, dim](std::uint64_t draw) {
        double total = 0.0;
        for (int k = 0; k < dim; ++k) {
          total += v[k] * dist.sample(engine.seed, draw,
                                      static_cast<std::uint64_t>(k));
        }
        return std::abs(total);
      });
}

VerificationReport khintchine_lower_check(const Eigen::VectorXd& v,
                                          const SubgaussianDist& dist,
                                          const ExpectationEngine& engine) {
  const double norm = v.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("khintchine_lower_check: zero vector");
  }
  ComplexityEstimate lhs;
  lhs.mean = norm;
  lhs.std_error = 0.0;
  lhs.draws = 0;
  lhs.method = Method::ExactEnum;
  lhs.exactness = Exactness::Exact;

  const ComplexityEstimate rhs = expected_abs_combination(v, dist, engine);
  const double constant = khintchine_constant(dist, ConstantMode::BestKnown).value;
  return make_verification_report(lhs, rhs, constant);
}

std::vector<PartialSumRow> partial_sum_convergence(
    const std::function<double(int)>& rule, std::span<const int> truncations,
    const SubgaussianDist& dist, const ExpectationEngine& engine) {
  int previous = 0;
  std::vector<PartialSumRow> rows;
  rows.reserve(truncations.size());
  for (const int truncation : truncations) {
    if (truncation < 1 || truncation <= previous) {
      throw std::invalid_argument(
          "partial_sum_convergence: truncations must be increasing and >= 1");
    }
    previous = truncation;
    Eigen::VectorXd tail(truncation);
    for (int k = 0; k < truncation; ++k) {
      tail[k] = rule(truncation + k + 1);  // indices K+1 .. 2K
    }
    PartialSumRow row;
    row.truncation = truncation;
    row.estimate = expected_abs_combination(tail, dist, engine);
    row.jensen_bound = std::sqrt(tail.squaredNorm());
    row.within_bound =
        row.estimate.mean <= row.jensen_bound + 3.0 * row.estimate.std_error;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace radcomplex
