#include "radcomplex/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "radcomplex/estimator.hpp"
#include "radcomplex/parallel.hpp"

namespace radcomplex {

BoundResult theorem1_bound(double empirical_mean, double complexity, int n,
                           double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("theorem1_bound: delta must be in (0,1)");
  }
  if (n < 1) throw std::invalid_argument("theorem1_bound: n must be >= 1");
  if (complexity < 0.0) {
    throw std::invalid_argument("theorem1_bound: complexity must be >= 0");
  }
  BoundResult result;
  result.value = empirical_mean + 2.0 * complexity / n +
                 std::sqrt(9.0 * std::log(2.0 / delta) / (2.0 * n));
  result.formula = "theorem1";
  result.dominated = "E f(X), uniformly over the class";
  return result;
}

BoundResult kmeans_bound(int centers, int n) {
  if (centers < 1) throw std::invalid_argument("kmeans_bound: K must be >= 1");
  if (n < 1) throw std::invalid_argument("kmeans_bound: n must be >= 1");
  BoundResult result;
  result.value = 3.0 * std::sqrt(2.0) * centers * std::sqrt(n);
  result.formula = "kmeans-3sqrt2-K-sqrtn";
  result.dominated = "K-means Rademacher average on unit-ball samples";
  return result;
}

BoundResult frobenius_bound(double radius, const Sample& sample,
                            int output_dim) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("frobenius_bound: radius must be > 0");
  }
  if (output_dim < 1) {
    throw std::invalid_argument("frobenius_bound: output_dim must be >= 1");
  }
  BoundResult result;
  result.value =
      radius * std::sqrt(output_dim * sample.points().squaredNorm());
  result.formula = "frobenius-dual";
  result.dominated = "vector complexity of the Frobenius-ball linear class";
  return result;
}

BoundResult operator_kernel_bound(double lipschitz, double radius,
                                  std::span<const double> traces) {
  if (lipschitz < 0.0 || radius < 0.0) {
    throw std::invalid_argument("operator_kernel_bound: negative parameter");
  }
  double total = 0.0;
  for (const double trace : traces) {
    if (trace < 0.0) {
      throw std::invalid_argument("operator_kernel_bound: negative trace");
    }
    total += trace;
  }
  BoundResult result;
  result.value = std::sqrt(2.0) * lipschitz * radius * std::sqrt(total);
  result.formula = "operator-kernel-trace";
  result.dominated = "loss complexity of the kernel-ball class";
  return result;
}

BoundResult ltl_reduction_bound(double lipschitz, int n,
                                double meta_complexity) {
  if (n < 1) throw std::invalid_argument("ltl_reduction_bound: n must be >= 1");
  if (meta_complexity < 0.0) {
    throw std::invalid_argument(
        "ltl_reduction_bound: meta complexity must be >= 0");
  }
  BoundResult result;
  result.value =
      std::sqrt(2.0) * lipschitz / std::sqrt(n) * meta_complexity;
  result.formula = "ltl-reduction";
  result.dominated = "meta-level Rademacher average of the feature-map class";
  return result;
}

namespace {

ComplexityEstimate estimate_from_series(const std::vector<double>& values) {
  KahanSum mean_acc;
  for (const double v : values) mean_acc.add(v);
  const auto m = static_cast<double>(values.size());
  const double mean = mean_acc.value() / m;
  KahanSum var_acc;
  for (const double v : values) var_acc.add((v - mean) * (v - mean));
  ComplexityEstimate estimate;
  estimate.mean = mean;
  estimate.std_error =
      values.size() > 1 ? std::sqrt(var_acc.value() / (m - 1.0) / m) : 0.0;
  estimate.draws = static_cast<std::int64_t>(values.size());
  estimate.method = Method::MonteCarlo;
  estimate.exactness = Exactness::Exact;
  return estimate;
}

ChainLink make_link(const std::string& name, double lhs_mean, double rhs_mean,
                    const std::vector<double>& slack_series) {
  const ComplexityEstimate slack = estimate_from_series(slack_series);
  ChainLink link;
  link.name = name;
  link.lhs_mean = lhs_mean;
  link.rhs_mean = rhs_mean;
  link.slack_mean = slack.mean;
  link.slack_se = slack.std_error;
  link.holds = slack.mean >= -3.0 * slack.std_error;
  return link;
}

}  // namespace

KMeansChainReport kmeans_chain_report(const Sample& sample, int centers,
                                      const ExpectationEngine& engine) {
  if (engine.method != Method::MonteCarlo) {
    throw std::invalid_argument("kmeans_chain_report: Monte Carlo only");
  }
  if (engine.dist.kind() != DistKind::Rademacher) {
    throw std::invalid_argument("kmeans_chain_report: Rademacher chain");
  }
  sample.require_unit_ball();
  const int n = sample.n();
  const int k_count = centers;
  const FunctionClass cls = FunctionClass::kmeans_centers(sample, centers);
  const Eigen::MatrixXd& points = sample.points();

  const std::int64_t m = engine.draws;
  std::vector<double> t0(static_cast<std::size_t>(m)),
      t1(static_cast<std::size_t>(m)), t2(static_cast<std::size_t>(m)),
      t3(static_cast<std::size_t>(m)), t4(static_cast<std::size_t>(m));

  parallel_for_chunks(m, [&](std::int64_t begin, std::int64_t end) {
    Eigen::MatrixXd noise(n, k_count);
    Eigen::VectorXd signs(n);
    for (std::int64_t j = begin; j < end; ++j) {
      const auto draw = static_cast<std::uint64_t>(j);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < k_count; ++k) {
          noise(i, k) = rng::rademacher_sign(
              engine.seed, draw,
              static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(k_count) +
                  static_cast<std::uint64_t>(k));
        }
        signs[i] = rng::rademacher_sign(
            engine.seed, draw,
            static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k_count) +
                static_cast<std::uint64_t>(i));
      }
      const auto idx = static_cast<std::size_t>(j);
      t0[idx] = kmeans_min_weighted_sup(sample, centers, signs, engine.seed, draw);
      t1[idx] = weighted_sup(cls, noise).value;
      double sum2 = 0.0, sum3 = 0.0, sum4 = 0.0;
      for (int k = 0; k < k_count; ++k) {
        const Eigen::VectorXd u = points.transpose() * noise.col(k);
        const double s = noise.col(k).sum();
        const double r = u.norm();
        sum2 += r;
        sum3 += std::max(s, 0.0);
        sum4 += 2.0 * r + std::abs(s);
      }
      t2[idx] = sum2;
      t3[idx] = sum3;
      t4[idx] = sum4;
    }
  });

  KMeansChainReport report;
  report.r_hat = estimate_from_series(t0);
  report.r_hat.exactness = Exactness::LowerBound;
  report.phi_sup = estimate_from_series(t1);
  report.phi_sup.exactness = Exactness::LowerBound;
  report.inner_sup = estimate_from_series(t2);
  report.center_sup = estimate_from_series(t3);
  report.column_sum = estimate_from_series(t4);
  report.bound = kmeans_bound(centers, n).value;

  const auto msize = static_cast<std::size_t>(m);
  std::vector<double> slack(msize);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < msize; ++j) slack[j] = t1[j] - inv_sqrt2 * t0[j];
  report.links.push_back(make_link("contraction", inv_sqrt2 * report.r_hat.mean,
                                   report.phi_sup.mean, slack));
  for (std::size_t j = 0; j < msize; ++j) {
    slack[j] = 2.0 * t2[j] + t3[j] - t1[j];
  }
  report.links.push_back(make_link(
      "square-split", report.phi_sup.mean,
      2.0 * report.inner_sup.mean + report.center_sup.mean, slack));
  for (std::size_t j = 0; j < msize; ++j) {
    slack[j] = t4[j] - (2.0 * t2[j] + t3[j]);
  }
  report.links.push_back(make_link(
      "column-collect", 2.0 * report.inner_sup.mean + report.center_sup.mean,
      report.column_sum.mean, slack));
  for (std::size_t j = 0; j < msize; ++j) slack[j] = report.bound - t4[j];
  report.links.push_back(make_link("jensen", report.column_sum.mean,
                                   report.bound, slack));

  report.all_hold = true;
  for (const auto& link : report.links) report.all_hold &= link.holds;
  report.headline_holds =
      report.r_hat.mean - 3.0 * report.r_hat.std_error <= report.bound;
  return report;
}

}  // namespace radcomplex
