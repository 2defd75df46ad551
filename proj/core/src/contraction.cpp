#include "radcomplex/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "radcomplex/estimator.hpp"
#include "radcomplex/parallel.hpp"

namespace radcomplex {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::HoldsWithinTolerance:
      return "HOLDS_WITHIN_TOLERANCE";
    case Verdict::Violated:
      return "VIOLATED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

VerificationReport make_verification_report(const ComplexityEstimate& lhs,
                                            const ComplexityEstimate& rhs,
                                            double constant,
                                            bool rhs_prescaled) {
  VerificationReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.constant = constant;
  const double scale = rhs_prescaled ? 1.0 : constant;
  report.margin = scale * rhs.mean - lhs.mean;
  const bool exact_mode =
      lhs.method == Method::ExactEnum && rhs.method == Method::ExactEnum;
  report.mode = exact_mode ? VerdictMode::Exact : VerdictMode::Statistical;
  const double gap = exact_mode
                         ? 1e-9
                         : 3.0 * (lhs.std_error + scale * rhs.std_error);
  if (report.margin >= 0.0) {
    report.verdict = Verdict::Holds;
  } else if (-report.margin <= gap) {
    report.verdict = Verdict::HoldsWithinTolerance;
  } else if (lhs.exactness == Exactness::Exact &&
             rhs.exactness == Exactness::Exact) {
    report.verdict = Verdict::Violated;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

VerificationReport verify_vector_contraction(
    const FunctionClass& cls, std::span<const LipschitzLoss> losses,
    const SubgaussianDist& dist, const ExpectationEngine& engine) {
  if (losses.empty()) {
    throw std::invalid_argument("verify_vector_contraction: no losses");
  }
  double lipschitz = 0.0;
  for (const auto& loss : losses) {
    lipschitz = std::max(lipschitz, loss.lipschitz_constant());
  }
  const double constant =
      khintchine_constant(dist, ConstantMode::BestKnown).value * lipschitz;

  const auto lhs_engine = engine.with_dist(SubgaussianDist::rademacher());
  const ComplexityEstimate lhs = complexity_scalar(cls, losses, lhs_engine);
  const ComplexityEstimate rhs =
      complexity_vector(cls, engine.with_dist(dist));
  return make_verification_report(lhs, rhs, constant);
}

VerificationReport verify_single_variable(const FunctionClass& cls,
                                          const LipschitzLoss& loss,
                                          std::span<const double> offsets,
                                          const SubgaussianDist& dist,
                                          const ExpectationEngine& engine) {
  if (cls.kind() != ClassKind::Finite) {
    throw std::invalid_argument("verify_single_variable: finite classes only");
  }
  if (cls.rows() != 1) {
    throw std::invalid_argument("verify_single_variable: needs n = 1");
  }
  const std::size_t s_count = cls.tables().size();
  if (offsets.size() != s_count) {
    throw std::invalid_argument(
        "verify_single_variable: one offset per class element");
  }
  const int k = cls.output_dim();
  std::vector<double> psi(s_count);
  Eigen::MatrixXd phi(static_cast<Eigen::Index>(s_count), k);
  for (std::size_t s = 0; s < s_count; ++s) {
    const Eigen::VectorXd row = cls.tables()[s].row(0).transpose();
    psi[s] = loss.eval(row);
    phi.row(static_cast<Eigen::Index>(s)) = row.transpose();
  }

  const double constant =
      khintchine_constant(dist, ConstantMode::BestKnown).value *
      loss.lipschitz_constant();

  // lhs: enumerate eps = +/-1 exactly.
  double up = -std::numeric_limits<double>::infinity();
  double down = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < s_count; ++s) {
    up = std::max(up, psi[s] + offsets[s]);
    down = std::max(down, -psi[s] + offsets[s]);
  }
  ComplexityEstimate lhs;
  lhs.mean = 0.5 * (up + down);
  lhs.method = Method::ExactEnum;
  lhs.draws = 2;
  lhs.exactness = Exactness::Exact;

  const auto sup_with_noise = [&](const Eigen::VectorXd& noise) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < s_count; ++s) {
      best = std::max(best,
                      constant * noise.dot(phi.row(static_cast<Eigen::Index>(s))) +
                          offsets[s]);
    }
    return best;
  };

  ComplexityEstimate rhs;
  if (dist.kind() == DistKind::Rademacher &&
      k <= ExpectationEngine::kExactEnumBits) {
    rhs = detail::enumerate_estimate(k, Exactness::Exact, sup_with_noise);
  } else {
    rhs = detail::monte_carlo_estimate(
        engine, Exactness::Exact, [&, k](std::uint64_t draw) {
          Eigen::VectorXd noise(k);
          for (int j = 0; j < k; ++j) {
            noise[j] =
                dist.sample(engine.seed, draw, static_cast<std::uint64_t>(j));
          }
          return sup_with_noise(noise);
        });
  }
  return make_verification_report(lhs, rhs, constant, /*rhs_prescaled=*/true);
}

ProductIdentityReport product_identity_check(
    std::span<const FunctionClass> components,
    const ExpectationEngine& engine) {
  std::vector<FunctionClass> parts(components.begin(), components.end());
  const FunctionClass prod = FunctionClass::product(parts);
  const int bits = prod.rows() * prod.output_dim();
  const auto exact = ExpectationEngine::exact_enum(engine.seed);
  exact.require_enumerable(bits);

  ProductIdentityReport report;
  report.product_complexity = complexity_vector(prod, exact).mean;
  const std::vector<LipschitzLoss> identity(
      static_cast<std::size_t>(prod.rows()), LipschitzLoss::max_coordinate());
  double total = 0.0;
  for (const auto& component : parts) {
    total += complexity_scalar(component, identity, exact).mean;
  }
  report.component_sum = total;
  report.abs_diff = std::abs(report.product_complexity - report.component_sum);
  report.ok = report.abs_diff <= 1e-9;
  return report;
}

CoverageResult theorem1_coverage_experiment(const Eigen::MatrixXd& tables,
                                            const Eigen::VectorXd& law, int n,
                                            double delta, int repetitions,
                                            const ExpectationEngine& engine) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("theorem1 coverage: delta must be in (0,1)");
  }
  if (repetitions < 100) {
    throw std::invalid_argument("theorem1 coverage: need >= 100 repetitions");
  }
  if (n < 1) throw std::invalid_argument("theorem1 coverage: n must be >= 1");
  if (tables.minCoeff() < 0.0 || tables.maxCoeff() > 1.0) {
    throw std::invalid_argument("theorem1 coverage: outputs must be in [0,1]");
  }
  if (law.size() != tables.cols() || law.minCoeff() < 0.0 ||
      std::abs(law.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("theorem1 coverage: invalid law");
  }

  const Eigen::Index f_count = tables.rows();
  const Eigen::VectorXd expectations = tables * law;  // exact E f(X)
  Eigen::VectorXd cumulative(law.size());
  double running = 0.0;
  for (Eigen::Index x = 0; x < law.size(); ++x) {
    running += law[x];
    cumulative[x] = running;
  }
  const double slack = std::sqrt(9.0 * std::log(2.0 / delta) / (2.0 * n));
  const std::uint64_t data_seed = rng::mix64(engine.seed ^ 0xDA7A5EEDULL);

  std::vector<unsigned char> violated(static_cast<std::size_t>(repetitions), 0);
  parallel_for_chunks(repetitions, [&](std::int64_t begin, std::int64_t end) {
    Eigen::MatrixXd psi(f_count, n);
    std::vector<int> sample_ix(static_cast<std::size_t>(n));
    for (std::int64_t rep = begin; rep < end; ++rep) {
      for (int i = 0; i < n; ++i) {
        const double u =
            rng::uniform01(data_seed, static_cast<std::uint64_t>(rep),
                           static_cast<std::uint64_t>(i));
        int x = 0;
        while (x + 1 < law.size() && u >= cumulative[x]) ++x;
        sample_ix[static_cast<std::size_t>(i)] = x;
      }
      for (int i = 0; i < n; ++i) {
        psi.col(i) = tables.col(sample_ix[static_cast<std::size_t>(i)]);
      }
      double complexity;
      if (n <= ExpectationEngine::kExactEnumBits) {
        complexity = exact_sign_expectation_of_max(psi);
      } else {
        const std::uint64_t rep_seed =
            rng::mix64(data_seed + static_cast<std::uint64_t>(rep));
        const auto mc = detail::monte_carlo_estimate(
            engine.with_seed(rep_seed), Exactness::Exact,
            [&, rep_seed](std::uint64_t draw) {
              double best = -std::numeric_limits<double>::infinity();
              for (Eigen::Index f = 0; f < f_count; ++f) {
                double total = 0.0;
                for (int i = 0; i < n; ++i) {
                  total += rng::rademacher_sign(
                               rep_seed, draw, static_cast<std::uint64_t>(i)) *
                           psi(f, i);
                }
                best = std::max(best, total);
              }
              return best;
            },
            /*threads=*/1);
        complexity = mc.mean;
      }
      bool any = false;
      for (Eigen::Index f = 0; f < f_count && !any; ++f) {
        const double empirical = psi.row(f).mean();
        any = expectations[f] >
              empirical + 2.0 * complexity / n + slack;
      }
      violated[static_cast<std::size_t>(rep)] = any ? 1 : 0;
    }
  });

  CoverageResult result;
  result.repetitions = repetitions;
  for (const auto flag : violated) result.violations += flag;
  result.rate = static_cast<double>(result.violations) / repetitions;
  result.delta = delta;
  result.threshold =
      delta + 3.0 * std::sqrt(delta * (1.0 - delta) / repetitions);
  result.within_budget = result.rate <= result.threshold;
  return result;
}

}  // namespace radcomplex
