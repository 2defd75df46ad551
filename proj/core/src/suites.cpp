#include "radcomplex/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "radcomplex/bounds.hpp"
#include "radcomplex/contraction.hpp"
#include "radcomplex/counterexample.hpp"
#include "radcomplex/estimator.hpp"
#include "radcomplex/parallel.hpp"
#include "radcomplex/subgaussian_checks.hpp"

namespace radcomplex::suites {
namespace {

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_short(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

// Deterministic stream of suite-level randomness (instance shapes, table
// entries); independent cells of one counter-based draw.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(rng::mix64(seed ^ stream)) {}

  double uniform() { return rng::uniform01(seed_, 0, next_++); }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform() * (hi - lo + 1e-12));
  }
  double normal() { return rng::standard_normal(seed_, 0, next_++); }

  Eigen::VectorXd unit_vector(int dim) {
    Eigen::VectorXd v(dim);
    double norm = 0.0;
    while (norm == 0.0) {
      for (int i = 0; i < dim; ++i) v[i] = normal();
      norm = v.norm();
    }
    return v / norm;
  }

  Eigen::VectorXd ball_point(int dim) {
    return unit_vector(dim) * std::pow(uniform(), 1.0 / dim);
  }

  Eigen::MatrixXd uniform_matrix(int rows, int cols, double lo, double hi) {
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m(r, c) = range(lo, hi);
    }
    return m;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t next_ = 0;
};

CsvRow report_row(const std::string& instance_id, const std::string& quantity,
                  const VerificationReport& report) {
  CsvRow row;
  row.instance_id = instance_id;
  row.quantity = quantity;
  row.mean = report.lhs.mean;
  row.std_error = report.lhs.std_error;
  row.method = to_string(report.mode == VerdictMode::Exact
                             ? Method::ExactEnum
                             : Method::MonteCarlo);
  row.bound = report.constant * report.rhs.mean;
  row.verdict = to_string(report.verdict);
  row.margin = report.margin;
  return row;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

bool verdict_ok(Verdict verdict) {
  return verdict == Verdict::Holds ||
         verdict == Verdict::HoldsWithinTolerance;
}

// One random finite class plus per-row losses: either the Euclidean norm
// or table-based losses certified from the class values.
struct ContractionInstance {
  FunctionClass cls;
  std::vector<LipschitzLoss> losses;
};

ContractionInstance random_contraction_instance(StreamRng& stream,
                                                bool custom_losses) {
  const int n = stream.integer(1, 4);
  const int k = stream.integer(1, 3);
  const int s_count = stream.integer(1, 6);
  std::vector<Eigen::MatrixXd> tables;
  tables.reserve(static_cast<std::size_t>(s_count));
  for (int s = 0; s < s_count; ++s) {
    tables.push_back(stream.uniform_matrix(n, k, -1.0, 1.0));
  }
  ContractionInstance instance{FunctionClass::finite(tables), {}};
  if (!custom_losses) {
    instance.losses.assign(static_cast<std::size_t>(n),
                           LipschitzLoss::euclidean_norm());
    return instance;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Eigen::VectorXd> points;
    std::vector<double> values;
    for (int s = 0; s < s_count; ++s) {
      const Eigen::VectorXd row = tables[static_cast<std::size_t>(s)].row(i).transpose();
      bool seen = false;
      for (const auto& p : points) {
        if ((p - row).lpNorm<Eigen::Infinity>() == 0.0) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        points.push_back(row);
        values.push_back(stream.range(-1.0, 1.0));
      }
    }
    instance.losses.push_back(LipschitzLoss::custom(points, values));
  }
  return instance;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const CsvRow> rows) {
  out << "instance_id,quantity,mean,std_error,method,bound,verdict,margin\n";
  for (const auto& row : rows) {
    out << row.instance_id << ',' << row.quantity << ','
        << format_value(row.mean) << ',' << format_value(row.std_error) << ','
        << row.method << ',' << (row.bound ? format_value(*row.bound) : "")
        << ',' << row.verdict << ','
        << (row.margin ? format_value(*row.margin) : "") << '\n';
  }
}

SuiteResult run_counterexample_suite(std::uint64_t seed) {
  SuiteResult result;
  result.name = "counterexample";
  bool ok = true;
  double ratio_at_256 = 0.0;
  for (const int n : {1, 4, 16, 64, 256}) {
    const auto instance = counterexample_instance(n);
    const std::string id = "counterexample/n=" + std::to_string(n);
    ok &= instance.lhs == n / 2.0;
    ok &= instance.rhs == std::sqrt(static_cast<double>(n));
    if (n == 256) ratio_at_256 = instance.ratio;
    CsvRow lhs_row{id, "lhs", instance.lhs, 0.0, "CLOSED_FORM", {}, "", {}};
    CsvRow rhs_row{id, "rhs", instance.rhs, 0.0, "CLOSED_FORM", {}, "", {}};
    CsvRow ratio_row{id,      "ratio",   instance.ratio, 0.0,
                     "CLOSED_FORM", {}, "REFUTED",       {}};
    result.rows.push_back(lhs_row);
    result.rows.push_back(rhs_row);
    result.rows.push_back(ratio_row);
    if (n <= 20) {
      const auto check = counterexample_mc_crosscheck(
          n, ExpectationEngine::exact_enum(seed));
      ok &= check.ok;
      result.rows.push_back(CsvRow{id, "lhs_enumeration",
                                   check.lhs_estimate.mean, 0.0, "EXACT_ENUM",
                                   instance.lhs, check.ok ? "AGREES" : "DISAGREES",
                                   check.lhs_estimate.mean - instance.lhs});
    }
  }
  ok &= ratio_at_256 == 8.0 && ratio_at_256 >= 4.0;
  result.metrics["ratio_at_256"] = ratio_at_256;
  result.passed = ok;
  result.summary = "closed forms exact for n in {1,4,16,64,256}, ratio(256)=" +
                   format_short(ratio_at_256);
  return result;
}

SuiteResult run_contraction_exact_suite(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "contraction-exact";
  StreamRng stream(seed, 0xC0117AC7ULL);
  const auto engine = ExpectationEngine::exact_enum(seed);
  const auto dist = SubgaussianDist::rademacher();
  std::vector<double> margins;
  margins.reserve(static_cast<std::size_t>(trials));
  int violated = 0;
  for (int t = 0; t < trials; ++t) {
    const auto instance = random_contraction_instance(stream, t % 2 == 1);
    const auto report =
        verify_vector_contraction(instance.cls, instance.losses, dist, engine);
    margins.push_back(report.margin);
    if (report.verdict == Verdict::Violated) ++violated;
    result.rows.push_back(report_row(
        "contraction-exact/" + std::to_string(t), "vector_contraction",
        report));
  }
  result.metrics["violated"] = violated;
  result.metrics["median_margin"] = median(margins);
  result.passed = violated == 0;
  result.summary = std::to_string(trials) + " exact instances, " +
                   std::to_string(violated) + " violated, median margin " +
                   format_short(result.metrics["median_margin"]);
  return result;
}

SuiteResult run_khintchine_suite(std::uint64_t seed,
                                 std::int64_t gaussian_draws) {
  SuiteResult result;
  result.name = "khintchine";
  StreamRng stream(seed, 0x4B1A7C41ULL);
  const auto exact = ExpectationEngine::exact_enum(seed);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    const int dim = stream.integer(1, 12);
    const Eigen::VectorXd v = stream.unit_vector(dim);
    const auto report =
        khintchine_lower_check(v, SubgaussianDist::rademacher(), exact);
    if (!verdict_ok(report.verdict)) ++violations;
    if (t % 10 == 0) {
      result.rows.push_back(report_row("khintchine/rademacher-" + std::to_string(t),
                                       "khintchine_lower", report));
    }
  }

  // Extremal vector: equality at (1/sqrt2, 1/sqrt2).
  Eigen::VectorXd extremal(2);
  extremal << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto extremal_report =
      khintchine_lower_check(extremal, SubgaussianDist::rademacher(), exact);
  const double extremal_gap = std::abs(extremal_report.margin);
  result.rows.push_back(
      report_row("khintchine/extremal", "khintchine_lower", extremal_report));

  // Gaussian case: E|sum g_k v_k| = sqrt(2/pi) for unit v.
  const double target = std::sqrt(2.0 / M_PI);
  bool gaussian_ok = true;
  for (int t = 0; t < 10; ++t) {
    const int dim = stream.integer(1, 12);
    const Eigen::VectorXd v = stream.unit_vector(dim);
    const auto engine = ExpectationEngine::monte_carlo(
        SubgaussianDist::standard_normal(), gaussian_draws,
        rng::mix64(seed + static_cast<std::uint64_t>(t) + 1));
    const auto estimate =
        expected_abs_combination(v, SubgaussianDist::standard_normal(), engine);
    const bool ok =
        std::abs(estimate.mean - target) <= 3.0 * estimate.std_error;
    gaussian_ok &= ok;
    result.rows.push_back(CsvRow{
        "khintchine/gaussian-" + std::to_string(t), "expected_abs",
        estimate.mean, estimate.std_error, to_string(estimate.method), target,
        ok ? "AGREES" : "DISAGREES", estimate.mean - target});
  }

  result.metrics["violations"] = violations;
  result.metrics["extremal_gap"] = extremal_gap;
  result.metrics["gaussian_ok"] = gaussian_ok ? 1.0 : 0.0;
  result.passed = violations == 0 && extremal_gap <= 1e-12 && gaussian_ok;
  result.summary = "100 exact vectors, " + std::to_string(violations) +
                   " violations; extremal gap " + format_short(extremal_gap);
  return result;
}

SuiteResult run_product_identity_suite(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "product-identity";
  StreamRng stream(seed, 0x9D0D7C7ULL);
  const auto engine = ExpectationEngine::exact_enum(seed);
  double worst = 0.0;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const int k = 3;
    const int n = stream.integer(1, 5);  // n * K <= 16 with K = 3
    std::vector<FunctionClass> components;
    components.reserve(k);
    for (int c = 0; c < k; ++c) {
      const int tables = stream.integer(1, 4);
      std::vector<Eigen::MatrixXd> list;
      for (int s = 0; s < tables; ++s) {
        list.push_back(stream.uniform_matrix(n, 1, -1.0, 1.0));
      }
      components.push_back(FunctionClass::finite(std::move(list)));
    }
    const auto report = product_identity_check(components, engine);
    worst = std::max(worst, report.abs_diff);
    if (!report.ok) ++failures;
    result.rows.push_back(CsvRow{
        "product-identity/" + std::to_string(t), "product_complexity",
        report.product_complexity, 0.0, "EXACT_ENUM", report.component_sum,
        report.ok ? "HOLDS" : "VIOLATED",
        report.component_sum - report.product_complexity});
  }
  result.metrics["failures"] = failures;
  result.metrics["worst_diff"] = worst;
  result.passed = failures == 0;
  result.summary = std::to_string(trials) + " triples, worst |diff| " +
                   format_short(worst);
  return result;
}

SuiteResult run_tail_bound_suite(std::uint64_t seed, std::int64_t draws) {
  SuiteResult result;
  result.name = "tails";
  StreamRng stream(seed, 0x7A17B0D5ULL);
  const int dim = 6;
  const std::vector<SubgaussianDist> dists = {
      SubgaussianDist::rademacher(), SubgaussianDist::standard_normal(),
      SubgaussianDist::uniform_symmetric(1.0)};
  bool ok = true;
  std::vector<double> sums(static_cast<std::size_t>(draws));
  for (const auto& dist : dists) {
    for (int t = 0; t < 5; ++t) {
      const Eigen::VectorXd v = stream.unit_vector(dim);
      const std::uint64_t run_seed =
          rng::mix64(seed ^ (0x7A11ULL + static_cast<std::uint64_t>(t)) ^
                     rng::mix64(static_cast<std::uint64_t>(dist.kind())));
      parallel_for_chunks(draws, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t j = begin; j < end; ++j) {
          double total = 0.0;
          for (int c = 0; c < dim; ++c) {
            total += v[c] * dist.sample(run_seed, static_cast<std::uint64_t>(j),
                                        static_cast<std::uint64_t>(c));
          }
          sums[static_cast<std::size_t>(j)] = std::abs(total);
        }
      });
      for (const double threshold : {1.0, 2.0, 3.0}) {
        std::int64_t exceed = 0;
        for (const double s : sums) exceed += s > threshold ? 1 : 0;
        const double freq = static_cast<double>(exceed) / static_cast<double>(draws);
        const double se =
            std::sqrt(std::max(freq * (1.0 - freq), 0.0) / static_cast<double>(draws));
        const double bound = tail_bound(threshold, dist.b());
        const bool holds = freq <= bound + 3.0 * se;
        ok &= holds;
        result.rows.push_back(CsvRow{
            "tails/" + dist.name() + "/v" + std::to_string(t) + "/t=" +
                format_short(threshold),
            "tail_exceedance", freq, se, "MONTE_CARLO", bound,
            holds ? "HOLDS" : "VIOLATED", bound + 3.0 * se - freq});
      }
    }
  }
  result.metrics["ok"] = ok ? 1.0 : 0.0;
  result.passed = ok;
  result.summary = "3 laws x 5 vectors x t in {1,2,3} at " +
                   std::to_string(draws) + " draws";
  return result;
}

SuiteResult run_kmeans_chain_suite(std::uint64_t seed, int samples,
                                   std::int64_t draws) {
  SuiteResult result;
  result.name = "kmeans-chain";
  StreamRng stream(seed, 0x6B3EA125ULL);
  bool ok = true;
  const int dim = 5;
  const int n = 50;
  for (int t = 0; t < samples; ++t) {
    const int centers = 2 + t % 2;
    Eigen::MatrixXd points(n, dim);
    for (int i = 0; i < n; ++i) {
      points.row(i) = stream.ball_point(dim).transpose();
    }
    const auto engine = ExpectationEngine::monte_carlo(
        SubgaussianDist::rademacher(), draws,
        rng::mix64(seed + 0x6B3EULL + static_cast<std::uint64_t>(t)));
    const auto report = kmeans_chain_report(Sample(points), centers, engine);
    ok &= report.all_hold && report.headline_holds;
    const std::string id =
        "kmeans-chain/" + std::to_string(t) + "/K=" + std::to_string(centers);
    result.rows.push_back(CsvRow{
        id, "r_hat", report.r_hat.mean, report.r_hat.std_error, "MONTE_CARLO",
        report.bound, report.headline_holds ? "HOLDS" : "VIOLATED",
        report.bound - report.r_hat.mean});
    for (const auto& link : report.links) {
      result.rows.push_back(CsvRow{id, "link:" + link.name, link.slack_mean,
                                   link.slack_se, "MONTE_CARLO", {},
                                   link.holds ? "HOLDS" : "VIOLATED",
                                   link.slack_mean});
    }
  }
  result.metrics["ok"] = ok ? 1.0 : 0.0;
  result.passed = ok;
  result.summary = std::to_string(samples) +
                   " samples (d=5, n=50, K in {2,3}) at " +
                   std::to_string(draws) + " draws";
  return result;
}

SuiteResult run_frobenius_suite(std::uint64_t seed, int trials,
                                std::int64_t draws) {
  SuiteResult result;
  result.name = "frobenius";
  StreamRng stream(seed, 0xF20BE215ULL);
  bool ok = true;

  // Tightness: orthonormal sample, K = 1, exact enumeration equals the
  // bound.
  for (const int n : {4, 9}) {
    const Sample sample(Eigen::MatrixXd::Identity(n, n));
    const auto cls =
        FunctionClass::linear_norm_ball(sample, MatrixNorm::Frobenius, 1.0, 1);
    const auto estimate =
        complexity_vector(cls, ExpectationEngine::exact_enum(seed));
    const double bound = frobenius_bound(1.0, sample, 1).value;
    const double gap = std::abs(estimate.mean - bound);
    ok &= gap <= 1e-12;
    result.rows.push_back(CsvRow{
        "frobenius/orthonormal-n" + std::to_string(n), "vector_complexity",
        estimate.mean, 0.0, "EXACT_ENUM", bound,
        gap <= 1e-12 ? "TIGHT" : "VIOLATED", bound - estimate.mean});
  }

  for (int t = 0; t < trials; ++t) {
    const int n = 10;
    const int dim = 6;
    const int k = 1 + t % 3;
    const double radius = 0.5 + 0.75 * (t % 4);
    Eigen::MatrixXd points(n, dim);
    for (int i = 0; i < n; ++i) {
      points.row(i) = stream.unit_vector(dim).transpose();
    }
    const Sample sample(points);
    const auto cls = FunctionClass::linear_norm_ball(
        sample, MatrixNorm::Frobenius, radius, k);
    const auto engine = ExpectationEngine::monte_carlo(
        SubgaussianDist::rademacher(), draws,
        rng::mix64(seed + 0xF20BULL + static_cast<std::uint64_t>(t)));
    const auto estimate = complexity_vector(cls, engine);
    const double bound = frobenius_bound(radius, sample, k).value;
    const bool holds = bound >= estimate.mean - 3.0 * estimate.std_error;
    ok &= holds;
    result.rows.push_back(CsvRow{
        "frobenius/random-" + std::to_string(t), "vector_complexity",
        estimate.mean, estimate.std_error, "MONTE_CARLO", bound,
        holds ? "HOLDS" : "VIOLATED", bound - estimate.mean});
  }
  result.metrics["ok"] = ok ? 1.0 : 0.0;
  result.passed = ok;
  result.summary = "orthonormal tightness exact; " + std::to_string(trials) +
                   " random samples dominated";
  return result;
}

SuiteResult run_theorem1_suite(std::uint64_t seed, int repetitions) {
  SuiteResult result;
  result.name = "theorem1-coverage";
  StreamRng stream(seed, 0x7E012345ULL);
  const int f_count = 20;
  const int space = 8;
  const int n = 16;
  const double delta = 0.1;
  const Eigen::MatrixXd tables = stream.uniform_matrix(f_count, space, 0.0, 1.0);
  Eigen::VectorXd law(space);
  for (int x = 0; x < space; ++x) law[x] = stream.range(0.2, 1.0);
  law /= law.sum();
  const auto engine = ExpectationEngine::monte_carlo(
      SubgaussianDist::rademacher(), 10000, seed);
  const auto coverage = theorem1_coverage_experiment(tables, law, n, delta,
                                                     repetitions, engine);
  result.rows.push_back(CsvRow{
      "theorem1/delta=0.1", "violation_rate", coverage.rate,
      std::sqrt(std::max(coverage.rate * (1.0 - coverage.rate), 0.0) /
                repetitions),
      "MONTE_CARLO", coverage.threshold,
      coverage.within_budget ? "HOLDS" : "VIOLATED",
      coverage.threshold - coverage.rate});
  result.metrics["rate"] = coverage.rate;
  result.metrics["threshold"] = coverage.threshold;
  result.passed = coverage.within_budget;
  result.summary = "violation rate " + format_short(coverage.rate) + " <= " +
                   format_short(coverage.threshold) + " over " +
                   std::to_string(repetitions) + " repetitions";
  return result;
}

SuiteResult run_ltl_suite(std::uint64_t seed) {
  SuiteResult result;
  result.name = "ltl";
  StreamRng stream(seed, 0x17117171ULL);
  bool ok = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  int instance = 0;
  for (int tasks = 1; tasks <= 2; ++tasks) {
    for (int n = 1; n <= 2; ++n) {
      for (int k = 1; k <= 2; ++k) {
        for (int maps = 1; maps <= 3; ++maps) {
          for (int loss_count = 1; loss_count <= 3; ++loss_count) {
            const int rows = tasks * n;
            std::vector<Eigen::MatrixXd> map_tables;
            for (int h = 0; h < maps; ++h) {
              map_tables.push_back(stream.uniform_matrix(rows, k, 0.0, 1.0));
            }
            // One loss class evaluable on every feature-map value row,
            // with values in [0,1] and the constant certified from the
            // table.
            std::vector<Eigen::VectorXd> points;
            for (const auto& table : map_tables) {
              for (int r = 0; r < rows; ++r) {
                const Eigen::VectorXd row = table.row(r).transpose();
                bool seen = false;
                for (const auto& p : points) {
                  if ((p - row).lpNorm<Eigen::Infinity>() == 0.0) {
                    seen = true;
                    break;
                  }
                }
                if (!seen) points.push_back(row);
              }
            }
            std::vector<LipschitzLoss> losses;
            double lipschitz = 0.0;
            for (int f = 0; f < loss_count; ++f) {
              std::vector<double> values;
              values.reserve(points.size());
              for (std::size_t p = 0; p < points.size(); ++p) {
                values.push_back(stream.range(0.0, 1.0));
              }
              losses.push_back(LipschitzLoss::custom(points, values));
              lipschitz =
                  std::max(lipschitz, losses.back().lipschitz_constant());
            }
            MetaSample meta(tasks, n, Eigen::MatrixXd::Zero(rows, 1));
            const auto cls =
                FunctionClass::feature_map_finite(meta, map_tables);

            Eigen::MatrixXd psi(static_cast<Eigen::Index>(maps), tasks);
            for (int h = 0; h < maps; ++h) {
              for (int t = 0; t < tasks; ++t) {
                psi(h, t) = ltl_psi(cls, h, t, losses);
              }
            }
            const double meta_rademacher = exact_sign_expectation_of_max(psi);
            // Singleton classes have true complexity 0; enumeration can
            // return a signed zero-scale residual.
            const double meta_complexity = std::max(
                0.0,
                complexity_vector(cls, ExpectationEngine::exact_enum(seed)).mean);
            const double bound =
                ltl_reduction_bound(lipschitz, n, meta_complexity).value;
            const double margin = bound - meta_rademacher;
            worst_margin = std::min(worst_margin, margin);
            const bool holds = margin >= -1e-9;
            ok &= holds;
            if (instance % 8 == 0 || !holds) {
              result.rows.push_back(CsvRow{
                  "ltl/" + std::to_string(instance), "meta_rademacher",
                  meta_rademacher, 0.0, "EXACT_ENUM", bound,
                  holds ? "HOLDS" : "VIOLATED", margin});
            }
            ++instance;
          }
        }
      }
    }
  }
  result.metrics["instances"] = instance;
  result.metrics["worst_margin"] = worst_margin;
  result.passed = ok;
  result.summary = std::to_string(instance) +
                   " exhaustive instances, worst margin " +
                   format_short(worst_margin);
  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "counterexample", "contraction-exact", "khintchine",
      "product-identity", "tails",           "kmeans-chain",
      "frobenius",       "theorem1-coverage", "ltl"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "counterexample") return run_counterexample_suite(seed);
  if (name == "contraction-exact") return run_contraction_exact_suite(seed);
  if (name == "khintchine") return run_khintchine_suite(seed);
  if (name == "product-identity") return run_product_identity_suite(seed);
  if (name == "tails") return run_tail_bound_suite(seed);
  if (name == "kmeans-chain") return run_kmeans_chain_suite(seed);
  if (name == "frobenius") return run_frobenius_suite(seed);
  if (name == "theorem1-coverage") return run_theorem1_suite(seed);
  if (name == "ltl") return run_ltl_suite(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  results.reserve(suite_names().size());
  for (const auto& name : suite_names()) {
    results.push_back(run_suite(name, seed));
  }
  return results;
}

}  // namespace radcomplex::suites
