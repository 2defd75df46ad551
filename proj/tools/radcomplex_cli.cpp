// Command-line front end: estimate complexities, run verification
// presets, evaluate closed-form bounds, reproduce the counterexample, and
// run the bundled suites. Human-readable output goes to stderr, CSV to
// stdout or --out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radcomplex/bounds.hpp"
#include "radcomplex/class_io.hpp"
#include "radcomplex/contraction.hpp"
#include "radcomplex/counterexample.hpp"
#include "radcomplex/estimator.hpp"
#include "radcomplex/subgaussian_checks.hpp"
#include "radcomplex/suites.hpp"

namespace {

using radcomplex::suites::CsvRow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;

struct CommonOptions {
  std::uint64_t seed = radcomplex::rng::kDefaultSeed;
  std::int64_t draws = 10000;
  std::string dist = "rademacher";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--seed", options.seed, "random seed (default 0x5EED)");
  cmd->add_option("--draws", options.draws, "Monte Carlo draws");
  cmd->add_option("--dist", options.dist,
                  "noise law: rademacher | normal | uniform[:halfwidth]");
  cmd->add_option("--out", options.out, "write CSV to this path");
}

int emit(const std::vector<CsvRow>& rows, const std::string& out) {
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitUsage;
    }
    radcomplex::suites::write_csv(file, rows);
  } else {
    radcomplex::suites::write_csv(std::cout, rows);
  }
  for (const auto& row : rows) {
    if (row.verdict == "VIOLATED" || row.verdict == "DISAGREES") {
      return kExitViolated;
    }
  }
  return kExitOk;
}

std::vector<radcomplex::LipschitzLoss> parse_losses(const std::string& spec,
                                                    int rows) {
  using radcomplex::LipschitzLoss;
  LipschitzLoss loss = LipschitzLoss::euclidean_norm();
  if (spec == "norm" || spec.empty()) {
    loss = LipschitzLoss::euclidean_norm();
  } else if (spec == "max") {
    loss = LipschitzLoss::max_coordinate();
  } else if (spec.rfind("margin:", 0) == 0) {
    int label = 0;
    double gamma = 1.0;
    std::istringstream args(spec.substr(7));
    std::string token;
    if (std::getline(args, token, ',')) label = std::stoi(token);
    if (std::getline(args, token, ',')) gamma = std::stod(token);
    loss = LipschitzLoss::margin_loss(label, gamma);
  } else if (spec.rfind("dist:", 0) == 0) {
    std::vector<double> coords;
    std::istringstream args(spec.substr(5));
    std::string token;
    while (std::getline(args, token, ',')) coords.push_back(std::stod(token));
    Eigen::VectorXd anchor(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      anchor[static_cast<Eigen::Index>(i)] = coords[i];
    }
    loss = LipschitzLoss::distance_to_point(anchor);
  } else {
    throw CLI::ValidationError("--losses", "unknown loss spec: " + spec);
  }
  return std::vector<radcomplex::LipschitzLoss>(static_cast<std::size_t>(rows),
                                                loss);
}

radcomplex::ExpectationEngine make_engine(const CommonOptions& options,
                                          const std::string& method,
                                          int bits) {
  using radcomplex::ExpectationEngine;
  const auto dist = radcomplex::SubgaussianDist::from_name(options.dist);
  if (method == "exact") {
    auto engine = ExpectationEngine::exact_enum(options.seed);
    engine.dist = dist;
    return engine;
  }
  if (method == "mc") {
    return ExpectationEngine::monte_carlo(dist, options.draws, options.seed);
  }
  // auto
  if (dist.kind() == radcomplex::DistKind::Rademacher &&
      bits <= ExpectationEngine::kExactEnumBits) {
    auto engine = ExpectationEngine::exact_enum(options.seed);
    engine.dist = dist;
    return engine;
  }
  return ExpectationEngine::monte_carlo(dist, options.draws, options.seed);
}

int run_estimate(const CommonOptions& options, const std::string& class_path,
                 const std::string& quantity, const std::string& losses_spec,
                 const std::string& method) {
  const auto cls = radcomplex::load_class_file(class_path);
  std::vector<CsvRow> rows;
  if (quantity == "vector") {
    const auto engine =
        make_engine(options, method, cls.rows() * cls.output_dim());
    const auto estimate = radcomplex::complexity_vector(cls, engine);
    rows.push_back(CsvRow{class_path, "vector_complexity", estimate.mean,
                          estimate.std_error, to_string(estimate.method), {},
                          "", {}});
  } else if (quantity == "scalar") {
    const auto engine = make_engine(options, method, cls.rows());
    const auto losses = parse_losses(losses_spec, cls.rows());
    const auto estimate = radcomplex::complexity_scalar(cls, losses, engine);
    rows.push_back(CsvRow{class_path, "scalar_complexity", estimate.mean,
                          estimate.std_error, to_string(estimate.method), {},
                          "", {}});
  } else if (quantity == "sum-norm") {
    const auto engine = make_engine(options, method, cls.rows());
    const auto estimate = radcomplex::rademacher_sum_norm(cls.sample(), engine);
    rows.push_back(CsvRow{class_path, "rademacher_sum_norm", estimate.mean,
                          estimate.std_error, to_string(estimate.method), {},
                          "", {}});
  } else {
    std::cerr << "error: unknown quantity " << quantity << "\n";
    return kExitUsage;
  }
  std::cerr << "estimate: " << rows.front().quantity << " = "
            << rows.front().mean << " (se " << rows.front().std_error
            << ")\n";
  return emit(rows, options.out);
}

int run_verify(const CommonOptions& options, const std::string& preset,
               int trials, double constant_override) {
  using namespace radcomplex;
  std::vector<CsvRow> rows;
  if (preset == "finite-random") {
    auto suite = suites::run_contraction_exact_suite(options.seed, trials);
    if (constant_override > 0.0) {
      // Diagnostic mode: replace the sqrt(2) contraction constant and
      // re-judge each exact instance.
      int violated = 0;
      for (auto& row : suite.rows) {
        const double scaled = *row.bound * constant_override / std::sqrt(2.0);
        row.bound = scaled;
        row.margin = scaled - row.mean;
        row.verdict = *row.margin >= -1e-9 ? "HOLDS" : "VIOLATED";
        if (*row.margin < -1e-9) ++violated;
      }
      std::cerr << "verify finite-random (constant " << constant_override
                << "): " << violated << "/" << trials << " violated\n";
    } else {
      std::cerr << "verify finite-random: " << suite.summary << "\n";
    }
    rows = suite.rows;
  } else if (preset == "khintchine") {
    const auto suite = suites::run_khintchine_suite(options.seed);
    rows = suite.rows;
    std::cerr << "verify khintchine: " << suite.summary << "\n";
  } else if (preset == "product") {
    const auto suite = suites::run_product_identity_suite(options.seed, trials);
    rows = suite.rows;
    std::cerr << "verify product: " << suite.summary << "\n";
  } else if (preset == "tails") {
    const auto suite = suites::run_tail_bound_suite(options.seed, options.draws);
    rows = suite.rows;
    std::cerr << "verify tails: " << suite.summary << "\n";
  } else if (preset == "single-variable") {
    int violated = 0;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
      const int k = 1 + static_cast<int>(rng::uniform01(seed, 0, 0) * 3);
      const int s_count = 2 + static_cast<int>(rng::uniform01(seed, 0, 1) * 3);
      std::vector<Eigen::MatrixXd> tables;
      std::vector<double> offsets;
      for (int s = 0; s < s_count; ++s) {
        Eigen::MatrixXd table(1, k);
        for (int j = 0; j < k; ++j) {
          table(0, j) = 2.0 * rng::uniform01(seed, 1, static_cast<std::uint64_t>(s * k + j)) - 1.0;
        }
        tables.push_back(table);
        offsets.push_back(2.0 * rng::uniform01(seed, 2, static_cast<std::uint64_t>(s)) - 1.0);
      }
      const auto cls = FunctionClass::finite(tables);
      const auto report = verify_single_variable(
          cls, LipschitzLoss::euclidean_norm(), offsets,
          SubgaussianDist::from_name(options.dist),
          ExpectationEngine::monte_carlo(SubgaussianDist::from_name(options.dist),
                                         options.draws, seed));
      if (report.verdict == Verdict::Violated) ++violated;
      CsvRow row{"verify/single-variable/" + std::to_string(t),
                 "single_variable", report.lhs.mean, report.lhs.std_error,
                 report.mode == VerdictMode::Exact ? "EXACT_ENUM"
                                                   : "MONTE_CARLO",
                 report.rhs.mean, to_string(report.verdict), report.margin};
      rows.push_back(row);
    }
    std::cerr << "verify single-variable: " << violated << "/" << trials
              << " violated\n";
  } else {
    std::cerr << "error: unknown preset " << preset << "\n";
    return kExitUsage;
  }
  return emit(rows, options.out);
}

int run_bounds(const std::string& formula, const CommonOptions& options,
               double mean, double complexity, int n, double delta, int k,
               double radius, double lipschitz, const std::string& traces_csv,
               double meta, const std::string& class_path) {
  using namespace radcomplex;
  BoundResult bound;
  if (formula == "theorem1") {
    bound = theorem1_bound(mean, complexity, n, delta);
  } else if (formula == "kmeans") {
    bound = kmeans_bound(k, n);
  } else if (formula == "frobenius") {
    const auto cls = load_class_file(class_path);
    bound = frobenius_bound(radius, cls.sample(), k);
  } else if (formula == "operator-kernel") {
    std::vector<double> traces;
    std::istringstream stream(traces_csv);
    std::string token;
    while (std::getline(stream, token, ',')) traces.push_back(std::stod(token));
    bound = operator_kernel_bound(lipschitz, radius, traces);
  } else if (formula == "ltl") {
    bound = ltl_reduction_bound(lipschitz, n, meta);
  } else {
    std::cerr << "error: unknown formula " << formula << "\n";
    return kExitUsage;
  }
  std::cerr << "bound " << bound.formula << " = " << bound.value << " ("
            << bound.dominated << ")\n";
  std::vector<CsvRow> rows{CsvRow{"bounds/" + bound.formula, "bound",
                                  bound.value, 0.0, "CLOSED_FORM", {}, "",
                                  {}}};
  return emit(rows, options.out);
}

int run_counterexample(const CommonOptions& options, int n, double refute_k,
                       int n_max, bool mc_check) {
  using namespace radcomplex;
  std::vector<CsvRow> rows;
  const auto instance = counterexample_instance(n);
  std::cerr << "counterexample n=" << n << ": lhs=" << instance.lhs
            << " rhs=" << instance.rhs << " ratio=" << instance.ratio
            << " (conjectured norm-form inequality: REFUTED)\n";
  rows.push_back(CsvRow{"counterexample/n=" + std::to_string(n), "lhs",
                        instance.lhs, 0.0, "CLOSED_FORM", {}, "", {}});
  rows.push_back(CsvRow{"counterexample/n=" + std::to_string(n), "rhs",
                        instance.rhs, 0.0, "CLOSED_FORM", {}, "", {}});
  rows.push_back(CsvRow{"counterexample/n=" + std::to_string(n), "ratio",
                        instance.ratio, 0.0, "CLOSED_FORM", {}, "REFUTED",
                        {}});
  if (refute_k > 0.0) {
    const auto smallest = refute_conjecture(refute_k, n_max);
    if (smallest) {
      std::cerr << "smallest n with n/2 > " << refute_k << " sqrt(n): "
                << *smallest << "\n";
      rows.push_back(CsvRow{"counterexample/refute", "smallest_n",
                            static_cast<double>(*smallest), 0.0, "CLOSED_FORM",
                            {}, "REFUTED", {}});
    } else {
      std::cerr << "no n <= " << n_max << " defeats K = " << refute_k << "\n";
    }
  }
  if (mc_check) {
    const auto engine =
        n <= ExpectationEngine::kExactEnumBits
            ? ExpectationEngine::exact_enum(options.seed)
            : ExpectationEngine::monte_carlo(SubgaussianDist::rademacher(),
                                             options.draws, options.seed);
    const auto check = counterexample_mc_crosscheck(n, engine);
    rows.push_back(CsvRow{"counterexample/n=" + std::to_string(n),
                          "lhs_crosscheck", check.lhs_estimate.mean,
                          check.lhs_estimate.std_error,
                          to_string(check.lhs_estimate.method), instance.lhs,
                          check.ok ? "AGREES" : "DISAGREES",
                          check.lhs_estimate.mean - instance.lhs});
  }
  return emit(rows, options.out);
}

int run_suite_command(const CommonOptions& options, bool all,
                      const std::string& name) {
  using radcomplex::suites::SuiteResult;
  std::vector<CsvRow> rows;
  std::vector<SuiteResult> results;
  if (all) {
    results = radcomplex::suites::run_all_suites(options.seed);
  } else {
    results.push_back(radcomplex::suites::run_suite(name, options.seed));
  }
  bool all_passed = true;
  for (const auto& result : results) {
    std::cerr << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << ": "
              << result.summary << "\n";
    all_passed &= result.passed;
    rows.insert(rows.end(), result.rows.begin(), result.rows.end());
  }
  const int emit_code = emit(rows, options.out);
  if (emit_code != kExitOk) return emit_code;
  return all_passed ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for Rademacher/sub-gaussian complexities"};
  app.require_subcommand(1);

  CommonOptions estimate_options;
  std::string class_path, quantity = "vector", losses_spec = "norm",
              method = "auto";
  auto* estimate = app.add_subcommand("estimate", "estimate a complexity");
  estimate->add_option("--class", class_path, "class file")->required();
  estimate->add_option("--quantity", quantity, "scalar | vector | sum-norm");
  estimate->add_option("--losses", losses_spec,
                       "loss spec for scalar complexity "
                       "(norm | max | margin:label,gamma | dist:coords)");
  estimate->add_option("--method", method, "auto | exact | mc");
  add_common(estimate, estimate_options);

  CommonOptions verify_options;
  std::string preset = "finite-random";
  int trials = 200;
  double constant_override = 0.0;
  auto* verify = app.add_subcommand("verify", "run a verification preset");
  verify->add_option("--preset", preset,
                     "finite-random | single-variable | khintchine | product "
                     "| tails");
  verify->add_option("--trials", trials, "number of random instances");
  verify->add_option("--constant", constant_override,
                     "diagnostic: override the contraction constant");
  add_common(verify, verify_options);

  CommonOptions bounds_options;
  std::string formula = "kmeans", traces_csv = "1", bounds_class;
  double mean = 0.0, complexity = 0.0, delta = 0.1, radius = 1.0,
         lipschitz = 1.0, meta = 0.0;
  int n = 1, k = 1;
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds->add_option("--formula", formula,
                     "theorem1 | kmeans | frobenius | operator-kernel | ltl");
  bounds->add_option("--mean", mean, "empirical mean (theorem1)");
  bounds->add_option("--complexity", complexity, "complexity R (theorem1)");
  bounds->add_option("--n", n, "sample size");
  bounds->add_option("--delta", delta, "confidence parameter (theorem1)");
  bounds->add_option("--K", k, "output dimension / center count");
  bounds->add_option("--B", radius, "norm-ball radius");
  bounds->add_option("--L", lipschitz, "Lipschitz constant");
  bounds->add_option("--traces", traces_csv, "comma-separated kernel traces");
  bounds->add_option("--meta", meta, "meta complexity estimate (ltl)");
  bounds->add_option("--class", bounds_class, "class file (frobenius)");
  add_common(bounds, bounds_options);

  CommonOptions ce_options;
  int ce_n = 4, ce_n_max = 1000;
  double ce_refute_k = 0.0;
  bool ce_mc_check = false;
  auto* counterexample =
      app.add_subcommand("counterexample", "reproduce the norm-form refutation");
  counterexample->add_option("--n", ce_n, "sample size");
  counterexample->add_option("--refute-K", ce_refute_k,
                             "find smallest n defeating this constant");
  counterexample->add_option("--n-max", ce_n_max, "search limit");
  counterexample->add_flag("--mc-check", ce_mc_check,
                           "cross-check closed forms by enumeration/MC");
  add_common(counterexample, ce_options);

  CommonOptions suite_options;
  bool suite_all = false;
  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run bundled verification suites");
  suite->add_flag("--all", suite_all, "run every suite in order");
  suite->add_option("--name", suite_name, "run one suite by name");
  add_common(suite, suite_options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (estimate->parsed()) {
      return run_estimate(estimate_options, class_path, quantity, losses_spec,
                          method);
    }
    if (verify->parsed()) {
      return run_verify(verify_options, preset, trials, constant_override);
    }
    if (bounds->parsed()) {
      return run_bounds(formula, bounds_options, mean, complexity, n, delta, k,
                        radius, lipschitz, traces_csv, meta, bounds_class);
    }
    if (counterexample->parsed()) {
      return run_counterexample(ce_options, ce_n, ce_refute_k, ce_n_max,
                                ce_mc_check);
    }
    if (suite->parsed()) {
      if (!suite_all && suite_name.empty()) {
        std::cerr << "error: suite needs --all or --name\n";
        return kExitUsage;
      }
      return run_suite_command(suite_options, suite_all, suite_name);
    }
  } catch (const radcomplex::ClassFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
