#include <doctest.h>

#include <initializer_list>
#include <cmath>
#include <vector>

#include "radcomplex/contraction.hpp"
#include "radcomplex/estimator.hpp"

using namespace radcomplex;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::uint64_t seed,
                              std::uint64_t draw) {
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = 2.0 * rng::uniform01(seed, draw,
                                     static_cast<std::uint64_t>(r * cols + c)) -
                1.0;
    }
  }
  return m;
}

ComplexityEstimate exact_estimate(double mean,
                                  Exactness exactness = Exactness::Exact) {
  ComplexityEstimate e;
  e.mean = mean;
  e.method = Method::ExactEnum;
  e.exactness = exactness;
  return e;
}

ComplexityEstimate mc_estimate(double mean, double se) {
  ComplexityEstimate e;
  e.mean = mean;
  e.std_error = se;
  e.draws = 1000;
  e.method = Method::MonteCarlo;
  return e;
}

}  // namespace

TEST_CASE("verdict rules") {
  // Exact mode.
  CHECK(make_verification_report(exact_estimate(1.0), exact_estimate(1.0), 1.5)
            .verdict == Verdict::Holds);
  CHECK(make_verification_report(exact_estimate(1.0 + 1e-12),
                                 exact_estimate(1.0), 1.0)
            .verdict == Verdict::HoldsWithinTolerance);
  CHECK(make_verification_report(exact_estimate(1.1), exact_estimate(1.0), 1.0)
            .verdict == Verdict::Violated);
  // A lower-bound oracle can never certify a violation.
  CHECK(make_verification_report(exact_estimate(1.1),
                                 exact_estimate(1.0, Exactness::LowerBound),
                                 1.0)
            .verdict == Verdict::Inconclusive);

  // Statistical mode: 3 standard errors of slack on each side.
  CHECK(make_verification_report(mc_estimate(1.05, 0.02), mc_estimate(1.0, 0.0),
                                 1.0)
            .verdict == Verdict::HoldsWithinTolerance);
  CHECK(make_verification_report(mc_estimate(1.5, 0.02), mc_estimate(1.0, 0.01),
                                 1.0)
            .verdict == Verdict::Violated);

  // Monotonicity in the constant: enlarging C preserves HOLDS.
  const auto base =
      make_verification_report(exact_estimate(1.0), exact_estimate(0.8), 1.5);
  CHECK(base.verdict == Verdict::Holds);
  for (double c = 1.5; c <= 4.0; c += 0.5) {
    CHECK(make_verification_report(exact_estimate(1.0), exact_estimate(0.8), c)
              .verdict == Verdict::Holds);
  }
}

TEST_CASE("vector contraction on a singleton holds with zero margin") {
  const auto cls = FunctionClass::finite({Eigen::MatrixXd::Zero(2, 2)});
  const std::vector<LipschitzLoss> losses(2, LipschitzLoss::euclidean_norm());
  const auto report =
      verify_vector_contraction(cls, losses, SubgaussianDist::rademacher(),
                                ExpectationEngine::exact_enum());
  CHECK(report.lhs.mean == 0.0);
  CHECK(report.rhs.mean == 0.0);
  CHECK(report.margin == 0.0);
  CHECK(report.verdict == Verdict::Holds);
}

TEST_CASE("vector contraction holds on random exact instances") {
  const auto exact = ExpectationEngine::exact_enum();
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t seed = 7000 + static_cast<std::uint64_t>(t);
    const int n = 1 + static_cast<int>(rng::uniform01(seed, 0, 0) * 4);
    const int k = 1 + static_cast<int>(rng::uniform01(seed, 0, 1) * 3);
    const int tables = 1 + static_cast<int>(rng::uniform01(seed, 0, 2) * 6);
    std::vector<Eigen::MatrixXd> list;
    for (int s = 0; s < tables; ++s) {
      list.push_back(random_matrix(n, k, seed, 10 + static_cast<std::uint64_t>(s)));
    }
    const auto cls = FunctionClass::finite(list);
    const std::vector<LipschitzLoss> losses(
        static_cast<std::size_t>(n), LipschitzLoss::euclidean_norm());
    const auto report = verify_vector_contraction(
        cls, losses, SubgaussianDist::rademacher(), exact);
    CHECK(report.verdict != Verdict::Violated);
    CHECK(report.mode == VerdictMode::Exact);
  }
}

TEST_CASE("vector contraction with gaussian noise and the sharp constant") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(t);
    const int n = 1 + static_cast<int>(rng::uniform01(seed, 0, 0) * 3);
    const int k = 1 + static_cast<int>(rng::uniform01(seed, 0, 1) * 2);
    std::vector<Eigen::MatrixXd> list;
    for (int s = 0; s < 4; ++s) {
      list.push_back(random_matrix(n, k, seed, 20 + static_cast<std::uint64_t>(s)));
    }
    const auto cls = FunctionClass::finite(list);
    const std::vector<LipschitzLoss> losses(
        static_cast<std::size_t>(n), LipschitzLoss::euclidean_norm());
    const auto report = verify_vector_contraction(
        cls, losses, SubgaussianDist::standard_normal(),
        ExpectationEngine::monte_carlo(SubgaussianDist::standard_normal(),
                                       20000, seed));
    CHECK(report.constant == doctest::Approx(std::sqrt(M_PI / 2.0)));
    CHECK(report.verdict != Verdict::Violated);
  }
}

TEST_CASE("scale equivariance: doubling the losses doubles the lhs exactly") {
  const auto exact = ExpectationEngine::exact_enum();
  std::vector<Eigen::MatrixXd> list = {random_matrix(2, 2, 31, 0),
                                       random_matrix(2, 2, 31, 1),
                                       random_matrix(2, 2, 31, 2)};
  const auto cls = FunctionClass::finite(list);

  // Table-based losses certified from the class values, then scaled.
  std::vector<LipschitzLoss> base, doubled;
  for (int i = 0; i < 2; ++i) {
    std::vector<Eigen::VectorXd> points;
    std::vector<double> values;
    for (const auto& table : list) {
      points.push_back(table.row(i).transpose());
      values.push_back(rng::uniform01(31, 5, static_cast<std::uint64_t>(
                                                 i * 8 + static_cast<int>(values.size()))));
    }
    std::vector<double> twice(values);
    for (auto& v : twice) v *= 2.0;
    base.push_back(LipschitzLoss::custom(points, values));
    doubled.push_back(LipschitzLoss::custom(points, twice));
  }
  const auto r1 = verify_vector_contraction(cls, base,
                                            SubgaussianDist::rademacher(), exact);
  const auto r2 = verify_vector_contraction(cls, doubled,
                                            SubgaussianDist::rademacher(), exact);
  CHECK(r2.lhs.mean == 2.0 * r1.lhs.mean);
  CHECK(r2.constant == 2.0 * r1.constant);
  CHECK((r1.verdict == Verdict::Violated) == (r2.verdict == Verdict::Violated));
}

TEST_CASE("single-variable lemma: worked example") {
  Eigen::MatrixXd t1(1, 2), t2(1, 2);
  t1 << 1, 0;
  t2 << 0, 1;
  const auto cls = FunctionClass::finite({t1, t2});
  const std::vector<double> offsets = {0.0, 0.0};
  const auto report = verify_single_variable(
      cls, LipschitzLoss::euclidean_norm(), offsets,
      SubgaussianDist::rademacher(), ExpectationEngine::exact_enum());
  // Both tables have unit norm, so the left side collapses to E eps = 0;
  // the right side is sqrt(2) E max(e1, e2) = sqrt(2)/2.
  CHECK(report.lhs.mean == 0.0);
  CHECK(report.rhs.mean == doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-12));
  CHECK(report.verdict == Verdict::Holds);

  // Zero offsets, singleton class: 0 <= 0.
  const auto singleton = FunctionClass::finite({Eigen::MatrixXd::Zero(1, 2)});
  const auto trivial = verify_single_variable(
      singleton, LipschitzLoss::euclidean_norm(), std::vector<double>{0.0},
      SubgaussianDist::rademacher(), ExpectationEngine::exact_enum());
  CHECK(trivial.lhs.mean == 0.0);
  CHECK(trivial.rhs.mean == 0.0);
  CHECK(trivial.verdict == Verdict::Holds);
}

TEST_CASE("single-variable lemma holds on random instances with offsets") {
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t seed = 11000 + static_cast<std::uint64_t>(t);
    const int k = 1 + static_cast<int>(rng::uniform01(seed, 0, 0) * 3);
    const int tables = 2 + static_cast<int>(rng::uniform01(seed, 0, 1) * 4);
    std::vector<Eigen::MatrixXd> list;
    std::vector<double> offsets;
    for (int s = 0; s < tables; ++s) {
      list.push_back(random_matrix(1, k, seed, 30 + static_cast<std::uint64_t>(s)));
      offsets.push_back(2.0 * rng::uniform01(seed, 1, static_cast<std::uint64_t>(s)) -
                        1.0);
    }
    const auto report = verify_single_variable(
        FunctionClass::finite(list), LipschitzLoss::euclidean_norm(), offsets,
        SubgaussianDist::rademacher(), ExpectationEngine::exact_enum());
    CHECK(report.verdict != Verdict::Violated);
  }
}

TEST_CASE("single-variable lemma input validation") {
  const auto cls = FunctionClass::finite({Eigen::MatrixXd::Zero(2, 2)});
  CHECK_THROWS_AS(
      verify_single_variable(cls, LipschitzLoss::euclidean_norm(),
                             std::vector<double>{0.0},
                             SubgaussianDist::rademacher(),
                             ExpectationEngine::exact_enum()),
      std::invalid_argument);
  const auto kmeans = FunctionClass::kmeans_centers(
      Sample(Eigen::MatrixXd::Zero(1, 2)), 1);
  CHECK_THROWS_AS(
      verify_single_variable(kmeans, LipschitzLoss::euclidean_norm(),
                             std::vector<double>{0.0},
                             SubgaussianDist::rademacher(),
                             ExpectationEngine::exact_enum()),
      std::invalid_argument);
}

TEST_CASE("product identity: trivial and worked examples") {
  // Singleton components: 0 = 0.
  std::vector<FunctionClass> singletons = {
      FunctionClass::finite({Eigen::MatrixXd::Zero(2, 1)}),
      FunctionClass::finite({Eigen::MatrixXd::Zero(2, 1)})};
  const auto trivial =
      product_identity_check(singletons, ExpectationEngine::exact_enum());
  CHECK(trivial.product_complexity == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(trivial.ok);

  // Two copies of {f, -f} with f(x1) = 1: 2 = 1 + 1.
  Eigen::MatrixXd plus(1, 1), minus(1, 1);
  plus << 1;
  minus << -1;
  std::vector<FunctionClass> pair = {FunctionClass::finite({plus, minus}),
                                     FunctionClass::finite({plus, minus})};
  const auto two = product_identity_check(pair, ExpectationEngine::exact_enum());
  CHECK(two.product_complexity == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two.component_sum == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two.ok);
}

TEST_CASE("product identity agrees with tuple brute force") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(t);
    const int n = 1 + static_cast<int>(rng::uniform01(seed, 0, 0) * 3);
    const int k = 3;
    std::vector<FunctionClass> components;
    for (int c = 0; c < k; ++c) {
      std::vector<Eigen::MatrixXd> tables;
      const int count = 1 + static_cast<int>(rng::uniform01(seed, 0, 1 + static_cast<std::uint64_t>(c)) * 3);
      for (int s = 0; s < count; ++s) {
        tables.push_back(
            random_matrix(n, 1, seed, 40 + static_cast<std::uint64_t>(10 * c + s)));
      }
      components.push_back(FunctionClass::finite(tables));
    }
    const auto report =
        product_identity_check(components, ExpectationEngine::exact_enum());
    CHECK(report.abs_diff <= 1e-12);

    // Independent oracle: enumerate sign matrices and component tuples.
    const int bits = n * k;
    double total = 0.0;
    for (std::uint64_t pattern = 0; pattern < (1ULL << bits); ++pattern) {
      double best = -1e300;
      std::size_t combos = 1;
      for (const auto& comp : components) combos *= comp.tables().size();
      for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t rest = combo;
        double value = 0.0;
        for (int c = 0; c < k; ++c) {
          const auto& tables = components[static_cast<std::size_t>(c)].tables();
          const auto& table = tables[rest % tables.size()];
          rest /= tables.size();
          for (int i = 0; i < n; ++i) {
            const double sign =
                (pattern >> (i * k + c)) & 1ULL ? -1.0 : 1.0;
            value += sign * table(i, 0);
          }
        }
        best = std::max(best, value);
      }
      total += best;
    }
    const double brute = total / static_cast<double>(1ULL << bits);
    CHECK(report.product_complexity == doctest::Approx(brute).epsilon(1e-10));
  }
}

TEST_CASE("theorem 1 coverage: trivial regimes") {
  const auto engine = ExpectationEngine::monte_carlo(
      SubgaussianDist::rademacher(), 1000, 3);

  // Constant functions never violate: the slack term is strictly positive.
  Eigen::MatrixXd constants(3, 4);
  constants << 0.2, 0.2, 0.2, 0.2, 0.5, 0.5, 0.5, 0.5, 0.9, 0.9, 0.9, 0.9;
  Eigen::VectorXd law(4);
  law << 0.25, 0.25, 0.25, 0.25;
  const auto fixed =
      theorem1_coverage_experiment(constants, law, 8, 0.1, 100, engine);
  CHECK(fixed.violations == 0);

  // n = 1: the deviation term alone exceeds the largest possible gap.
  const auto tiny = theorem1_coverage_experiment(constants, law, 1, 0.4, 100,
                                                 engine);
  CHECK(tiny.violations == 0);
}

TEST_CASE("theorem 1 coverage respects the delta budget") {
  Eigen::MatrixXd tables(5, 4);
  for (int f = 0; f < 5; ++f) {
    for (int x = 0; x < 4; ++x) {
      tables(f, x) = rng::uniform01(777, static_cast<std::uint64_t>(f),
                                    static_cast<std::uint64_t>(x));
    }
  }
  Eigen::VectorXd law(4);
  law << 0.4, 0.3, 0.2, 0.1;
  const auto engine = ExpectationEngine::monte_carlo(
      SubgaussianDist::rademacher(), 1000, 21);
  const auto result =
      theorem1_coverage_experiment(tables, law, 8, 0.3, 200, engine);
  CHECK(result.within_budget);
  CHECK(result.rate <= result.threshold);
}

TEST_CASE("theorem 1 coverage input validation") {
  Eigen::MatrixXd tables = Eigen::MatrixXd::Constant(2, 2, 0.5);
  Eigen::VectorXd law(2);
  law << 0.5, 0.5;
  const auto engine = ExpectationEngine::monte_carlo(
      SubgaussianDist::rademacher(), 1000, 3);
  CHECK_THROWS_AS(
      theorem1_coverage_experiment(tables, law, 4, 1.5, 100, engine),
      std::invalid_argument);
  CHECK_THROWS_AS(
      theorem1_coverage_experiment(tables, law, 4, 0.1, 10, engine),
      std::invalid_argument);
  Eigen::MatrixXd bad = tables;
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(theorem1_coverage_experiment(bad, law, 4, 0.1, 100, engine),
                  std::invalid_argument);
}
