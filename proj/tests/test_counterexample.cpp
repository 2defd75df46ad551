#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "radcomplex/counterexample.hpp"

using namespace radcomplex;

TEST_CASE("closed forms: n/2 and sqrt(n)") {
  const auto one = counterexample_instance(1);
  CHECK(one.lhs == 0.5);
  CHECK(one.rhs == 1.0);
  CHECK(one.ratio == 0.5);

  const auto four = counterexample_instance(4);
  CHECK(four.lhs == 2.0);
  CHECK(four.rhs == 2.0);
  CHECK(four.ratio == 1.0);

  const auto hundred = counterexample_instance(100);
  CHECK(hundred.lhs == 50.0);
  CHECK(hundred.rhs == 10.0);
  CHECK(hundred.ratio == 5.0);

  CHECK_THROWS_AS(counterexample_instance(0), std::invalid_argument);
}

TEST_CASE("the ratio grows without bound") {
  double previous = 0.0;
  for (int n = 1; n <= 4096; n *= 2) {
    const auto instance = counterexample_instance(n);
    CHECK(instance.lhs == n / 2.0);
    CHECK(instance.rhs == std::sqrt(static_cast<double>(n)));
    CHECK(instance.ratio > previous);
    previous = instance.ratio;
  }
  CHECK(previous == 32.0);  // sqrt(4096)/2
}

TEST_CASE("refute_conjecture finds the first defeating n") {
  CHECK(*refute_conjecture(1.0, 1000) == 5);
  CHECK(*refute_conjecture(10.0, 1000) == 401);
  CHECK(!refute_conjecture(10.0, 100).has_value());
  CHECK_THROWS_AS(refute_conjecture(0.0, 10), std::invalid_argument);

  // Boundary: the returned n defeats the constant, n - 1 does not.
  for (const double k : {0.5, 1.0, 2.5, 7.0}) {
    const int n = *refute_conjecture(k, 100000);
    CHECK(n / 2.0 > k * std::sqrt(static_cast<double>(n)));
    if (n > 1) {
      CHECK((n - 1) / 2.0 <= k * std::sqrt(static_cast<double>(n - 1)));
    }
  }
}

TEST_CASE("enumeration crosscheck reproduces the closed forms") {
  const auto exact = ExpectationEngine::exact_enum();
  const auto two = counterexample_mc_crosscheck(2, exact);
  // (0 + 1 + 1 + 2) / 4 = 1 = n/2.
  CHECK(two.lhs_estimate.mean == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.rhs_estimate.mean == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(two.ok);

  for (const int n : {1, 7, 12, 20}) {
    const auto check = counterexample_mc_crosscheck(n, exact);
    CHECK(std::abs(check.lhs_estimate.mean - n / 2.0) <= 1e-12);
    CHECK(check.ok);
  }
}

TEST_CASE("Monte Carlo crosscheck at n = 16") {
  const auto mc = ExpectationEngine::monte_carlo(SubgaussianDist::rademacher(),
                                                 10000, 99);
  const auto check = counterexample_mc_crosscheck(16, mc);
  CHECK(std::abs(check.lhs_estimate.mean - 8.0) <=
        3.0 * check.lhs_estimate.std_error);
  CHECK(check.ok);
}
