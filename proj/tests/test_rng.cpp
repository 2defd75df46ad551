#include <doctest.h>

#include <initializer_list>
#include <cmath>

#include "radcomplex/rng.hpp"

using namespace radcomplex;

TEST_CASE("cell_bits is a pure function of its arguments") {
  CHECK(rng::cell_bits(1, 2, 3) == rng::cell_bits(1, 2, 3));
  CHECK(rng::cell_bits(1, 2, 3) != rng::cell_bits(1, 2, 4));
  CHECK(rng::cell_bits(1, 2, 3) != rng::cell_bits(1, 3, 3));
  CHECK(rng::cell_bits(1, 2, 3) != rng::cell_bits(2, 2, 3));
}

TEST_CASE("uniform01 stays in [0,1) and looks uniform") {
  double sum = 0.0;
  double min = 1.0, max = 0.0;
  const int m = 100000;
  for (int j = 0; j < m; ++j) {
    const double u = rng::uniform01(42, static_cast<std::uint64_t>(j), 0);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    min = std::min(min, u);
    max = std::max(max, u);
  }
  CHECK(sum / m == doctest::Approx(0.5).epsilon(0.01));
  CHECK(min < 0.001);
  CHECK(max > 0.999);
}

TEST_CASE("rademacher_sign is a balanced sign") {
  int positives = 0;
  const int m = 100000;
  for (int j = 0; j < m; ++j) {
    const double s = rng::rademacher_sign(7, static_cast<std::uint64_t>(j), 5);
    CHECK(std::abs(s) == 1.0);
    positives += s > 0.0;
  }
  // 5 sigma band around m/2
  CHECK(std::abs(positives - m / 2) < 5 * std::sqrt(m / 4.0));
}

TEST_CASE("inverse normal cdf hits the standard quantiles") {
  CHECK(rng::inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rng::inverse_normal_cdf(0.975) ==
        doctest::Approx(1.959963985).epsilon(1e-7));
  CHECK(rng::inverse_normal_cdf(0.8413447461) ==
        doctest::Approx(1.0).epsilon(1e-7));
  for (const double p : {0.01, 0.2, 0.35, 0.49}) {
    CHECK(rng::inverse_normal_cdf(p) ==
          doctest::Approx(-rng::inverse_normal_cdf(1.0 - p)).epsilon(1e-8));
  }
}

TEST_CASE("standard_normal has zero mean and unit variance at scale") {
  double sum = 0.0, sq = 0.0;
  const int m = 200000;
  for (int j = 0; j < m; ++j) {
    const double g = rng::standard_normal(11, static_cast<std::uint64_t>(j), 2);
    sum += g;
    sq += g * g;
  }
  CHECK(sum / m == doctest::Approx(0.0).epsilon(0.02));
  CHECK(sq / m == doctest::Approx(1.0).epsilon(0.02));
}
