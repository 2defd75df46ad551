#include <doctest.h>

#include <initializer_list>
#include <cmath>
#include <vector>

#include "radcomplex/lipschitz.hpp"
#include "radcomplex/rng.hpp"

using namespace radcomplex;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const double value : values) v[i++] = value;
  return v;
}

Eigen::VectorXd random_vec(int dim, std::uint64_t seed, std::uint64_t draw) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = 4.0 * rng::uniform01(seed, draw, static_cast<std::uint64_t>(i)) - 2.0;
  }
  return v;
}

}  // namespace

TEST_CASE("catalog evaluation") {
  CHECK(LipschitzLoss::euclidean_norm().eval(vec({3, 4})) == 5.0);
  CHECK(LipschitzLoss::max_coordinate().eval(vec({-1, 2, 0})) == 2.0);
  CHECK(LipschitzLoss::distance_to_point(vec({1, 1})).eval(vec({1, 1})) == 0.0);
  CHECK(LipschitzLoss::distance_to_point(vec({1, 1})).eval(vec({4, 5})) == 5.0);

  const auto margin = LipschitzLoss::margin_loss(0, 1.0);
  CHECK(margin.eval(vec({2, 0})) == 0.0);       // margin 2, hinge clips at 0
  CHECK(margin.eval(vec({0, 0})) == 1.0);       // margin 0
  CHECK(margin.eval(vec({0.5, 0})) == 0.5);     // margin 0.5
  CHECK(margin.eval(vec({-3, 0})) == 1.0);      // clipped above
  CHECK(margin.lipschitz_constant() == doctest::Approx(std::sqrt(2.0)));
  CHECK(LipschitzLoss::margin_loss(1, 0.5).lipschitz_constant() ==
        doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(LipschitzLoss::distance_to_point(vec({1, 1})).eval(vec({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(LipschitzLoss::margin_loss(3, 1.0).eval(vec({0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(LipschitzLoss::margin_loss(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LipschitzLoss::margin_loss(0, 0.0), std::invalid_argument);
}

TEST_CASE("custom losses look up exact table rows") {
  const std::vector<Eigen::VectorXd> points = {vec({0, 0}), vec({3, 4})};
  const auto loss = LipschitzLoss::custom(points, {0.25, 1.0});
  CHECK(loss.eval(vec({0, 0})) == 0.25);
  CHECK(loss.eval(vec({3, 4})) == 1.0);
  CHECK_THROWS_AS(loss.eval(vec({1, 1})), std::invalid_argument);
  CHECK(loss.lipschitz_constant() == doctest::Approx(0.15));  // 0.75 / 5

  // Equal points with different values admit no finite constant.
  CHECK_THROWS_AS(LipschitzLoss::custom({vec({1, 1}), vec({1, 1})}, {0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("certified constants hold on random pairs") {
  const auto losses = {
      LipschitzLoss::euclidean_norm(), LipschitzLoss::max_coordinate(),
      LipschitzLoss::distance_to_point(vec({0.5, -1.0, 2.0})),
      LipschitzLoss::margin_loss(1, 0.7)};
  int loss_index = 0;
  for (const auto& loss : losses) {
    for (int pair = 0; pair < 10000; ++pair) {
      const auto u = random_vec(3, 17, static_cast<std::uint64_t>(2 * pair));
      const auto v =
          random_vec(3, 17, static_cast<std::uint64_t>(2 * pair + 1));
      const double gap = std::abs(loss.eval(u) - loss.eval(v));
      REQUIRE(gap <= loss.lipschitz_constant() * (u - v).norm() + 1e-12);
    }
    ++loss_index;
  }
  CHECK(loss_index == 4);
}

TEST_CASE("empirical_lipschitz basics") {
  const std::vector<Eigen::VectorXd> phi = {vec({0, 0}), vec({3, 4})};
  const std::vector<double> psi = {0.0, 5.0};
  CHECK(*empirical_lipschitz(psi, phi) == doctest::Approx(1.0));

  const std::vector<double> doubled = {0.0, 10.0};
  CHECK(*empirical_lipschitz(doubled, phi) == doctest::Approx(2.0));

  // Single element: constant zero.
  CHECK(*empirical_lipschitz(std::vector<double>{3.0},
                             {vec({1, 2})}) == 0.0);

  // Equal phi with different psi: no finite constant.
  CHECK(!empirical_lipschitz(std::vector<double>{0.0, 1.0},
                             {vec({1, 1}), vec({1, 1})})
             .has_value());
}

TEST_CASE("empirical_lipschitz agrees with pairwise brute force") {
  const int elements = 8;
  std::vector<Eigen::VectorXd> phi;
  std::vector<double> psi;
  for (int s = 0; s < elements; ++s) {
    phi.push_back(random_vec(3, 23, static_cast<std::uint64_t>(s)));
    psi.push_back(2.0 * rng::uniform01(23, 100, static_cast<std::uint64_t>(s)) -
                  1.0);
  }
  double brute = 0.0;
  for (int s = 0; s < elements; ++s) {
    for (int t = 0; t < elements; ++t) {
      if (s == t) continue;
      const double dist = (phi[static_cast<std::size_t>(s)] -
                           phi[static_cast<std::size_t>(t)])
                              .norm();
      if (dist > 0.0) {
        brute = std::max(brute, (psi[static_cast<std::size_t>(s)] -
                                 psi[static_cast<std::size_t>(t)]) /
                                    dist);
      }
    }
  }
  CHECK(*empirical_lipschitz(psi, phi) == doctest::Approx(brute).epsilon(1e-15));
}

TEST_CASE("empirical_lipschitz scales exactly under dyadic rescaling") {
  std::vector<Eigen::VectorXd> phi;
  std::vector<double> psi;
  for (int s = 0; s < 6; ++s) {
    phi.push_back(random_vec(2, 31, static_cast<std::uint64_t>(s)));
    psi.push_back(rng::uniform01(31, 50, static_cast<std::uint64_t>(s)));
  }
  const double base = *empirical_lipschitz(psi, phi);
  for (const double c : {2.0, -0.5}) {
    std::vector<double> scaled(psi);
    for (auto& value : scaled) value *= c;
    CHECK(*empirical_lipschitz(scaled, phi) == std::abs(c) * base);
  }
}
