#include <doctest.h>

#include <initializer_list>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "radcomplex/rng.hpp"
#include "radcomplex/subgaussian.hpp"

using namespace radcomplex;

namespace {

// Simpson's rule on [0, hi].
double simpson(const std::function<double(double)>& f, double hi, int panels) {
  const double h = hi / panels;
  double total = f(0.0) + f(hi);
  for (int i = 1; i < panels; ++i) {
    total += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return total * h / 3.0;
}

// Closed-form moment generating functions of the three laws.
double mgf(const SubgaussianDist& dist, double lambda) {
  switch (dist.kind()) {
    case DistKind::Rademacher:
      return std::cosh(lambda);
    case DistKind::StandardNormal:
      return std::exp(lambda * lambda / 2.0);
    case DistKind::UniformSymmetric: {
      const double la = lambda * dist.halfwidth();
      return la == 0.0 ? 1.0 : std::sinh(la) / la;
    }
  }
  return 0.0;
}

}  // namespace

TEST_CASE("distribution parameters") {
  const auto rad = SubgaussianDist::rademacher();
  CHECK(rad.b() == 1.0);
  CHECK(rad.second_moment() == 1.0);
  const auto normal = SubgaussianDist::standard_normal();
  CHECK(normal.b() == 1.0);
  CHECK(normal.second_moment() == 1.0);
  const auto uniform = SubgaussianDist::uniform_symmetric(2.0);
  CHECK(uniform.b() == 2.0);
  CHECK(uniform.second_moment() == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(SubgaussianDist::uniform_symmetric(0.0),
                  std::invalid_argument);
}

TEST_CASE("sub-gaussian mgf bound holds on a lambda grid") {
  const std::vector<SubgaussianDist> dists = {
      SubgaussianDist::rademacher(), SubgaussianDist::standard_normal(),
      SubgaussianDist::uniform_symmetric(1.0),
      SubgaussianDist::uniform_symmetric(2.5)};
  for (const auto& dist : dists) {
    for (double lambda = -4.0; lambda <= 4.0; lambda += 0.25) {
      const double bound =
          std::exp(lambda * lambda * dist.b() * dist.b() / 2.0);
      CHECK(mgf(dist, lambda) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("sampled law is symmetric (two-sample KS)") {
  const int m = 20000;
  for (const auto& dist :
       {SubgaussianDist::standard_normal(),
        SubgaussianDist::uniform_symmetric(1.5)}) {
    std::vector<double> x(m), neg(m);
    for (int j = 0; j < m; ++j) {
      x[static_cast<std::size_t>(j)] =
          dist.sample(99, static_cast<std::uint64_t>(j), 0);
      neg[static_cast<std::size_t>(j)] = -x[static_cast<std::size_t>(j)];
    }
    std::sort(x.begin(), x.end());
    std::sort(neg.begin(), neg.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < neg.size()) {
      if (x[i] <= neg[j]) {
        ++i;
      } else {
        ++j;
      }
      d = std::max(d, std::abs(static_cast<double>(i) - static_cast<double>(j)) / m);
    }
    CHECK(d <= 0.03);
  }
}

TEST_CASE("sample moments match the stored second moment") {
  const int m = 100000;
  for (const auto& dist :
       {SubgaussianDist::rademacher(), SubgaussianDist::standard_normal(),
        SubgaussianDist::uniform_symmetric(2.0)}) {
    double sq = 0.0;
    for (int j = 0; j < m; ++j) {
      const double v = dist.sample(5, static_cast<std::uint64_t>(j), 1);
      sq += v * v;
    }
    CHECK(sq / m == doctest::Approx(dist.second_moment()).epsilon(0.02));
  }
}

TEST_CASE("tail_bound evaluates the closed form") {
  CHECK(tail_bound(0.0, 1.0) == 2.0);
  CHECK(tail_bound(2.0, 1.0) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(tail_bound(3.0, 2.0) ==
        doctest::Approx(2.0 * std::exp(-9.0 / 8.0)).epsilon(1e-15));
  CHECK_THROWS_AS(tail_bound(-0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(tail_bound(1.0, 0.0), std::domain_error);
}

TEST_CASE("khintchine constants: best known values") {
  const auto rad =
      khintchine_constant(SubgaussianDist::rademacher(), ConstantMode::BestKnown);
  CHECK(rad.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rad.provenance == ConstantMode::BestKnown);

  const auto normal = khintchine_constant(SubgaussianDist::standard_normal(),
                                          ConstantMode::BestKnown);
  CHECK(normal.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-15));
  CHECK(normal.provenance == ConstantMode::BestKnown);

  // No sharp constant on record for the uniform law: falls back.
  const auto uniform = khintchine_constant(SubgaussianDist::uniform_symmetric(1.0),
                                           ConstantMode::BestKnown);
  CHECK(uniform.provenance == ConstantMode::GenericFormula);
}

TEST_CASE("generic formula matches quadrature of the defining integral") {
  // C = (8 int_0^inf t^3 exp(-t^2/(2 b^2)) dt)^(1/2) / E[X^2]^(3/2)
  for (const auto& dist :
       {SubgaussianDist::rademacher(), SubgaussianDist::standard_normal(),
        SubgaussianDist::uniform_symmetric(0.5),
        SubgaussianDist::uniform_symmetric(2.0)}) {
    const double b = dist.b();
    const double integral = simpson(
        [b](double t) { return t * t * t * std::exp(-t * t / (2.0 * b * b)); },
        12.0 * b, 20000);
    const double via_quadrature =
        std::sqrt(8.0 * integral) / std::pow(dist.second_moment(), 1.5);
    const auto generic =
        khintchine_constant(dist, ConstantMode::GenericFormula);
    CHECK(generic.value == doctest::Approx(via_quadrature).epsilon(1e-8));
  }
  // Rademacher: sqrt(8 * 2) / 1 = 4 exactly.
  CHECK(khintchine_constant(SubgaussianDist::rademacher(),
                            ConstantMode::GenericFormula)
            .value == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("distribution names round-trip") {
  CHECK(SubgaussianDist::from_name("rademacher").kind() ==
        DistKind::Rademacher);
  CHECK(SubgaussianDist::from_name("normal").kind() ==
        DistKind::StandardNormal);
  CHECK(SubgaussianDist::from_name("uniform:2.5").halfwidth() == 2.5);
  CHECK_THROWS_AS(SubgaussianDist::from_name("cauchy"), std::invalid_argument);
}
