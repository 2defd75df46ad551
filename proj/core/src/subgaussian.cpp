#include "radcomplex/subgaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "radcomplex/rng.hpp"

namespace radcomplex {

SubgaussianDist SubgaussianDist::uniform_symmetric(double halfwidth) {
  if (!(halfwidth > 0.0)) {
    throw std::invalid_argument("uniform_symmetric: halfwidth must be > 0");
  }
  return SubgaussianDist(DistKind::UniformSymmetric, halfwidth,
                         halfwidth * halfwidth / 3.0, halfwidth);
}

SubgaussianDist SubgaussianDist::from_name(const std::string& name) {
  if (name == "rademacher") return rademacher();
  if (name == "normal" || name == "gaussian") return standard_normal();
  if (name.rfind("uniform", 0) == 0) {
    double a = 1.0;
    const auto colon = name.find(':');
    if (colon != std::string::npos) a = std::stod(name.substr(colon + 1));
    return uniform_symmetric(a);
  }
  throw std::invalid_argument("unknown distribution name: " + name);
}

std::string SubgaussianDist::name() const {
  switch (kind_) {
    case DistKind::Rademacher:
      return "rademacher";
    case DistKind::StandardNormal:
      return "normal";
    case DistKind::UniformSymmetric:
      return "uniform:" + std::to_string(halfwidth_);
  }
  return "?";
}

double SubgaussianDist::sample(std::uint64_t seed, std::uint64_t draw,
                               std::uint64_t cell) const {
  switch (kind_) {
    case DistKind::Rademacher:
      return rng::rademacher_sign(seed, draw, cell);
    case DistKind::StandardNormal:
      return rng::standard_normal(seed, draw, cell);
    case DistKind::UniformSymmetric:
      return halfwidth_ * (2.0 * rng::uniform01(seed, draw, cell) - 1.0);
  }
  return 0.0;
}

double tail_bound(double t, double b) {
  if (t < 0.0) throw std::domain_error("tail_bound: t must be >= 0");
  if (!(b > 0.0)) throw std::domain_error("tail_bound: b must be > 0");
  return 2.0 * std::exp(-t * t / (2.0 * b * b));
}

KhintchineConstant khintchine_constant(const SubgaussianDist& dist,
                                       ConstantMode mode) {
  if (!(dist.second_moment() > 0.0)) {
    throw std::invalid_argument("khintchine_constant: trivial distribution");
  }
  if (mode == ConstantMode::BestKnown) {
    if (dist.kind() == DistKind::Rademacher) {
      return {std::sqrt(2.0), ConstantMode::BestKnown};
    }
    if (dist.kind() == DistKind::StandardNormal) {
      return {std::sqrt(M_PI / 2.0), ConstantMode::BestKnown};
    }
    // fall through: no sharp constant on record for this law
  }
  // (8 int_0^inf t^3 exp(-t^2/(2b^2)) dt)^(1/2) / E[X^2]^(3/2); the
  // integral is 2 b^4, so the numerator is 4 b^2.
  const double ex2 = dist.second_moment();
  const double value = 4.0 * dist.b() * dist.b() / std::pow(ex2, 1.5);
  return {value, ConstantMode::GenericFormula};
}

}  // namespace radcomplex
