#pragma once

#include <cstdint>
#include <string>

namespace radcomplex {

enum class DistKind { Rademacher, StandardNormal, UniformSymmetric };

// A symmetric sub-gaussian law: E exp(t X) <= exp(t^2 b^2 / 2) for all t.
// b is the sub-gaussian parameter.
class SubgaussianDist {
 public:
  static SubgaussianDist rademacher() {
    return SubgaussianDist(DistKind::Rademacher, 1.0, 1.0, 0.0);
  }
  static SubgaussianDist standard_normal() {
    return SubgaussianDist(DistKind::StandardNormal, 1.0, 1.0, 0.0);
  }
  // Uniform on [-a, a]; b = a is the Hoeffding parameter.
  static SubgaussianDist uniform_symmetric(double halfwidth);

  static SubgaussianDist from_name(const std::string& name);

  DistKind kind() const { return kind_; }
  double b() const { return b_; }
  double second_moment() const { return second_moment_; }
  double halfwidth() const { return halfwidth_; }
  std::string name() const;

  // Counter-based variate: pure function of (seed, draw, cell).
  double sample(std::uint64_t seed, std::uint64_t draw,
                std::uint64_t cell) const;

 private:
  SubgaussianDist(DistKind kind, double b, double second_moment,
                  double halfwidth)
      : kind_(kind),
        b_(b),
        second_moment_(second_moment),
        halfwidth_(halfwidth) {}

  DistKind kind_;
  double b_;
  double second_moment_;
  double halfwidth_;
};

// 2 exp(-t^2 / (2 b^2)): bound on Pr{|sum_k v_k X_k| > t} for unit v.
double tail_bound(double t, double b);

enum class ConstantMode { BestKnown, GenericFormula };

// Constant C with ||v|| <= C E|sum_k X_k v_k| for iid symmetric
// sub-gaussian X_k.
struct KhintchineConstant {
  double value = 0.0;
  ConstantMode provenance = ConstantMode::GenericFormula;
};

// BestKnown applies only to Rademacher (sqrt 2) and standard normal
// (sqrt(pi/2)); anything else falls back to the generic closed form
// 4 b^2 / E[X^2]^(3/2).
KhintchineConstant khintchine_constant(const SubgaussianDist& dist,
                                       ConstantMode mode);

}  // namespace radcomplex
