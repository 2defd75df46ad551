#pragma once

#include <cstdint>
#include <string>

#include "radcomplex/rng.hpp"
#include "radcomplex/subgaussian.hpp"

namespace radcomplex {

enum class Method { ExactEnum, MonteCarlo };

const char* to_string(Method method);

// Whether a reported supremum is the true value or a certified lower bound.
enum class Exactness { Exact, LowerBound };

// How expectations over sign/noise matrices are computed. EXACT_ENUM is
// exhaustive enumeration of Rademacher patterns, feasible when the total
// sign count is at most kExactEnumBits.
struct ExpectationEngine {
  static constexpr int kExactEnumBits = 20;

  Method method = Method::MonteCarlo;
  std::int64_t draws = 10000;
  std::uint64_t seed = rng::kDefaultSeed;
  SubgaussianDist dist = SubgaussianDist::rademacher();

  static ExpectationEngine exact_enum(std::uint64_t seed = rng::kDefaultSeed);
  static ExpectationEngine monte_carlo(SubgaussianDist dist,
                                       std::int64_t draws = 10000,
                                       std::uint64_t seed = rng::kDefaultSeed);

  ExpectationEngine with_dist(SubgaussianDist d) const;
  ExpectationEngine with_seed(std::uint64_t s) const;

  // Throws when exact enumeration over `bits` sign cells is infeasible.
  void require_enumerable(int bits) const;
};

// Expectation-of-supremum estimate.
struct ComplexityEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // 0 for EXACT_ENUM
  std::int64_t draws = 0;
  Method method = Method::ExactEnum;
  Exactness exactness = Exactness::Exact;
};

}  // namespace radcomplex
