#pragma once

#include <span>
#include <string>
#include <vector>

#include "radcomplex/classes.hpp"
#include "radcomplex/engine.hpp"

namespace radcomplex {

struct BoundResult {
  double value = 0.0;
  std::string formula;    // identifier of the closed form
  std::string dominated;  // quantity the bound dominates
};

// empirical_mean + (2/n) R + sqrt(9 ln(2/delta) / (2n)).
BoundResult theorem1_bound(double empirical_mean, double complexity, int n,
                           double delta);

// 3 sqrt(2) K sqrt(n): bound on the K-means Rademacher average for any
// sample in the unit ball.
BoundResult kmeans_bound(int centers, int n);

// B sqrt(K sum_i ||x_i||^2): bound on the vector complexity of the
// Frobenius-ball linear class.
BoundResult frobenius_bound(double radius, const Sample& sample,
                            int output_dim);

// sqrt(2) L B (sum_i tr kappa(x_i, x_i))^(1/2) for operator-valued
// kernels with trace-class diagonal.
BoundResult operator_kernel_bound(double lipschitz, double radius,
                                  std::span<const double> traces);

// sqrt(2) (L / sqrt(n)) * meta_complexity, dominating the meta-level
// Rademacher average of the feature-map class.
BoundResult ltl_reduction_bound(double lipschitz, int n,
                                double meta_complexity);

struct ChainLink {
  std::string name;
  double lhs_mean = 0.0;
  double rhs_mean = 0.0;
  double slack_mean = 0.0;  // rhs - lhs, averaged over shared draws
  double slack_se = 0.0;
  bool holds = false;  // slack_mean >= -3 slack_se
};

// Monte Carlo verification of the K-means complexity chain: each link is
// estimated on shared noise draws and must hold within three standard
// errors of the per-draw slack.
struct KMeansChainReport {
  ComplexityEstimate r_hat;       // E sup_c sum_i eps_i min_k ||x_i-c_k||^2
  ComplexityEstimate phi_sup;     // E sup_c sum_ik eps_ik ||x_i-c_k||^2
  ComplexityEstimate inner_sup;   // E sup_c sum_ik eps_ik <x_i, c_k>
  ComplexityEstimate center_sup;  // E sup_c sum_ik eps_ik ||c_k||^2
  ComplexityEstimate column_sum;  // sum_k (2 ||u_k|| + |s_k|)
  double bound = 0.0;             // 3 sqrt(2) K sqrt(n)
  std::vector<ChainLink> links;
  bool all_hold = false;
  bool headline_holds = false;  // r_hat - 3 se <= bound
};

KMeansChainReport kmeans_chain_report(const Sample& sample, int centers,
                                      const ExpectationEngine& engine);

}  // namespace radcomplex
