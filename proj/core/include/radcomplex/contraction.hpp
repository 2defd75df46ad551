#pragma once

#include <Eigen/Core>
#include <span>

#include "radcomplex/classes.hpp"
#include "radcomplex/engine.hpp"
#include "radcomplex/report.hpp"

namespace radcomplex {

// Checks E sup_f sum_i eps_i h_i(f(x_i)) <= C L E sup_f sum_ik X_ik
// f_k(x_i): Rademacher signs on the left, `dist` noise on the right,
// C the distribution's Khintchine constant, L the largest certified
// Lipschitz constant among the losses.
VerificationReport verify_vector_contraction(
    const FunctionClass& cls, std::span<const LipschitzLoss> losses,
    const SubgaussianDist& dist, const ExpectationEngine& engine);

// n = 1 case: E sup_s [eps psi(s) + f(s)] <= E sup_s [C L sum_k X_k
// phi(s)_k + f(s)] for a finite class, with the offset table f indexed by
// class elements. Both sides enumerate exactly when the noise is
// Rademacher. The report's rhs already includes the constant.
VerificationReport verify_single_variable(const FunctionClass& cls,
                                          const LipschitzLoss& loss,
                                          std::span<const double> offsets,
                                          const SubgaussianDist& dist,
                                          const ExpectationEngine& engine);

struct ProductIdentityReport {
  double product_complexity = 0.0;
  double component_sum = 0.0;
  double abs_diff = 0.0;
  bool ok = false;  // abs_diff <= 1e-9
};

// The vector complexity of a product class equals the sum of the scalar
// component complexities; both sides enumerated exactly.
ProductIdentityReport product_identity_check(
    std::span<const FunctionClass> components,
    const ExpectationEngine& engine);

struct CoverageResult {
  int repetitions = 0;
  int violations = 0;
  double rate = 0.0;
  double delta = 0.0;
  double threshold = 0.0;  // delta + 3 binomial standard errors
  bool within_budget = false;
};

// Repeatedly draws an iid sample from a finite law, computes the
// conditional Rademacher complexity of the [0,1]-valued class, and counts
// repetitions where some function breaks
//   E f <= empirical mean + (2/n) R + sqrt(9 ln(2/delta) / (2n)).
// `tables` holds one function per row over the finite input space;
// `law` the input distribution. True expectations are computed exactly.
CoverageResult theorem1_coverage_experiment(const Eigen::MatrixXd& tables,
                                            const Eigen::VectorXd& law, int n,
                                            double delta, int repetitions,
                                            const ExpectationEngine& engine);

}  // namespace radcomplex
