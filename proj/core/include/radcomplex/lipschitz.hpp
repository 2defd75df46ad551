#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

namespace radcomplex {

enum class LossKind {
  EuclideanNorm,
  MaxCoordinate,
  DistanceToPoint,
  MarginLoss,
  Custom,
};

// Empirical Lipschitz constant of the map phi -> psi: max over ordered
// pairs of (psi_s - psi_s') / ||phi_s - phi_s'|| taken over pairs with
// distinct phi. Returns nullopt when some pair has equal phi but
// different psi (no finite constant exists). A single element gives 0.
std::optional<double> empirical_lipschitz(
    std::span<const double> psi, const std::vector<Eigen::VectorXd>& phi);

// A real function on R^K with a certified Lipschitz constant w.r.t. the
// Euclidean norm.
class LipschitzLoss {
 public:
  static LipschitzLoss euclidean_norm();
  static LipschitzLoss max_coordinate();
  static LipschitzLoss distance_to_point(Eigen::VectorXd anchor);
  // Hinge on the margin u_label - max_{k != label} u_k, scaled by
  // 1/gamma and clipped to [0, 1]; L = sqrt(2)/gamma. label is 0-based.
  static LipschitzLoss margin_loss(int label, double gamma);
  // Table-based loss: defined on the listed points only (eval matches a
  // row exactly, within 1e-12 per coordinate); L is certified from the
  // table itself. Throws if no finite constant exists.
  static LipschitzLoss custom(std::vector<Eigen::VectorXd> points,
                              std::vector<double> values);

  LossKind kind() const { return kind_; }
  double lipschitz_constant() const { return constant_; }
  // Dimension the loss insists on, if any.
  std::optional<int> expected_dim() const;

  double eval(const Eigen::VectorXd& u) const;

  // Subgradient at u; unsupported for Custom.
  Eigen::VectorXd subgradient(const Eigen::VectorXd& u) const;

 private:
  LipschitzLoss(LossKind kind, double constant) : kind_(kind), constant_(constant) {}

  LossKind kind_;
  double constant_;
  Eigen::VectorXd anchor_;                  // DistanceToPoint
  int label_ = 0;                           // MarginLoss
  double gamma_ = 1.0;                      // MarginLoss
  std::vector<Eigen::VectorXd> points_;     // Custom
  std::vector<double> values_;              // Custom
};

}  // namespace radcomplex
