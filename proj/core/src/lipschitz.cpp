#include "radcomplex/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radcomplex {

std::optional<double> empirical_lipschitz(
    std::span<const double> psi, const std::vector<Eigen::VectorXd>& phi) {
  if (psi.size() != phi.size()) {
    throw std::invalid_argument("empirical_lipschitz: psi/phi size mismatch");
  }
  const std::size_t m = psi.size();
  double best = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      const double dist = (phi[s] - phi[t]).norm();
      const double dpsi = std::abs(psi[s] - psi[t]);
      if (dist == 0.0) {
        if (dpsi != 0.0) return std::nullopt;
        continue;
      }
      best = std::max(best, dpsi / dist);
    }
  }
  return best;
}

LipschitzLoss LipschitzLoss::euclidean_norm() {
  return LipschitzLoss(LossKind::EuclideanNorm, 1.0);
}

LipschitzLoss LipschitzLoss::max_coordinate() {
  return LipschitzLoss(LossKind::MaxCoordinate, 1.0);
}

LipschitzLoss LipschitzLoss::distance_to_point(Eigen::VectorXd anchor) {
  LipschitzLoss loss(LossKind::DistanceToPoint, 1.0);
  loss.anchor_ = std::move(anchor);
  return loss;
}

LipschitzLoss LipschitzLoss::margin_loss(int label, double gamma) {
  if (label < 0) throw std::invalid_argument("margin_loss: label must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("margin_loss: gamma must be > 0");
  LipschitzLoss loss(LossKind::MarginLoss, std::sqrt(2.0) / gamma);
  loss.label_ = label;
  loss.gamma_ = gamma;
  return loss;
}

LipschitzLoss LipschitzLoss::custom(std::vector<Eigen::VectorXd> points,
                                    std::vector<double> values) {
  if (points.empty() || points.size() != values.size()) {
    throw std::invalid_argument("custom loss: need matching nonempty tables");
  }
  const auto constant = empirical_lipschitz(values, points);
  if (!constant) {
    throw std::invalid_argument(
        "custom loss: equal points with different values, no finite "
        "Lipschitz constant");
  }
  LipschitzLoss loss(LossKind::Custom, *constant);
  loss.points_ = std::move(points);
  loss.values_ = std::move(values);
  return loss;
}

std::optional<int> LipschitzLoss::expected_dim() const {
  switch (kind_) {
    case LossKind::DistanceToPoint:
      return static_cast<int>(anchor_.size());
    case LossKind::Custom:
      return static_cast<int>(points_.front().size());
    case LossKind::MarginLoss:
    case LossKind::EuclideanNorm:
    case LossKind::MaxCoordinate:
      return std::nullopt;
  }
  return std::nullopt;
}

double LipschitzLoss::eval(const Eigen::VectorXd& u) const {
  if (const auto dim = expected_dim(); dim && *dim != u.size()) {
    throw std::invalid_argument("loss eval: dimension mismatch");
  }
  switch (kind_) {
    case LossKind::EuclideanNorm:
      return u.norm();
    case LossKind::MaxCoordinate:
      if (u.size() == 0) throw std::invalid_argument("loss eval: empty input");
      return u.maxCoeff();
    case LossKind::DistanceToPoint:
      return (u - anchor_).norm();
    case LossKind::MarginLoss: {
      if (label_ >= u.size()) {
        throw std::invalid_argument("margin loss: label out of range");
      }
      double rival = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < u.size(); ++k) {
        if (k != label_) rival = std::max(rival, u[k]);
      }
      if (u.size() == 1) rival = 0.0;  // binary margin against zero
      const double margin = u[label_] - rival;
      return std::clamp(1.0 - margin / gamma_, 0.0, 1.0);
    }
    case LossKind::Custom: {
      for (std::size_t s = 0; s < points_.size(); ++s) {
        if ((points_[s] - u).lpNorm<Eigen::Infinity>() <= 1e-12) {
          return values_[s];
        }
      }
      throw std::invalid_argument("custom loss: point not in table");
    }
  }
  throw std::logic_error("loss eval: unreachable");
}

Eigen::VectorXd LipschitzLoss::subgradient(const Eigen::VectorXd& u) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(u.size());
  switch (kind_) {
    case LossKind::EuclideanNorm: {
      const double norm = u.norm();
      if (norm > 0.0) g = u / norm;
      return g;
    }
    case LossKind::MaxCoordinate: {
      Eigen::Index argmax = 0;
      u.maxCoeff(&argmax);
      g[argmax] = 1.0;
      return g;
    }
    case LossKind::DistanceToPoint: {
      const Eigen::VectorXd diff = u - anchor_;
      const double norm = diff.norm();
      if (norm > 0.0) g = diff / norm;
      return g;
    }
    case LossKind::MarginLoss: {
      double rival = -std::numeric_limits<double>::infinity();
      Eigen::Index rival_index = -1;
      for (int k = 0; k < u.size(); ++k) {
        if (k != label_ && u[k] > rival) {
          rival = u[k];
          rival_index = k;
        }
      }
      const double margin = u[label_] - (rival_index >= 0 ? rival : 0.0);
      const double raw = 1.0 - margin / gamma_;
      if (raw <= 0.0 || raw >= 1.0) return g;  // flat region
      g[label_] = -1.0 / gamma_;
      if (rival_index >= 0) g[rival_index] = 1.0 / gamma_;
      return g;
    }
    case LossKind::Custom:
      throw std::invalid_argument("custom loss: no subgradient available");
  }
  throw std::logic_error("loss subgradient: unreachable");
}

}  // namespace radcomplex
