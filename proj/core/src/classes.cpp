#include "radcomplex/classes.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace radcomplex {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// max over t in [0,1] of 2*r*t + s*t^2 (r >= 0), attained along -u/|u|.
// This is the exact ball-constrained maximum of s*||c||^2 - 2<u, c>.
struct BallQuadMax {
  double value;
  double t;  // optimal radius
};

BallQuadMax ball_quadratic_max(double r, double s) {
  if (s >= 0.0) return {2.0 * r + s, 1.0};
  const double t = std::min(1.0, r / -s);
  return {2.0 * r * t + s * t * t, t};
}

Eigen::VectorXd center_witness(const Eigen::VectorXd& u, double s, int dim) {
  const double r = u.norm();
  const double t = ball_quadratic_max(r, s).t;
  if (r > 0.0) return (-t / r) * u;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  if (s > 0.0 && dim > 0) c[0] = t;
  return c;
}

// Uniform draw from the unit ball via normal direction and radial cdf.
Eigen::VectorXd ball_point(int dim, std::uint64_t seed, std::uint64_t draw,
                           std::uint64_t cell_base) {
  Eigen::VectorXd g(dim);
  for (int j = 0; j < dim; ++j) {
    g[j] = rng::standard_normal(seed, draw, cell_base + j);
  }
  const double norm = g.norm();
  const double radius =
      std::pow(rng::uniform01(seed, draw, cell_base + dim), 1.0 / dim);
  if (norm == 0.0) return Eigen::VectorXd::Zero(dim);
  return (radius / norm) * g;
}

constexpr std::uint64_t kOptimizerCellBase = 1ULL << 32;

struct PgaSchedule {
  int restarts = 16;
  int steps = 200;
  double step0 = 0.1;
  double tol = 1e-8;
};

}  // namespace

const Sample& FunctionClass::sample() const {
  if (!sample_) {
    throw std::logic_error("FunctionClass: this kind carries no sample");
  }
  return *sample_;
}

Sample::Sample(Eigen::MatrixXd points) : points_(std::move(points)) {
  require(points_.rows() >= 1, "Sample: need at least one point");
  require(points_.allFinite(), "Sample: points must be finite");
}

void Sample::require_unit_ball(double tol) const {
  for (int i = 0; i < n(); ++i) {
    const double norm = points_.row(i).norm();
    if (norm > 1.0 + tol) {
      throw std::invalid_argument("Sample: point " + std::to_string(i) +
                                  " has norm " + std::to_string(norm) +
                                  " > 1");
    }
  }
}

MetaSample::MetaSample(int tasks_in, int points_per_task_in,
                       Eigen::MatrixXd points_in)
    : tasks(tasks_in),
      points_per_task(points_per_task_in),
      points(std::move(points_in)) {
  require(tasks >= 1 && points_per_task >= 1, "MetaSample: T, n must be >= 1");
  require(points.rows() == static_cast<Eigen::Index>(tasks) * points_per_task,
          "MetaSample: row count must equal tasks * points_per_task");
  require(points.allFinite(), "MetaSample: points must be finite");
}

FunctionClass FunctionClass::finite(std::vector<Eigen::MatrixXd> tables) {
  require(!tables.empty(), "finite class: table list is empty");
  const Eigen::Index n = tables.front().rows();
  const Eigen::Index k = tables.front().cols();
  require(n >= 1 && k >= 1, "finite class: tables must be nonempty");
  for (const auto& table : tables) {
    require(table.rows() == n && table.cols() == k,
            "finite class: inconsistent table shapes");
    require(table.allFinite(), "finite class: non-finite table entry");
  }
  FunctionClass cls;
  cls.kind_ = ClassKind::Finite;
  cls.rows_ = static_cast<int>(n);
  cls.output_dim_ = static_cast<int>(k);
  cls.exactness_ = Exactness::Exact;
  cls.tables_ = std::move(tables);
  return cls;
}

FunctionClass FunctionClass::linear_norm_ball(Sample sample, MatrixNorm norm,
                                              double radius, int output_dim) {
  require(radius > 0.0, "linear class: radius must be > 0");
  require(output_dim >= 1, "linear class: output_dim must be >= 1");
  FunctionClass cls;
  cls.kind_ = ClassKind::LinearNormBall;
  cls.rows_ = sample.n();
  cls.output_dim_ = output_dim;
  cls.exactness_ = norm == MatrixNorm::Frobenius ? Exactness::Exact
                                                 : Exactness::LowerBound;
  cls.sample_ = std::move(sample);
  cls.norm_ = norm;
  cls.radius_ = radius;
  return cls;
}

FunctionClass FunctionClass::kmeans_centers(Sample sample, int centers) {
  require(centers >= 1, "kmeans class: need at least one center");
  sample.require_unit_ball();
  FunctionClass cls;
  cls.kind_ = ClassKind::KMeansCenters;
  cls.rows_ = sample.n();
  cls.output_dim_ = centers;
  cls.exactness_ = Exactness::LowerBound;
  cls.sample_ = std::move(sample);
  return cls;
}

FunctionClass FunctionClass::product(std::vector<FunctionClass> components) {
  require(!components.empty(), "product class: no components");
  const int n = components.front().rows();
  Exactness exactness = Exactness::Exact;
  for (const auto& component : components) {
    require(component.output_dim() == 1,
            "product class: components must be scalar-output");
    require(component.rows() == n,
            "product class: components must share the sample");
    if (component.exactness() == Exactness::LowerBound) {
      exactness = Exactness::LowerBound;
    }
  }
  FunctionClass cls;
  cls.kind_ = ClassKind::Product;
  cls.rows_ = n;
  cls.output_dim_ = static_cast<int>(components.size());
  cls.exactness_ = exactness;
  cls.components_ = std::move(components);
  return cls;
}

FunctionClass FunctionClass::feature_map_finite(
    MetaSample meta, std::vector<Eigen::MatrixXd> maps) {
  require(!maps.empty(), "feature map class: map list is empty");
  const Eigen::Index rows = meta.points.rows();
  const Eigen::Index k = maps.front().cols();
  require(k >= 1, "feature map class: output dim must be >= 1");
  for (const auto& map : maps) {
    require(map.rows() == rows && map.cols() == k,
            "feature map class: table shape must be (T*n) x K");
    require(map.allFinite(), "feature map class: non-finite entry");
  }
  FunctionClass cls;
  cls.kind_ = ClassKind::FeatureMapFinite;
  cls.rows_ = static_cast<int>(rows);
  cls.output_dim_ = static_cast<int>(k);
  cls.exactness_ = Exactness::Exact;
  cls.tables_ = std::move(maps);
  cls.meta_ = std::move(meta);
  return cls;
}

FunctionClass FunctionClass::operator_projection(int n, int output_dim) {
  require(n >= 1, "operator class: n must be >= 1");
  require(output_dim >= 1, "operator class: output_dim must be >= 1");
  FunctionClass cls;
  cls.kind_ = ClassKind::OperatorProjection;
  cls.rows_ = n;
  cls.output_dim_ = output_dim;
  cls.exactness_ = Exactness::Exact;
  return cls;
}

namespace {

WeightedSupResult weighted_sup_tables(const std::vector<Eigen::MatrixXd>& tables,
                                      const Eigen::MatrixXd& coefficients) {
  double best = -std::numeric_limits<double>::infinity();
  int best_index = 0;
  for (std::size_t s = 0; s < tables.size(); ++s) {
    const double value = coefficients.cwiseProduct(tables[s]).sum();
    if (value > best) {
      best = value;
      best_index = static_cast<int>(s);
    }
  }
  return {best, Exactness::Exact, best_index};
}

WeightedSupResult weighted_sup_linear(const FunctionClass& cls,
                                      const Eigen::MatrixXd& coefficients) {
  // D has column k equal to sum_i A_{ik} x_i.
  const Eigen::MatrixXd d_matrix =
      cls.sample().points().transpose() * coefficients;  // d x K
  if (cls.norm_kind() == MatrixNorm::Frobenius) {
    const double norm = d_matrix.norm();
    WeightedSupResult result;
    result.value = cls.radius() * norm;
    result.exactness = Exactness::Exact;
    if (norm > 0.0) {
      result.witness =
          Eigen::MatrixXd((cls.radius() / norm) * d_matrix.transpose());
    }
    return result;
  }
  // Spectral ball: the dual is the sum of singular values.
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(d_matrix);
  return {cls.radius() * svd.singularValues().sum(), Exactness::Exact,
          std::monostate{}};
}

WeightedSupResult weighted_sup_kmeans(const FunctionClass& cls,
                                      const Eigen::MatrixXd& coefficients) {
  // Columns separate: per center k the ball-constrained maximum of
  // s_k ||c||^2 - 2 <u_k, c> has a closed form.
  const auto& points = cls.sample().points();
  const Eigen::VectorXd sqnorms = points.rowwise().squaredNorm();
  const int k_count = cls.output_dim();
  const int dim = cls.sample().dim();
  Eigen::MatrixXd centers(k_count, dim);
  double value = 0.0;
  for (int k = 0; k < k_count; ++k) {
    const Eigen::VectorXd u = points.transpose() * coefficients.col(k);
    const double s = coefficients.col(k).sum();
    value += sqnorms.dot(coefficients.col(k)) +
             ball_quadratic_max(u.norm(), s).value;
    centers.row(k) = center_witness(u, s, dim).transpose();
  }
  // The value is the true supremum, but the class is reported as a lower
  // bound throughout so it never certifies the large side of a strict
  // comparison.
  return {value, Exactness::LowerBound, std::move(centers)};
}

WeightedSupResult weighted_sup_operator(const FunctionClass& cls,
                                        const Eigen::MatrixXd& coefficients) {
  (void)cls;
  // sup over ||T|| <= 1 of tr(T A) is the nuclear norm of A.
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(coefficients);
  return {svd.singularValues().sum(), Exactness::Exact, std::monostate{}};
}

}  // namespace

WeightedSupResult weighted_sup(const FunctionClass& cls,
                               const Eigen::MatrixXd& coefficients) {
  require(coefficients.rows() == cls.rows() &&
              coefficients.cols() == cls.output_dim(),
          "weighted_sup: coefficient matrix must be rows x K");
  switch (cls.kind()) {
    case ClassKind::Finite:
    case ClassKind::FeatureMapFinite:
      return weighted_sup_tables(cls.tables(), coefficients);
    case ClassKind::LinearNormBall:
      return weighted_sup_linear(cls, coefficients);
    case ClassKind::KMeansCenters:
      return weighted_sup_kmeans(cls, coefficients);
    case ClassKind::OperatorProjection:
      return weighted_sup_operator(cls, coefficients);
    case ClassKind::Product: {
      double total = 0.0;
      Exactness exactness = Exactness::Exact;
      for (int k = 0; k < cls.output_dim(); ++k) {
        const auto part = weighted_sup(cls.components()[static_cast<std::size_t>(k)],
                                       coefficients.col(k));
        total += part.value;
        if (part.exactness == Exactness::LowerBound) {
          exactness = Exactness::LowerBound;
        }
      }
      return {total, exactness, std::monostate{}};
    }
  }
  throw std::logic_error("weighted_sup: unreachable");
}

namespace {

double loss_row_sum(const Eigen::MatrixXd& table, const Eigen::VectorXd& signs,
                    std::span<const LipschitzLoss> losses) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    total += signs[i] * losses[static_cast<std::size_t>(i)].eval(
                            table.row(i).transpose());
  }
  return total;
}

LossSupResult loss_sup_tables(const std::vector<Eigen::MatrixXd>& tables,
                              const Eigen::VectorXd& signs,
                              std::span<const LipschitzLoss> losses) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& table : tables) {
    best = std::max(best, loss_row_sum(table, signs, losses));
  }
  return {best, Exactness::Exact};
}

LossSupResult loss_sup_product(const FunctionClass& cls,
                               const Eigen::VectorXd& signs,
                               std::span<const LipschitzLoss> losses) {
  const int k_count = cls.output_dim();
  std::size_t combos = 1;
  for (const auto& component : cls.components()) {
    require(component.kind() == ClassKind::Finite,
            "loss_weighted_sup: product components must be finite classes");
    combos *= component.tables().size();
    require(combos <= (1u << 20),
            "loss_weighted_sup: product class too large to enumerate");
  }
  const int n = cls.rows();
  std::vector<std::size_t> index(static_cast<std::size_t>(k_count), 0);
  Eigen::MatrixXd table(n, k_count);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::size_t rest = combo;
    for (int k = 0; k < k_count; ++k) {
      const auto& tables = cls.components()[static_cast<std::size_t>(k)].tables();
      index[static_cast<std::size_t>(k)] = rest % tables.size();
      rest /= tables.size();
      table.col(k) = tables[index[static_cast<std::size_t>(k)]].col(0);
    }
    best = std::max(best, loss_row_sum(table, signs, losses));
  }
  return {best, Exactness::Exact};
}

LossSupResult loss_sup_operator(const FunctionClass& cls,
                                const Eigen::VectorXd& signs,
                                std::span<const LipschitzLoss> losses) {
  for (const auto& loss : losses) {
    require(loss.kind() == LossKind::EuclideanNorm,
            "loss_weighted_sup: operator class supports Euclidean norm "
            "losses only");
  }
  (void)cls;
  // Projections realize ||T e_i|| = 1 exactly on the positive-sign set.
  double total = 0.0;
  for (Eigen::Index i = 0; i < signs.size(); ++i) {
    total += std::max(signs[i], 0.0);
  }
  return {total, Exactness::Exact};
}

// Multi-restart projected gradient ascent for continuous classes.
template <typename Objective, typename Gradient, typename Project,
          typename Init>
double pga_maximize(const PgaSchedule& schedule, Objective&& objective,
                    Gradient&& gradient, Project&& project, Init&& init) {
  double best = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < schedule.restarts; ++restart) {
    Eigen::MatrixXd param = init(restart);
    double previous = objective(param);
    best = std::max(best, previous);
    for (int step = 1; step <= schedule.steps; ++step) {
      param += (schedule.step0 / std::sqrt(static_cast<double>(step))) *
               gradient(param);
      project(param);
      const double value = objective(param);
      best = std::max(best, value);
      if (value - previous < schedule.tol) break;
      previous = value;
    }
  }
  return best;
}

LossSupResult loss_sup_linear_pga(const FunctionClass& cls,
                                  const Eigen::VectorXd& signs,
                                  std::span<const LipschitzLoss> losses,
                                  std::uint64_t seed, std::uint64_t draw) {
  const auto& points = cls.sample().points();
  const int k_count = cls.output_dim();
  const int dim = cls.sample().dim();
  const double radius = cls.radius();
  const bool frobenius = cls.norm_kind() == MatrixNorm::Frobenius;

  const auto objective = [&](const Eigen::MatrixXd& w) {
    double total = 0.0;
    for (int i = 0; i < cls.rows(); ++i) {
      total += signs[i] * losses[static_cast<std::size_t>(i)].eval(
                              w * points.row(i).transpose());
    }
    return total;
  };
  const auto gradient = [&](const Eigen::MatrixXd& w) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k_count, dim);
    for (int i = 0; i < cls.rows(); ++i) {
      const Eigen::VectorXd u = w * points.row(i).transpose();
      g += signs[i] *
           losses[static_cast<std::size_t>(i)].subgradient(u) * points.row(i);
    }
    return g;
  };
  const auto project = [&](Eigen::MatrixXd& w) {
    if (frobenius) {
      const double norm = w.norm();
      if (norm > radius) w *= radius / norm;
      return;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd sv = svd.singularValues();
    for (Eigen::Index j = 0; j < sv.size(); ++j) sv[j] = std::min(sv[j], radius);
    w = svd.matrixU() * sv.asDiagonal() * svd.matrixV().transpose();
  };
  const auto init = [&](int restart) {
    Eigen::MatrixXd w(k_count, dim);
    const std::uint64_t base =
        kOptimizerCellBase +
        static_cast<std::uint64_t>(restart) *
            static_cast<std::uint64_t>(k_count * dim + 1);
    for (int k = 0; k < k_count; ++k) {
      for (int j = 0; j < dim; ++j) {
        w(k, j) = rng::standard_normal(seed, draw,
                                       base + static_cast<std::uint64_t>(k * dim + j));
      }
    }
    const double norm = w.norm();
    if (norm > 0.0) w *= radius / norm;
    return w;
  };

  PgaSchedule schedule;
  return {pga_maximize(schedule, objective, gradient, project, init),
          Exactness::LowerBound};
}

LossSupResult loss_sup_kmeans_pga(const FunctionClass& cls,
                                  const Eigen::VectorXd& signs,
                                  std::span<const LipschitzLoss> losses,
                                  std::uint64_t seed, std::uint64_t draw) {
  const auto& points = cls.sample().points();
  const int k_count = cls.output_dim();
  const int dim = cls.sample().dim();

  const auto phi_at = [&](const Eigen::MatrixXd& centers, int i) {
    Eigen::VectorXd phi(k_count);
    for (int k = 0; k < k_count; ++k) {
      phi[k] = (points.row(i) - centers.row(k)).squaredNorm();
    }
    return phi;
  };
  const auto objective = [&](const Eigen::MatrixXd& centers) {
    double total = 0.0;
    for (int i = 0; i < cls.rows(); ++i) {
      total += signs[i] *
               losses[static_cast<std::size_t>(i)].eval(phi_at(centers, i));
    }
    return total;
  };
  const auto gradient = [&](const Eigen::MatrixXd& centers) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k_count, dim);
    for (int i = 0; i < cls.rows(); ++i) {
      const Eigen::VectorXd lg =
          losses[static_cast<std::size_t>(i)].subgradient(phi_at(centers, i));
      for (int k = 0; k < k_count; ++k) {
        g.row(k) +=
            signs[i] * lg[k] * 2.0 * (centers.row(k) - points.row(i));
      }
    }
    return g;
  };
  const auto project = [&](Eigen::MatrixXd& centers) {
    for (int k = 0; k < k_count; ++k) {
      const double norm = centers.row(k).norm();
      if (norm > 1.0) centers.row(k) /= norm;
    }
  };
  const auto init = [&](int restart) {
    Eigen::MatrixXd centers(k_count, dim);
    for (int k = 0; k < k_count; ++k) {
      const std::uint64_t base =
          kOptimizerCellBase +
          static_cast<std::uint64_t>(restart) *
              static_cast<std::uint64_t>(k_count) *
              static_cast<std::uint64_t>(dim + 1) +
          static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(dim + 1);
      centers.row(k) = ball_point(dim, seed, draw, base).transpose();
    }
    return centers;
  };

  PgaSchedule schedule;
  return {pga_maximize(schedule, objective, gradient, project, init),
          Exactness::LowerBound};
}

}  // namespace

LossSupResult loss_weighted_sup(const FunctionClass& cls,
                                const Eigen::VectorXd& signs,
                                std::span<const LipschitzLoss> losses,
                                std::uint64_t seed, std::uint64_t draw) {
  require(signs.size() == cls.rows(),
          "loss_weighted_sup: signs length must match sample rows");
  require(losses.size() == static_cast<std::size_t>(cls.rows()),
          "loss_weighted_sup: need one loss per sample row");
  switch (cls.kind()) {
    case ClassKind::Finite:
    case ClassKind::FeatureMapFinite:
      return loss_sup_tables(cls.tables(), signs, losses);
    case ClassKind::Product:
      return loss_sup_product(cls, signs, losses);
    case ClassKind::OperatorProjection:
      return loss_sup_operator(cls, signs, losses);
    case ClassKind::LinearNormBall:
      return loss_sup_linear_pga(cls, signs, losses, seed, draw);
    case ClassKind::KMeansCenters:
      return loss_sup_kmeans_pga(cls, signs, losses, seed, draw);
  }
  throw std::logic_error("loss_weighted_sup: unreachable");
}

Eigen::VectorXd kmeans_phi(const Eigen::MatrixXd& centers,
                           const Eigen::VectorXd& x) {
  Eigen::VectorXd phi(centers.rows());
  for (Eigen::Index k = 0; k < centers.rows(); ++k) {
    phi[k] = (x.transpose() - centers.row(k)).squaredNorm();
  }
  return phi;
}

double kmeans_psi(const Eigen::MatrixXd& centers, const Eigen::VectorXd& x) {
  constexpr double tol = 1e-9;
  if (x.norm() > 1.0 + tol) {
    throw std::invalid_argument("kmeans_psi: point outside the unit ball");
  }
  for (Eigen::Index k = 0; k < centers.rows(); ++k) {
    if (centers.row(k).norm() > 1.0 + tol) {
      throw std::invalid_argument("kmeans_psi: center " + std::to_string(k) +
                                  " outside the unit ball");
    }
  }
  return kmeans_phi(centers, x).minCoeff();
}

Eigen::VectorXd kmeans_lipschitz_check(const Eigen::MatrixXd& centers_a,
                                       const Eigen::MatrixXd& centers_b,
                                       const Sample& sample) {
  Eigen::VectorXd margins(sample.n());
  for (int i = 0; i < sample.n(); ++i) {
    const Eigen::VectorXd x = sample.point(i);
    const double psi_a = kmeans_psi(centers_a, x);
    const double psi_b = kmeans_psi(centers_b, x);
    const double phi_dist =
        (kmeans_phi(centers_a, x) - kmeans_phi(centers_b, x)).norm();
    margins[i] = psi_a - psi_b - phi_dist;
  }
  return margins;
}

double kmeans_min_weighted_sup(const Sample& sample, int centers,
                               const Eigen::VectorXd& signs,
                               std::uint64_t seed, std::uint64_t draw,
                               const KMeansSearchOptions& options) {
  require(centers >= 1, "kmeans sup: need at least one center");
  require(signs.size() == sample.n(), "kmeans sup: signs length mismatch");
  sample.require_unit_ball();

  const int n = sample.n();
  const int dim = sample.dim();
  const Eigen::MatrixXd& points = sample.points();
  const Eigen::VectorXd sqnorms = points.rowwise().squaredNorm();

  // Alternate between assigning each point to its nearest center (lowest
  // index on ties) and moving every center to the exact ball-constrained
  // maximizer for its assigned points. The true objective is evaluated at
  // every iterate and the best value over all restarts is returned.
  double best_global = -std::numeric_limits<double>::infinity();
  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  std::vector<int> prev_assign(static_cast<std::size_t>(n), -1);
  Eigen::MatrixXd c(centers, dim);
  Eigen::VectorXd center_sqnorm(centers);
  Eigen::MatrixXd u(dim, centers);
  Eigen::VectorXd s(centers);

  for (int restart = 0; restart < options.restarts; ++restart) {
    for (int k = 0; k < centers; ++k) {
      const std::uint64_t base =
          kOptimizerCellBase +
          (static_cast<std::uint64_t>(restart) * static_cast<std::uint64_t>(centers) +
           static_cast<std::uint64_t>(k)) *
              static_cast<std::uint64_t>(dim + 1);
      c.row(k) = ball_point(dim, seed, draw, base).transpose();
    }
    std::fill(prev_assign.begin(), prev_assign.end(), -1);
    double best_restart = -std::numeric_limits<double>::infinity();

    for (int round = 0; round < options.max_rounds; ++round) {
      for (int k = 0; k < centers; ++k) {
        center_sqnorm[k] = c.row(k).squaredNorm();
      }
      double value = 0.0;
      for (int i = 0; i < n; ++i) {
        int best_k = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int k = 0; k < centers; ++k) {
          const double dist =
              sqnorms[i] - 2.0 * points.row(i).dot(c.row(k)) + center_sqnorm[k];
          if (dist < best_dist) {
            best_dist = dist;
            best_k = k;
          }
        }
        assign[static_cast<std::size_t>(i)] = best_k;
        value += signs[i] * best_dist;
      }
      const bool improved = value > best_restart + options.tol;
      best_restart = std::max(best_restart, value);
      if (assign == prev_assign || (round > 0 && !improved)) break;
      std::swap(assign, prev_assign);

      u.setZero();
      s.setZero();
      for (int i = 0; i < n; ++i) {
        const int k = prev_assign[static_cast<std::size_t>(i)];
        u.col(k) += signs[i] * points.row(i).transpose();
        s[k] += signs[i];
      }
      for (int k = 0; k < centers; ++k) {
        c.row(k) = center_witness(u.col(k), s[k], dim).transpose();
      }
    }
    best_global = std::max(best_global, best_restart);
  }
  return best_global;
}

double ltl_psi(const FunctionClass& feature_maps, int map_index,
               int task_index, std::span<const LipschitzLoss> loss_class) {
  require(feature_maps.kind() == ClassKind::FeatureMapFinite,
          "ltl_psi: needs a feature-map class");
  require(!loss_class.empty(), "ltl_psi: empty loss class");
  const auto& meta = feature_maps.meta();
  require(map_index >= 0 &&
              map_index < static_cast<int>(feature_maps.tables().size()),
          "ltl_psi: map index out of range");
  require(task_index >= 0 && task_index < meta.tasks,
          "ltl_psi: task index out of range");

  const Eigen::MatrixXd& values = feature_maps.tables()[static_cast<std::size_t>(map_index)];
  const int n = meta.points_per_task;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& loss : loss_class) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v =
          loss.eval(values.row(task_index * n + i).transpose());
      if (v < -1e-9 || v > 1.0 + 1e-9) {
        throw std::invalid_argument(
            "ltl_psi: loss value outside [0, 1]");
      }
      total += v;
    }
    best = std::min(best, total / n);
  }
  return best;
}

}  // namespace radcomplex
