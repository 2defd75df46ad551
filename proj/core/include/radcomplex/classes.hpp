#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "radcomplex/engine.hpp"
#include "radcomplex/lipschitz.hpp"

namespace radcomplex {

// A fixed sample of n points in R^d, one per row.
class Sample {
 public:
  explicit Sample(Eigen::MatrixXd points);

  int n() const { return static_cast<int>(points_.rows()); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::VectorXd point(int i) const { return points_.row(i).transpose(); }

  // Throws naming the first offending point index.
  void require_unit_ball(double tol = 1e-9) const;

 private:
  Eigen::MatrixXd points_;
};

// T tasks with n points each; rows of `points` are grouped by task.
struct MetaSample {
  int tasks = 0;
  int points_per_task = 0;
  Eigen::MatrixXd points;  // (tasks * points_per_task) x d

  MetaSample() = default;
  MetaSample(int tasks, int points_per_task, Eigen::MatrixXd points);
};

enum class ClassKind {
  Finite,
  LinearNormBall,
  KMeansCenters,
  Product,
  FeatureMapFinite,
  OperatorProjection,
};

enum class MatrixNorm { Frobenius, Spectral };

struct WeightedSupResult {
  double value = 0.0;
  Exactness exactness = Exactness::Exact;
  // Finite/FeatureMapFinite: maximizing table index.
  // LinearNormBall-Frobenius / KMeansCenters: maximizing parameter matrix.
  std::variant<std::monostate, int, Eigen::MatrixXd> witness;
};

struct LossSupResult {
  double value = 0.0;
  Exactness exactness = Exactness::Exact;
};

// A class of R^K-valued functions on a fixed sample, accessed through sup
// oracles. Immutable after construction.
class FunctionClass {
 public:
  // Explicit value tables, one n x K matrix per function.
  static FunctionClass finite(std::vector<Eigen::MatrixXd> tables);
  // x -> Wx with |||W||| <= radius in the given matrix norm.
  static FunctionClass linear_norm_ball(Sample sample, MatrixNorm norm,
                                        double radius, int output_dim);
  // phi_i(c) = (||x_i - c_1||^2, ..., ||x_i - c_K||^2), centers and points
  // in the unit ball.
  static FunctionClass kmeans_centers(Sample sample, int centers);
  // Coordinates range independently over scalar-output component classes.
  static FunctionClass product(std::vector<FunctionClass> components);
  // Explicit feature maps over a meta-sample, one (T*n) x K table per map.
  static FunctionClass feature_map_finite(MetaSample meta,
                                          std::vector<Eigen::MatrixXd> maps);
  // Unit ball of operators on the span of an orthonormal sample e_1..e_n,
  // outputs truncated to the first `output_dim` coordinates.
  static FunctionClass operator_projection(int n, int output_dim);

  ClassKind kind() const { return kind_; }
  // Number of sample rows the sup oracles sum over (T*n for feature maps).
  int rows() const { return rows_; }
  int output_dim() const { return output_dim_; }
  Exactness exactness() const { return exactness_; }

  const std::vector<Eigen::MatrixXd>& tables() const { return tables_; }
  // Throws for kinds that carry no sample (Finite, Product,
  // OperatorProjection).
  const Sample& sample() const;
  const MetaSample& meta() const { return meta_; }
  MatrixNorm norm_kind() const { return norm_; }
  double radius() const { return radius_; }
  const std::vector<FunctionClass>& components() const { return components_; }

 private:
  FunctionClass() = default;

  ClassKind kind_ = ClassKind::Finite;
  int rows_ = 0;
  int output_dim_ = 0;
  Exactness exactness_ = Exactness::Exact;
  std::vector<Eigen::MatrixXd> tables_;
  std::optional<Sample> sample_;
  MetaSample meta_;
  MatrixNorm norm_ = MatrixNorm::Frobenius;
  double radius_ = 1.0;
  std::vector<FunctionClass> components_;
};

// sup over the class of sum_{i,k} A_{ik} f_k(x_i) for an n x K
// coefficient matrix A.
WeightedSupResult weighted_sup(const FunctionClass& cls,
                               const Eigen::MatrixXd& coefficients);

// sup over the class of sum_i signs_i h_i(f(x_i)). Exact for finite
// classes; multi-restart ascent (lower bound) for continuous ones.
// seed/draw key the restart randomization of continuous searches.
LossSupResult loss_weighted_sup(const FunctionClass& cls,
                                const Eigen::VectorXd& signs,
                                std::span<const LipschitzLoss> losses,
                                std::uint64_t seed = rng::kDefaultSeed,
                                std::uint64_t draw = 0);

// min_k ||x - c_k||^2 over centers (rows of `centers`), all in the unit
// ball; and the vector of all K squared distances.
double kmeans_psi(const Eigen::MatrixXd& centers, const Eigen::VectorXd& x);
Eigen::VectorXd kmeans_phi(const Eigen::MatrixXd& centers,
                           const Eigen::VectorXd& x);

// psi_i(c) - psi_i(c') - ||phi_i(c) - phi_i(c')|| per sample point; every
// entry must be <= 0 up to roundoff.
Eigen::VectorXd kmeans_lipschitz_check(const Eigen::MatrixXd& centers_a,
                                       const Eigen::MatrixXd& centers_b,
                                       const Sample& sample);

struct KMeansSearchOptions {
  int restarts = 16;
  int max_rounds = 40;
  double tol = 1e-8;
};

// sup over center tuples of sum_i signs_i min_k ||x_i - c_k||^2 via
// multi-restart local search (certified lower bound). Deterministic in
// (seed, draw).
double kmeans_min_weighted_sup(const Sample& sample, int centers,
                               const Eigen::VectorXd& signs,
                               std::uint64_t seed, std::uint64_t draw,
                               const KMeansSearchOptions& options = {});

// Training error of feature map `map_index` on task `task_index`:
// min over the finite loss class of the empirical average of f(h(x_i^t)).
// All f values must lie in [0, 1].
double ltl_psi(const FunctionClass& feature_maps, int map_index,
               int task_index, std::span<const LipschitzLoss> loss_class);

}  // namespace radcomplex
