#include "radcomplex/estimator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "radcomplex/parallel.hpp"

namespace radcomplex {

const char* to_string(Method method) {
  return method == Method::ExactEnum ? "EXACT_ENUM" : "MONTE_CARLO";
}

ExpectationEngine ExpectationEngine::exact_enum(std::uint64_t seed) {
  return {Method::ExactEnum, 0, seed, SubgaussianDist::rademacher()};
}

ExpectationEngine ExpectationEngine::monte_carlo(SubgaussianDist dist,
                                                 std::int64_t draws,
                                                 std::uint64_t seed) {
  if (draws < 100) {
    throw std::invalid_argument("monte_carlo: need at least 100 draws");
  }
  return {Method::MonteCarlo, draws, seed, std::move(dist)};
}

ExpectationEngine ExpectationEngine::with_dist(SubgaussianDist d) const {
  ExpectationEngine engine = *this;
  engine.dist = std::move(d);
  return engine;
}

ExpectationEngine ExpectationEngine::with_seed(std::uint64_t s) const {
  ExpectationEngine engine = *this;
  engine.seed = s;
  return engine;
}

void ExpectationEngine::require_enumerable(int bits) const {
  if (bits > kExactEnumBits) {
    throw std::invalid_argument(
        "exact enumeration infeasible: " + std::to_string(bits) +
        " sign cells exceed the limit of " + std::to_string(kExactEnumBits));
  }
  if (dist.kind() != DistKind::Rademacher) {
    throw std::invalid_argument(
        "exact enumeration requires Rademacher noise");
  }
}

double exact_sign_expectation_of_max(const Eigen::MatrixXd& values) {
  const int n = static_cast<int>(values.cols());
  if (n > ExpectationEngine::kExactEnumBits) {
    throw std::invalid_argument("exact_sign_expectation_of_max: too many signs");
  }
  const std::uint64_t patterns = 1ULL << n;
  // Running sums per table under the current sign vector; rebuilt
  // periodically to keep incremental roundoff bounded.
  constexpr std::uint64_t kRefresh = 1ULL << 12;
  Eigen::VectorXd signs = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd sums = values.rowwise().sum();
  KahanSum acc;
  acc.add(sums.maxCoeff());
  for (std::uint64_t t = 1; t < patterns; ++t) {
    const int flip = std::countr_zero(t);
    const double delta = -2.0 * signs[flip];
    signs[flip] += delta;
    if ((t & (kRefresh - 1)) == 0) {
      sums = values * signs;
    } else {
      sums += delta * values.col(flip);
    }
    acc.add(sums.maxCoeff());
  }
  return acc.value() / static_cast<double>(patterns);
}

namespace detail {

ComplexityEstimate monte_carlo_estimate(
    const ExpectationEngine& engine, Exactness exactness,
    const std::function<double(std::uint64_t)>& value, int threads) {
  const std::int64_t m = engine.draws;
  std::vector<double> samples(static_cast<std::size_t>(m));
  parallel_for_chunks(
      m,
      [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t j = begin; j < end; ++j) {
          samples[static_cast<std::size_t>(j)] =
              value(static_cast<std::uint64_t>(j));
        }
      },
      threads);
  KahanSum mean_acc;
  for (const double v : samples) mean_acc.add(v);
  const double mean = mean_acc.value() / static_cast<double>(m);
  KahanSum var_acc;
  for (const double v : samples) var_acc.add((v - mean) * (v - mean));
  const double variance = m > 1 ? var_acc.value() / static_cast<double>(m - 1) : 0.0;
  ComplexityEstimate estimate;
  estimate.mean = mean;
  estimate.std_error = std::sqrt(variance / static_cast<double>(m));
  estimate.draws = m;
  estimate.method = Method::MonteCarlo;
  estimate.exactness = exactness;
  return estimate;
}

ComplexityEstimate enumerate_estimate(
    int bits, Exactness exactness,
    const std::function<double(const Eigen::VectorXd&)>& value) {
  if (bits > ExpectationEngine::kExactEnumBits) {
    throw std::invalid_argument("enumerate_estimate: too many sign cells");
  }
  const std::uint64_t patterns = 1ULL << bits;
  Eigen::VectorXd signs = Eigen::VectorXd::Ones(bits);
  KahanSum acc;
  acc.add(value(signs));
  for (std::uint64_t t = 1; t < patterns; ++t) {
    const int flip = std::countr_zero(t);
    signs[flip] = -signs[flip];
    acc.add(value(signs));
  }
  ComplexityEstimate estimate;
  estimate.mean = acc.value() / static_cast<double>(patterns);
  estimate.std_error = 0.0;
  estimate.draws = static_cast<std::int64_t>(patterns);
  estimate.method = Method::ExactEnum;
  estimate.exactness = exactness;
  return estimate;
}

namespace {

ComplexityEstimate exact_from_mean(double mean, std::int64_t patterns,
                                   Exactness exactness) {
  ComplexityEstimate estimate;
  estimate.mean = mean;
  estimate.std_error = 0.0;
  estimate.draws = patterns;
  estimate.method = Method::ExactEnum;
  estimate.exactness = exactness;
  return estimate;
}

// Per-row loss values for a table class: entry (s, i) is h_i applied to
// row i of table s.
Eigen::MatrixXd loss_value_matrix(const FunctionClass& cls,
                                  std::span<const LipschitzLoss> losses) {
  const auto& tables = cls.tables();
  Eigen::MatrixXd psi(static_cast<Eigen::Index>(tables.size()), cls.rows());
  for (std::size_t s = 0; s < tables.size(); ++s) {
    for (int i = 0; i < cls.rows(); ++i) {
      psi(static_cast<Eigen::Index>(s), i) =
          losses[static_cast<std::size_t>(i)].eval(
              tables[s].row(i).transpose());
    }
  }
  return psi;
}

// Whether the per-pattern sup oracle used by each estimator returns the
// true supremum for this class kind.
Exactness scalar_sup_exactness(ClassKind kind) {
  switch (kind) {
    case ClassKind::LinearNormBall:
    case ClassKind::KMeansCenters:
      return Exactness::LowerBound;
    default:
      return Exactness::Exact;
  }
}

Exactness vector_sup_exactness(const FunctionClass& cls) {
  if (cls.kind() == ClassKind::KMeansCenters) return Exactness::LowerBound;
  if (cls.kind() == ClassKind::Product) {
    for (const auto& component : cls.components()) {
      if (vector_sup_exactness(component) == Exactness::LowerBound) {
        return Exactness::LowerBound;
      }
    }
  }
  return Exactness::Exact;
}

}  // namespace
}  // namespace detail

ComplexityEstimate complexity_scalar(const FunctionClass& cls,
                                     std::span<const LipschitzLoss> losses,
                                     const ExpectationEngine& engine) {
  const int n = cls.rows();
  if (losses.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("complexity_scalar: need one loss per row");
  }
  const bool tabular = cls.kind() == ClassKind::Finite ||
                       cls.kind() == ClassKind::FeatureMapFinite;
  if (engine.method == Method::ExactEnum) {
    if (n > ExpectationEngine::kExactEnumBits) {
      throw std::invalid_argument(
          "complexity_scalar: exact enumeration needs n <= 20");
    }
    if (tabular) {
      const Eigen::MatrixXd psi = detail::loss_value_matrix(cls, losses);
      return detail::exact_from_mean(exact_sign_expectation_of_max(psi),
                                     static_cast<std::int64_t>(1) << n,
                                     Exactness::Exact);
    }
    return detail::enumerate_estimate(
        n, detail::scalar_sup_exactness(cls.kind()),
        [&](const Eigen::VectorXd& signs) {
          return loss_weighted_sup(cls, signs, losses, engine.seed, /*draw=*/0)
              .value;
        });
  }

  if (tabular) {
    const Eigen::MatrixXd psi = detail::loss_value_matrix(cls, losses);
    return detail::monte_carlo_estimate(
        engine, Exactness::Exact, [&, n](std::uint64_t draw) {
          double best = -std::numeric_limits<double>::infinity();
          for (Eigen::Index s = 0; s < psi.rows(); ++s) {
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
              total += rng::rademacher_sign(engine.seed, draw,
                                            static_cast<std::uint64_t>(i)) *
                       psi(s, i);
            }
            best = std::max(best, total);
          }
          return best;
        });
  }
  return detail::monte_carlo_estimate(
      engine, detail::scalar_sup_exactness(cls.kind()),
      [&, n](std::uint64_t draw) {
        Eigen::VectorXd signs(n);
        for (int i = 0; i < n; ++i) {
          signs[i] = rng::rademacher_sign(engine.seed, draw,
                                          static_cast<std::uint64_t>(i));
        }
        return loss_weighted_sup(cls, signs, losses, engine.seed, draw).value;
      });
}

ComplexityEstimate complexity_vector(const FunctionClass& cls,
                                     const ExpectationEngine& engine) {
  const int n = cls.rows();
  const int k = cls.output_dim();
  const int bits = n * k;
  const bool tabular = cls.kind() == ClassKind::Finite ||
                       cls.kind() == ClassKind::FeatureMapFinite;
  if (engine.method == Method::ExactEnum) {
    engine.require_enumerable(bits);
    if (tabular) {
      // Flatten each table to one row; the weighted sum is then a plain
      // sign-weighted row sum.
      Eigen::MatrixXd flat(static_cast<Eigen::Index>(cls.tables().size()),
                           bits);
      for (std::size_t s = 0; s < cls.tables().size(); ++s) {
        Eigen::Index cell = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < k; ++j) {
            flat(static_cast<Eigen::Index>(s), cell++) = cls.tables()[s](i, j);
          }
        }
      }
      return detail::exact_from_mean(exact_sign_expectation_of_max(flat),
                                     static_cast<std::int64_t>(1) << bits,
                                     Exactness::Exact);
    }
    return detail::enumerate_estimate(
        bits, detail::vector_sup_exactness(cls),
        [&](const Eigen::VectorXd& signs) {
          const Eigen::MatrixXd coeff =
              Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                             Eigen::Dynamic, Eigen::RowMajor>>(
                  signs.data(), n, k);
          return weighted_sup(cls, coeff).value;
        });
  }

  return detail::monte_carlo_estimate(
      engine, detail::vector_sup_exactness(cls), [&, n, k](std::uint64_t draw) {
        Eigen::MatrixXd coeff(n, k);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < k; ++j) {
            coeff(i, j) = engine.dist.sample(
                engine.seed, draw, static_cast<std::uint64_t>(i) * k + j);
          }
        }
        return weighted_sup(cls, coeff).value;
      });
}

ComplexityEstimate rademacher_sum_norm(const Sample& sample,
                                       const ExpectationEngine& engine) {
  const int n = sample.n();
  const Eigen::MatrixXd& points = sample.points();
  if (engine.method == Method::ExactEnum) {
    if (n > ExpectationEngine::kExactEnumBits) {
      throw std::invalid_argument(
          "rademacher_sum_norm: exact enumeration needs n <= 20");
    }
    return detail::enumerate_estimate(
        n, Exactness::Exact, [&](const Eigen::VectorXd& signs) {
          return (points.transpose() * signs).norm();
        });
  }
  return detail::monte_carlo_estimate(
      engine, Exactness::Exact, [&, n](std::uint64_t draw) {
        Eigen::VectorXd signs(n);
        for (int i = 0; i < n; ++i) {
          signs[i] = rng::rademacher_sign(engine.seed, draw,
                                          static_cast<std::uint64_t>(i));
        }
        return (points.transpose() * signs).norm();
      });
}

}  // namespace radcomplex
