#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "radcomplex/class_io.hpp"
#include "radcomplex/rng.hpp"

using namespace radcomplex;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path("/tmp/radcomplex_io_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
};

}  // namespace

TEST_CASE("singleton zero table loads as a one-function class") {
  TempFile file("zero.cls");
  file.write(
      "kind finite\n"
      "n 2\n"
      "K 2\n"
      "d 0\n"
      "\n"
      "0 0\n"
      "0 0\n");
  const auto cls = load_class_file(file.path);
  CHECK(cls.kind() == ClassKind::Finite);
  CHECK(cls.tables().size() == 1);
  CHECK(cls.rows() == 2);
  CHECK(cls.output_dim() == 2);
  CHECK(cls.tables().front().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("finite class round-trips bit-exactly") {
  std::vector<Eigen::MatrixXd> tables;
  for (int s = 0; s < 3; ++s) {
    Eigen::MatrixXd t(3, 2);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) {
        t(i, j) = std::sqrt(2.0) *
                      (2.0 * rng::uniform01(71, static_cast<std::uint64_t>(s),
                                            static_cast<std::uint64_t>(i * 2 + j)) -
                       1.0) +
                  1.0 / 3.0;
      }
    }
    tables.push_back(t);
  }
  const auto original = FunctionClass::finite(tables);
  TempFile file("roundtrip.cls");
  save_class_file(file.path, original);
  const auto loaded = load_class_file(file.path);
  REQUIRE(loaded.tables().size() == tables.size());
  for (std::size_t s = 0; s < tables.size(); ++s) {
    CHECK((loaded.tables()[s] - tables[s]).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("linear and kmeans classes round-trip") {
  Eigen::MatrixXd points(2, 3);
  points << 0.25, -0.5, 0.125, 0.1, 0.2, -0.3;
  const auto linear = FunctionClass::linear_norm_ball(
      Sample(points), MatrixNorm::Spectral, 1.75, 2);
  TempFile linear_file("linear.cls");
  save_class_file(linear_file.path, linear);
  const auto linear_loaded = load_class_file(linear_file.path);
  CHECK(linear_loaded.kind() == ClassKind::LinearNormBall);
  CHECK(linear_loaded.norm_kind() == MatrixNorm::Spectral);
  CHECK(linear_loaded.radius() == 1.75);
  CHECK((linear_loaded.sample().points() - points).cwiseAbs().maxCoeff() ==
        0.0);

  const auto kmeans = FunctionClass::kmeans_centers(Sample(points), 3);
  TempFile kmeans_file("kmeans.cls");
  save_class_file(kmeans_file.path, kmeans);
  const auto kmeans_loaded = load_class_file(kmeans_file.path);
  CHECK(kmeans_loaded.kind() == ClassKind::KMeansCenters);
  CHECK(kmeans_loaded.output_dim() == 3);
}

TEST_CASE("feature-map classes round-trip") {
  MetaSample meta(2, 2, Eigen::MatrixXd::Zero(4, 1));
  Eigen::MatrixXd h(4, 2);
  h << 0.1, 0.9, 0.25, 0.75, 0.5, 0.5, 1.0, 0.0;
  const auto cls = FunctionClass::feature_map_finite(meta, {h});
  TempFile file("fmap.cls");
  save_class_file(file.path, cls);
  const auto loaded = load_class_file(file.path);
  CHECK(loaded.kind() == ClassKind::FeatureMapFinite);
  CHECK(loaded.meta().tasks == 2);
  CHECK(loaded.meta().points_per_task == 2);
  CHECK((loaded.tables().front() - h).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kmeans load rejects points outside the unit ball, citing them") {
  TempFile file("badball.cls");
  file.write(
      "kind kmeans\n"
      "n 2\n"
      "K 3\n"
      "d 2\n"
      "\n"
      "0.5 0.5\n"
      "1.2 0\n");
  try {
    load_class_file(file.path);
    FAIL("expected ClassFileError");
  } catch (const ClassFileError& e) {
    const std::string message = e.what();
    CHECK(message.find("point 1") != std::string::npos);
    CHECK(e.line() == 7);
  }
}

TEST_CASE("parse errors carry row and column information") {
  TempFile file("badtoken.cls");
  file.write(
      "kind finite\n"
      "n 1\n"
      "K 2\n"
      "d 0\n"
      "\n"
      "0.5 oops\n");
  try {
    load_class_file(file.path);
    FAIL("expected ClassFileError");
  } catch (const ClassFileError& e) {
    const std::string message = e.what();
    CHECK(message.find("oops") != std::string::npos);
    CHECK(message.find("column 2") != std::string::npos);
    CHECK(e.line() == 6);
  }
}

TEST_CASE("shape and header errors") {
  TempFile wrong_shape("shape.cls");
  wrong_shape.write(
      "kind finite\n"
      "n 2\n"
      "K 2\n"
      "d 0\n"
      "\n"
      "1 2\n");
  CHECK_THROWS_AS(load_class_file(wrong_shape.path), ClassFileError);

  TempFile wrong_cols("cols.cls");
  wrong_cols.write(
      "kind finite\n"
      "n 1\n"
      "K 3\n"
      "d 0\n"
      "\n"
      "1 2\n");
  CHECK_THROWS_AS(load_class_file(wrong_cols.path), ClassFileError);

  TempFile unknown_key("key.cls");
  unknown_key.write(
      "kind finite\n"
      "n 1\n"
      "K 1\n"
      "flavor spicy\n"
      "\n"
      "1\n");
  CHECK_THROWS_AS(load_class_file(unknown_key.path), ClassFileError);

  TempFile unknown_kind("kind.cls");
  unknown_kind.write(
      "kind mystery\n"
      "n 1\n"
      "K 1\n"
      "d 1\n"
      "\n"
      "1\n");
  CHECK_THROWS_AS(load_class_file(unknown_kind.path), ClassFileError);

  CHECK_THROWS_AS(load_class_file("/tmp/radcomplex_io_missing_file.cls"),
                  ClassFileError);
}

TEST_CASE("comments are ignored") {
  TempFile file("comments.cls");
  file.write(
      "# toy class\n"
      "kind finite\n"
      "n 1\n"
      "K 1\n"
      "d 0\n"
      "\n"
      "# the only table\n"
      "0.5\n");
  const auto cls = load_class_file(file.path);
  CHECK(cls.tables().front()(0, 0) == 0.5);
}
