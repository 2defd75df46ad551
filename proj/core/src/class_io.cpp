#include "radcomplex/class_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace radcomplex {
namespace {

struct Line {
  int number;
  std::string text;
};

bool is_blank(const std::string& text) {
  return text.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<double> parse_row(const std::string& path, const Line& line,
                              int expected_cols) {
  std::vector<double> row;
  std::istringstream stream(line.text);
  std::string token;
  while (stream >> token) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      row.push_back(value);
    } catch (const std::exception&) {
      throw ClassFileError(path, line.number,
                           "non-numeric token '" + token + "' in column " +
                               std::to_string(row.size() + 1));
    }
  }
  if (expected_cols > 0 && static_cast<int>(row.size()) != expected_cols) {
    throw ClassFileError(path, line.number,
                         "expected " + std::to_string(expected_cols) +
                             " values, found " + std::to_string(row.size()));
  }
  return row;
}

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

FunctionClass load_class_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw ClassFileError(path, 0, "cannot open file");
  }
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(input, text)) {
    ++number;
    if (!text.empty() && text[0] == '#') continue;
    lines.push_back({number, text});
  }

  // Header: `key value` pairs until the first blank line.
  std::map<std::string, std::string> header;
  std::map<std::string, int> header_lines;
  std::size_t cursor = 0;
  for (; cursor < lines.size() && !is_blank(lines[cursor].text); ++cursor) {
    std::istringstream stream(lines[cursor].text);
    std::string key, value, extra;
    if (!(stream >> key >> value) || (stream >> extra)) {
      throw ClassFileError(path, lines[cursor].number,
                           "header lines must be 'key value'");
    }
    if (header.count(key)) {
      throw ClassFileError(path, lines[cursor].number,
                           "duplicate header key '" + key + "'");
    }
    header[key] = value;
    header_lines[key] = lines[cursor].number;
  }

  const auto header_int = [&](const std::string& key) {
    const auto it = header.find(key);
    if (it == header.end()) {
      throw ClassFileError(path, 1, "missing header key '" + key + "'");
    }
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      throw ClassFileError(path, header_lines[key],
                           "value of '" + key + "' is not an integer");
    }
  };
  const auto header_double = [&](const std::string& key) {
    const auto it = header.find(key);
    if (it == header.end()) {
      throw ClassFileError(path, 1, "missing header key '" + key + "'");
    }
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw ClassFileError(path, header_lines[key],
                           "value of '" + key + "' is not a number");
    }
  };
  for (const auto& [key, value] : header) {
    (void)value;
    if (key != "kind" && key != "n" && key != "K" && key != "d" &&
        key != "radius" && key != "tasks" && key != "norm") {
      throw ClassFileError(path, header_lines[key],
                           "unknown header key '" + key + "'");
    }
  }
  if (!header.count("kind")) {
    throw ClassFileError(path, 1, "missing header key 'kind'");
  }
  const std::string kind = header["kind"];
  const int n = header_int("n");
  const int k = header_int("K");
  if (n < 1 || k < 1) {
    throw ClassFileError(path, header_lines["n"], "n and K must be >= 1");
  }

  // Data rows, grouped into blank-line separated blocks.
  std::vector<std::vector<Line>> blocks;
  std::vector<Line> block;
  for (; cursor < lines.size(); ++cursor) {
    if (is_blank(lines[cursor].text)) {
      if (!block.empty()) blocks.push_back(std::move(block));
      block.clear();
    } else {
      block.push_back(lines[cursor]);
    }
  }
  if (!block.empty()) blocks.push_back(std::move(block));

  const auto block_matrix = [&](const std::vector<Line>& rows, int expect_rows,
                                int expect_cols) {
    if (static_cast<int>(rows.size()) != expect_rows) {
      throw ClassFileError(path, rows.empty() ? 0 : rows.front().number,
                           "expected " + std::to_string(expect_rows) +
                               " rows, found " + std::to_string(rows.size()));
    }
    Eigen::MatrixXd matrix(expect_rows, expect_cols);
    for (int r = 0; r < expect_rows; ++r) {
      const auto row = parse_row(path, rows[static_cast<std::size_t>(r)], expect_cols);
      for (int col = 0; col < expect_cols; ++col) matrix(r, col) = row[static_cast<std::size_t>(col)];
    }
    return matrix;
  };

  if (kind == "finite" || kind == "feature-map") {
    const int tasks = kind == "feature-map" ? header_int("tasks") : 1;
    if (tasks < 1) {
      throw ClassFileError(path, header_lines["tasks"], "tasks must be >= 1");
    }
    const int rows_per_table = tasks * n;
    if (blocks.empty()) {
      throw ClassFileError(path, number, "no value tables found");
    }
    std::vector<Eigen::MatrixXd> tables;
    tables.reserve(blocks.size());
    for (const auto& rows : blocks) {
      tables.push_back(block_matrix(rows, rows_per_table, k));
    }
    if (kind == "finite") return FunctionClass::finite(std::move(tables));
    const int d = header.count("d") ? header_int("d") : 0;
    MetaSample meta(tasks, n, Eigen::MatrixXd::Zero(rows_per_table, d));
    return FunctionClass::feature_map_finite(std::move(meta), std::move(tables));
  }

  const int d = header_int("d");
  if (d < 1) {
    throw ClassFileError(path, header_lines["d"],
                         "d must be >= 1 for sample-based kinds");
  }
  if (blocks.size() != 1) {
    throw ClassFileError(path, number,
                         "expected exactly one block of sample points");
  }
  const Eigen::MatrixXd points = block_matrix(blocks.front(), n, d);

  if (kind == "kmeans") {
    for (int i = 0; i < n; ++i) {
      const double norm = points.row(i).norm();
      if (norm > 1.0 + 1e-9) {
        throw ClassFileError(
            path, blocks.front()[static_cast<std::size_t>(i)].number,
            "point " + std::to_string(i) + " has norm " + format_value(norm) +
                " > 1");
      }
    }
    return FunctionClass::kmeans_centers(Sample(points), k);
  }
  if (kind == "linear-frobenius" || kind == "linear-spectral") {
    const double radius = header_double("radius");
    if (!(radius > 0.0)) {
      throw ClassFileError(path, header_lines["radius"], "radius must be > 0");
    }
    const MatrixNorm norm = kind == "linear-frobenius" ? MatrixNorm::Frobenius
                                                       : MatrixNorm::Spectral;
    return FunctionClass::linear_norm_ball(Sample(points), norm, radius, k);
  }
  throw ClassFileError(path, header_lines["kind"],
                       "unknown kind '" + kind + "'");
}

void save_class_file(const std::string& path, const FunctionClass& cls) {
  std::ofstream output(path);
  if (!output) {
    throw ClassFileError(path, 0, "cannot open file for writing");
  }
  const auto write_matrix = [&](const Eigen::MatrixXd& matrix) {
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
      for (Eigen::Index col = 0; col < matrix.cols(); ++col) {
        if (col > 0) output << ' ';
        output << format_value(matrix(r, col));
      }
      output << '\n';
    }
  };
  switch (cls.kind()) {
    case ClassKind::Finite:
      output << "kind finite\n"
             << "n " << cls.rows() << "\nK " << cls.output_dim() << "\nd 0\n";
      for (const auto& table : cls.tables()) {
        output << '\n';
        write_matrix(table);
      }
      return;
    case ClassKind::FeatureMapFinite:
      output << "kind feature-map\n"
             << "n " << cls.meta().points_per_task << "\nK " << cls.output_dim()
             << "\nd " << cls.meta().points.cols() << "\ntasks "
             << cls.meta().tasks << "\n";
      for (const auto& table : cls.tables()) {
        output << '\n';
        write_matrix(table);
      }
      return;
    case ClassKind::KMeansCenters:
      output << "kind kmeans\n"
             << "n " << cls.rows() << "\nK " << cls.output_dim() << "\nd "
             << cls.sample().dim() << "\n\n";
      write_matrix(cls.sample().points());
      return;
    case ClassKind::LinearNormBall:
      output << "kind "
             << (cls.norm_kind() == MatrixNorm::Frobenius ? "linear-frobenius"
                                                          : "linear-spectral")
             << "\nn " << cls.rows() << "\nK " << cls.output_dim() << "\nd "
             << cls.sample().dim() << "\nradius " << format_value(cls.radius())
             << "\n\n";
      write_matrix(cls.sample().points());
      return;
    case ClassKind::Product:
    case ClassKind::OperatorProjection:
      throw std::invalid_argument(
          "save_class_file: kind has no file representation");
  }
}

}  // namespace radcomplex
