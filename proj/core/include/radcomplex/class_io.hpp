#pragma once

#include <stdexcept>
#include <string>

#include "radcomplex/classes.hpp"

namespace radcomplex {

// Parse or validation failure with the offending file location.
class ClassFileError : public std::runtime_error {
 public:
  ClassFileError(const std::string& path, int line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Structured text format. Header lines are `key value` pairs:
//   kind    finite | kmeans | linear-frobenius | linear-spectral | feature-map
//   n       points per sample (per task for feature-map)
//   K       output dimension (centers for kmeans)
//   d       ambient dimension (0 for finite)
//   radius  norm-ball radius (linear kinds)
//   tasks   task count (feature-map)
// followed by a blank line and the data: for kmeans/linear kinds n rows of
// d decimals (the sample); for finite/feature-map kinds one value table
// per block (n x K, or (tasks*n) x K), blocks separated by blank lines.
// Lines starting with '#' are comments.
FunctionClass load_class_file(const std::string& path);

// Writes the documented format with 17 significant digits, so a save/load
// round trip reproduces every value bit-exactly.
void save_class_file(const std::string& path, const FunctionClass& cls);

}  // namespace radcomplex
