#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace radcomplex::suites {

struct CsvRow {
  std::string instance_id;
  std::string quantity;
  double mean = 0.0;
  double std_error = 0.0;
  std::string method;  // EXACT_ENUM | MONTE_CARLO | CLOSED_FORM
  std::optional<double> bound;
  std::string verdict;
  std::optional<double> margin;
};

void write_csv(std::ostream& out, std::span<const CsvRow> rows);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string summary;
  std::vector<CsvRow> rows;
  // Named figures for downstream assertions (counts, medians, rates).
  std::map<std::string, double> metrics;
};

// The preset verification suites, in `run_all` order. Each is
// deterministic in its seed and scale parameters.
SuiteResult run_counterexample_suite(std::uint64_t seed);
SuiteResult run_contraction_exact_suite(std::uint64_t seed, int trials = 200);
SuiteResult run_khintchine_suite(std::uint64_t seed,
                                 std::int64_t gaussian_draws = 100000);
SuiteResult run_product_identity_suite(std::uint64_t seed, int trials = 50);
SuiteResult run_tail_bound_suite(std::uint64_t seed,
                                 std::int64_t draws = 1000000);
SuiteResult run_kmeans_chain_suite(std::uint64_t seed, int samples = 20,
                                   std::int64_t draws = 10000);
SuiteResult run_frobenius_suite(std::uint64_t seed, int trials = 20,
                                std::int64_t draws = 10000);
SuiteResult run_theorem1_suite(std::uint64_t seed, int repetitions = 500);
SuiteResult run_ltl_suite(std::uint64_t seed);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace radcomplex::suites
