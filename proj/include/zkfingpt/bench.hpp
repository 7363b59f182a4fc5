#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "zkfingpt/matrix.hpp"
#include "zkfingpt/scheme.hpp"

namespace zkfingpt::bench {

struct BenchRecord {
  std::string label;
  size_t layers = 0;        // N
  size_t params = 0;        // M, total weight parameters
  double commit_s = 0;
  double prove_s = 0;
  double verify_s = 0;
  size_t commit_bytes = 0;
  size_t proof_bytes = 0;
};

struct BenchConfig {
  std::vector<size_t> layer_schedule{1, 2, 4, 8};
  std::vector<size_t> dim_schedule{16};
  size_t repetitions = 3;
  uint64_t seed = 1;
};

/// Mock-backend measurements over the cross product of the two schedules;
/// times are medians over repetitions.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Header matches the BenchRecord fields exactly.
std::string to_csv(const std::vector<BenchRecord>& records);

/// R^2 of the least-squares line through (x, y); 1.0 for a perfect fit.
double linear_fit_r2(const std::vector<double>& xs, const std::vector<double>& ys);

FieldMatrix random_matrix(size_t rows, size_t cols, const FieldParamsPtr& params,
                          std::mt19937_64& rng);
scheme::ModelWeights random_model(const std::vector<size_t>& layer_dims_chain,
                                  const FieldParamsPtr& params, std::mt19937_64& rng);

struct ScenarioReport {
  std::string case_name;
  bool yes = false;
  int exit_code = 2;
  std::vector<std::string> published;  // "<type> index=<i> payload=<hex>"
  std::string detail;
};

/// End-to-end use-case flows (commit -> publish -> prove -> publish ->
/// fetch -> verify) against a ledger store. `tamper_output` perturbs one
/// output entry before verification.
ScenarioReport run_scenario(const std::string& case_name,
                            const std::filesystem::path& store_dir, bool tamper_output,
                            uint64_t seed);

}  // namespace zkfingpt::bench
