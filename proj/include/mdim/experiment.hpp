#ifndef MDIM_EXPERIMENT_HPP
#define MDIM_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdim/measures.hpp"

namespace mdim {

constexpr const char* kVersion = "0.1.0";

/// Named reproductions of the closed-form predictions. Each experiment
/// declares its theoretical target by formula name; the target value is
/// always recomputed from the calculators, never hard-coded.
struct ExperimentConfig {
  std::string experiment;  // theorem-3.5, corollary-3.9-independent,
                           // corollary-3.14-counterexample, freq-divergence,
                           // normalizability
  std::optional<nlohmann::json> measure;  // measures JSON schema
  std::size_t n_max = 1000000;
  std::vector<std::uint64_t> seeds;
  std::string method = "plugin";
  int block_len = 4;
  std::optional<double> tolerance;  // override of the built-in tolerance
  std::string output_dir;           // empty: no trace CSVs written

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SeedResult {
  std::uint64_t seed;
  double value;                      // primary statistic for this seed
  std::optional<double> log_lr_bits; // corollary-3.14 only
  std::string note;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<SeedResult> seed_results;
  double mean = 0.0;
  double stddev = 0.0;
  std::string target_formula;
  double target_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> detail;  // per-check lines
  // provenance
  std::string version = kVersion;
  std::string prng;
  std::string config_hash;

  nlohmann::json to_json() const;
  /// Canonical byte rendering used for determinism checks.
  std::string to_bytes() const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// FNV-1a hash of the canonical config rendering, hex-encoded.
std::string config_hash(const ExperimentConfig& cfg);

}  // namespace mdim

#endif
