#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "semitsp/approx.hpp"
#include "semitsp/exact.hpp"
#include "semitsp/graph.hpp"

namespace semitsp {

// mt19937_64 with a fixed bits-to-double mapping, so streams are identical
// on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + uniform01() * (b - a); }

 private:
  std::mt19937_64 eng_;
};

// Stream splitting: instance i of a run seeded with s draws from
// splitmix64(s ^ (0x9E3779B97F4A7C15 * (i + 1))).
uint64_t splitmix64(uint64_t x);
uint64_t instance_seed(uint64_t base_seed, int index);

enum class WeightModel { UniformWeights, EuclideanPoints, GammaControlled };

const char* weight_model_name(WeightModel m);
WeightModel weight_model_from_name(const std::string& name);

struct GeneratorConfig {
  int n = 0;
  uint64_t seed = 0;
  WeightModel model = WeightModel::UniformWeights;
  double w_min = 0.01;  // UniformWeights range
  double w_max = 1.0;
  double target_gamma = 1.0;  // GammaControlled: reached within 5%
};

CompleteGraph generate_random_graph(const GeneratorConfig& cfg);

struct ExperimentRecord {
  int instance_id = 0;
  std::string algorithm;
  int n = 0;
  uint64_t seed = 0;
  double weight = 0.0;
  double time_seconds = 0.0;
  double beta = 1.0;
  double gamma = 1.0;
  double bound_factor = 1.0;
  std::optional<double> exact_weight;
};

struct QualityConfig {
  int n = 0;
  int instances = 0;
  uint64_t base_seed = 0;
  WeightModel model = WeightModel::UniformWeights;
  double w_min = 0.01;
  double w_max = 1.0;
  double target_gamma = 3.0;
  int exact_cap = kHeldKarpCap;  // exact companion rows only when n <= cap
  int workers = 0;               // 0 = pick automatically
};

// Runs all five algorithms (plus Held-Karp when within the cap) on every
// seeded instance. Instances may run concurrently; records come back sorted
// by (instance_id, algorithm) regardless of scheduling.
std::vector<ExperimentRecord> run_quality_experiment(const QualityConfig& cfg);

struct TimingRow {
  int n = 0;
  std::string algorithm;
  double mean_time_seconds = 0.0;
};

struct TimingConfig {
  int n_min = 0;
  int n_max = 0;
  int instances_per_n = 0;
  uint64_t base_seed = 0;
  WeightModel model = WeightModel::UniformWeights;
  double w_min = 0.01;
  double w_max = 1.0;
};

// Mean per-algorithm wall time for each size, measured serially to avoid
// contention skew.
std::vector<TimingRow> run_timing_experiment(const TimingConfig& cfg);

// Long-form CSV (schema: instance_id,algorithm,n,seed,weight,time_seconds,
// beta,gamma,bound_factor,exact_weight). The time column stays empty here:
// quality runs execute concurrently, so per-solve wall times would not be
// reproducible; bench --timing is the measurement path.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::string timing_to_csv(const std::vector<TimingRow>& rows);

// Writes the long-form CSV plus one series file per algorithm
// (x = instance or n, y = weight or mean time) into a directory.
void emit_plot_data(const std::vector<ExperimentRecord>& records, const std::string& out_dir);
void emit_timing_plot_data(const std::vector<TimingRow>& rows, const std::string& out_dir);

struct WeightSummary {
  std::string algorithm;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

std::vector<WeightSummary> summarize_weights(const std::vector<ExperimentRecord>& records);

}  // namespace semitsp
