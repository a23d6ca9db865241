#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trifree/construction.hpp"
#include "trifree/partite_distance.hpp"

namespace trifree {

enum class MeasureMode { kAuto, kExact, kHeuristic, kNone };

std::string to_string(MeasureMode mode);
MeasureMode parse_measure_mode(const std::string& text);

/// Grids are expanded in the order n, p, gamma, r, c (n outermost).
struct SweepConfig {
  std::vector<std::size_t> n;
  /// Absolute edge probabilities, or multiples of n^{-1/2} when p_scale is set.
  std::vector<double> p;
  bool p_scale = false;
  std::vector<double> gamma{0.2};
  std::vector<std::size_t> r{2};
  /// nullopt selects the formula value for c.
  std::vector<std::optional<double>> c{kDefaultC};
  std::size_t seeds = 1;
  std::uint64_t base_seed = 1;
  std::size_t restarts = kDefaultRestarts;
  MeasureMode measure = MeasureMode::kAuto;
  std::string out;
  std::size_t threads = 0;
};

/// key = value lines, '#' comments, comma-separated lists. Keys: n, p,
/// p_scale (list, replaces p), gamma, r, c (numbers or "formula"), seeds,
/// base_seed, restarts, measure (auto|exact|heuristic|none), out, threads.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);
std::string sweep_config_json(const SweepConfig& config);

struct SweepCell {
  std::size_t index = 0;
  std::size_t n = 0;
  double p = 0;
  double gamma = 0;
  std::size_t r = 0;
  std::optional<double> c;
};

std::vector<SweepCell> expand_cells(const SweepConfig& config);
Seed cell_seed(const SweepConfig& config, std::size_t cell, std::size_t trial);

inline constexpr int kRecordSchemaVersion = 1;

struct ExperimentRecord {
  int schema_version = kRecordSchemaVersion;
  std::size_t cell = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0;
  double gamma = 0;
  std::size_t r = 0;
  double c = 0;
  std::string c_source;
  double pprime = 0;
  bool completed = false;      // the run finished without an error
  bool valid = false;          // parameters inside the stated validity range
  bool lemma_regime = false;
  std::size_t edges_gamma = 0;
  std::size_t edges_h = 0;
  std::size_t min_degree_h = 0;
  double min_degree_target = 0;
  std::uint64_t triangles_h = 0;
  std::int64_t distance = -1;  // -1 when not measured
  bool exact = false;
  std::string method;          // exact, heuristic or none
  StageDeletions deleted;
  std::string error;
  double wall_ms = 0;
};

/// One full construct and measure run.
ExperimentRecord run_cell(const SweepCell& cell, const SweepConfig& config, std::size_t trial);

/// Records in (cell, trial) order regardless of thread count.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& config);

std::string csv_header();
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void save_csv(const std::string& path, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_csv(std::istream& in);
std::vector<ExperimentRecord> load_csv(const std::string& path);

/// Writes `path` and `path.json` (config plus record count).
void save_sweep(const std::string& path, const SweepConfig& config, const std::vector<ExperimentRecord>& records);

struct ScalingFit {
  double slope = 0;
  double intercept = 0;
  double c_hat = 0;     // exp(intercept)
  double residual = 0;  // RMS of log residuals
  std::size_t used = 0;
  std::size_t cells = 0;
  std::size_t skipped_zero = 0;
  std::size_t skipped_unmeasured = 0;
  bool all_exact = false;
};

/// OLS of log(distance) on log(n/p) over completed records with a positive
/// distance. Needs at least 5 such records and two distinct x values.
/// Heuristic distances are upper bounds, so c_hat overestimates when any
/// record is inexact.
ScalingFit fit_scaling(const std::vector<ExperimentRecord>& records);
std::string fit_json(const ScalingFit& fit, int indent = 2);

}  // namespace trifree
