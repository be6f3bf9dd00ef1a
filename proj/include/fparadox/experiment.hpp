#pragma once

// The two tabulated experiments: the closed-form (alpha, k_max) sweep and the
// simulated-network comparison of empirical and predicted variance-to-mean
// ratios across generator models.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fparadox/netgen.hpp"
#include "fparadox/powerlaw.hpp"

namespace fparadox {

struct SweepRow {
  double alpha = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  double mean_k = 0.0;
  double k_ff = 0.0;
  double var_to_mean = 0.0;
  Branch branch = Branch::General;
};

/// One row per (alpha, k_max), alpha-major, in the order given.
std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> k_maxes,
                            double k_min);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

struct ExperimentConfig {
  double alpha = 2.0;
  double k_min = 1.0;
  std::vector<double> k_maxes = {10, 32, 100, 316, 1000};
  std::size_t n = 10000;
  std::vector<Model> models = {Model::A, Model::B, Model::Kalisky};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  GeneratorOptions generator;
  /// Worker threads for the cells; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// Measurements a failed cell never reached; written as empty CSV fields.
inline constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct ExperimentRow {
  bool summary = false;
  Model model = Model::A;
  std::optional<std::uint64_t> seed;  ///< empty on summary rows
  std::size_t n = 0;
  double k_min = 0.0;
  double k_max = 0.0;
  double mean_k = kUnset;
  double variance = kUnset;
  double k_ff = kUnset;
  double empirical_ratio = kUnset;
  double predicted_ratio = 0.0;  ///< closed form at the generating alpha
  double alpha_hat = kUnset;
  double predicted_lo = kUnset;  ///< closed form over the fitted-alpha range
  double predicted_hi = kUnset;
  double components = kUnset;
  double giant_fraction = kUnset;
  double dropped_stubs = kUnset;
  std::string error;  ///< error code when the cell failed, empty otherwise
};

/// For every (model, k_max, seed): sample degrees, realize the network,
/// measure it, and fit alpha on the pre-rounding draws. Cells sharing
/// (k_max, seed) share one degree sequence across models. The predicted band
/// of a (model, k_max) group spans the closed-form ratio over its fitted
/// alphas. Rows are ordered model, k_max, seed, each group followed by its
/// summary row; the order does not depend on scheduling.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows);

}  // namespace fparadox
