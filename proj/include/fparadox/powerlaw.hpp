#pragma once

// Continuous truncated power law P(k) = C k^-alpha on [k_min, k_max]:
// normalization, moments, friendship-paradox predictions and
// inverse-transform sampling.

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace fparadox {

using DegreeSequence = std::vector<std::int64_t>;

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

/// Distance from alpha = 2 or alpha = 3 inside which the removable-singularity
/// limits replace the general closed forms.
inline constexpr double kSwitchEps = 1e-6;

struct PowerLawSpec {
  double alpha = 2.0;
  double k_min = 1.0;
  double k_max = kInfinite;

  bool bounded() const noexcept { return k_max != kInfinite; }
  bool degenerate() const noexcept { return k_min == k_max; }
};

/// Throws INVALID_ARGUMENT / DIVERGENT when the triple is not a valid power
/// law (alpha <= 1, k_min < 1, k_max < k_min, NaNs).
void validate(const PowerLawSpec& spec);

enum class Branch { General, LimitAlpha2, LimitAlpha3, Degenerate };

std::string_view to_string(Branch branch) noexcept;

struct PredictionResult {
  double c = 0.0;  ///< normalization constant, NaN for the point mass
  double mean_k = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double var_to_mean = 0.0;
  double k_ff = 0.0;
  Branch branch = Branch::General;
};

/// C such that C * integral of k^-alpha over the support is 1.
/// Errors: DEGENERATE_SUPPORT when k_min == k_max.
double normalization_constant(const PowerLawSpec& spec);

/// C k^-alpha inside the support, 0 outside.
double pdf(const PowerLawSpec& spec, double k);

/// Integral of the density from k_min to k, clamped to [0, 1].
double cdf(const PowerLawSpec& spec, double k);

/// Mean degree, second moment, variance, variance-to-mean ratio and mean
/// degree of friends for the distribution.
///
/// Near alpha = 2 and alpha = 3 (within kSwitchEps) the L'Hopital limits are
/// used and `branch` says so. k_max = infinity needs alpha > 3, a finite
/// k_max is fine for any alpha > 1. k_min == k_max yields the point mass.
PredictionResult predict(const PowerLawSpec& spec);

/// Moments evaluated through one expression that is smooth in alpha,
/// including alpha = 2 and 3 exactly. Used by root finders that need a
/// continuous objective. The returned branch is always General.
PredictionResult smooth_moments(const PowerLawSpec& spec);

/// n continuous draws by inverse transform. k_max may be infinite.
std::vector<double> sample_continuous(const PowerLawSpec& spec, std::size_t n,
                                      std::uint64_t seed);

/// Rounds continuous draws half-up to integer degrees.
DegreeSequence round_degrees(const std::vector<double>& values);

/// sample_continuous followed by round_degrees; requires a finite k_max.
DegreeSequence sample_degrees(const PowerLawSpec& spec, std::size_t n,
                              std::uint64_t seed);

}  // namespace fparadox
