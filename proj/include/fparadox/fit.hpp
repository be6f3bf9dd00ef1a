#pragma once

// Estimating the scaling exponent from observed degrees: the truncated
// continuous maximum-likelihood estimator, and moment inversion through the
// closed-form mean, variance or variance-to-mean ratio.

#include <span>

#include "fparadox/powerlaw.hpp"

namespace fparadox {

/// Search bracket for alpha in both estimators.
inline constexpr double kAlphaLow = 1.001;
inline constexpr double kAlphaHigh = 6.0;

struct FitResult {
  double alpha_hat = 0.0;
  double stderr_alpha = 0.0;  ///< (alpha_hat - 1) / sqrt(n_tail)
  double k_min_used = 0.0;
  double k_max_used = 0.0;
  std::size_t n_tail = 0;
  double ks_distance = 0.0;
};

/// MLE of alpha for observations in [k_min, k_max]; values outside are
/// ignored. With k_max infinite this is 1 + n / sum ln(k_i / k_min).
///
/// Errors: TOO_FEW_POINTS with fewer than two in-range values, NO_MAXIMUM
/// when the likelihood is monotone over the alpha bracket.
FitResult fit_alpha(std::span<const double> observations, double k_min, double k_max);

/// Same, with k_min and k_max defaulting to the observed extremes.
FitResult fit_alpha(std::span<const double> observations);

enum class Moment { Mean, Variance, VarToMean };

/// Solves moment(alpha; k_min, k_max) == observed for alpha by bisection on
/// the bracket, to |d alpha| <= 1e-8. The variance-to-mean ratio peaks
/// slightly above alpha = 1; it is inverted on its falling side only.
///
/// Errors: OUT_OF_RANGE when observed is not attained on the bracket,
/// NON_MONOTONE when the moment is not monotone at the bracket ends.
double alpha_from_moment(double observed, Moment which, double k_min, double k_max);

}  // namespace fparadox
