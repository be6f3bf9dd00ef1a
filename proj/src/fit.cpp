#include "fparadox/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fparadox/error.hpp"

namespace fparadox {

namespace {

// E[ln k] under the truncated power law, via t = ln(k / k_min) which is a
// truncated exponential with rate (1 - alpha) on [0, ln(k_max / k_min)].
double expected_log(double alpha, double k_min, double k_max) {
  const double s = 1.0 - alpha;
  if (k_max == kInfinite) return std::log(k_min) - 1.0 / s;
  const double span = std::log(k_max / k_min);
  const double x = s * span;
  double mean_t;
  if (std::abs(x) < 1e-4) {
    mean_t = span * (0.5 + x / 12.0);
  } else {
    mean_t = span / -std::expm1(-x) - 1.0 / s;
  }
  return std::log(k_min) + mean_t;
}

double ks_statistic(std::vector<double> sorted, const PowerLawSpec& spec) {
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(spec, sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return std::clamp(d, 0.0, 1.0);
}

double moment_value(const PredictionResult& r, Moment which) {
  switch (which) {
    case Moment::Mean: return r.mean_k;
    case Moment::Variance: return r.variance;
    case Moment::VarToMean: return r.var_to_mean;
  }
  return r.mean_k;
}

// Moment as a smooth function of alpha. With an unbounded tail only the mean
// exists below alpha = 3.
double moment_at(double alpha, Moment which, double k_min, double k_max) {
  if (k_max == kInfinite && which == Moment::Mean) return (alpha - 1.0) / (alpha - 2.0) * k_min;
  return moment_value(smooth_moments({alpha, k_min, k_max}), which);
}

// Smallest alpha at which the requested moment is finite.
double divergence_floor(Moment which, double k_max) {
  if (k_max != kInfinite) return 1.0;
  return which == Moment::Mean ? 2.0 : 3.0;
}

// Golden-section search for the maximizer of a unimodal f on [lo, hi].
template <class F>
double argmax(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return f(mid) >= f(lo) ? mid : lo;
}

}  // namespace

FitResult fit_alpha(std::span<const double> observations, double k_min, double k_max) {
  if (!(k_min >= 1.0) || !(k_max >= k_min)) {
    throw Error(ErrorCode::InvalidArgument, "fit needs 1 <= k_min <= k_max");
  }
  std::vector<double> tail;
  double log_sum = 0.0;
  for (double x : observations) {
    if (x >= k_min && x <= k_max) {
      tail.push_back(x);
      log_sum += std::log(x);
    }
  }
  if (tail.size() < 2) {
    throw Error(ErrorCode::TooFewPoints,
                std::to_string(tail.size()) + " observation(s) in [k_min, k_max]");
  }
  const auto n = static_cast<double>(tail.size());
  const double mean_log = log_sum / n;

  FitResult fit;
  fit.k_min_used = k_min;
  fit.k_max_used = k_max;
  fit.n_tail = tail.size();

  if (k_max == kInfinite) {
    double excess = 0.0;
    for (double x : tail) excess += std::log(x / k_min);
    if (!(excess > 0.0)) {
      throw Error(ErrorCode::NoMaximum, "likelihood increases without bound in alpha");
    }
    fit.alpha_hat = 1.0 + n / excess;
  } else {
    if (k_max == k_min) {
      throw Error(ErrorCode::NoMaximum, "likelihood is flat on a point support");
    }
    // d/d(alpha) of the mean log-likelihood is E_alpha[ln k] - mean(ln x),
    // strictly decreasing in alpha; a sign change brackets the maximum.
    auto slope = [&](double a) { return expected_log(a, k_min, k_max) - mean_log; };
    double lo = kAlphaLow;
    double hi = kAlphaHigh;
    if (slope(lo) <= 0.0 || slope(hi) >= 0.0) {
      throw Error(ErrorCode::NoMaximum,
                  "log-likelihood is monotone on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    }
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    fit.alpha_hat = 0.5 * (lo + hi);
  }
  fit.stderr_alpha = (fit.alpha_hat - 1.0) / std::sqrt(n);
  fit.ks_distance = ks_statistic(std::move(tail), {fit.alpha_hat, k_min, k_max});
  return fit;
}

FitResult fit_alpha(std::span<const double> observations) {
  if (observations.empty()) throw Error(ErrorCode::TooFewPoints, "no observations");
  auto [lo, hi] = std::minmax_element(observations.begin(), observations.end());
  return fit_alpha(observations, std::max(1.0, *lo), std::max(1.0, *hi));
}

double alpha_from_moment(double observed, Moment which, double k_min, double k_max) {
  if (!(k_min >= 1.0) || !(k_max > k_min)) {
    throw Error(ErrorCode::InvalidArgument, "moment inversion needs 1 <= k_min < k_max");
  }
  auto f = [&](double a) { return moment_at(a, which, k_min, k_max); };

  // The mean and the variance fall with alpha across the whole bracket. The
  // variance-to-mean ratio first rises to a peak near alpha = 1.1-1.2 and
  // only then falls, so the search starts at the peak.
  double lo = std::max(kAlphaLow, divergence_floor(which, k_max) + 1e-3);
  double hi = kAlphaHigh;
  if (which == Moment::VarToMean) lo = argmax(f, lo, hi);

  const double f_lo = f(lo);
  const double f_hi = f(hi);
  const double h = 1e-4;
  if (!(f(lo + h) < f_lo) || !(f_hi < f(hi - h)) || !(f_hi < f_lo)) {
    throw Error(ErrorCode::NonMonotone, "moment is not decreasing across the alpha bracket");
  }
  if (!(observed <= f_lo && observed >= f_hi)) {
    throw Error(ErrorCode::OutOfRange,
                "observed value " + std::to_string(observed) + " outside [" +
                    std::to_string(f_hi) + ", " + std::to_string(f_lo) + "]");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > observed ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fparadox
