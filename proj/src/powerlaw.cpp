#include "fparadox/powerlaw.hpp"

#include <cmath>
#include <string>

#include "fparadox/error.hpp"
#include "fparadox/random.hpp"

namespace fparadox {

namespace {

// Integral of k^(s-1) over [k_min, k_max], written so that it stays accurate
// as s -> 0 where the textbook (k_max^s - k_min^s) / s is 0/0.
double power_integral(double s, double k_min, double k_max) {
  if (k_max == kInfinite) return -std::pow(k_min, s) / s;  // s < 0 only
  const double log_span = std::log(k_max / k_min);
  if (s == 0.0) return log_span;
  return std::pow(k_min, s) * std::expm1(s * log_span) / s;
}

PredictionResult finish(double c, double mean_k, double k_ff, Branch branch) {
  PredictionResult r;
  r.c = c;
  r.mean_k = mean_k;
  r.k_ff = k_ff;
  r.var_to_mean = k_ff - mean_k;
  r.variance = r.var_to_mean * mean_k;
  r.second_moment = k_ff * mean_k;
  r.branch = branch;
  return r;
}

PredictionResult point_mass(double k) {
  PredictionResult r;
  r.c = std::nan("");
  r.mean_k = k;
  r.second_moment = k * k;
  r.k_ff = k;
  r.branch = Branch::Degenerate;
  return r;
}

void require_convergent_moments(const PowerLawSpec& spec) {
  if (!spec.bounded() && spec.alpha <= 3.0) {
    throw Error(ErrorCode::Divergent,
                "variance diverges for k_max = inf unless alpha > 3 (alpha = " +
                    std::to_string(spec.alpha) + ")");
  }
}

}  // namespace

void validate(const PowerLawSpec& spec) {
  if (std::isnan(spec.alpha) || std::isnan(spec.k_min) || std::isnan(spec.k_max) ||
      std::isinf(spec.alpha)) {
    throw Error(ErrorCode::InvalidArgument, "power-law parameters must be numbers");
  }
  if (spec.alpha <= 1.0) {
    throw Error(spec.bounded() ? ErrorCode::InvalidArgument : ErrorCode::Divergent,
                "alpha must exceed 1 (got " + std::to_string(spec.alpha) + ")");
  }
  if (!(spec.k_min >= 1.0) || std::isinf(spec.k_min)) {
    throw Error(ErrorCode::InvalidArgument, "k_min must be finite and >= 1");
  }
  if (spec.k_max < spec.k_min) {
    throw Error(ErrorCode::InvalidArgument, "k_max must be >= k_min");
  }
}

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::General: return "GENERAL";
    case Branch::LimitAlpha2: return "LIMIT_ALPHA_2";
    case Branch::LimitAlpha3: return "LIMIT_ALPHA_3";
    case Branch::Degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

double normalization_constant(const PowerLawSpec& spec) {
  validate(spec);
  if (spec.degenerate()) {
    throw Error(ErrorCode::DegenerateSupport,
                "normalization constant undefined for k_min == k_max");
  }
  return 1.0 / power_integral(1.0 - spec.alpha, spec.k_min, spec.k_max);
}

double pdf(const PowerLawSpec& spec, double k) {
  const double c = normalization_constant(spec);
  if (k < spec.k_min || k > spec.k_max) return 0.0;
  return c * std::pow(k, -spec.alpha);
}

double cdf(const PowerLawSpec& spec, double k) {
  validate(spec);
  if (k <= spec.k_min) return 0.0;
  if (k >= spec.k_max) return 1.0;
  const double s = 1.0 - spec.alpha;
  const double head = std::expm1(s * std::log(k / spec.k_min));
  if (!spec.bounded()) return -head;
  return head / std::expm1(s * std::log(spec.k_max / spec.k_min));
}

PredictionResult predict(const PowerLawSpec& spec) {
  validate(spec);
  if (spec.degenerate()) return point_mass(spec.k_min);
  require_convergent_moments(spec);

  const double a = spec.alpha;
  const double lo = spec.k_min;
  const double hi = spec.k_max;

  if (!spec.bounded()) {
    return finish((a - 1.0) * std::pow(lo, a - 1.0), (a - 1.0) / (a - 2.0) * lo,
                  (a - 2.0) / (a - 3.0) * lo, Branch::General);
  }

  const double c = 1.0 / power_integral(1.0 - a, lo, hi);
  const double log_span = std::log(hi / lo);
  const double log_mean = lo * hi * log_span / (hi - lo);

  if (std::abs(a - 2.0) <= kSwitchEps) {
    return finish(c, log_mean, (hi - lo) / log_span, Branch::LimitAlpha2);
  }
  if (std::abs(a - 3.0) <= kSwitchEps) {
    return finish(c, 2.0 * lo * hi / (lo + hi), log_mean, Branch::LimitAlpha3);
  }
  return smooth_moments(spec);
}

PredictionResult smooth_moments(const PowerLawSpec& spec) {
  validate(spec);
  if (spec.degenerate()) return point_mass(spec.k_min);
  require_convergent_moments(spec);
  const double a = spec.alpha;
  const double z0 = power_integral(1.0 - a, spec.k_min, spec.k_max);
  const double z1 = power_integral(2.0 - a, spec.k_min, spec.k_max);
  const double z2 = power_integral(3.0 - a, spec.k_min, spec.k_max);
  return finish(1.0 / z0, z1 / z0, z2 / z1, Branch::General);
}

std::vector<double> sample_continuous(const PowerLawSpec& spec, std::size_t n,
                                      std::uint64_t seed) {
  validate(spec);
  std::vector<double> out(n, spec.k_min);
  if (spec.degenerate()) return out;

  // k = [k_min^s - u (k_min^s - k_max^s)]^(1/s) with s = 1 - alpha, factored
  // through k_min and evaluated with log1p/expm1.
  const double s = 1.0 - spec.alpha;
  const double span =
      spec.bounded() ? std::expm1(s * std::log(spec.k_max / spec.k_min)) : -1.0;
  Rng rng = make_rng(seed);
  for (auto& k : out) {
    const double u = uniform01(rng);
    k = spec.k_min * std::exp(std::log1p(u * span) / s);
    if (k > spec.k_max) k = spec.k_max;
    if (k < spec.k_min) k = spec.k_min;
  }
  return out;
}

DegreeSequence round_degrees(const std::vector<double>& values) {
  DegreeSequence out;
  out.reserve(values.size());
  for (double v : values) out.push_back(static_cast<std::int64_t>(std::floor(v + 0.5)));
  return out;
}

DegreeSequence sample_degrees(const PowerLawSpec& spec, std::size_t n,
                              std::uint64_t seed) {
  validate(spec);
  if (!spec.bounded()) {
    throw Error(ErrorCode::InvalidArgument, "degree sampling needs a finite k_max");
  }
  return round_degrees(sample_continuous(spec, n, seed));
}

}  // namespace fparadox
