#include "fparadox/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "fparadox/error.hpp"
#include "fparadox/fit.hpp"
#include "fparadox/metrics.hpp"

namespace fparadox {

namespace {

struct Cell {
  std::size_t model_idx;
  std::size_t kmax_idx;
  std::size_t seed_idx;
};

ExperimentRow run_cell(const ExperimentConfig& cfg, const Cell& cell) {
  ExperimentRow row;
  row.model = cfg.models[cell.model_idx];
  row.seed = cfg.seeds[cell.seed_idx];
  row.n = cfg.n;
  row.k_min = cfg.k_min;
  row.k_max = cfg.k_maxes[cell.kmax_idx];
  const std::uint64_t seed = *row.seed;
  const PowerLawSpec spec{cfg.alpha, cfg.k_min, row.k_max};
  try {
    row.predicted_ratio = predict(spec).var_to_mean;
    const auto draws = sample_continuous(spec, cfg.n, seed);
    const auto target = make_graphical(round_degrees(draws), seed);
    const Graph g = generate(target, row.model, seed, cfg.generator);

    const ParadoxStats st = stats_from_graph(g);
    row.mean_k = st.mean_k;
    row.variance = st.variance;
    row.k_ff = st.k_ff;
    row.empirical_ratio = st.gap;
    row.dropped_stubs = static_cast<double>(drop_report(g, target).total);

    const auto sizes = components(g);
    row.components = static_cast<double>(sizes.size());
    row.giant_fraction = static_cast<double>(sizes.front()) / static_cast<double>(cfg.n);

    row.alpha_hat = fit_alpha(draws, cfg.k_min, row.k_max).alpha_hat;
  } catch (const Error& e) {
    row.error = std::string(to_string(e.code()));
  }
  return row;
}

// Fills the predicted band of every cell in one (model, k_max) group and
// returns the group's summary row.
ExperimentRow summarize(std::span<ExperimentRow> group, const ExperimentConfig& cfg) {
  ExperimentRow s;
  s.summary = true;
  s.model = group.front().model;
  s.n = group.front().n;
  s.k_min = group.front().k_min;
  s.k_max = group.front().k_max;
  s.predicted_ratio = group.front().predicted_ratio;

  double a_min = std::numeric_limits<double>::infinity();
  double a_max = -a_min;
  const auto sums = {&s.mean_k, &s.variance, &s.k_ff, &s.empirical_ratio, &s.alpha_hat,
                     &s.components, &s.giant_fraction, &s.dropped_stubs};
  for (double* f : sums) *f = 0.0;
  std::size_t ok = 0;
  for (const auto& r : group) {
    if (!r.error.empty()) continue;
    ++ok;
    a_min = std::min(a_min, r.alpha_hat);
    a_max = std::max(a_max, r.alpha_hat);
    s.mean_k += r.mean_k;
    s.variance += r.variance;
    s.k_ff += r.k_ff;
    s.empirical_ratio += r.empirical_ratio;
    s.alpha_hat += r.alpha_hat;
    s.components += r.components;
    s.giant_fraction += r.giant_fraction;
    s.dropped_stubs += r.dropped_stubs;
  }
  if (ok == 0) {
    for (double* f : sums) *f = kUnset;
    s.error = group.front().error;
    return s;
  }
  const double m = static_cast<double>(ok);
  for (double* f : sums) *f /= m;
  try {
    // The ratio falls as alpha grows, but order the ends explicitly.
    const double at_min = predict({a_min, cfg.k_min, s.k_max}).var_to_mean;
    const double at_max = predict({a_max, cfg.k_min, s.k_max}).var_to_mean;
    s.predicted_lo = std::min(at_min, at_max);
    s.predicted_hi = std::max(at_min, at_max);
  } catch (const Error& e) {
    s.error = std::string(to_string(e.code()));
  }
  for (auto& r : group) {
    if (r.error.empty()) {
      r.predicted_lo = s.predicted_lo;
      r.predicted_hi = s.predicted_hi;
    }
  }
  return s;
}

std::string fmt_real(double x) {
  if (x == kInfinite) return "inf";
  if (std::isnan(x)) return {};
  return fmt::format("{}", x);
}

}  // namespace

std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> k_maxes,
                            double k_min) {
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size() * k_maxes.size());
  for (double a : alphas) {
    for (double k_max : k_maxes) {
      const auto p = predict({a, k_min, k_max});
      rows.push_back({a, k_min, k_max, p.mean_k, p.k_ff, p.var_to_mean, p.branch});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "alpha,k_min,k_max,mean_k,k_ff,var_to_mean,branch\n";
  for (const auto& r : rows) {
    out << fmt_real(r.alpha) << ',' << fmt_real(r.k_min) << ',' << fmt_real(r.k_max) << ','
        << fmt_real(r.mean_k) << ',' << fmt_real(r.k_ff) << ',' << fmt_real(r.var_to_mean)
        << ',' << to_string(r.branch) << '\n';
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.models.empty() || cfg.seeds.empty() || cfg.k_maxes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "experiment needs models, seeds and k_max values");
  }
  if (cfg.n < 100) throw Error(ErrorCode::InvalidArgument, "experiment needs n >= 100");
  for (double k_max : cfg.k_maxes) {
    validate({cfg.alpha, cfg.k_min, k_max});
    if (k_max == kInfinite) {
      throw Error(ErrorCode::InvalidArgument, "experiment needs finite k_max values");
    }
  }

  std::vector<Cell> cells;
  for (std::size_t m = 0; m < cfg.models.size(); ++m) {
    for (std::size_t k = 0; k < cfg.k_maxes.size(); ++k) {
      for (std::size_t s = 0; s < cfg.seeds.size(); ++s) cells.push_back({m, k, s});
    }
  }

  std::vector<ExperimentRow> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cfg, cells[i]);
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, cells.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(results.size() + results.size() / cfg.seeds.size());
  for (std::size_t first = 0; first < results.size(); first += cfg.seeds.size()) {
    std::span<ExperimentRow> group(results.data() + first, cfg.seeds.size());
    ExperimentRow summary = summarize(group, cfg);
    rows.insert(rows.end(), group.begin(), group.end());
    rows.push_back(std::move(summary));
  }
  return rows;
}

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "row_type,model,seed,n,k_min,k_max,mean_k,variance,k_ff,empirical_ratio,"
         "predicted_ratio,alpha_hat,predicted_lo,predicted_hi,components,giant_fraction,"
         "dropped_stubs,error\n";
  for (const auto& r : rows) {
    out << (r.summary ? "summary" : "cell") << ',' << to_string(r.model) << ','
        << (r.seed ? std::to_string(*r.seed) : std::string()) << ',' << r.n << ','
        << fmt_real(r.k_min) << ',' << fmt_real(r.k_max) << ',' << fmt_real(r.mean_k) << ','
        << fmt_real(r.variance) << ',' << fmt_real(r.k_ff) << ','
        << fmt_real(r.empirical_ratio) << ',' << fmt_real(r.predicted_ratio) << ','
        << fmt_real(r.alpha_hat) << ',' << fmt_real(r.predicted_lo) << ','
        << fmt_real(r.predicted_hi) << ',' << fmt_real(r.components) << ','
        << fmt_real(r.giant_fraction) << ',' << fmt_real(r.dropped_stubs) << ',' << r.error
        << '\n';
  }
}

}  // namespace fparadox
