#include "fparadox/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fparadox/error.hpp"
#include "fparadox/experiment.hpp"
#include "fparadox/fit.hpp"
#include "fparadox/metrics.hpp"
#include "fparadox/netgen.hpp"
#include "fparadox/powerlaw.hpp"

namespace fparadox {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string fmt_snap(double v) { return fmt::format("{:.12g}", v); }

double parse_real(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return kInfinite;
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) {
    throw UsageError("not a number: '" + text + "'");
  }
  return value;
}

std::uint64_t parse_count(const std::string& text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("not a non-negative integer: '" + text + "'");
  }
  return value;
}

// Comma-separated items, each a number, "inf", a linear range "lo:hi:step",
// or a log-spaced range "lo:hi:@points".
std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      values.push_back(parse_real(item));
      continue;
    }
    if (parts.size() != 3) throw UsageError("bad range '" + item + "'");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
      throw UsageError("bad range bounds in '" + item + "'");
    }
    if (!parts[2].empty() && parts[2][0] == '@') {
      const auto points = parse_count(parts[2].substr(1));
      if (points < 2 || lo <= 0.0) throw UsageError("bad log range '" + item + "'");
      for (std::uint64_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        values.push_back(i + 1 == points ? hi : lo * std::pow(hi / lo, t));
      }
    } else {
      const double step = parse_real(parts[2]);
      if (!(step > 0.0)) throw UsageError("range step must be positive in '" + item + "'");
      for (std::uint64_t i = 0;; ++i) {
        // Snap to 12 significant digits so 1.2 + 8 * 0.1 prints as 2.
        double v = lo + static_cast<double>(i) * step;
        if (v > hi + 1e-9 * step) break;
        v = std::stod(fmt_snap(v));
        values.push_back(v);
      }
    }
  }
  if (values.empty()) throw UsageError("empty list '" + text + "'");
  return values;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      seeds.push_back(parse_count(item));
    } else if (parts.size() == 2) {
      const auto lo = parse_count(parts[0]);
      const auto hi = parse_count(parts[1]);
      if (hi < lo) throw UsageError("bad seed range '" + item + "'");
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      throw UsageError("bad seed item '" + item + "'");
    }
  }
  if (seeds.empty()) throw UsageError("no seeds given");
  return seeds;
}

std::vector<Model> parse_models(const std::string& text) {
  std::vector<Model> models;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    try {
      models.push_back(parse_model(item));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (models.empty()) throw UsageError("no models given");
  return models;
}

json real_or_inf(double x) { return x == kInfinite ? json("inf") : json(x); }

json to_json(const PredictionResult& r) {
  return {{"c", r.c},
          {"mean_k", r.mean_k},
          {"second_moment", r.second_moment},
          {"variance", r.variance},
          {"var_to_mean", r.var_to_mean},
          {"k_ff", r.k_ff},
          {"branch", std::string(to_string(r.branch))}};
}

json to_json(const ParadoxStats& s) {
  return {{"n", s.n},
          {"mean_k", s.mean_k},
          {"second_moment", s.second_moment},
          {"variance", s.variance},
          {"k_ff", s.k_ff},
          {"gap", s.gap}};
}

json to_json(const FitResult& f) {
  return {{"alpha_hat", f.alpha_hat},
          {"stderr", f.stderr_alpha},
          {"k_min_used", f.k_min_used},
          {"k_max_used", real_or_inf(f.k_max_used)},
          {"n_tail", f.n_tail},
          {"ks_distance", f.ks_distance}};
}

json analyze(const Graph& g, std::optional<double> k_min, std::optional<double> k_max) {
  json doc;
  doc["n"] = g.num_vertices();
  doc["edges"] = g.num_edges();
  const auto degrees = g.degrees();
  doc["stats"] = to_json(stats_from_degrees(degrees));
  doc["ff_total"] = ff_total_adjacency(g);

  const auto sizes = components(g);
  doc["components"] = {{"count", sizes.size()},
                       {"giant_size", sizes.front()},
                       {"giant_fraction", static_cast<double>(sizes.front()) /
                                              static_cast<double>(g.num_vertices())}};
  doc["global_efficiency"] = global_efficiency(g);
  doc["central_point_dominance"] =
      g.num_vertices() >= 3 ? json(central_point_dominance(g)) : json(nullptr);

  std::vector<double> observed;
  for (auto k : degrees) {
    if (k > 0) observed.push_back(static_cast<double>(k));
  }
  try {
    FitResult fit;
    if (k_min || k_max) {
      double lo = k_min.value_or(*std::min_element(observed.begin(), observed.end()));
      double hi = k_max.value_or(*std::max_element(observed.begin(), observed.end()));
      fit = fit_alpha(observed, lo, hi);
    } else {
      fit = fit_alpha(observed);
    }
    doc["fit"] = to_json(fit);
  } catch (const Error& e) {
    doc["fit"] = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  return doc;
}

// Routes output to --out when given.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Friendship-paradox analytics for truncated power-law networks", "fparadox"};
  app.require_subcommand(1);

  std::string alpha_text;
  std::string kmin_text = "1";
  std::string kmax_text;
  std::size_t n = 10000;
  std::string models_text = "A,B,KALISKY";
  std::string seeds_text = "1:5";
  std::string gen_model_text = "A";
  std::string gen_seed_text = "1";
  std::string out_path;
  std::size_t block_size = GeneratorOptions{}.block_size;
  std::size_t threads = 0;
  std::string edge_path;

  auto* predict_cmd = app.add_subcommand("predict", "Closed-form moments as one JSON object");
  predict_cmd->add_option("--alpha", alpha_text, "Scaling exponent (> 1)")->required();
  predict_cmd->add_option("--kmin", kmin_text, "Minimum degree")->capture_default_str();
  predict_cmd->add_option("--kmax", kmax_text, "Maximum degree or 'inf'")->default_str("inf");
  predict_cmd->add_option("--out", out_path, "Output file");

  auto* sweep_cmd = app.add_subcommand("sweep", "Variance-to-mean ratio over an (alpha, k_max) grid, CSV");
  sweep_cmd->add_option("--alpha", alpha_text, "alpha list or range lo:hi:step")->default_str("1.2:3.0:0.1");
  sweep_cmd->add_option("--kmax", kmax_text, "k_max list or range (lo:hi:@points for log spacing)")
      ->default_str("10:10000:@13");
  sweep_cmd->add_option("--kmin", kmin_text, "Minimum degree")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Output file");

  auto* exp_cmd = app.add_subcommand("experiment", "Simulated networks vs closed form, CSV");
  exp_cmd->add_option("--alpha", alpha_text, "Generating exponent")->default_str("2");
  exp_cmd->add_option("--kmin", kmin_text, "Minimum degree")->capture_default_str();
  exp_cmd->add_option("--kmax", kmax_text, "k_max list")->default_str("10,32,100,316,1000");
  exp_cmd->add_option("--n", n, "Vertices per network")->capture_default_str();
  exp_cmd->add_option("--models", models_text, "Comma-separated models: A, B, KALISKY")
      ->capture_default_str();
  exp_cmd->add_option("--seeds", seeds_text, "Seed list or inclusive range lo:hi")->capture_default_str();
  exp_cmd->add_option("--block-size", block_size, "Model B minimum block size")->capture_default_str();
  exp_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  exp_cmd->add_option("--out", out_path, "Output file");

  auto* gen_cmd = app.add_subcommand("generate", "Sample degrees and write one network as an edge list");
  gen_cmd->add_option("--alpha", alpha_text, "Scaling exponent")->default_str("2");
  gen_cmd->add_option("--kmin", kmin_text, "Minimum degree")->capture_default_str();
  gen_cmd->add_option("--kmax", kmax_text, "Maximum degree")->default_str("100");
  gen_cmd->add_option("--n", n, "Vertices")->capture_default_str();
  gen_cmd->add_option("--models,--model", gen_model_text, "Model: A, B or KALISKY")->capture_default_str();
  gen_cmd->add_option("--seeds,--seed", gen_seed_text, "Seed")->capture_default_str();
  gen_cmd->add_option("--block-size", block_size, "Model B minimum block size")->capture_default_str();
  gen_cmd->add_option("--out", out_path, "Output file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Metrics for an edge-list file, JSON");
  analyze_cmd->add_option("edges", edge_path, "Edge-list file ('u v' per line)")->required();
  analyze_cmd->add_option("--kmin", kmin_text, "Lower fit cutoff (default: smallest positive degree)");
  analyze_cmd->add_option("--kmax", kmax_text, "Upper fit cutoff (default: largest degree)");
  analyze_cmd->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (predict_cmd->parsed()) {
      const PowerLawSpec spec{parse_real(alpha_text), parse_real(kmin_text),
                              kmax_text.empty() ? kInfinite : parse_real(kmax_text)};
      json doc = to_json(predict(spec));
      doc["alpha"] = spec.alpha;
      doc["k_min"] = spec.k_min;
      doc["k_max"] = real_or_inf(spec.k_max);
      Sink sink(out, out_path);
      sink.get() << doc.dump() << '\n';
    } else if (sweep_cmd->parsed()) {
      const auto alphas = parse_reals(alpha_text.empty() ? "1.2:3.0:0.1" : alpha_text);
      const auto k_maxes = parse_reals(kmax_text.empty() ? "10:10000:@13" : kmax_text);
      const double k_min = parse_real(kmin_text);
      if (!(k_min >= 1.0)) throw UsageError("--kmin must be >= 1");
      const auto rows = sweep(alphas, k_maxes, k_min);
      Sink sink(out, out_path);
      write_sweep_csv(sink.get(), rows);
    } else if (exp_cmd->parsed()) {
      ExperimentConfig cfg;
      cfg.alpha = parse_real(alpha_text.empty() ? "2" : alpha_text);
      cfg.k_min = parse_real(kmin_text);
      if (!kmax_text.empty()) cfg.k_maxes = parse_reals(kmax_text);
      cfg.n = n;
      if (n < 100) throw UsageError("--n must be >= 100");
      cfg.models = parse_models(models_text);
      cfg.seeds = parse_seeds(seeds_text);
      cfg.generator.block_size = block_size;
      cfg.threads = threads;
      const auto rows = run_experiment(cfg);
      Sink sink(out, out_path);
      write_experiment_csv(sink.get(), rows);
    } else if (gen_cmd->parsed()) {
      const auto models = parse_models(gen_model_text);
      const auto seeds = parse_seeds(gen_seed_text);
      if (models.size() != 1 || seeds.size() != 1) {
        throw UsageError("generate takes exactly one model and one seed");
      }
      const PowerLawSpec spec{parse_real(alpha_text.empty() ? "2" : alpha_text),
                              parse_real(kmin_text),
                              parse_real(kmax_text.empty() ? "100" : kmax_text)};
      const auto target = make_graphical(sample_degrees(spec, n, seeds[0]), seeds[0]);
      GeneratorOptions opt;
      opt.block_size = block_size;
      const Graph g = generate(target, models[0], seeds[0], opt);
      Sink sink(out, out_path);
      write_edge_list(sink.get(), g);
    } else if (analyze_cmd->parsed()) {
      std::ifstream in(edge_path);
      if (!in) throw UsageError("cannot open '" + edge_path + "'");
      const Graph g = read_edge_list(in);
      std::optional<double> lo;
      std::optional<double> hi;
      if (analyze_cmd->count("--kmin")) lo = parse_real(kmin_text);
      if (analyze_cmd->count("--kmax")) hi = parse_real(kmax_text);
      const json doc = analyze(g, lo, hi);
      Sink sink(out, out_path);
      sink.get() << doc.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace fparadox
