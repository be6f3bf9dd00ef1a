#pragma once

// Empirical friendship-paradox statistics and the structural measures used to
// tell the generator models apart.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fparadox/graph.hpp"

namespace fparadox {

struct ParadoxStats {
  std::size_t n = 0;
  double mean_k = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;  ///< population variance, divisor n
  double k_ff = 0.0;      ///< mean degree of friends, sum k^2 / sum k
  double gap = 0.0;       ///< k_ff - mean_k == variance / mean_k
};

/// Throws ALL_ISOLATED when every degree is zero (or the sequence is empty).
ParadoxStats stats_from_degrees(std::span<const std::int64_t> degrees);

inline ParadoxStats stats_from_graph(const Graph& g) {
  const auto d = g.degrees();
  return stats_from_degrees(d);
}

/// Total number of friends of friends, sum_i sum_j a_ij k_j, by the literal
/// double sum over adjacency.
std::int64_t ff_total_adjacency(const Graph& g);

using DegreeHistogram = std::map<std::int64_t, std::uint64_t>;

DegreeHistogram histogram(std::span<const std::int64_t> degrees);

/// sum k^2 P(k) / sum k P(k). Frequencies are raw counts; the normalization
/// cancels, so the result matches stats_from_degrees(...).k_ff bit for bit.
double kff_from_histogram(const DegreeHistogram& hist);

/// Connected component sizes, largest first.
std::vector<std::size_t> components(const Graph& g);

/// Mean of 1/d(i,j) over ordered pairs i != j, disconnected pairs counting 0.
double global_efficiency(const Graph& g);

/// Relative betweenness (pairs through v over (n-1)(n-2)/2), exact.
std::vector<double> betweenness(const Graph& g);

/// Freeman's central point dominance: sum_i (b_max - b_i) / (n - 1).
double central_point_dominance(const Graph& g);

}  // namespace fparadox
