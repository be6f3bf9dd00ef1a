#pragma once

// Realization of degree sequences as simple undirected graphs.
//
// Three wiring styles share the same degree targets and differ only in
// structure:
//   A        uniform stub pairing over all vertices, conflicts repaired by
//            edge swaps
//   B        stub pairing confined to random vertex blocks, which leaves the
//            graph split into many components
//   Kalisky  hub-first wiring: vertices are processed by descending degree
//            and attach preferentially to already-wired vertices
// Stubs that cannot be paired without a self-loop or multi-edge are dropped.

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fparadox/graph.hpp"
#include "fparadox/powerlaw.hpp"

namespace fparadox {

enum class Model { A, B, Kalisky };

std::string_view to_string(Model model) noexcept;

/// Accepts "A", "B", "KALISKY" (case-insensitive). INVALID_ARGUMENT otherwise.
Model parse_model(std::string_view name);

struct GeneratorOptions {
  /// Minimum vertices per Model B block. A block also grows to at least
  /// 4 * (largest degree in it) + 1 vertices so its hubs stay realizable.
  std::size_t block_size = 32;
  /// Edge-swap budget is swap_factor * (target edge count).
  std::size_t swap_factor = 10;
};

/// If the degree sum is odd, adds one to a uniformly chosen minimum-degree
/// entry. Identity otherwise.
DegreeSequence make_graphical(DegreeSequence seq, std::uint64_t seed);

/// Realizes `seq` under `model`. Deterministic for a given (seq, model, seed,
/// options). Throws IMPOSSIBLE_SEQUENCE when a target degree is >= n and
/// INVALID_ARGUMENT for negative degrees or an odd degree sum.
Graph generate(const DegreeSequence& seq, Model model, std::uint64_t seed,
               const GeneratorOptions& options = {});

struct DropReport {
  std::vector<std::int64_t> per_vertex;  ///< target minus realized degree
  std::int64_t total = 0;
};

/// Target-minus-realized degree for every vertex. `seq` and `g` must have the
/// same vertex count.
DropReport drop_report(const Graph& g, const DegreeSequence& seq);

/// Writes one "u v" line per edge, u < v, lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);

/// Parses "u v" lines into a graph with max id + 1 vertices. Blank lines and
/// lines starting with '#' are skipped. Malformed lines, self-loops and
/// duplicate edges raise PARSE errors naming the line number.
Graph read_edge_list(std::istream& in);

}  // namespace fparadox
