#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fparadox {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted. Construction rejects self-loops, duplicate
/// edges and out-of-range endpoints with INVALID_ARGUMENT.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::int64_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  std::vector<std::int64_t> degrees() const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> neighbors_;
};

}  // namespace fparadox
