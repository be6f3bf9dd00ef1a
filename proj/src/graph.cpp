#include "fparadox/graph.hpp"

#include <algorithm>
#include <string>

#include "fparadox/error.hpp"

namespace fparadox {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : offsets_(n + 1, 0) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

  neighbors_.resize(2 * edges.size());
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    neighbors_[cursor[u]++] = v;
    neighbors_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = neighbors_.begin() + offsets_[i];
    auto last = neighbors_.begin() + offsets_[i + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge (" + std::to_string(i) +
                                                  ", " + std::to_string(*dup) + ")");
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::int64_t> Graph::degrees() const {
  std::vector<std::int64_t> out(num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = degree(static_cast<Vertex>(v));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

}  // namespace fparadox
