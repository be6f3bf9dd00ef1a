#include "fparadox/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "fparadox/error.hpp"

namespace fparadox {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t size(std::size_t root) const { return size_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Runs task(chunk) for chunk in [0, chunks) on all hardware threads. Callers
// keep per-chunk results and reduce them in chunk order, so the outcome does
// not depend on the thread count.
void for_each_chunk(std::size_t chunks, const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) task(c);
  };
  if (workers <= 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
}

constexpr std::size_t kChunks = 64;

std::pair<std::size_t, std::size_t> chunk_range(std::size_t chunk, std::size_t n) {
  return {chunk * n / kChunks, (chunk + 1) * n / kChunks};
}

}  // namespace

ParadoxStats stats_from_degrees(std::span<const std::int64_t> degrees) {
  __int128 s1 = 0;
  __int128 s2 = 0;
  for (auto k : degrees) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
    s1 += k;
    s2 += static_cast<__int128>(k) * k;
  }
  if (s1 == 0) {
    throw Error(ErrorCode::AllIsolated, "every vertex has degree zero");
  }
  const auto n = static_cast<__int128>(degrees.size());
  const __int128 spread = n * s2 - s1 * s1;  // n^2 * variance, exact

  const auto nd = static_cast<double>(degrees.size());
  ParadoxStats st;
  st.n = degrees.size();
  st.mean_k = static_cast<double>(s1) / nd;
  st.second_moment = static_cast<double>(s2) / nd;
  st.variance = static_cast<double>(spread) / (nd * nd);
  st.k_ff = static_cast<double>(s2) / static_cast<double>(s1);
  st.gap = static_cast<double>(spread) / (nd * static_cast<double>(s1));
  return st;
}

std::int64_t ff_total_adjacency(const Graph& g) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (Vertex j : g.neighbors(static_cast<Vertex>(i))) total += g.degree(j);
  }
  return total;
}

DegreeHistogram histogram(std::span<const std::int64_t> degrees) {
  DegreeHistogram hist;
  for (auto k : degrees) ++hist[k];
  return hist;
}

double kff_from_histogram(const DegreeHistogram& hist) {
  __int128 first = 0;
  __int128 second = 0;
  for (auto [k, count] : hist) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative degree in histogram");
    first += static_cast<__int128>(k) * count;
    second += static_cast<__int128>(k) * k * count;
  }
  if (first == 0) {
    throw Error(ErrorCode::AllIsolated, "histogram has no mass on positive degrees");
  }
  return static_cast<double>(second) / static_cast<double>(first);
}

std::vector<std::size_t> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DisjointSets sets(n);
  for (auto [u, v] : g.edges()) sets.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < n; ++v) {
    if (sets.find(v) == v) sizes.push_back(sets.size(v));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

double global_efficiency(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return 0.0;
  std::vector<double> per_chunk(kChunks, 0.0);
  for_each_chunk(kChunks, [&](std::size_t chunk) {
    auto [first, last] = chunk_range(chunk, n);
    std::vector<std::int32_t> dist(n);
    std::vector<Vertex> queue(n);
    double sum = 0.0;
    for (std::size_t s = first; s < last; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::size_t head = 0;
      std::size_t tail = 0;
      queue[tail++] = static_cast<Vertex>(s);
      while (head < tail) {
        const Vertex u = queue[head++];
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            sum += 1.0 / dist[w];
            queue[tail++] = w;
          }
        }
      }
    }
    per_chunk[chunk] = sum;
  });
  const double total = std::accumulate(per_chunk.begin(), per_chunk.end(), 0.0);
  return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> result(n, 0.0);
  if (n < 3) return result;

  // Brandes accumulation, one partial score vector per chunk of sources.
  std::vector<std::vector<double>> partial(kChunks);
  for_each_chunk(kChunks, [&](std::size_t chunk) {
    auto [first, last] = chunk_range(chunk, n);
    auto& score = partial[chunk];
    score.assign(n, 0.0);
    std::vector<std::int32_t> dist(n);
    std::vector<double> paths(n);
    std::vector<double> dependency(n);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t s = first; s < last; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      std::fill(paths.begin(), paths.end(), 0.0);
      std::fill(dependency.begin(), dependency.end(), 0.0);
      order.clear();
      dist[s] = 0;
      paths[s] = 1.0;
      order.push_back(static_cast<Vertex>(s));
      for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex u = order[head];
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[u] + 1) paths[w] += paths[u];
        }
      }
      for (std::size_t i = order.size(); i-- > 1;) {
        const Vertex w = order[i];
        for (Vertex u : g.neighbors(w)) {
          if (dist[u] == dist[w] - 1) {
            dependency[u] += paths[u] / paths[w] * (1.0 + dependency[w]);
          }
        }
        score[w] += dependency[w];
      }
    }
  });
  for (const auto& score : partial) {
    for (std::size_t v = 0; v < n; ++v) result[v] += score[v];
  }
  // Each unordered pair was counted from both ends.
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (auto& b : result) b /= pairs;
  return result;
}

double central_point_dominance(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "central point dominance needs n >= 3");
  }
  const auto b = betweenness(g);
  const double top = *std::max_element(b.begin(), b.end());
  double sum = 0.0;
  for (double x : b) sum += top - x;
  return sum / static_cast<double>(n - 1);
}

}  // namespace fparadox
