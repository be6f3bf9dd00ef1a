#include "fparadox/netgen.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fparadox/error.hpp"
#include "fparadox/random.hpp"

namespace fparadox {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Edge set shared by all wiring stages of one generation run.
class EdgeSet {
 public:
  bool contains(Vertex u, Vertex v) const { return keys_.count(edge_key(u, v)) != 0; }
  bool insert(Vertex u, Vertex v) {
    if (u == v) return false;
    return keys_.insert(edge_key(u, v)).second;
  }
  void erase(Vertex u, Vertex v) { keys_.erase(edge_key(u, v)); }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

// Tries to place the stub pair (u, v) by rewiring a random existing edge
// (x, y) into (u, x) and (v, y). Returns false when the attempt would create
// a self-loop or multi-edge.
bool try_swap(Vertex u, Vertex v, std::vector<Edge>& local, EdgeSet& set, Rng& rng) {
  const auto idx = static_cast<std::size_t>(uniform_below(rng, local.size()));
  auto [x, y] = local[idx];
  if (rng() & 1U) std::swap(x, y);
  if (u == x || v == y) return false;
  if (set.contains(u, x) || set.contains(v, y)) return false;
  if (edge_key(u, x) == edge_key(v, y)) return false;
  set.erase(x, y);
  set.insert(u, x);
  set.insert(v, y);
  local[idx] = {u, x};
  local.emplace_back(v, y);
  return true;
}

// Pairs a shuffled stub list consecutively. Pairs that would be a self-loop
// or multi-edge are retried through edge swaps against edges created here.
// Pairs that still fail are dropped.
void pair_stubs(std::vector<Vertex>& stubs, EdgeSet& set, std::vector<Edge>& out,
                std::size_t swap_budget, Rng& rng) {
  constexpr std::size_t kAttemptsPerConflict = 256;
  shuffle(std::span<Vertex>(stubs), rng);
  std::vector<Edge> local;
  std::vector<Edge> conflicts;
  local.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const Vertex u = stubs[i];
    const Vertex v = stubs[i + 1];
    if (set.insert(u, v)) {
      local.emplace_back(u, v);
    } else {
      conflicts.emplace_back(u, v);
    }
  }
  for (auto [u, v] : conflicts) {
    for (std::size_t attempt = 0; attempt < kAttemptsPerConflict && swap_budget > 0 &&
                                  !local.empty();
         ++attempt) {
      --swap_budget;
      if (try_swap(u, v, local, set, rng)) break;
    }
  }
  out.insert(out.end(), local.begin(), local.end());
}

std::vector<Vertex> stubs_of(std::span<const Vertex> vertices, const DegreeSequence& seq) {
  std::vector<Vertex> stubs;
  for (Vertex v : vertices) stubs.insert(stubs.end(), static_cast<std::size_t>(seq[v]), v);
  return stubs;
}

std::vector<Edge> wire_uniform(const DegreeSequence& seq, const GeneratorOptions& opt,
                               Rng& rng) {
  std::vector<Vertex> all(seq.size());
  std::iota(all.begin(), all.end(), 0);
  auto stubs = stubs_of(all, seq);
  EdgeSet set;
  std::vector<Edge> edges;
  pair_stubs(stubs, set, edges, opt.swap_factor * (stubs.size() / 2), rng);
  return edges;
}

std::vector<Edge> wire_blocks(const DegreeSequence& seq, const GeneratorOptions& opt,
                              Rng& rng) {
  std::vector<Vertex> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  shuffle(std::span<Vertex>(order), rng);

  // Greedy partition of the shuffled vertices. A block closes once it holds
  // block_size vertices and more than four times its largest degree, which
  // leaves its hubs enough distinct partners.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> current;
  std::int64_t largest = 0;
  for (Vertex v : order) {
    current.push_back(v);
    largest = std::max(largest, seq[v]);
    const auto size = static_cast<std::int64_t>(current.size());
    if (current.size() >= opt.block_size && size >= 4 * largest + 1) {
      blocks.push_back(std::move(current));
      current.clear();
      largest = 0;
    }
  }
  if (!current.empty()) {
    if (blocks.empty()) {
      blocks.push_back(std::move(current));
    } else {
      blocks.back().insert(blocks.back().end(), current.begin(), current.end());
    }
  }

  EdgeSet set;
  std::vector<Edge> edges;
  for (const auto& block : blocks) {
    auto stubs = stubs_of(block, seq);
    // An odd block loses one stub; shuffling inside pair_stubs leaves the
    // trailing stub unpaired.
    pair_stubs(stubs, set, edges, opt.swap_factor * (stubs.size() / 2), rng);
  }
  return edges;
}

// Fenwick tree over per-vertex open stub counts, supporting weighted draws.
class StubTree {
 public:
  explicit StubTree(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i, std::int64_t delta) {
    total_ += delta;
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  std::int64_t total() const { return total_; }

  // Index whose cumulative weight interval contains `target` (0 <= target < total).
  std::size_t find(std::int64_t target) const {
    std::size_t pos = 0;
    std::size_t step = std::bit_floor(tree_.size() - 1);
    for (; step > 0; step >>= 1) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

std::vector<Edge> wire_hubs_first(const DegreeSequence& seq, Rng& rng) {
  const std::size_t n = seq.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(std::span<Vertex>(order), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return seq[a] > seq[b]; });

  std::vector<std::int64_t> open(seq.begin(), seq.end());
  std::vector<char> placed(n, 0);
  StubTree placed_pool(n);
  StubTree fresh_pool(n);
  for (std::size_t v = 0; v < n; ++v) fresh_pool.add(v, open[v]);
  auto pool_of = [&](Vertex v) -> StubTree& { return placed[v] ? placed_pool : fresh_pool; };

  EdgeSet set;
  std::vector<Edge> edges;

  auto usable = [&](Vertex v, Vertex u) {
    return u != v && open[u] > 0 && !set.contains(v, u);
  };

  // Draws an open stub weighted by count. A vertex that is not yet wired in
  // looks among placed vertices first; a placed one draws from all open stubs.
  auto pick_partner = [&](Vertex v, bool prefer_placed) -> Vertex {
    constexpr int kDraws = 32;
    auto draw = [&](StubTree& pool) {
      const auto target = static_cast<std::int64_t>(
          uniform_below(rng, static_cast<std::uint64_t>(pool.total())));
      return static_cast<Vertex>(pool.find(target));
    };
    if (prefer_placed && placed_pool.total() > 0) {
      for (int d = 0; d < kDraws; ++d) {
        const Vertex u = draw(placed_pool);
        if (usable(v, u)) return u;
      }
    }
    for (int d = 0; d < kDraws; ++d) {
      const std::int64_t total = placed_pool.total() + fresh_pool.total();
      if (total <= 0) break;
      const auto r = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(total)));
      const Vertex u = r < placed_pool.total() ? draw(placed_pool) : draw(fresh_pool);
      if (usable(v, u)) return u;
    }
    // Sampling kept hitting existing neighbors: fall back to a scan from a
    // random offset, placed vertices first.
    const auto start = static_cast<std::size_t>(uniform_below(rng, n));
    for (char want_placed : {char{1}, char{0}}) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto u = static_cast<Vertex>((start + i) % n);
        if (placed[u] == want_placed && usable(v, u)) return u;
      }
    }
    return -1;
  };

  for (Vertex v : order) {
    pool_of(v).add(v, -open[v]);
    const bool joining = !placed[v];
    while (open[v] > 0) {
      const Vertex u = pick_partner(v, joining);
      if (u < 0) break;
      set.insert(v, u);
      edges.emplace_back(v, u);
      --open[v];
      pool_of(u).add(u, -1);
      --open[u];
      if (!placed[u]) {
        fresh_pool.add(u, -open[u]);
        placed[u] = 1;
        placed_pool.add(u, open[u]);
      }
    }
    open[v] = 0;
    placed[v] = 1;
  }
  return edges;
}

void check_sequence(const DegreeSequence& seq) {
  if (seq.size() > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw Error(ErrorCode::InvalidArgument, "too many vertices");
  }
  const auto n = static_cast<std::int64_t>(seq.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "negative degree at vertex " + std::to_string(i));
    }
    if (seq[i] >= n) {
      throw Error(ErrorCode::ImpossibleSequence,
                  "degree " + std::to_string(seq[i]) + " at vertex " + std::to_string(i) +
                      " needs more than " + std::to_string(n) + " vertices");
    }
    sum += seq[i];
  }
  if (sum % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "degree sum is odd; apply make_graphical first");
  }
}

std::string trim(const std::string& s) {
  auto first = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto last = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); });
  return first < last.base() ? std::string(first, last.base()) : std::string();
}

}  // namespace

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::A: return "A";
    case Model::B: return "B";
    case Model::Kalisky: return "KALISKY";
  }
  return "UNKNOWN";
}

Model parse_model(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "A") return Model::A;
  if (upper == "B") return Model::B;
  if (upper == "KALISKY") return Model::Kalisky;
  throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

DegreeSequence make_graphical(DegreeSequence seq, std::uint64_t seed) {
  if (seq.empty()) return seq;
  const std::int64_t sum = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
  if (sum % 2 == 0) return seq;
  const std::int64_t lowest = *std::min_element(seq.begin(), seq.end());
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == lowest) candidates.push_back(i);
  }
  Rng rng = make_rng(seed);
  ++seq[candidates[uniform_below(rng, candidates.size())]];
  return seq;
}

Graph generate(const DegreeSequence& seq, Model model, std::uint64_t seed,
               const GeneratorOptions& options) {
  check_sequence(seq);
  if (options.block_size == 0) {
    throw Error(ErrorCode::InvalidArgument, "block size must be positive");
  }
  Rng rng = make_rng(seed);
  std::vector<Edge> edges;
  switch (model) {
    case Model::A: edges = wire_uniform(seq, options, rng); break;
    case Model::B: edges = wire_blocks(seq, options, rng); break;
    case Model::Kalisky: edges = wire_hubs_first(seq, rng); break;
  }
  return Graph(seq.size(), edges);
}

DropReport drop_report(const Graph& g, const DegreeSequence& seq) {
  if (g.num_vertices() != seq.size()) {
    throw Error(ErrorCode::InvalidArgument, "graph and sequence differ in vertex count");
  }
  DropReport report;
  report.per_vertex.resize(seq.size());
  for (std::size_t v = 0; v < seq.size(); ++v) {
    report.per_vertex[v] = seq[v] - g.degree(static_cast<Vertex>(v));
    report.total += report.per_vertex[v];
  }
  return report;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;
  Vertex max_id = -1;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    long long ids[2] = {0, 0};
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int k = 0; k < 2; ++k) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      auto [next, ec] = std::from_chars(p, end, ids[k]);
      if (ec != std::errc() || next == p) fail("expected two vertex ids, got '" + text + "'");
      p = next;
    }
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p != end) fail("trailing characters in '" + text + "'");
    if (ids[0] < 0 || ids[1] < 0 || ids[0] > std::numeric_limits<Vertex>::max() - 1 ||
        ids[1] > std::numeric_limits<Vertex>::max() - 1) {
      fail("vertex id out of range");
    }
    const auto u = static_cast<Vertex>(std::min(ids[0], ids[1]));
    const auto v = static_cast<Vertex>(std::max(ids[0], ids[1]));
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    auto [it, inserted] = first_seen.emplace(edge_key(u, v), line_no);
    if (!inserted) {
      fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
           " (first on line " + std::to_string(it->second) + ")");
    }
    edges.emplace_back(u, v);
    max_id = std::max(max_id, v);
  }
  return Graph(static_cast<std::size_t>(max_id + 1), edges);
}

}  // namespace fparadox
