#include <doctest.h>

#include <random>

#include "fparadox/error.hpp"
#include "fparadox/metrics.hpp"
#include "oracles.hpp"

using namespace fparadox;

namespace {

Graph make(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph complete(int n) {
  oracle::EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make(n, edges);
}

Graph star(int n) {
  oracle::EdgeList edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return make(n, edges);
}

}  // namespace

TEST_CASE("stats from degrees") {
  std::vector<std::int64_t> seq{1, 1, 2};
  auto s = stats_from_degrees(seq);
  CHECK(s.n == 3);
  CHECK(s.mean_k == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(s.k_ff == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.gap == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  // Population variance: <k^2> - <k>^2 = 2 - 16/9.
  CHECK(s.variance == doctest::Approx(2.0 / 9.0).epsilon(1e-15));

  std::vector<std::int64_t> star_seq{3, 1, 1, 1};
  s = stats_from_degrees(star_seq);
  CHECK(s.mean_k == 1.5);
  CHECK(s.k_ff == 2.0);
  CHECK(s.gap == 0.5);

  std::vector<std::int64_t> regular(10, 7);
  s = stats_from_degrees(regular);
  CHECK(s.mean_k == 7.0);
  CHECK(s.k_ff == 7.0);
  CHECK(s.gap == 0.0);
  CHECK(s.variance == 0.0);

  std::vector<std::int64_t> zeros(4, 0);
  CHECK_THROWS_AS(stats_from_degrees(zeros), Error);
  try {
    stats_from_degrees(zeros);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllIsolated);
  }
  CHECK_THROWS_AS(stats_from_degrees(std::vector<std::int64_t>{}), Error);
}

TEST_CASE("paradox identities hold for random sequences") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    std::vector<std::int64_t> seq(n);
    for (auto& k : seq) k = static_cast<std::int64_t>(rng() % 60);
    seq[0] += 1;
    const auto s = stats_from_degrees(seq);
    const double resid = s.k_ff - s.mean_k - s.variance / s.mean_k;
    CHECK(std::abs(resid) <= 1e-12 * s.k_ff);
    CHECK(s.k_ff >= s.mean_k);
    const bool constant = std::all_of(seq.begin(), seq.end(), [&](auto k) { return k == seq[0]; });
    if (!constant) CHECK(s.k_ff > s.mean_k);
    CHECK(kff_from_histogram(histogram(seq)) == s.k_ff);
  }
}

TEST_CASE("friends of friends by adjacency") {
  CHECK(ff_total_adjacency(make(3, {{0, 1}, {1, 2}})) == 6);
  CHECK(ff_total_adjacency(Graph(5, {})) == 0);
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    const int n = 5 + static_cast<int>(seed * 7 % 120);
    const auto g = make(n, oracle::random_graph(n, 0.08, seed));
    std::int64_t squares = 0;
    for (auto k : g.degrees()) squares += k * k;
    CHECK(ff_total_adjacency(g) == squares);
  }
}

TEST_CASE("k_ff from a histogram") {
  CHECK(kff_from_histogram({{1, 2}, {2, 1}}) == 1.5);
  CHECK(kff_from_histogram({{5, 100}}) == 5.0);
  CHECK_THROWS_AS(kff_from_histogram({{0, 12}}), Error);
  CHECK_THROWS_AS(kff_from_histogram({}), Error);
}

TEST_CASE("components") {
  CHECK(components(complete(3)) == std::vector<std::size_t>{3});
  CHECK(components(make(4, {{0, 1}, {2, 3}})) == std::vector<std::size_t>{2, 2});
  CHECK(components(make(6, {{0, 1}, {1, 2}, {4, 5}})) == std::vector<std::size_t>{3, 2, 1});
  CHECK(components(Graph(0, {})).empty());
}

TEST_CASE("global efficiency") {
  CHECK(global_efficiency(complete(6)) == doctest::Approx(1.0));
  CHECK(global_efficiency(Graph(5, {})) == 0.0);
  CHECK(global_efficiency(make(3, {{0, 1}, {1, 2}})) == doctest::Approx(5.0 / 6.0));

  const auto split = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const auto bridged = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {2, 3}});
  CHECK(global_efficiency(split) < global_efficiency(bridged));

  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const auto edges = oracle::random_graph(40, 0.06, seed);
    CHECK(global_efficiency(make(40, edges)) == doctest::Approx(oracle::efficiency(40, edges)).epsilon(1e-12));
  }
}

TEST_CASE("betweenness and central point dominance") {
  CHECK(central_point_dominance(star(7)) == doctest::Approx(1.0));
  CHECK(central_point_dominance(complete(5)) == doctest::Approx(0.0));

  // Path on four vertices: the inner vertices each carry 2 of 3 pairs.
  const oracle::EdgeList path{{0, 1}, {1, 2}, {2, 3}};
  const auto exact = oracle::betweenness(4, path);
  CHECK(exact[1] == doctest::Approx(2.0 / 3.0));
  CHECK(central_point_dominance(make(4, path)) == doctest::Approx(4.0 / 9.0));

  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const auto edges = oracle::random_graph(25, 0.12, seed);
    const auto fast = betweenness(make(25, edges));
    const auto slow = oracle::betweenness(25, edges);
    for (std::size_t v = 0; v < fast.size(); ++v) CHECK(fast[v] == doctest::Approx(slow[v]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(central_point_dominance(Graph(2, {})), Error);
}
