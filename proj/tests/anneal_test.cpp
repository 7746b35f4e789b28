#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "motifclust/anneal.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/rng.hpp"

using namespace motifclust;

namespace {

Graph karate() {
  ParseOptions opt;
  opt.one_based = true;
  return load_edge_list_file(MOTIFCLUST_SOURCE_DIR "/data/karate.edges", opt);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("balanced default weights on the karate club") {
  const Graph g = karate();
  const ScoreWeights w = default_weights(g);
  CHECK(w.edge == 1.0);
  CHECK(w.nonedge == doctest::Approx(78.0 / 483.0).epsilon(1e-15));
  CHECK(w.triangle == doctest::Approx(78.0 / 45.0).epsilon(1e-15));
  CHECK(w.nontriangle == doctest::Approx(78.0 / 5939.0).epsilon(1e-15));
  const AnnealContext ctx(g, w);
  CHECK(ctx.max_score() == doctest::Approx(4 * 78.0).epsilon(1e-15));
}

TEST_CASE("complete graphs have no nonedge or nontriangle terms") {
  const Graph g = complete(4);
  const ScoreWeights w = default_weights(g);
  CHECK(w.nonedge == 0.0);
  CHECK(w.nontriangle == 0.0);
  CHECK(w.triangle == doctest::Approx(6.0 / 4.0));

  // all vertices in one community: every edge and triangle scores
  const AnnealContext ctx(g, w);
  const std::vector<uint64_t> all_one(4, 1);
  CHECK(ctx.raw_score(all_one) == doctest::Approx(6.0 + 1.5 * 4.0));
  CHECK(ctx.normalized(ctx.raw_score(all_one)) == doctest::Approx(1.0));
}

TEST_CASE("score delta for vacating a triangle corner") {
  // K3 with unit weights everywhere that has population: edges + triangle
  const Graph g = complete(3);
  ScoreWeights w;
  w.edge = 1.0;
  w.triangle = 3.0;
  const AnnealContext ctx(g, w);
  const std::vector<uint64_t> all_one(3, 1);
  CHECK(ctx.raw_score(all_one) == doctest::Approx(3.0 + 3.0));
  // moving vertex 0 to the empty set loses 2 edges and the triangle
  CHECK(ctx.score_delta(all_one, 0, 0) == doctest::Approx(-5.0));
}

TEST_CASE("deltas agree with full recomputes on random graphs") {
  uint64_t s = 42;
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 5 + static_cast<int>(splitmix64(s) % 16);  // 5..20
    const int features = 1 + static_cast<int>(splitmix64(s) % 6);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (splitmix64(s) % 100 < 35) edges.push_back({u, v});
    const Graph g = Graph::from_edges(n, edges);
    const AnnealContext ctx(g, default_weights(g));

    std::vector<uint64_t> masks(n);
    const uint64_t top = uint64_t{1} << features;
    for (auto& m : masks) m = splitmix64(s) % top;

    for (int move = 0; move < 25; ++move) {
      const int u = static_cast<int>(splitmix64(s) % n);
      const uint64_t mask = splitmix64(s) % top;
      const double before = ctx.raw_score(masks);
      const double delta = ctx.score_delta(masks, u, mask);
      std::vector<uint64_t> next = masks;
      next[u] = mask;
      const double after = ctx.raw_score(next);
      CHECK(std::abs(delta - (after - before)) <= 1e-9);
      masks = next;
    }
  }
}

TEST_CASE("annealing is reproducible and its trace never regresses") {
  const Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                                        {4, 5}, {5, 6}});
  AnnealParams p;
  p.num_features = 2;
  p.seed = 11;
  p.rounds = 400;
  p.restarts = 3;
  const AnnealResult a = anneal(g, p);
  const AnnealResult b = anneal(g, p);
  CHECK(a.best.masks == b.best.masks);
  CHECK(a.best_raw == b.best_raw);
  CHECK(a.winning_restart == b.winning_restart);
  REQUIRE(a.trace.size() == 400);
  for (std::size_t i = 1; i < a.trace.size(); ++i) CHECK(a.trace[i] >= a.trace[i - 1]);

  // reported raw score matches an independent recompute of the best masks
  const AnnealContext ctx(g, default_weights(g));
  CHECK(a.best_raw == doctest::Approx(ctx.raw_score(a.best.masks)).epsilon(1e-12));
  CHECK(a.best_normalized == doctest::Approx(ctx.normalized(a.best_raw)).epsilon(1e-12));
}

TEST_CASE("a triangle with one feature is solved immediately") {
  AnnealParams p;
  p.num_features = 1;
  p.rounds = 200;
  p.seed = 3;
  const AnnealResult r = anneal(complete(3), p);
  CHECK(r.best_normalized == doctest::Approx(1.0));
  const auto comms = r.best.communities();
  REQUIRE(comms.size() == 1);
  CHECK(comms[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("communities list vertices per feature") {
  FeatureAssignment a;
  a.n = 4;
  a.num_features = 3;
  a.masks = {0b101, 0b001, 0b000, 0b110};
  const auto comms = a.communities();
  REQUIRE(comms.size() == 3);
  CHECK(comms[0] == std::vector<int>{0, 1});
  CHECK(comms[1] == std::vector<int>{3});
  CHECK(comms[2] == std::vector<int>{0, 3});
}

TEST_CASE("default rounds follow the 20 n ln n rule") {
  AnnealParams p;
  p.num_features = 1;
  p.seed = 1;
  const AnnealResult r = anneal(complete(5), p);
  CHECK(r.rounds == static_cast<int64_t>(std::ceil(20.0 * 5 * std::log(5.0))));
}

TEST_CASE("parameter guards") {
  const Graph g = complete(3);
  AnnealParams p;
  p.num_features = 0;
  CHECK_THROWS_AS(anneal(g, p), ConfigError);
  p.num_features = 65;
  CHECK_THROWS_AS(anneal(g, p), ResourceLimitError);
  p = AnnealParams{};
  p.restarts = 0;
  CHECK_THROWS_AS(anneal(g, p), ConfigError);
}
