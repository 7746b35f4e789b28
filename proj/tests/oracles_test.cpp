#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "motifclust/bounds.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/instance.hpp"
#include "motifclust/mmcc.hpp"
#include "motifclust/oracles.hpp"

using namespace motifclust;

namespace {

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

Graph random_graph(int n, int percent, uint64_t& s) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (static_cast<int>(splitmix64(s) % 100) < percent) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("partition enumeration counts and canonical labels") {
  const int64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    int64_t count = 0;
    std::set<std::vector<int>> seen;
    for_each_partition(n, [&](const std::vector<int>& label) {
      ++count;
      seen.insert(label);
      // restricted growth: label[0] == 0 and each label <= 1 + running max
      CHECK(label[0] == 0);
      int hi = 0;
      for (int v : label) {
        CHECK(v <= hi + 1);
        if (v > hi) hi = v;
      }
    });
    CHECK(count == bell[n]);
    CHECK(static_cast<int64_t>(seen.size()) == count);  // no duplicates
  }
  CHECK_THROWS_AS(for_each_partition(13, [](const std::vector<int>&) {}), ResourceLimitError);
}

TEST_CASE("exhaustive clustering optimum on a triangle") {
  const ExactMmccResult res = exact_mmcc(build_instance(complete(3), WeightConfig{}));
  CHECK(res.optimum == doctest::Approx(0.0));
  CHECK(res.argmin.num_clusters() == 1);
}

TEST_CASE("relaxation sandwiches the exhaustive optimum") {
  uint64_t s = 99;
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 5 + rep % 3;  // 5, 6, 7
    const Graph g = random_graph(n, 45, s);
    WeightConfig cfg;
    cfg.nonedge_coeff = 0.3;
    cfg.nontriangle_sim = 0.45;
    const WeightedInstance inst = build_instance(g, cfg);

    const LpSolution lp = solve_lp_embedded(build_lp(inst));
    const ExactMmccResult exact = exact_mmcc(inst);
    const double rounded = mmcc_cost(inst, round_solution(lp));

    CHECK(lp.objective <= exact.optimum + 1e-7);
    CHECK(exact.optimum <= rounded + 1e-9);
    CHECK(mmcc_cost(inst, exact.argmin) == doctest::Approx(exact.optimum));
  }
}

TEST_CASE("exact edge+triangle covers on pinned graphs") {
  CHECK(exact_etcc(complete(3)).size == 1);

  // C4 has no triangles; each edge needs its own clique
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(exact_etcc(c4).size == 4);

  // balanced complete tripartite on 9 vertices meets the worst-case bound
  const ExactCoverResult t9 = exact_etcc(turan_graph(9, 3));
  CHECK(t9.size == 27);
  CHECK(t9.size == etcc_bound(9).value);
  // every cover member is a triangle of the graph (its only maximal cliques)
  for (const auto& c : t9.cover) CHECK(c.size() == 3);
}

TEST_CASE("exact edge covers on pinned graphs") {
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(exact_ecc(p4).size == 3);

  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(exact_ecc(star).size == 3);

  // C4 = turan(4,2) needs all four edges; matches the quarter-square bound
  CHECK(exact_ecc(turan_graph(4, 2)).size == 4);
  CHECK(exact_ecc(turan_graph(4, 2)).size == ecc_bound(4));

  CHECK(exact_ecc(complete(6)).size == 1);
}

TEST_CASE("exhaustive cover never exceeds the worst-case bound") {
  uint64_t s = 7;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 7 + rep % 3;  // 7, 8, 9
    const Graph g = random_graph(n, 50, s);
    const ExactCoverResult res = exact_etcc(g);
    CHECK(res.size <= etcc_bound(n).value);

    // double-check the reported cover: valid cliques covering everything
    for (const auto& c : res.cover) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.has_edge(c[i], c[j]));
    }
    auto in_some = [&](int a, int b, int cthird) {
      for (const auto& c : res.cover) {
        bool ha = false, hb = false, hc = cthird < 0;
        for (int v : c) {
          ha |= v == a;
          hb |= v == b;
          hc |= v == cthird;
        }
        if (ha && hb && hc) return true;
      }
      return false;
    };
    for (const auto& [u, v] : g.edges()) CHECK(in_some(u, v, -1));
    for (const auto& t : enumerate_triangles(g)) CHECK(in_some(t.a, t.b, t.c));
  }
}

TEST_CASE("exhaustive best assignment on pinned graphs") {
  // K4, one feature: everyone in gets normalized 1
  const ExactAssignmentResult k4 = exact_best_assignment(complete(4), 1);
  CHECK(k4.normalized == doctest::Approx(1.0));
  CHECK(k4.argmax.masks == std::vector<uint64_t>(4, 1));

  // two disjoint triangles, two features: perfect split exists
  const Graph two = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(exact_best_assignment(two, 2).normalized == doctest::Approx(1.0));

  // C4 with two features cannot satisfy all edges and nonedges at once
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(exact_best_assignment(c4, 2).normalized < 1.0);
}

TEST_CASE("oracle budgets are enforced") {
  CHECK_THROWS_AS(exact_mmcc(build_instance(turan_graph(13, 2), WeightConfig{})),
                  ResourceLimitError);

  CoverBudget tiny;
  tiny.max_elements = 3;
  CHECK_THROWS_AS(exact_etcc(turan_graph(9, 3), tiny), ResourceLimitError);

  tiny = CoverBudget{};
  tiny.max_nodes = 1;
  CHECK_THROWS_AS(exact_etcc(turan_graph(9, 3), tiny), ResourceLimitError);

  CHECK_THROWS_AS(exact_best_assignment(complete(6), 4), ResourceLimitError);
}
