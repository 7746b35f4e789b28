#include <doctest.h>

#include <algorithm>
#include <vector>

#include "motifclust/bounds.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/graph.hpp"

using namespace motifclust;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// K8 minus the perfect matching {0,4},{1,5},{2,6},{3,7}: 4-regular minimum
// degree 6 = n - 2, so d = 2 applies.
Graph k8_minus_matching() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < 8; ++v)
    for (int u = 0; u < v; ++u)
      if (v - u != 4) edges.push_back({u, v});
  return Graph::from_edges(8, edges);
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("edge cover bound is the quarter-square") {
  CHECK(ecc_bound(2) == 1);
  CHECK(ecc_bound(4) == 4);
  CHECK(ecc_bound(5) == 6);
  CHECK(ecc_bound(34) == 289);
}

TEST_CASE("edge+triangle cover bound hits its three residues") {
  CHECK(etcc_bound(7).value == 12);
  CHECK(etcc_bound(8).value == 18);
  CHECK(etcc_bound(9).value == 27);
  CHECK(etcc_bound(12).value == 64);   // 3k, k=4
  CHECK(etcc_bound(13).value == 80);   // 3k+1
  CHECK(etcc_bound(14).value == 100);  // 3k+2
  CHECK(etcc_bound(34).value == 1452);
  CHECK(etcc_bound(9).in_stated_range);
  CHECK_FALSE(etcc_bound(6).in_stated_range);
  CHECK_FALSE(etcc_bound(3).in_stated_range);
}

TEST_CASE("sampling bound values and monotonicity") {
  CHECK(alon_bound(10, 1) == 1110);
  CHECK(alon_bound(2, 1) == 335);
  for (int d = 1; d < 6; ++d) CHECK(alon_bound(20, d + 1) > alon_bound(20, d));
  for (int n = 3; n < 40; ++n) CHECK(alon_bound(n + 1, 2) >= alon_bound(n, 2));
}

TEST_CASE("random cover of a complete graph") {
  const Graph g = complete(8);
  const CoverReport rep = random_cover(g, 1, /*seed=*/7);
  CHECK(rep.covered_all);
  CHECK(rep.degree_ok);
  CHECK(rep.trials_used <= 5);
  CHECK(static_cast<int64_t>(rep.cliques.size()) <= rep.bound);
  CHECK(rep.bound == alon_bound(8, 1));
  for (const auto& c : rep.cliques) {
    CHECK(c.size() >= 2);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(is_clique(g, c));
  }
}

TEST_CASE("random cover of a near-complete graph") {
  const Graph g = k8_minus_matching();
  const CoverReport rep = random_cover(g, 2, /*seed=*/1);
  CHECK(rep.covered_all);
  CHECK(rep.degree_ok);
  CHECK(static_cast<int64_t>(rep.cliques.size()) <= rep.bound);
  for (const auto& c : rep.cliques) CHECK(is_clique(g, c));

  // coverage claim is real: recheck edges and triangles independently
  auto covers_pair = [&](int u, int v) {
    for (const auto& c : rep.cliques)
      if (std::binary_search(c.begin(), c.end(), u) &&
          std::binary_search(c.begin(), c.end(), v))
        return true;
    return false;
  };
  for (const auto& [u, v] : g.edges()) CHECK(covers_pair(u, v));
  for (const auto& t : enumerate_triangles(g)) {
    bool hit = false;
    for (const auto& c : rep.cliques)
      if (std::binary_search(c.begin(), c.end(), t.a) &&
          std::binary_search(c.begin(), c.end(), t.b) &&
          std::binary_search(c.begin(), c.end(), t.c)) {
        hit = true;
        break;
      }
    CHECK(hit);
  }
}

TEST_CASE("degree shortfall is reported") {
  // path on 5 vertices: min degree 1 < n - d for d = 2
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const CoverReport rep = random_cover(g, 2, 0, 1);
  CHECK_FALSE(rep.degree_ok);
}

TEST_CASE("cover parameter guards") {
  const Graph g = complete(4);
  CHECK_THROWS_AS(random_cover(g, 0), ConfigError);
  CHECK_THROWS_AS(random_cover(g, 1, 0, 0), ConfigError);
}
