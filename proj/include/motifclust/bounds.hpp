#pragma once

#include <cstdint>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Worst-case number of cliques needed to cover all edges of any n-vertex
// graph: floor(n^2 / 4).
int64_t ecc_bound(int64_t n);

struct EtccBound {
  int64_t value = 0;
  // The closed form below is stated for n >= 7; smaller n still get the
  // formula value, flagged so callers can warn.
  bool in_stated_range = true;
};

// Worst-case number of cliques needed to cover all edges and triangles of
// any n-vertex graph, attained by balanced complete tripartite graphs:
//   n = 3k:     k^3
//   n = 3k+1:   k^3 + k^2
//   n = 3k+2:   (k+1)^3 - (k+1)^2
EtccBound etcc_bound(int64_t n);

// Size of the random clique family that covers all edges and triangles of a
// dense graph (every vertex missing at most d-1 neighbours) with high
// probability: ceil(3 e^3 (d+1)^3 ln n).
int64_t alon_bound(int64_t n, int64_t d);

struct CoverReport {
  std::vector<std::vector<int>> cliques;  // distinct, each ascending
  bool covered_all = false;               // every edge and triangle covered
  bool degree_ok = true;                  // min degree >= n - d held
  int64_t bound = 0;                      // sets sampled per trial
  int trials_used = 0;
};

// Randomized edge+triangle clique cover: sample alon_bound(n, d) vertex
// sets, keeping each vertex with probability 1/(d+1), then prune every
// vertex with a non-neighbour in the sampled set (what remains is a
// clique). Coverage is verified exhaustively; failed trials are retried.
CoverReport random_cover(const Graph& g, int d, uint64_t seed = 0, int trials = 5);

}  // namespace motifclust
