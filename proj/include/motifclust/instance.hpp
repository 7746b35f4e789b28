#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "motifclust/graph.hpp"

namespace motifclust {

// Similarity weights for the clustering objective. A pair or triple placed
// across clusters costs its weight w; kept inside one cluster it costs 1-w.
// The nonedge value may be given as an absolute number, as a coefficient c
// meaning 1/2 - c*eps (eps = edge density |E|/C(n,2)), or as a coefficient
// range drawn per nonedge with the given seed.
struct WeightConfig {
  double edge_sim = 1.0;
  double nonedge_dissim = 0.5;
  std::optional<double> nonedge_coeff;
  std::optional<std::pair<double, double>> nonedge_coeff_range;
  double triangle_sim = 1.0;
  double nontriangle_sim = 0.5;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  uint64_t seed = 0;
};

// Key-value lines ("key = value", '#' comments). Keys: edge_sim,
// nonedge_dissim, nonedge_dissim_coeff, nonedge_dissim_coeff_range (two
// numbers), triangle_sim, nontriangle_sim, lambda (sets both), lambda1,
// lambda2, seed.
WeightConfig parse_weight_config(std::istream& in);

struct WeightedInstance {
  int n = 0;
  double lambda1 = 1.0, lambda2 = 1.0;
  std::vector<double> pair_w;    // colex rank, size C(n,2)
  std::vector<double> triple_w;  // colex rank, size C(n,3)
  double sum_pair_w = 0.0, sum_triple_w = 0.0;

  static std::size_t pair_rank(int i, int j) {  // i < j
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }
  static std::size_t triple_rank(int i, int j, int k) {  // i < j < k
    return static_cast<std::size_t>(k) * (k - 1) * (k - 2) / 6 +
           static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }
  double pair_weight(int u, int v) const {
    return u < v ? pair_w[pair_rank(u, v)] : pair_w[pair_rank(v, u)];
  }
};

struct BuildOptions {
  bool force = false;  // lifts the vertex-count guard
};

// Guard: refuses n > 500 unless forced (dense storage is O(n^3)).
WeightedInstance build_instance(const Graph& g, const WeightConfig& cfg,
                                const BuildOptions& opt = {});

// Clustering as a label per vertex; equal labels mean same cluster.
struct Partition {
  std::vector<int> label;

  static Partition singletons(int n);
  static Partition one_cluster(int n);

  int num_clusters() const;
  // Clusters in order of first appearance, members ascending.
  std::vector<std::vector<int>> clusters() const;
  // Relabels clusters 0,1,... in order of first appearance.
  void canonicalize();
};

// lambda1 * (sum over split pairs of w + sum over within pairs of 1-w)
// + lambda2 * (same over triples). Within-triple means all three vertices
// share a cluster.
double mmcc_cost(const WeightedInstance& inst, const Partition& p);

}  // namespace motifclust
