#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "motifclust/anneal.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/instance.hpp"

namespace motifclust {

// Small-scale exhaustive and branch-and-bound solvers. They exist to pin
// down ground truth for tests and tiny inputs; every entry point refuses
// instances beyond its explicit budget instead of silently running forever.

// Visits every set partition of {0..n-1} in restricted-growth order; the
// label vector passed to fn is already canonical. n is limited to 12
// (4,213,597 partitions).
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

struct ExactMmccResult {
  double optimum = 0.0;
  Partition argmin;
};

// Exhaustive minimum of the clustering objective. n limited to 12.
ExactMmccResult exact_mmcc(const WeightedInstance& inst);

struct ExactCoverResult {
  int64_t size = 0;
  std::vector<std::vector<int>> cover;  // cliques, each ascending; list sorted
};

struct CoverBudget {
  std::size_t max_elements = 200;       // edges (+ triangles)
  int64_t max_nodes = 50'000'000;       // branch-and-bound node budget
};

// Minimum clique cover of all edges (exact_ecc) or of all edges and
// triangles (exact_etcc). Branch-and-bound over maximal cliques; throws
// ResourceLimitError when a budget is exhausted.
ExactCoverResult exact_ecc(const Graph& g, const CoverBudget& budget = {});
ExactCoverResult exact_etcc(const Graph& g, const CoverBudget& budget = {});

struct ExactAssignmentResult {
  FeatureAssignment argmax;
  double raw = 0.0;
  double normalized = 0.0;
};

// Exhaustive maximum of the coverage score over all feature assignments.
// Requires n * num_features <= 23 (at most ~10M assignments).
ExactAssignmentResult exact_best_assignment(const Graph& g, int num_features,
                                            const ScoreWeights* weights = nullptr);

}  // namespace motifclust
