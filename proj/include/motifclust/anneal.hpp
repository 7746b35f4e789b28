#pragma once

#include <cstdint>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/simd.hpp"

namespace motifclust {

// Overlapping community assignment: each vertex holds a subset of the
// feature set {0, ..., num_features-1}, packed as a bitmask.
struct FeatureAssignment {
  int n = 0;
  int num_features = 0;  // at most 64 so a mask fits one word
  std::vector<uint64_t> masks;

  // Vertices holding feature f, ascending; one vector per feature.
  std::vector<std::vector<int>> communities() const;
};

// Per-term weights for the coverage score.  A term whose population is
// empty gets weight zero and contributes nothing.
struct ScoreWeights {
  double edge = 1.0;
  double nonedge = 0.0;
  double triangle = 0.0;
  double nontriangle = 0.0;
};

// Balanced defaults: each of the four populations (edges, non-edges,
// triangles, non-triangles) carries the same total weight as the edge set.
ScoreWeights default_weights(const Graph& g);

// Scoring machinery for one graph + weight choice.  An edge scores when
// its endpoints share a feature, a non-edge when they share none; a
// triangle scores when all three vertices share a feature, a non-triangle
// when no feature is common to all three.
class AnnealContext {
 public:
  AnnealContext(const Graph& g, const ScoreWeights& w);

  int n() const { return n_; }
  const ScoreWeights& weights() const { return weights_; }
  double max_score() const { return max_score_; }
  double normalized(double raw) const { return max_score_ > 0 ? raw / max_score_ : 1.0; }

  double raw_score(const std::vector<uint64_t>& masks) const;

  // Sum of every score term involving vertex u, evaluated as if u's mask
  // were `mask` (other entries of `masks` are read as stored).
  double vertex_score(const std::vector<uint64_t>& masks, int u, uint64_t mask) const;

  // Change in raw_score from setting u's mask to `mask`.
  double score_delta(const std::vector<uint64_t>& masks, int u, uint64_t mask) const {
    return vertex_score(masks, u, mask) - vertex_score(masks, u, masks[u]);
  }

 private:
  int n_;
  ScoreWeights weights_;
  double max_score_ = 0;
  int64_t num_triangles_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int32_t>> nbrs_;  // per-vertex neighbour ids
  // Per-vertex list of pairs {v, w} forming a triangle with it, as two
  // parallel id arrays (for the gathered counting kernel).
  std::vector<std::vector<int32_t>> tri_a_;
  std::vector<std::vector<int32_t>> tri_b_;
  const simd::Kernels* kernels_;
};

double raw_score(const Graph& g, const ScoreWeights& w, const FeatureAssignment& a);
double normalized_score(const Graph& g, const ScoreWeights& w, const FeatureAssignment& a);

struct AnnealParams {
  int num_features = 2;
  double mu = -1.0;        // acceptance sharpness; < 0 means num_features
  int64_t rounds = -1;     // < 0 means ceil(20 * n * ln n)
  int restarts = 1;        // independent chains; best result wins
  uint64_t seed = 0;       // chain i uses seed + i
  bool normalized_accept = false;  // scale deltas by max_score in the
                                   // acceptance test (default: raw deltas)
  bool random_init = false;        // start from uniform masks, not all-empty
  bool keep_trace = true;          // record best-so-far after every round
};

struct AnnealResult {
  FeatureAssignment best;
  double best_raw = 0.0;
  double best_normalized = 0.0;
  std::vector<double> trace;  // winning chain: normalized best after each round
  int winning_restart = 0;
  uint64_t seed_used = 0;
  int64_t rounds = 0;
};

// Randomized local search: each round redraws one vertex's feature set
// uniformly, accepting improvements always and regressions with
// probability exp(mu * delta).
AnnealResult anneal(const Graph& g, const AnnealParams& params = {},
                    const ScoreWeights* weights = nullptr);

}  // namespace motifclust
