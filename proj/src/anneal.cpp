#include "motifclust/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "motifclust/errors.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

namespace {

int64_t choose2(int64_t n) { return n * (n - 1) / 2; }
int64_t choose3(int64_t n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

std::vector<std::vector<int>> FeatureAssignment::communities() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_features));
  for (int v = 0; v < n; ++v)
    for (int f = 0; f < num_features; ++f)
      if ((masks[static_cast<std::size_t>(v)] >> f) & 1) out[static_cast<std::size_t>(f)].push_back(v);
  return out;
}

ScoreWeights default_weights(const Graph& g) {
  const int64_t n = g.num_vertices();
  const int64_t m = g.num_edges();
  const int64_t pairs = choose2(n);
  const int64_t triples = choose3(n);
  const int64_t tris = static_cast<int64_t>(enumerate_triangles(g).size());
  ScoreWeights w;
  w.edge = 1.0;
  w.nonedge = pairs > m ? static_cast<double>(m) / static_cast<double>(pairs - m) : 0.0;
  w.triangle = tris > 0 ? static_cast<double>(m) / static_cast<double>(tris) : 0.0;
  w.nontriangle =
      triples > tris ? static_cast<double>(m) / static_cast<double>(triples - tris) : 0.0;
  return w;
}

AnnealContext::AnnealContext(const Graph& g, const ScoreWeights& w)
    : n_(g.num_vertices()), weights_(w), kernels_(&simd::ops()) {
  nbrs_.resize(static_cast<std::size_t>(n_));
  tri_a_.resize(static_cast<std::size_t>(n_));
  tri_b_.resize(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    const auto& nb = g.neighbors(v);
    nbrs_[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
  }
  const auto tris = enumerate_triangles(g);
  num_triangles_ = static_cast<int64_t>(tris.size());
  for (const Triple& t : tris) {
    tri_a_[static_cast<std::size_t>(t.a)].push_back(t.b);
    tri_b_[static_cast<std::size_t>(t.a)].push_back(t.c);
    tri_a_[static_cast<std::size_t>(t.b)].push_back(t.a);
    tri_b_[static_cast<std::size_t>(t.b)].push_back(t.c);
    tri_a_[static_cast<std::size_t>(t.c)].push_back(t.a);
    tri_b_[static_cast<std::size_t>(t.c)].push_back(t.b);
  }
  const int64_t m = g.num_edges();
  max_score_ = w.edge * static_cast<double>(m) +
               w.nonedge * static_cast<double>(choose2(n_) - m) +
               w.triangle * static_cast<double>(num_triangles_) +
               w.nontriangle * static_cast<double>(choose3(n_) - num_triangles_);
  edges_ = g.edges();
}

double AnnealContext::raw_score(const std::vector<uint64_t>& masks) const {
  const auto* k = kernels_;
  // Pairs: hits among edges, misses among non-edges.
  int64_t edge_hits = 0;
  int64_t pair_hits = 0;
  for (int u = 0; u < n_; ++u) {
    const uint64_t mu = masks[static_cast<std::size_t>(u)];
    if (mu == 0) continue;
    pair_hits += static_cast<int64_t>(
        k->mask_count_hit(masks.data() + u + 1, static_cast<std::size_t>(n_ - u - 1), mu));
  }
  for (const auto& [u, v] : edges_)
    edge_hits += (masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]) != 0;
  const int64_t m = static_cast<int64_t>(edges_.size());
  const int64_t nonedge_empty = (choose2(n_) - m) - (pair_hits - edge_hits);

  // Triples: a triple is hit when some feature is common to all three.
  int64_t triple_hits = 0;
  for (int v = 0; v < n_; ++v) {
    const uint64_t mv = masks[static_cast<std::size_t>(v)];
    if (mv == 0) continue;
    for (int w = v + 1; w < n_; ++w) {
      const uint64_t mvw = mv & masks[static_cast<std::size_t>(w)];
      if (mvw == 0) continue;
      triple_hits += static_cast<int64_t>(
          k->mask_count_hit(masks.data() + w + 1, static_cast<std::size_t>(n_ - w - 1), mvw));
    }
  }
  int64_t tri_hits3 = 0;  // each triangle counted once per corner
  for (int u = 0; u < n_; ++u) {
    const auto& ta = tri_a_[static_cast<std::size_t>(u)];
    const auto& tb = tri_b_[static_cast<std::size_t>(u)];
    tri_hits3 += static_cast<int64_t>(k->mask_count_hit_idx2(
        masks.data(), ta.data(), tb.data(), ta.size(), masks[static_cast<std::size_t>(u)]));
  }
  const int64_t tri_hits = tri_hits3 / 3;
  const int64_t nontri_empty = (choose3(n_) - num_triangles_) - (triple_hits - tri_hits);

  return weights_.edge * static_cast<double>(edge_hits) +
         weights_.nonedge * static_cast<double>(nonedge_empty) +
         weights_.triangle * static_cast<double>(tri_hits) +
         weights_.nontriangle * static_cast<double>(nontri_empty);
}

double AnnealContext::vertex_score(const std::vector<uint64_t>& masks, int u,
                                   uint64_t mask) const {
  const auto* k = kernels_;
  const auto& nbr = nbrs_[static_cast<std::size_t>(u)];
  const auto& ta = tri_a_[static_cast<std::size_t>(u)];
  const auto& tb = tri_b_[static_cast<std::size_t>(u)];
  const int64_t deg = static_cast<int64_t>(nbr.size());
  const int64_t tri_pairs = static_cast<int64_t>(ta.size());
  const int64_t nonedges_u = (n_ - 1) - deg;
  const int64_t nontri_pairs_u = choose2(n_ - 1) - tri_pairs;

  if (mask == 0) {
    // Nothing shared with anyone: all non-edges at u and all non-triangle
    // pairs at u score; nothing else does.
    return weights_.nonedge * static_cast<double>(nonedges_u) +
           weights_.nontriangle * static_cast<double>(nontri_pairs_u);
  }

  // Pairs at u.
  int64_t all_hits = static_cast<int64_t>(
      k->mask_count_hit(masks.data(), static_cast<std::size_t>(n_), mask));
  all_hits -= (masks[static_cast<std::size_t>(u)] & mask) != 0;  // drop u itself
  const int64_t nbr_hits = static_cast<int64_t>(
      k->mask_count_hit_idx(masks.data(), nbr.data(), nbr.size(), mask));
  const double pair_part =
      weights_.edge * static_cast<double>(nbr_hits) +
      weights_.nonedge * static_cast<double>(nonedges_u - (all_hits - nbr_hits));

  // Triples at u: pairs {v, w} avoiding u with masks[v] & masks[w] & mask != 0.
  int64_t full = 0;
  for (int v = 0; v < n_; ++v) {
    const uint64_t mv = masks[static_cast<std::size_t>(v)] & mask;
    if (mv == 0) continue;
    full += static_cast<int64_t>(
        k->mask_count_hit(masks.data() + v + 1, static_cast<std::size_t>(n_ - v - 1), mv));
  }
  // `full` ranges over all pairs; remove those containing u (they use the
  // stored mask for u on both sides and cancel exactly).
  const uint64_t mu = masks[static_cast<std::size_t>(u)] & mask;
  int64_t with_u = 0;
  if (mu != 0)
    with_u = static_cast<int64_t>(
                 k->mask_count_hit(masks.data(), static_cast<std::size_t>(n_), mu)) -
             1;
  const int64_t other_hits = full - with_u;
  const int64_t tri_hits = static_cast<int64_t>(
      k->mask_count_hit_idx2(masks.data(), ta.data(), tb.data(), ta.size(), mask));
  const double triple_part =
      weights_.triangle * static_cast<double>(tri_hits) +
      weights_.nontriangle * static_cast<double>(nontri_pairs_u - (other_hits - tri_hits));

  return pair_part + triple_part;
}

double raw_score(const Graph& g, const ScoreWeights& w, const FeatureAssignment& a) {
  return AnnealContext(g, w).raw_score(a.masks);
}

double normalized_score(const Graph& g, const ScoreWeights& w, const FeatureAssignment& a) {
  AnnealContext ctx(g, w);
  return ctx.normalized(ctx.raw_score(a.masks));
}

namespace {

struct ChainOutcome {
  std::vector<uint64_t> best_masks;
  double best_raw = 0.0;  // exact recomputation, not the running sum
  std::vector<double> trace;
};

ChainOutcome run_chain(const AnnealContext& ctx, const AnnealParams& p, int64_t rounds,
                       double mu, uint64_t seed) {
  const int n = ctx.n();
  Rng rng(seed);
  std::vector<uint64_t> masks(static_cast<std::size_t>(n), 0);
  if (p.random_init)
    for (auto& m : masks) m = rng.subset_mask(p.num_features);

  double cur = ctx.raw_score(masks);
  std::vector<uint64_t> best_masks = masks;
  double best = cur;
  ChainOutcome out;
  if (p.keep_trace) out.trace.reserve(static_cast<std::size_t>(rounds));
  const double max_score = ctx.max_score();
  const double accept_scale = p.normalized_accept && max_score > 0 ? 1.0 / max_score : 1.0;

  for (int64_t t = 0; t < rounds; ++t) {
    const int u = rng.below_int(n);
    const uint64_t cand = rng.subset_mask(p.num_features);
    const double d = ctx.score_delta(masks, u, cand);
    bool accept = d >= 0;
    if (!accept) accept = rng.unit() < std::exp(mu * d * accept_scale);
    if (accept) {
      masks[static_cast<std::size_t>(u)] = cand;
      cur += d;
      if (cur > best) {
        best = cur;
        best_masks = masks;
      }
    }
    if (p.keep_trace) out.trace.push_back(ctx.normalized(best));
  }
  out.best_masks = std::move(best_masks);
  out.best_raw = ctx.raw_score(out.best_masks);
  return out;
}

}  // namespace

AnnealResult anneal(const Graph& g, const AnnealParams& params, const ScoreWeights* weights) {
  if (params.num_features < 1) throw ConfigError("anneal: need at least one feature");
  if (params.num_features > 64)
    throw ResourceLimitError("anneal: feature sets are limited to 64 features per vertex");
  if (params.restarts < 1) throw ConfigError("anneal: restarts must be positive");
  if (params.mu >= 0 && !std::isfinite(params.mu))
    throw ConfigError("anneal: mu must be finite");

  const int n = g.num_vertices();
  const double mu = params.mu < 0 ? static_cast<double>(params.num_features) : params.mu;
  int64_t rounds = params.rounds;
  if (rounds < 0)
    rounds = n >= 2 ? static_cast<int64_t>(
                          std::ceil(20.0 * n * std::log(static_cast<double>(n))))
                    : 0;

  const ScoreWeights w = weights ? *weights : default_weights(g);
  AnnealContext ctx(g, w);

  std::vector<ChainOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(params.restarts));
  if (params.restarts == 1) {
    outcomes.push_back(run_chain(ctx, params, rounds, mu, params.seed));
  } else {
    std::vector<std::future<ChainOutcome>> futs;
    futs.reserve(static_cast<std::size_t>(params.restarts));
    for (int i = 0; i < params.restarts; ++i)
      futs.push_back(std::async(std::launch::async, [&ctx, &params, rounds, mu, i] {
        return run_chain(ctx, params, rounds, mu, params.seed + static_cast<uint64_t>(i));
      }));
    for (auto& f : futs) outcomes.push_back(f.get());
  }

  int win = 0;
  for (int i = 1; i < static_cast<int>(outcomes.size()); ++i)
    if (outcomes[static_cast<std::size_t>(i)].best_raw >
        outcomes[static_cast<std::size_t>(win)].best_raw)
      win = i;  // ties keep the lowest restart index

  auto& chosen = outcomes[static_cast<std::size_t>(win)];
  AnnealResult res;
  res.best.n = n;
  res.best.num_features = params.num_features;
  res.best.masks = std::move(chosen.best_masks);
  res.best_raw = chosen.best_raw;
  res.best_normalized = ctx.normalized(res.best_raw);
  res.trace = std::move(chosen.trace);
  res.winning_restart = win;
  res.seed_used = params.seed + static_cast<uint64_t>(win);
  res.rounds = rounds;
  return res;
}

}  // namespace motifclust
