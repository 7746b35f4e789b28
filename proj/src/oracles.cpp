#include "motifclust/oracles.hpp"

#include <algorithm>
#include <limits>

#include "motifclust/errors.hpp"

namespace motifclust {

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 0) throw ConfigError("for_each_partition: n must be nonnegative");
  if (n > 12) throw ResourceLimitError("for_each_partition: n is limited to 12");
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    fn(a);
    return;
  }
  std::vector<int> b(static_cast<std::size_t>(n), 1);  // b[i] = 1 + max(a[0..i-1])
  for (;;) {
    fn(a);
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]) --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      b[static_cast<std::size_t>(j)] =
          std::max(b[static_cast<std::size_t>(j - 1)], a[static_cast<std::size_t>(j - 1)] + 1);
    }
  }
}

ExactMmccResult exact_mmcc(const WeightedInstance& inst) {
  ExactMmccResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  for_each_partition(inst.n, [&](const std::vector<int>& labels) {
    Partition p;
    p.label = labels;
    const double c = mmcc_cost(inst, p);
    if (c < res.optimum) {
      res.optimum = c;
      res.argmin = std::move(p);
    }
  });
  return res;
}

namespace {

struct CoverProblem {
  std::size_t num_elements = 0;
  std::size_t words = 0;
  std::vector<std::vector<int>> sets;          // candidate cliques
  std::vector<std::vector<uint64_t>> covers;   // per set: element bitset
  std::vector<std::vector<int>> covered_by;    // per element: set indices
};

struct CoverSearch {
  const CoverProblem& prob;
  int64_t max_nodes;
  int64_t nodes = 0;
  std::size_t max_cover = 1;  // most elements any single set covers
  std::vector<int> best;      // best cover found (set indices)
  std::vector<int> chosen;
  std::vector<uint64_t> covered;

  explicit CoverSearch(const CoverProblem& p, int64_t budget) : prob(p), max_nodes(budget) {
    for (const auto& c : prob.covers) {
      std::size_t pc = 0;
      for (uint64_t w : c) pc += static_cast<std::size_t>(__builtin_popcountll(w));
      max_cover = std::max(max_cover, pc);
    }
  }

  std::size_t uncovered_count() const {
    std::size_t c = prob.num_elements;
    for (uint64_t w : covered) c -= static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  void greedy() {
    covered.assign(prob.words, 0);
    chosen.clear();
    while (uncovered_count() > 0) {
      int pick = -1;
      std::size_t gain_best = 0;
      for (int s = 0; s < static_cast<int>(prob.sets.size()); ++s) {
        std::size_t gain = 0;
        for (std::size_t w = 0; w < prob.words; ++w)
          gain += static_cast<std::size_t>(
              __builtin_popcountll(prob.covers[static_cast<std::size_t>(s)][w] & ~covered[w]));
        if (gain > gain_best) {
          gain_best = gain;
          pick = s;
        }
      }
      if (pick < 0) throw SolverError("clique cover: element not covered by any clique");
      apply(pick);
      chosen.push_back(pick);
    }
    best = chosen;
  }

  void apply(int s) {
    for (std::size_t w = 0; w < prob.words; ++w)
      covered[w] |= prob.covers[static_cast<std::size_t>(s)][w];
  }

  void search() {
    greedy();
    covered.assign(prob.words, 0);
    chosen.clear();
    dfs();
  }

  void dfs() {
    if (++nodes > max_nodes)
      throw ResourceLimitError("clique cover: search budget exhausted");
    const std::size_t uncov = uncovered_count();
    if (uncov == 0) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    const std::size_t lb = (uncov + max_cover - 1) / max_cover;
    if (chosen.size() + lb >= best.size()) return;

    // Branch on the uncovered element with the fewest candidate sets.
    std::size_t elem = prob.num_elements;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < prob.num_elements; ++e) {
      if ((covered[e >> 6] >> (e & 63)) & 1) continue;
      if (prob.covered_by[e].size() < fewest) {
        fewest = prob.covered_by[e].size();
        elem = e;
      }
    }
    const std::vector<uint64_t> saved = covered;
    for (int s : prob.covered_by[elem]) {
      apply(s);
      chosen.push_back(s);
      dfs();
      chosen.pop_back();
      covered = saved;
    }
  }
};

ExactCoverResult exact_cover(const Graph& g, bool include_triangles,
                             const CoverBudget& budget) {
  const auto edges = g.edges();
  const auto tris = include_triangles ? enumerate_triangles(g) : std::vector<Triple>{};
  const std::size_t ne = edges.size();
  const std::size_t nt = tris.size();
  if (ne + nt > budget.max_elements)
    throw ResourceLimitError("clique cover: too many edges/triangles for exact search");

  CoverProblem prob;
  prob.num_elements = ne + nt;
  prob.words = (prob.num_elements + 63) / 64;
  prob.sets = maximal_cliques(g);
  // Drop cliques that cover nothing (isolated vertices).
  prob.sets.erase(std::remove_if(prob.sets.begin(), prob.sets.end(),
                                 [](const std::vector<int>& c) { return c.size() < 2; }),
                  prob.sets.end());

  prob.covers.resize(prob.sets.size());
  prob.covered_by.resize(prob.num_elements);
  for (int s = 0; s < static_cast<int>(prob.sets.size()); ++s) {
    const auto& cl = prob.sets[static_cast<std::size_t>(s)];
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int v : cl) in[static_cast<std::size_t>(v)] = 1;
    auto& bits = prob.covers[static_cast<std::size_t>(s)];
    bits.assign(prob.words, 0);
    for (std::size_t e = 0; e < ne; ++e)
      if (in[static_cast<std::size_t>(edges[e].first)] &&
          in[static_cast<std::size_t>(edges[e].second)]) {
        bits[e >> 6] |= uint64_t{1} << (e & 63);
        prob.covered_by[e].push_back(s);
      }
    for (std::size_t t = 0; t < nt; ++t)
      if (in[static_cast<std::size_t>(tris[t].a)] && in[static_cast<std::size_t>(tris[t].b)] &&
          in[static_cast<std::size_t>(tris[t].c)]) {
        const std::size_t e = ne + t;
        bits[e >> 6] |= uint64_t{1} << (e & 63);
        prob.covered_by[e].push_back(s);
      }
  }

  ExactCoverResult out;
  if (prob.num_elements == 0) return out;

  CoverSearch search(prob, budget.max_nodes);
  search.search();
  out.size = static_cast<int64_t>(search.best.size());
  for (int s : search.best) out.cover.push_back(prob.sets[static_cast<std::size_t>(s)]);
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

}  // namespace

ExactCoverResult exact_ecc(const Graph& g, const CoverBudget& budget) {
  return exact_cover(g, false, budget);
}

ExactCoverResult exact_etcc(const Graph& g, const CoverBudget& budget) {
  return exact_cover(g, true, budget);
}

ExactAssignmentResult exact_best_assignment(const Graph& g, int num_features,
                                            const ScoreWeights* weights) {
  if (num_features < 1) throw ConfigError("exact_best_assignment: need at least one feature");
  const int n = g.num_vertices();
  if (static_cast<int64_t>(n) * num_features > 23)
    throw ResourceLimitError(
        "exact_best_assignment: 2^(n * features) assignments exceed the budget");

  const ScoreWeights w = weights ? *weights : default_weights(g);
  AnnealContext ctx(g, w);

  const uint64_t top = uint64_t{1} << num_features;
  std::vector<uint64_t> masks(static_cast<std::size_t>(n), 0);
  std::vector<uint64_t> best_masks = masks;
  double best = -std::numeric_limits<double>::infinity();

  // Depth-first over vertices; score accumulates the terms completed by
  // each newly fixed vertex (pairs and triples whose highest vertex it is).
  auto rec = [&](auto&& self, int v, double acc) -> void {
    if (v == n) {
      if (acc > best) {
        best = acc;
        best_masks = masks;
      }
      return;
    }
    for (uint64_t cand = 0; cand < top; ++cand) {
      double add = 0.0;
      for (int i = 0; i < v; ++i) {
        const uint64_t share2 = masks[static_cast<std::size_t>(i)] & cand;
        if (g.has_edge(i, v))
          add += w.edge * (share2 != 0);
        else
          add += w.nonedge * (share2 == 0);
        for (int j = i + 1; j < v; ++j) {
          const uint64_t share3 = share2 & masks[static_cast<std::size_t>(j)];
          const bool tri = g.has_edge(i, j) && g.has_edge(i, v) && g.has_edge(j, v);
          if (tri)
            add += w.triangle * (share3 != 0);
          else
            add += w.nontriangle * (share3 == 0);
        }
      }
      masks[static_cast<std::size_t>(v)] = cand;
      self(self, v + 1, acc + add);
    }
    masks[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, 0.0);

  ExactAssignmentResult res;
  res.argmax.n = n;
  res.argmax.num_features = num_features;
  res.argmax.masks = best_masks;
  res.raw = ctx.raw_score(best_masks);  // exact, not the accumulated sum
  res.normalized = ctx.normalized(res.raw);
  return res;
}

}  // namespace motifclust
