#include "motifclust/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "motifclust/errors.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

int64_t ecc_bound(int64_t n) {
  if (n < 0) throw ConfigError("ecc_bound: n must be nonnegative");
  return n * n / 4;
}

EtccBound etcc_bound(int64_t n) {
  if (n < 0) throw ConfigError("etcc_bound: n must be nonnegative");
  EtccBound out;
  out.in_stated_range = n >= 7;
  const int64_t r = n % 3;
  if (r == 0) {
    const int64_t k = n / 3;
    out.value = k * k * k;
  } else if (r == 1) {
    const int64_t k = (n - 1) / 3;
    out.value = k * k * k + k * k;
  } else {
    const int64_t q = (n + 1) / 3;
    out.value = q * q * q - q * q;
  }
  return out;
}

int64_t alon_bound(int64_t n, int64_t d) {
  if (n < 1) throw ConfigError("alon_bound: n must be positive");
  if (d < 1) throw ConfigError("alon_bound: d must be positive");
  const double e3 = std::exp(3.0);
  const double dd = static_cast<double>(d + 1);
  const double raw = 3.0 * e3 * dd * dd * dd * std::log(static_cast<double>(n));
  return static_cast<int64_t>(std::ceil(raw));
}

namespace {

std::size_t pair_index(int i, int j) {  // i < j, colex
  return static_cast<std::size_t>(j) * (static_cast<std::size_t>(j) - 1) / 2 +
         static_cast<std::size_t>(i);
}

std::size_t triple_index(int i, int j, int k) {  // i < j < k, colex
  const std::size_t kk = static_cast<std::size_t>(k);
  return kk * (kk - 1) * (kk - 2) / 6 + pair_index(i, j);
}

}  // namespace

CoverReport random_cover(const Graph& g, int d, uint64_t seed, int trials) {
  if (d < 1) throw ConfigError("random_cover: d must be positive");
  if (trials < 1) throw ConfigError("random_cover: trials must be positive");
  const int n = g.num_vertices();

  CoverReport rep;
  rep.bound = n >= 1 ? alon_bound(n, d) : 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < n - d) rep.degree_ok = false;

  const auto edges = g.edges();
  const auto tris = enumerate_triangles(g);
  const std::size_t n2 = n >= 2 ? pair_index(n - 2, n - 1) + 1 : 0;
  const std::size_t n3 = n >= 3 ? triple_index(n - 3, n - 2, n - 1) + 1 : 0;

  Rng rng(seed);
  std::vector<char> pair_cov, triple_cov;
  std::vector<int> sampled, kept;
  for (int trial = 1; trial <= trials; ++trial) {
    rep.trials_used = trial;
    rep.cliques.clear();
    pair_cov.assign(n2, 0);
    triple_cov.assign(n3, 0);

    for (int64_t s = 0; s < rep.bound; ++s) {
      sampled.clear();
      for (int v = 0; v < n; ++v)
        if (rng.below(static_cast<uint64_t>(d) + 1) == 0) sampled.push_back(v);
      kept.clear();
      for (int v : sampled) {
        bool ok = true;
        for (int w : sampled)
          if (w != v && !g.has_edge(v, w)) {
            ok = false;
            break;
          }
        if (ok) kept.push_back(v);
      }
      if (kept.size() < 2) continue;  // covers no edge or triangle
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
          pair_cov[pair_index(kept[i], kept[j])] = 1;
          for (std::size_t l = j + 1; l < kept.size(); ++l)
            triple_cov[triple_index(kept[i], kept[j], kept[l])] = 1;
        }
      rep.cliques.push_back(kept);
    }

    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!pair_cov[pair_index(u, v)]) {
        ok = false;
        break;
      }
    if (ok)
      for (const Triple& t : tris)
        if (!triple_cov[triple_index(t.a, t.b, t.c)]) {
          ok = false;
          break;
        }
    rep.covered_all = ok;
    if (ok) break;
  }

  std::sort(rep.cliques.begin(), rep.cliques.end());
  rep.cliques.erase(std::unique(rep.cliques.begin(), rep.cliques.end()), rep.cliques.end());
  return rep;
}

}  // namespace motifclust
