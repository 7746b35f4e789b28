#include "motifclust/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "motifclust/errors.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

WeightConfig parse_weight_config(std::istream& in) {
  WeightConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    std::istringstream keys(line.substr(0, eq == std::string::npos ? line.size() : eq));
    std::string key;
    if (!(keys >> key)) continue;
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::istringstream vals(line.substr(eq + 1));
    auto num = [&](double& out) {
      if (!(vals >> out))
        throw ConfigError("config line " + std::to_string(lineno) + ": bad number for " + key);
    };
    if (key == "edge_sim") num(cfg.edge_sim);
    else if (key == "nonedge_dissim") num(cfg.nonedge_dissim);
    else if (key == "nonedge_dissim_coeff") {
      double c;
      num(c);
      cfg.nonedge_coeff = c;
    } else if (key == "nonedge_dissim_coeff_range") {
      double lo, hi;
      num(lo);
      num(hi);
      cfg.nonedge_coeff_range = {lo, hi};
    } else if (key == "triangle_sim") num(cfg.triangle_sim);
    else if (key == "nontriangle_sim") num(cfg.nontriangle_sim);
    else if (key == "lambda") {
      double l;
      num(l);
      cfg.lambda1 = cfg.lambda2 = l;
    } else if (key == "lambda1") num(cfg.lambda1);
    else if (key == "lambda2") num(cfg.lambda2);
    else if (key == "seed") {
      double s;
      num(s);
      cfg.seed = static_cast<uint64_t>(s);
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

namespace {

void check_unit(double w, const char* what) {
  if (!(w >= 0.0 && w <= 1.0))
    throw ConfigError(std::string(what) + " must lie in [0,1], got " + std::to_string(w));
}

}  // namespace

WeightedInstance build_instance(const Graph& g, const WeightConfig& cfg,
                                const BuildOptions& opt) {
  const int n = g.num_vertices();
  if (n > 500 && !opt.force)
    throw ResourceLimitError("instance with n = " + std::to_string(n) +
                             " exceeds the dense-storage guard (500); pass force to override");
  check_unit(cfg.edge_sim, "edge similarity");
  check_unit(cfg.triangle_sim, "triangle similarity");
  check_unit(cfg.nontriangle_sim, "nontriangle similarity");
  if (cfg.lambda1 < 0 || cfg.lambda2 < 0) throw ConfigError("lambda must be >= 0");
  if (cfg.nonedge_coeff_range && cfg.nonedge_coeff_range->second < cfg.nonedge_coeff_range->first)
    throw ConfigError("nonedge coefficient range is inverted");

  const std::size_t npairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const double eps = npairs == 0 ? 0.0 : static_cast<double>(g.num_edges()) / npairs;

  Rng rng(cfg.seed);
  auto nonedge_value = [&]() {
    if (cfg.nonedge_coeff_range) {
      auto [lo, hi] = *cfg.nonedge_coeff_range;
      double c = lo + (hi - lo) * rng.unit();
      return 0.5 - c * eps;
    }
    if (cfg.nonedge_coeff) return 0.5 - *cfg.nonedge_coeff * eps;
    return cfg.nonedge_dissim;
  };

  WeightedInstance inst;
  inst.n = n;
  inst.lambda1 = cfg.lambda1;
  inst.lambda2 = cfg.lambda2;
  inst.pair_w.resize(npairs);
  // colex order: j outer, i inner, matching pair_rank
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      double w;
      if (g.has_edge(i, j)) {
        w = cfg.edge_sim;
      } else {
        w = nonedge_value();
        check_unit(w, "nonedge similarity");
      }
      inst.pair_w[WeightedInstance::pair_rank(i, j)] = w;
      inst.sum_pair_w += w;
    }
  }

  const std::size_t ntriples =
      n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
  inst.triple_w.resize(ntriples);
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        bool tri = g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k);
        double w = tri ? cfg.triangle_sim : cfg.nontriangle_sim;
        inst.triple_w[WeightedInstance::triple_rank(i, j, k)] = w;
        inst.sum_triple_w += w;
      }
    }
  }
  return inst;
}

Partition Partition::singletons(int n) {
  Partition p;
  p.label.resize(n);
  for (int v = 0; v < n; ++v) p.label[v] = v;
  return p;
}

Partition Partition::one_cluster(int n) {
  Partition p;
  p.label.assign(n, 0);
  return p;
}

int Partition::num_clusters() const {
  return static_cast<int>(clusters().size());
}

std::vector<std::vector<int>> Partition::clusters() const {
  std::vector<std::vector<int>> out;
  std::vector<int> index(label.size(), -1);
  std::vector<int> order;
  for (std::size_t v = 0; v < label.size(); ++v) {
    int l = label[v];
    int slot = -1;
    for (std::size_t k = 0; k < order.size(); ++k)
      if (order[k] == l) slot = static_cast<int>(k);
    if (slot < 0) {
      slot = static_cast<int>(order.size());
      order.push_back(l);
      out.emplace_back();
    }
    out[slot].push_back(static_cast<int>(v));
  }
  return out;
}

void Partition::canonicalize() {
  auto cl = clusters();
  for (std::size_t k = 0; k < cl.size(); ++k)
    for (int v : cl[k]) label[v] = static_cast<int>(k);
}

double mmcc_cost(const WeightedInstance& inst, const Partition& p) {
  // cost = sum of all split costs, corrected inside clusters:
  // split w everywhere + (1-2w) for within pairs/triples.
  double cost = inst.lambda1 * inst.sum_pair_w + inst.lambda2 * inst.sum_triple_w;
  for (const auto& c : p.clusters()) {
    const int s = static_cast<int>(c.size());
    double within = 0.0;
    for (int b = 1; b < s; ++b)
      for (int a = 0; a < b; ++a)
        within += 1.0 - 2.0 * inst.pair_w[WeightedInstance::pair_rank(c[a], c[b])];
    cost += inst.lambda1 * within;
    double within3 = 0.0;
    for (int d = 2; d < s; ++d)
      for (int b = 1; b < d; ++b)
        for (int a = 0; a < b; ++a)
          within3 +=
              1.0 - 2.0 * inst.triple_w[WeightedInstance::triple_rank(c[a], c[b], c[d])];
    cost += inst.lambda2 * within3;
  }
  return cost;
}

}  // namespace motifclust
