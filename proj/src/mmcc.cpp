#include "motifclust/mmcc.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motifclust/errors.hpp"
#include "motifclust/rng.hpp"

namespace motifclust {

Partition round_solution(const LpSolution& sol, const RoundingParams& params) {
  if (!(params.alpha > 0.0 && params.alpha < 1.0) ||
      !(params.beta > 0.0 && params.beta < 1.0))
    throw ConfigError("rounding needs alpha, beta in (0,1)");

  Rng rng(params.seed);
  std::vector<int> active(sol.n);
  for (int v = 0; v < sol.n; ++v) active[v] = v;

  Partition p;
  p.label.assign(sol.n, -1);
  int next = 0;
  while (active.size() >= 3) {
    std::size_t ui = params.pivot == RoundingParams::Pivot::random
                         ? static_cast<std::size_t>(rng.below(active.size()))
                         : 0;
    const int u = active[ui];
    std::vector<int> cluster{u};
    double dist_sum = 0.0;
    std::size_t ball = 0;
    for (int v : active) {
      if (v == u) continue;
      double d = sol.pair_value(u, v);
      if (d <= params.alpha) {
        cluster.push_back(v);
        dist_sum += d;
        ++ball;
      }
    }
    if (dist_sum > params.beta * params.alpha * static_cast<double>(ball))
      cluster.assign(1, u);
    for (int v : cluster) p.label[v] = next;
    ++next;
    std::vector<int> rest;
    rest.reserve(active.size());
    for (int v : active)
      if (p.label[v] < 0) rest.push_back(v);
    active.swap(rest);
  }
  for (int v : active) p.label[v] = next++;
  return p;
}

LpSolution solve_lp_embedded(const LpModel& model, const SimplexOptions& opt) {
  SimplexResult r = solve_simplex(model, opt);
  if (r.status != SolveStatus::optimal)
    throw SolverError("embedded simplex hit the iteration limit (" +
                      std::to_string(r.iterations) + "); raise it or use the external route");
  LpSolution sol;
  sol.n = model.n;
  sol.num_pair_vars = model.num_pair_vars;
  sol.x = std::move(r.x);
  sol.objective = r.objective;
  sol.source = "embedded";
  sol.iterations = r.iterations;
  return sol;
}

namespace {

std::filesystem::path fresh_temp_dir() {
  static std::atomic<unsigned> counter{0};
  auto base = std::filesystem::temp_directory_path();
  auto dir = base / ("motifclust-lp-" + std::to_string(::getpid()) + "-" +
                     std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

LpSolution solve_lp_external(const LpModel& model, const std::string& bridge_path,
                             double feas_tol) {
  std::string bridge = bridge_path;
  if (bridge.empty()) {
    const char* env = std::getenv("MOTIFCLUST_LP_BRIDGE");
    if (env == nullptr || *env == '\0')
      throw ConfigError(
          "external LP route needs a solver bridge: pass a path or set MOTIFCLUST_LP_BRIDGE");
    bridge = env;
  }
  if (!std::filesystem::exists(bridge))
    throw ConfigError("LP bridge not found at '" + bridge + "'");

  auto dir = fresh_temp_dir();
  auto mps = dir / "model.mps";
  auto solfile = dir / "model.sol";
  {
    std::ofstream out(mps);
    if (!out) throw SolverError("cannot write " + mps.string());
    export_mps(model, out);
  }
  std::string cmd = "python3 '" + bridge + "' '" + mps.string() + "' '" + solfile.string() +
                    "' >/dev/null";
  int status = std::system(cmd.c_str());
  if (status != 0) {
    std::filesystem::remove_all(dir);
    throw SolverError("LP bridge exited with status " + std::to_string(status));
  }

  LpSolution sol;
  {
    std::ifstream in(solfile);
    if (!in) {
      std::filesystem::remove_all(dir);
      throw SolverError("LP bridge produced no solution file");
    }
    sol.x = parse_solution(in, model);
  }
  if (std::getenv("MOTIFCLUST_KEEP_TMP") == nullptr) std::filesystem::remove_all(dir);

  auto rep = check_feasibility(model, sol.x);
  if (rep.max_violation > feas_tol)
    throw SolverError("external solution violates " + rep.worst + " by " +
                      fmt_double(rep.max_violation));
  sol.n = model.n;
  sol.num_pair_vars = model.num_pair_vars;
  sol.objective = lp_objective(model, sol.x);
  sol.source = "external";
  return sol;
}

LpSolution solve_lp(const LpModel& model, LpRoute route, const std::string& bridge_path,
                    const SimplexOptions& opt, double feas_tol) {
  switch (route) {
    case LpRoute::embedded:
      return solve_lp_embedded(model, opt);
    case LpRoute::external:
      return solve_lp_external(model, bridge_path, feas_tol);
    case LpRoute::automatic:
      break;
  }
  const std::size_t bytes = (static_cast<std::size_t>(model.num_rows()) + 1) *
                            (static_cast<std::size_t>(model.num_vars()) + model.num_rows()) *
                            sizeof(double);
  if (bytes <= opt.max_tableau_bytes) return solve_lp_embedded(model, opt);
  return solve_lp_external(model, bridge_path, feas_tol);
}

ClusterResult cluster_mmcc(const Graph& g, const ClusterOptions& opt) {
  WeightedInstance inst = build_instance(g, opt.weights, opt.build);
  LpModel model = build_lp(inst);
  LpSolution sol = solve_lp(model, opt.route, opt.bridge_path, opt.simplex, opt.feas_tol);
  Partition p = round_solution(sol, opt.rounding);
  p.canonicalize();
  ClusterResult res;
  res.rounded_cost = mmcc_cost(inst, p);
  res.partition = std::move(p);
  res.lp_objective = sol.objective;
  res.lp_source = sol.source;
  res.lp_iterations = sol.iterations;
  return res;
}

}  // namespace motifclust
