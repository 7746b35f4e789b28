#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motifclust/graph.hpp"
#include "motifclust/instance.hpp"
#include "motifclust/lp.hpp"
#include "motifclust/simplex.hpp"

namespace motifclust {

struct LpSolution {
  int n = 0;
  int num_pair_vars = 0;
  std::vector<double> x;
  double objective = 0.0;   // always recomputed from the model
  std::string source;       // "embedded" or "external"
  long iterations = 0;      // embedded only

  double pair_value(int u, int v) const {
    return u < v ? x[WeightedInstance::pair_rank(u, v)]
                 : x[WeightedInstance::pair_rank(v, u)];
  }
};

// Region growing on the pair distances. Pick a pivot u among the active
// vertices, collect N = {v : x_uv <= alpha}; if the average distance inside N
// exceeds beta*alpha the pivot leaves alone, otherwise {u} + N becomes a
// cluster. Repeats while 3+ vertices remain; stragglers become singletons.
// alpha = beta = 1/3 gives the 9x approximation guarantee (lambda1=lambda2).
struct RoundingParams {
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  enum class Pivot { ascending, random } pivot = Pivot::ascending;
  uint64_t seed = 0;
};

Partition round_solution(const LpSolution& sol, const RoundingParams& params = {});

enum class LpRoute { automatic, embedded, external };

LpSolution solve_lp_embedded(const LpModel& model, const SimplexOptions& opt = {});

// Exports MPS, runs the solver bridge (python3), imports the solution, and
// re-checks every constraint within feas_tol. bridge_path empty means
// $MOTIFCLUST_LP_BRIDGE.
LpSolution solve_lp_external(const LpModel& model, const std::string& bridge_path = {},
                             double feas_tol = 1e-7);

// automatic: embedded when the tableau fits its byte budget, else external.
LpSolution solve_lp(const LpModel& model, LpRoute route = LpRoute::automatic,
                    const std::string& bridge_path = {}, const SimplexOptions& opt = {},
                    double feas_tol = 1e-7);

struct ClusterOptions {
  WeightConfig weights{};
  RoundingParams rounding{};
  LpRoute route = LpRoute::automatic;
  std::string bridge_path;
  SimplexOptions simplex{};
  double feas_tol = 1e-7;
  BuildOptions build{};
};

struct ClusterResult {
  Partition partition;       // canonical labels
  double lp_objective = 0.0;
  double rounded_cost = 0.0;
  std::string lp_source;
  long lp_iterations = 0;
};

ClusterResult cluster_mmcc(const Graph& g, const ClusterOptions& opt = {});

}  // namespace motifclust
