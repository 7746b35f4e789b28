#pragma once

#include <cstddef>
#include <vector>

#include "motifclust/lp.hpp"

namespace motifclust {

struct SimplexOptions {
  long max_iters = 500000;
  double tol = 1e-9;
  // Tableau byte budget; larger models must take the external route.
  std::size_t max_tableau_bytes = std::size_t{512} << 20;
  // Consecutive degenerate pivots before switching from Dantzig pricing to
  // Bland's rule (anti-cycling).
  int bland_trigger = 64;
};

enum class SolveStatus { optimal, iteration_limit };

struct SimplexResult {
  SolveStatus status = SolveStatus::iteration_limit;
  std::vector<double> x;  // structural variables
  double objective = 0.0;
  long iterations = 0;
};

// Dense-tableau primal simplex on the model's rows with variable bounds
// [0,1] handled implicitly (no extra rows). The model family always has
// rhs >= 0, so the all-slack basis is feasible and no phase 1 is needed.
SimplexResult solve_simplex(const LpModel& model, const SimplexOptions& opt = {});

}  // namespace motifclust
