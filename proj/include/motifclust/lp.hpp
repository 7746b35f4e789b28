#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "motifclust/instance.hpp"

namespace motifclust {

// Linear relaxation of the clustering objective. Variables are pair
// distances x_ij (colex rank order) followed by triple distances x_ijk, all
// in [0,1]. Rows are "sum a*x <= rhs" and come in four families per triple
// (i,j,k), 8 rows each, grouped per triple in colex order:
//   kind 'a' (3): x_e - x_T <= 0            (triple split if any pair split)
//   kind 'b' (1): x_T - (x_ij+x_ik+x_jk)/2 <= 0
//   kind 'u' (1): x_T <= 1                   (second row of family b)
//   kind 'c' (3): triangle inequality on the three pair distances
struct LpModel {
  int n = 0;
  int num_pair_vars = 0;
  int num_triple_vars = 0;
  std::vector<double> obj;
  double obj_const = 0.0;
  std::vector<int> row_offset;  // size rows+1
  std::vector<int> col;
  std::vector<double> coef;
  std::vector<double> rhs;
  std::vector<char> kind;

  int num_vars() const { return num_pair_vars + num_triple_vars; }
  int num_rows() const { return static_cast<int>(rhs.size()); }
  std::string var_name(int idx) const;  // x_i_j or x_i_j_k
  std::string row_name(int r) const;    // e.g. a_0_1_2_0, b_0_1_2_1, c_0_1_2_2
};

LpModel build_lp(const WeightedInstance& inst);

// Ordered recompute of obj . x + obj_const.
double lp_objective(const LpModel& model, const std::vector<double>& x);

struct FeasibilityReport {
  double max_violation = 0.0;
  std::string worst;  // row or bound description
};
FeasibilityReport check_feasibility(const LpModel& model, const std::vector<double>& x);

// CPLEX-style LP text.
void export_lp_text(const LpModel& model, std::ostream& out);
// Free MPS (readable by mainstream solvers and tools/lp_bridge.py).
void export_mps(const LpModel& model, std::ostream& out);

// One "name value" pair per line, '#' comments allowed. Every variable must
// appear exactly once; names must match the model. Throws ParseError.
std::vector<double> parse_solution(std::istream& in, const LpModel& model);

// Shortest round-trip decimal form, locale-independent.
std::string fmt_double(double v);

}  // namespace motifclust
