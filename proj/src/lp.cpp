#include "motifclust/lp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "motifclust/errors.hpp"

namespace motifclust {

std::string fmt_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

namespace {

// colex unrank of a triple: inverse of WeightedInstance::triple_rank
void triple_unrank(std::size_t rank, int& i, int& j, int& k) {
  k = 2;
  while (static_cast<std::size_t>(k + 1) * k * (k - 1) / 6 <= rank) ++k;
  rank -= static_cast<std::size_t>(k) * (k - 1) * (k - 2) / 6;
  j = 1;
  while (static_cast<std::size_t>(j + 1) * j / 2 <= rank) ++j;
  i = static_cast<int>(rank - static_cast<std::size_t>(j) * (j - 1) / 2);
}

void pair_unrank(std::size_t rank, int& i, int& j) {
  j = 1;
  while (static_cast<std::size_t>(j + 1) * j / 2 <= rank) ++j;
  i = static_cast<int>(rank - static_cast<std::size_t>(j) * (j - 1) / 2);
}

}  // namespace

std::string LpModel::var_name(int idx) const {
  if (idx < num_pair_vars) {
    int i, j;
    pair_unrank(idx, i, j);
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
  }
  int i, j, k;
  triple_unrank(idx - num_pair_vars, i, j, k);
  return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string LpModel::row_name(int r) const {
  // rows come in fixed blocks of 8 per triple
  int t = r / 8, sub = r % 8;
  int i, j, k;
  triple_unrank(t, i, j, k);
  std::string stem =
      "_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "_";
  if (sub < 3) return "a" + stem + std::to_string(sub);
  if (sub < 5) return "b" + stem + std::to_string(sub - 3);
  return "c" + stem + std::to_string(sub - 5);
}

LpModel build_lp(const WeightedInstance& inst) {
  LpModel m;
  m.n = inst.n;
  m.num_pair_vars = static_cast<int>(inst.pair_w.size());
  m.num_triple_vars = static_cast<int>(inst.triple_w.size());

  m.obj.resize(m.num_vars());
  for (int q = 0; q < m.num_pair_vars; ++q) {
    double w = inst.pair_w[q];
    m.obj[q] = inst.lambda1 * (2.0 * w - 1.0);
    m.obj_const += inst.lambda1 * (1.0 - w);
  }
  for (int t = 0; t < m.num_triple_vars; ++t) {
    double w = inst.triple_w[t];
    m.obj[m.num_pair_vars + t] = inst.lambda2 * (2.0 * w - 1.0);
    m.obj_const += inst.lambda2 * (1.0 - w);
  }

  const int n = inst.n;
  m.row_offset.push_back(0);
  auto add_row = [&m](char kind, std::initializer_list<std::pair<int, double>> entries,
                      double rhs) {
    for (auto [c, v] : entries) {
      m.col.push_back(c);
      m.coef.push_back(v);
    }
    m.row_offset.push_back(static_cast<int>(m.col.size()));
    m.rhs.push_back(rhs);
    m.kind.push_back(kind);
  };

  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        int T = m.num_pair_vars +
                static_cast<int>(WeightedInstance::triple_rank(i, j, k));
        int eij = static_cast<int>(WeightedInstance::pair_rank(i, j));
        int eik = static_cast<int>(WeightedInstance::pair_rank(i, k));
        int ejk = static_cast<int>(WeightedInstance::pair_rank(j, k));
        add_row('a', {{eij, 1.0}, {T, -1.0}}, 0.0);
        add_row('a', {{eik, 1.0}, {T, -1.0}}, 0.0);
        add_row('a', {{ejk, 1.0}, {T, -1.0}}, 0.0);
        add_row('b', {{T, 1.0}, {eij, -0.5}, {eik, -0.5}, {ejk, -0.5}}, 0.0);
        add_row('u', {{T, 1.0}}, 1.0);
        add_row('c', {{ejk, 1.0}, {eij, -1.0}, {eik, -1.0}}, 0.0);
        add_row('c', {{eik, 1.0}, {eij, -1.0}, {ejk, -1.0}}, 0.0);
        add_row('c', {{eij, 1.0}, {eik, -1.0}, {ejk, -1.0}}, 0.0);
      }
    }
  }
  return m;
}

double lp_objective(const LpModel& model, const std::vector<double>& x) {
  double s = model.obj_const;
  for (int q = 0; q < model.num_vars(); ++q) s += model.obj[q] * x[q];
  return s;
}

FeasibilityReport check_feasibility(const LpModel& model, const std::vector<double>& x) {
  FeasibilityReport rep;
  for (int q = 0; q < model.num_vars(); ++q) {
    double viol = std::max(-x[q], x[q] - 1.0);
    if (viol > rep.max_violation) {
      rep.max_violation = viol;
      rep.worst = "bound on " + model.var_name(q);
    }
  }
  for (int r = 0; r < model.num_rows(); ++r) {
    double act = 0.0;
    for (int e = model.row_offset[r]; e < model.row_offset[r + 1]; ++e)
      act += model.coef[e] * x[model.col[e]];
    double viol = act - model.rhs[r];
    if (viol > rep.max_violation) {
      rep.max_violation = viol;
      rep.worst = "row " + model.row_name(r);
    }
  }
  return rep;
}

void export_lp_text(const LpModel& model, std::ostream& out) {
  out << "\\ motif clustering linear relaxation, n=" << model.n << "\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int q = 0; q < model.num_vars(); ++q) {
    double c = model.obj[q];
    if (c == 0.0) continue;
    out << (c < 0 ? " - " : (first ? " " : " + ")) << fmt_double(std::fabs(c)) << " "
        << model.var_name(q);
    first = false;
    if (q % 8 == 7) out << "\n    ";
  }
  if (first) out << " 0 " << model.var_name(0);
  out << "\nSubject To\n";
  for (int r = 0; r < model.num_rows(); ++r) {
    out << " " << model.row_name(r) << ":";
    for (int e = model.row_offset[r]; e < model.row_offset[r + 1]; ++e) {
      double c = model.coef[e];
      out << (c < 0 ? " - " : (e == model.row_offset[r] ? " " : " + "))
          << fmt_double(std::fabs(c)) << " " << model.var_name(model.col[e]);
    }
    out << " <= " << fmt_double(model.rhs[r]) << "\n";
  }
  out << "Bounds\n";
  for (int q = 0; q < model.num_vars(); ++q)
    out << " 0 <= " << model.var_name(q) << " <= 1\n";
  out << "End\n";
}

void export_mps(const LpModel& model, std::ostream& out) {
  out << "NAME motifclust_lp\n";
  out << "ROWS\n N obj\n";
  for (int r = 0; r < model.num_rows(); ++r) out << " L " << model.row_name(r) << "\n";
  // transpose rows into per-column entry lists
  std::vector<std::vector<std::pair<int, double>>> col_entries(model.num_vars());
  for (int r = 0; r < model.num_rows(); ++r)
    for (int e = model.row_offset[r]; e < model.row_offset[r + 1]; ++e)
      col_entries[model.col[e]].emplace_back(r, model.coef[e]);
  out << "COLUMNS\n";
  for (int q = 0; q < model.num_vars(); ++q) {
    const std::string name = model.var_name(q);
    out << " " << name << " obj " << fmt_double(model.obj[q]) << "\n";
    for (auto [r, c] : col_entries[q])
      out << " " << name << " " << model.row_name(r) << " " << fmt_double(c) << "\n";
  }
  out << "RHS\n";
  if (model.obj_const != 0.0) out << " rhs obj " << fmt_double(-model.obj_const) << "\n";
  for (int r = 0; r < model.num_rows(); ++r)
    if (model.rhs[r] != 0.0) out << " rhs " << model.row_name(r) << " " << fmt_double(model.rhs[r]) << "\n";
  out << "BOUNDS\n";
  for (int q = 0; q < model.num_vars(); ++q)
    out << " UP bnd " << model.var_name(q) << " 1\n";
  out << "ENDATA\n";
}

std::vector<double> parse_solution(std::istream& in, const LpModel& model) {
  std::map<std::string, int> index;
  for (int q = 0; q < model.num_vars(); ++q) index[model.var_name(q)] = q;
  std::vector<double> x(model.num_vars(), 0.0);
  std::vector<bool> seen(model.num_vars(), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    double value;
    if (!(ls >> value))
      throw ParseError("solution line " + std::to_string(lineno) + ": missing value");
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError("solution line " + std::to_string(lineno) + ": unknown variable '" +
                       name + "'");
    if (seen[it->second])
      throw ParseError("solution line " + std::to_string(lineno) + ": duplicate variable '" +
                       name + "'");
    seen[it->second] = true;
    x[it->second] = value;
  }
  std::size_t missing = 0;
  std::string first_missing;
  for (int q = 0; q < model.num_vars(); ++q) {
    if (!seen[q]) {
      if (missing == 0) first_missing = model.var_name(q);
      ++missing;
    }
  }
  if (missing > 0)
    throw ParseError("solution is missing " + std::to_string(missing) +
                     " variables (first: " + first_missing + ")");
  return x;
}

}  // namespace motifclust
