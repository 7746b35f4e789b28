#include "motifclust/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "motifclust/errors.hpp"
#include "motifclust/simd.hpp"

namespace motifclust {

SimplexResult solve_simplex(const LpModel& model, const SimplexOptions& opt) {
  const int nstruct = model.num_vars();
  const int nrows = model.num_rows();
  const int ncols = nstruct + nrows;  // structurals then slacks
  const auto& ops = simd::ops();

  const std::size_t bytes =
      (static_cast<std::size_t>(nrows) + 1) * static_cast<std::size_t>(ncols) * sizeof(double);
  if (bytes > opt.max_tableau_bytes)
    throw ResourceLimitError("simplex tableau would need " + std::to_string(bytes >> 20) +
                             " MiB (budget " + std::to_string(opt.max_tableau_bytes >> 20) +
                             " MiB); use the external LP route");

  std::vector<double> tab(static_cast<std::size_t>(nrows) * ncols, 0.0);
  auto row = [&tab, ncols](int r) { return tab.data() + static_cast<std::size_t>(r) * ncols; };
  std::vector<double> z(ncols, 0.0);       // reduced costs
  std::vector<double> xb(nrows);           // basic variable values
  std::vector<int> basis(nrows);
  std::vector<char> in_basis(ncols, 0), at_upper(ncols, 0);

  for (int r = 0; r < nrows; ++r) {
    if (model.rhs[r] < 0.0)
      throw SolverError("embedded simplex expects nonnegative rhs rows");
    double* tr = row(r);
    for (int e = model.row_offset[r]; e < model.row_offset[r + 1]; ++e)
      tr[model.col[e]] = model.coef[e];
    tr[nstruct + r] = 1.0;
    basis[r] = nstruct + r;
    in_basis[nstruct + r] = 1;
    xb[r] = model.rhs[r];
  }
  for (int q = 0; q < nstruct; ++q) z[q] = model.obj[q];

  auto upper_of = [nstruct](int q) {
    return q < nstruct ? 1.0 : std::numeric_limits<double>::infinity();
  };

  const double tol = opt.tol;
  long iters = 0;
  int degen_streak = 0;
  bool bland = false;

  while (iters < opt.max_iters) {
    // pricing
    int q = -1, dir = 0;
    if (!bland) {
      double best = tol;
      for (int c = 0; c < ncols; ++c) {
        if (in_basis[c]) continue;
        if (!at_upper[c] && -z[c] > best) {
          best = -z[c];
          q = c;
          dir = 1;
        } else if (at_upper[c] && z[c] > best) {
          best = z[c];
          q = c;
          dir = -1;
        }
      }
    } else {
      for (int c = 0; c < ncols; ++c) {
        if (in_basis[c]) continue;
        if (!at_upper[c] && z[c] < -tol) {
          q = c;
          dir = 1;
          break;
        }
        if (at_upper[c] && z[c] > tol) {
          q = c;
          dir = -1;
          break;
        }
      }
    }
    if (q < 0) break;  // optimal

    // ratio test: how far can the entering variable move from its bound
    double limit = upper_of(q);  // bound flip
    int pivot_row = -1;
    for (int r = 0; r < nrows; ++r) {
      double a = dir * row(r)[q];
      double cand;
      if (a > tol) {
        cand = xb[r] / a;
      } else if (a < -tol) {
        double up = upper_of(basis[r]);
        if (std::isinf(up)) continue;
        cand = (up - xb[r]) / (-a);
      } else {
        continue;
      }
      if (cand < limit - 1e-12 ||
          (cand < limit + 1e-12 && pivot_row >= 0 && basis[r] < basis[pivot_row])) {
        limit = cand;
        pivot_row = r;
      }
    }
    if (std::isinf(limit)) throw SolverError("LP is unbounded");
    if (limit < 0) limit = 0;

    ++iters;
    degen_streak = limit <= 1e-12 ? degen_streak + 1 : 0;
    if (degen_streak > opt.bland_trigger) bland = true;

    if (pivot_row < 0) {
      // bound flip: entering moves across [0,1] without leaving nonbasic
      for (int r = 0; r < nrows; ++r) xb[r] -= dir * limit * row(r)[q];
      at_upper[q] = static_cast<char>(!at_upper[q]);
      continue;
    }

    // basis change
    const int leaving = basis[pivot_row];
    const double a_rq = dir * row(pivot_row)[q];
    at_upper[leaving] = static_cast<char>(a_rq < 0);  // hit upper bound if moving up

    for (int r = 0; r < nrows; ++r)
      if (r != pivot_row) xb[r] -= dir * limit * row(r)[q];
    const double enter_val = (at_upper[q] ? 1.0 : 0.0) + dir * limit;

    double* pr = row(pivot_row);
    const double piv = pr[q];
    ops.dscal(pr, 1.0 / piv, ncols);
    pr[q] = 1.0;
    for (int r = 0; r < nrows; ++r) {
      if (r == pivot_row) continue;
      double* tr = row(r);
      const double f = tr[q];
      if (f != 0.0) {
        ops.daxpy(tr, pr, -f, ncols);
        tr[q] = 0.0;
      }
    }
    const double fz = z[q];
    if (fz != 0.0) {
      ops.daxpy(z.data(), pr, -fz, ncols);
      z[q] = 0.0;
    }

    in_basis[leaving] = 0;
    in_basis[q] = 1;
    at_upper[q] = 0;
    basis[pivot_row] = q;
    xb[pivot_row] = enter_val;
  }

  SimplexResult res;
  res.iterations = iters;
  res.x.assign(nstruct, 0.0);
  for (int c = 0; c < nstruct; ++c)
    if (!in_basis[c] && at_upper[c]) res.x[c] = 1.0;
  for (int r = 0; r < nrows; ++r)
    if (basis[r] < nstruct) res.x[basis[r]] = xb[r];
  res.objective = lp_objective(model, res.x);
  res.status = iters >= opt.max_iters ? SolveStatus::iteration_limit : SolveStatus::optimal;
  return res;
}

}  // namespace motifclust
