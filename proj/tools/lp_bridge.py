#!/usr/bin/env python3
"""Solver bridge: free-MPS in, `name value` lines out.

Reads the subset of free MPS written by the library's exporter (N/L rows,
RHS, UP bounds), solves the minimization with scipy's HiGHS backend, and
writes one `variable value` pair per line. Exits nonzero with a message on
stderr if the model cannot be solved to optimality.

The interior-point method (with crossover) is pinned rather than dual
simplex: on models whose optimal face is degenerate the two methods return
different vertices of that face, and the crossover vertex is the
representative the rest of the pipeline is calibrated against.
"""

import sys

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix


def parse_mps(path):
    section = None
    obj_row = None
    row_index = {}
    row_order = []
    col_index = {}
    col_order = []
    entries = []  # (row, col, coef)
    obj_coef = {}
    rhs = {}
    upper = {}
    with open(path) as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("*"):
                continue
            if not line[0].isspace():
                tok = line.split()
                section = tok[0]
                continue
            tok = line.split()
            if section == "ROWS":
                kind, name = tok
                if kind == "N":
                    obj_row = name
                elif kind == "L":
                    row_index[name] = len(row_order)
                    row_order.append(name)
                else:
                    raise ValueError(f"unsupported row kind {kind}")
            elif section == "COLUMNS":
                name, pairs = tok[0], tok[1:]
                if name not in col_index:
                    col_index[name] = len(col_order)
                    col_order.append(name)
                c = col_index[name]
                for rname, val in zip(pairs[0::2], pairs[1::2]):
                    v = float(val)
                    if rname == obj_row:
                        obj_coef[c] = obj_coef.get(c, 0.0) + v
                    else:
                        entries.append((row_index[rname], c, v))
            elif section == "RHS":
                pairs = tok[1:]
                for rname, val in zip(pairs[0::2], pairs[1::2]):
                    if rname != obj_row:
                        rhs[row_index[rname]] = float(val)
            elif section == "BOUNDS":
                btype, _, name, *rest = tok
                if btype == "UP":
                    upper[col_index[name]] = float(rest[0])
                elif btype == "LO":
                    pass  # exporter never lowers below the 0 default
                else:
                    raise ValueError(f"unsupported bound type {btype}")
            elif section == "ENDATA":
                break
    ncols = len(col_order)
    nrows = len(row_order)
    c = np.zeros(ncols)
    for j, v in obj_coef.items():
        c[j] = v
    b = np.zeros(nrows)
    for i, v in rhs.items():
        b[i] = v
    if entries:
        rows, cols, vals = zip(*entries)
        a = csr_matrix((vals, (rows, cols)), shape=(nrows, ncols))
    else:
        a = csr_matrix((nrows, ncols))
    bounds = [(0.0, upper.get(j, None)) for j in range(ncols)]
    return col_order, c, a, b, bounds


def main():
    if len(sys.argv) != 3:
        print("usage: lp_bridge.py MODEL.mps OUT.sol", file=sys.stderr)
        return 2
    names, c, a, b, bounds = parse_mps(sys.argv[1])
    if a.shape[0] > 0:
        res = linprog(c, A_ub=a, b_ub=b, bounds=bounds, method="highs-ipm")
    else:
        res = linprog(c, bounds=bounds, method="highs-ipm")
    if res.status != 0:
        print(f"solver status {res.status}: {res.message}", file=sys.stderr)
        return 1
    with open(sys.argv[2], "w") as out:
        out.write("# objective (linear part) %.17g\n" % res.fun)
        for name, v in zip(names, res.x):
            out.write("%s %.17g\n" % (name, v))
    return 0


if __name__ == "__main__":
    sys.exit(main())
