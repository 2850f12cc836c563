"""Dense two-phase simplex.

Small, deterministic LP kernel for the residual programs, saddle-point
bisections and quotient-norm evaluations.  Problems here have at most a
few hundred nonzeros, so a dense tableau is the simplest reliable choice.

Pricing is Dantzig's rule with ties broken by column index and the ratio
test prefers the largest pivot element; after a long stall the iteration
switches to Bland's rule, which cannot cycle.  Every reported optimum is
validated against the original data and re-solved in pure Bland mode if
the validation fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

FEAS_TOL = 1e-9
PIVOT_TOL = 1e-9
STALL_LIMIT = 200


@dataclass
class LPResult:
    status: str          # "optimal" | "infeasible" | "unbounded"
    x: Optional[np.ndarray]
    objective: Optional[float]


def _pivot(T, basis, row, col):
    T[row] /= T[row, col]
    piv = T[row]
    for r in range(T.shape[0]):
        if r != row and T[r, col] != 0.0:
            T[r] -= T[r, col] * piv
    basis[row] = col


def _iterate(T, basis, ncols, bland: bool):
    """Minimize the last tableau row over columns < ncols."""
    m = T.shape[0] - 1
    steps = 0
    use_bland = bland
    while True:
        steps += 1
        if steps > STALL_LIMIT:
            use_bland = True
        if steps > 100000:
            return "stalled"
        col = -1
        if use_bland:
            for j in range(ncols):
                if T[m, j] < -PIVOT_TOL:
                    col = j
                    break
        else:
            j = int(np.argmin(T[m, :ncols]))
            if T[m, j] < -PIVOT_TOL:
                col = j
        if col < 0:
            return "optimal"
        row = -1
        best = np.inf
        best_piv = 0.0
        for i in range(m):
            a = T[i, col]
            if a > PIVOT_TOL:
                ratio = T[i, -1] / a
                better = ratio < best - 1e-12
                tie = abs(ratio - best) <= 1e-12
                if better or (tie and not use_bland and a > best_piv) \
                        or (tie and use_bland and (row < 0 or basis[i] < basis[row])):
                    best, row, best_piv = ratio, i, a
        if row < 0:
            return "unbounded"
        _pivot(T, basis, row, col)


def _solve_standard_once(c, A, b, bland: bool) -> LPResult:
    m, n = A.shape
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    basis = list(range(n, n + m))
    T[m, :n] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    status = _iterate(T, basis, n + m, bland)
    if status != "optimal" or -T[m, -1] > FEAS_TOL:
        return LPResult("infeasible", None, None)

    for i in range(m):          # drive artificials out of the basis
        if basis[i] >= n:
            for j in range(n):
                if abs(T[i, j]) > 1e-7:
                    _pivot(T, basis, i, j)
                    break

    keep = [i for i in range(m) if basis[i] < n]
    T2 = np.zeros((len(keep) + 1, n + 1))
    T2[:len(keep), :n] = T[keep][:, :n]
    T2[:len(keep), -1] = T[keep][:, -1]
    basis2 = [basis[i] for i in keep]
    T2[-1, :n] = c
    for i, bi in enumerate(basis2):
        T2[-1] -= T2[-1, bi] * T2[i]
    status = _iterate(T2, basis2, n, bland)
    if status == "stalled":
        return LPResult("infeasible", None, None)
    if status != "optimal":
        return LPResult(status, None, None)
    x = np.zeros(n)
    for i, bi in enumerate(basis2):
        x[bi] = T2[i, -1]
    return LPResult("optimal", x, float(c @ x))


def solve_standard(c, A, b) -> LPResult:
    """min c.x  s.t.  A x = b, x >= 0.

    Rows are equilibrated, the solve is validated against the original
    data, and an invalid solve is repeated with Bland's rule throughout.
    """
    A = np.asarray(A, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    c = np.asarray(c, dtype=float)
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1
    scale = np.maximum(np.abs(A).max(axis=1), np.abs(b))
    scale[scale == 0] = 1.0
    As = A / scale[:, None]
    bs = b / scale

    atol = max(1.0, np.abs(b).max())
    for bland in (False, True):
        res = _solve_standard_once(c, As, bs, bland)
        if res.status != "optimal":
            if res.status == "unbounded":
                return res
            continue
        if np.all(res.x >= -1e-9) and \
                np.max(np.abs(A @ res.x - b)) <= 1e-7 * atol:
            return res
    return LPResult("infeasible", None, None)


def linprog(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None,
            bounds: Optional[Sequence[tuple]] = None) -> LPResult:
    """min c.x with optional inequality rows, equality rows and box bounds.

    ``bounds`` entries are (lo, hi); None means unbounded on that side.
    Default bound is (0, None).  Converted to standard form internally.
    """
    c = np.asarray(c, dtype=float)
    n = c.size
    A_ub = np.zeros((0, n)) if A_ub is None else np.asarray(A_ub, dtype=float).reshape(-1, n)
    b_ub = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=float).ravel()
    A_eq = np.zeros((0, n)) if A_eq is None else np.asarray(A_eq, dtype=float).reshape(-1, n)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float).ravel()
    if bounds is None:
        bounds = [(0.0, None)] * n

    # x_j = lo_j + u_j (lo finite) or u_j - v_j (free); finite hi adds a row
    cols = []
    std_cols = 0
    extra_ub_rows = []
    shift = np.zeros(n)
    for j, (lo, hi) in enumerate(bounds):
        if lo is None:
            cols.append(("free", std_cols, std_cols + 1))
            std_cols += 2
            if hi is not None:
                extra_ub_rows.append((j, hi))
        else:
            cols.append(("shift", lo, std_cols))
            std_cols += 1
            shift[j] = lo
            if hi is not None:
                extra_ub_rows.append((j, hi))

    def expand_row(row):
        out = np.zeros(std_cols)
        for j, spec in enumerate(cols):
            if spec[0] == "shift":
                out[spec[2]] = row[j]
            else:
                out[spec[1]] = row[j]
                out[spec[2]] = -row[j]
        return out

    rows, rhs, n_slack = [], [], 0
    for i in range(A_ub.shape[0]):
        rows.append(expand_row(A_ub[i]))
        rhs.append(b_ub[i] - A_ub[i] @ shift)
        n_slack += 1
    for (j, hi) in extra_ub_rows:
        e = np.zeros(n)
        e[j] = 1.0
        rows.append(expand_row(e))
        rhs.append(hi - shift[j])
        n_slack += 1
    for i in range(A_eq.shape[0]):
        rows.append(expand_row(A_eq[i]))
        rhs.append(b_eq[i] - A_eq[i] @ shift)

    m = len(rows)
    A = np.zeros((m, std_cols + n_slack))
    for i, r in enumerate(rows):
        A[i, :std_cols] = r
    for i in range(n_slack):
        A[i, std_cols + i] = 1.0
    cc = np.zeros(std_cols + n_slack)
    cc[:std_cols] = expand_row(c)

    res = solve_standard(cc, A, np.asarray(rhs))
    if res.status != "optimal":
        return res
    x = np.zeros(n)
    for j, spec in enumerate(cols):
        if spec[0] == "shift":
            x[j] = spec[1] + res.x[spec[2]]
        else:
            x[j] = res.x[spec[1]] - res.x[spec[2]]
    return LPResult("optimal", x, float(c @ x))


def lp_feasible(A_ub, b_ub, A_eq=None, b_eq=None, bounds=None) -> bool:
    n = np.asarray(A_ub if A_ub is not None else A_eq).shape[1]
    res = linprog(np.zeros(n), A_ub, b_ub, A_eq, b_eq, bounds)
    return res.status == "optimal"
