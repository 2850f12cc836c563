"""LP kernel against a brute-force vertex-enumeration oracle."""

from itertools import combinations

import numpy as np

from homext.simplex import linprog, lp_feasible, solve_standard


def vertex_oracle(c, A_ub, b_ub):
    """min c.x over {x >= 0, A_ub x <= b_ub} by enumerating basic points."""
    c = np.asarray(c, float)
    A = np.vstack([np.asarray(A_ub, float), -np.eye(c.size)])
    b = np.concatenate([np.asarray(b_ub, float), np.zeros(c.size)])
    n = c.size
    best = None
    for rows in combinations(range(A.shape[0]), n):
        M = A[list(rows)]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x = np.linalg.solve(M, b[list(rows)])
        if np.all(A @ x <= b + 1e-9):
            v = c @ x
            if best is None or v < best:
                best = v
    return best


def test_against_vertex_oracle_random():
    rng = np.random.default_rng(0)
    for _ in range(40):
        n, m = 3, 5
        A = rng.normal(size=(m, n))
        b = rng.uniform(0.5, 2.0, size=m)     # origin feasible
        c = rng.normal(size=n)
        res = linprog(c, A_ub=A, b_ub=b)
        oracle = vertex_oracle(c, A, b)
        if oracle is None:
            assert res.status != "optimal" or res.objective < -1e8
        elif np.isfinite(oracle):
            # unbounded detection: oracle over vertices only matches when bounded
            if res.status == "optimal":
                assert res.objective <= oracle + 1e-7
                assert np.all(A @ res.x <= b + 1e-7) and np.all(res.x >= -1e-9)


def test_standard_form_small():
    # min -x1 - 2 x2 s.t. x1 + x2 + s = 4, x1 + 3 x2 + t = 6
    A = np.array([[1, 1, 1, 0], [1, 3, 0, 1]], float)
    b = np.array([4, 6], float)
    c = np.array([-1, -2, 0, 0], float)
    res = solve_standard(c, A, b)
    assert res.status == "optimal"
    assert np.isclose(res.objective, -5.0)   # x = (3, 1)


def test_infeasible():
    res = linprog([1.0], A_ub=[[1.0], [-1.0]], b_ub=[1.0, -3.0])
    assert res.status == "infeasible"
    assert not lp_feasible([[1.0], [-1.0]], [1.0, -3.0])


def test_unbounded():
    res = linprog([-1.0], A_ub=[[-1.0]], b_ub=[0.0])
    assert res.status == "unbounded"


def test_free_and_box_bounds():
    # min x + y with x free in [-2, 5], y in [1, 3], x + y >= 0
    res = linprog([1.0, 1.0], A_ub=[[-1.0, -1.0]], b_ub=[0.0],
                  bounds=[(-2.0, 5.0), (1.0, 3.0)])
    assert res.status == "optimal"
    assert np.isclose(res.objective, 0.0)
    assert np.isclose(res.x[0] + res.x[1], 0.0)


def test_equality_rows():
    # probability vector maximizing first coordinate
    res = linprog([-1.0, 0.0, 0.0], A_eq=[[1.0, 1.0, 1.0]], b_eq=[1.0])
    assert res.status == "optimal"
    assert np.isclose(res.x[0], 1.0)


def test_degenerate_cycling_guard():
    # classic Beale-style degeneracy; Bland's rule must terminate
    c = np.array([-0.75, 150, -0.02, 6, 0, 0, 0], float)
    A = np.array([
        [0.25, -60, -0.04, 9, 1, 0, 0],
        [0.5, -90, -0.02, 3, 0, 1, 0],
        [0.0, 0, 1.0, 0, 0, 0, 1],
    ], float)
    b = np.array([0, 0, 1], float)
    res = solve_standard(c, A, b)
    assert res.status == "optimal"
    assert np.isclose(res.objective, -0.05)
