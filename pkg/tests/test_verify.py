"""Harness internals: the two-block minimax engine against brute force,
ratio conventions, report determinism, and suite smoke runs."""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from homext import verify
from homext.setfn import SetTupleFunction, mask_members, popcount
from homext.structures import WeightedGraph


def test_ratio_convention():
    assert verify.ratio_value(3, 2) == 1.5
    assert verify.ratio_value(1, 0) == np.inf
    assert verify.ratio_value(-1, 0) == -np.inf
    assert verify.ratio_value(0, 0) is None


def test_discrete_minimax_p3_instance():
    g = WeightedGraph.path(3)
    f = g.ordered_edge_count()
    gfun = SetTupleFunction(3, 2, lambda a, b: Fraction(popcount(a & b)))
    mm, mx = verify.discrete_minimax(f, gfun)
    assert mm == 2 and mx == 1


def test_engine_game_value_vs_lp():
    rng = np.random.default_rng(0)
    for _ in range(8):
        n, m = 3, 3
        C = rng.integers(-3, 4, size=(n, m)).astype(float)
        fv = [[sum(C[i, j] for i in mask_members(a) for j in mask_members(b))
               for b in range(1 << m)] for a in range(1 << n)]
        gv = [[popcount(a) * popcount(b) for b in range(1 << m)]
              for a in range(1 << n)]
        eng = verify.TwoBlockMinimax.from_tables(fv, gv, n, m)
        v = verify.game_lp_value(C)
        assert abs(eng.infsup() - v) < 1e-8
        assert abs(eng.supinf() - v) < 1e-8


def test_engine_infsup_dominates_supinf():
    rng = np.random.default_rng(1)
    for _ in range(6):
        n = 3
        fv = [[float(rng.integers(-4, 5)) if a and b else 0.0
               for b in range(1 << n)] for a in range(1 << n)]
        gv = [[float(rng.integers(1, 5)) if a and b else 0.0
               for b in range(1 << n)] for a in range(1 << n)]
        eng = verify.TwoBlockMinimax.from_tables(fv, gv, n, n)
        assert eng.infsup() >= eng.supinf() - 1e-8


def test_engine_sandwiched_by_discrete():
    # maximin <= continuous values <= minimax, from the transfer chain
    rng = np.random.default_rng(2)
    for _ in range(5):
        n = 3
        vals_f = {}
        vals_g = {}
        for a in range(1 << n):
            for b in range(1 << n):
                vals_f[(a, b)] = Fraction(int(rng.integers(0, 7))) if a and b else Fraction(0)
                vals_g[(a, b)] = Fraction(int(rng.integers(1, 5))) if a and b else Fraction(0)
        f = SetTupleFunction(n, 2, vals_f)
        g = SetTupleFunction(n, 2, vals_g)
        rep = verify.check_saddle_transfer(f, g)
        assert rep.verdict == "pass", rep.to_dict()


def test_engine_brute_force_cross_check():
    # n = 2 blocks: the continuous minimax against a dense grid bound
    rng = np.random.default_rng(3)
    n = 2
    vals_f = {(a, b): Fraction(int(rng.integers(0, 5))) if a and b else Fraction(0)
              for a in range(4) for b in range(4)}
    vals_g = {(a, b): Fraction(int(rng.integers(1, 4))) if a and b else Fraction(0)
              for a in range(4) for b in range(4)}
    f = SetTupleFunction(n, 2, vals_f)
    g = SetTupleFunction(n, 2, vals_g)
    eng = verify.TwoBlockMinimax(f, g)
    cis = eng.infsup()
    from homext import extend
    inds = [[float((b >> i) & 1) for i in range(n)] for b in range(4)]
    # upper bound: min over grid x of max over indicator B
    best = np.inf
    for t in np.linspace(0, 1, 41):
        x = [t, 1 - t]
        worst = -np.inf
        for b in range(1, 4):
            gv = float(extend.multilinear(g, [x, inds[b]]))
            fv = float(extend.multilinear(f, [x, inds[b]]))
            r = verify.ratio_value(fv, gv)
            if r is not None:
                worst = max(worst, r)
        best = min(best, worst)
    assert cis <= best + 1e-8


def test_check_sion_skips_bad_structure():
    n = 3
    f = SetTupleFunction(n, 2, lambda a, b: Fraction(popcount(a) ** 2 * popcount(b)) if a and b else Fraction(0))
    g = SetTupleFunction(n, 2, lambda a, b: Fraction(popcount(a) * popcount(b)))
    rep = verify.check_sion_case(f, g)
    assert rep.verdict == "skip"


def test_reports_deterministic_across_runs():
    a = [r.to_dict() for r in verify.suite_turan(seed=5, instances=2, samples=40)]
    b = [r.to_dict() for r in verify.suite_turan(seed=5, instances=2, samples=40)]
    for ra, rb in zip(a, b):
        ra.pop("runtime")
        rb.pop("runtime")
    assert a == b


def test_reports_change_with_seed():
    a = verify.suite_turan(seed=5, instances=1, samples=30)[0]
    b = verify.suite_turan(seed=6, instances=1, samples=30)[0]
    assert a.lhs != b.lhs or a.rhs != b.rhs


def test_report_to_dict_serializes():
    import json
    reps = verify.suite_k5()
    payload = json.dumps([r.to_dict() for r in reps])
    assert "k5-ternary-spectrum" in payload


def test_check_indicator_and_equalities_families():
    rng = np.random.default_rng(4)
    f = verify.rand_table(rng, 3, 2, lo=0, hi=9)
    g = verify.rand_table(rng, 3, 2, lo=1, hi=9)
    for fam in ("full", "chain", "diagonal"):
        rep = verify.check_indicator_and_equalities(f, g, family=fam,
                                                    samples=60, seed=4)
        assert rep.verdict == "pass", (fam, rep.to_dict())


def test_quasiconcave_equal_arguments_quarter():
    f1 = verify.rand_table(np.random.default_rng(5), 3, 1, lo=1, hi=9)
    rep = verify.check_quasiconcave_composition([f1, f1], kind="product",
                                                samples=50, seed=5)
    assert rep.verdict == "pass"
    assert abs(float(rep.lhs) - 0.25) < 1e-12


def test_run_inequality_suites_selector():
    reps = verify.run_inequality_suites("k5")
    assert all(r.verdict == "pass" for r in reps)
    with pytest.raises(KeyError):
        verify.run_inequality_suites("not-a-suite")


def test_suite_registry_complete():
    expected = {"indicator", "tables", "turan", "saddle", "sion",
                "quasiconcave", "spectral-radius", "cheeger-graph",
                "cheeger-chemical", "nodal-inertia", "bipartite",
                "simplicial-identity", "huang", "k5", "collatz-wielandt",
                "duality", "dual-inner", "maxcut", "second-eigen"}
    assert expected == set(verify.SUITES)


def test_generators_deterministic():
    g1 = verify.rand_connected_graph(verify._rng(7, "x"))
    g2 = verify.rand_connected_graph(verify._rng(7, "x"))
    assert np.array_equal(g1.W, g2.W)
    k1 = verify.rand_two_complex(verify._rng(7, "y"))
    k2 = verify.rand_two_complex(verify._rng(7, "y"))
    assert k1.simplices == k2.simplices
