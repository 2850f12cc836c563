"""Brute-force combinatorial quantities at desk scale.

Cheeger constants (plain, k-way, dual, chemical, simplicial), maxcut,
independence and clique numbers, level independence numbers, clique
Lagrangians and nodal-domain counts.  Every reported optimum is exact for
the enumerated instance and re-evaluates to the reported value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np

from .setfn import CapExceeded, full_mask, mask_members, mask_of, popcount, submasks
from .simplex import linprog
from .structures import (ChemicalHypergraph, SignedGraph, SimplicialComplex,
                         WeightedGraph)

CHEEGER_CAP = 20
KWAY_CAP = 12
MAXCUT_CAP = 24
SIMPLICIAL_CAP = 14


@dataclass
class CheegerReport:
    value: Fraction | float
    optimal_sets: list
    enumerated: int
    variant: str
    extra: dict = field(default_factory=dict)


def _as_ratio(num, den):
    if den == 0:
        return Fraction(0) if num == 0 else np.inf
    if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
        return Fraction(num, den) if isinstance(num, int) and isinstance(den, int) \
            else Fraction(num) / Fraction(den)
    return num / den


def _int_if_close(v: float):
    r = int(round(v))
    return r if abs(v - r) < 1e-9 else v


def cheeger(g: WeightedGraph) -> CheegerReport:
    """h = min over proper nonempty A of cut(A) / min(vol A, vol A^c)."""
    if g.n > CHEEGER_CAP:
        raise CapExceeded(f"cheeger enumeration capped at n <= {CHEEGER_CAP}")
    if not g.is_connected():
        comp = g.components()[0]
        return CheegerReport(Fraction(0), [comp], 0, "cheeger")
    integral = np.allclose(g.W, np.round(g.W))
    best, arg = None, []
    total = full_mask(g.n)
    count = 0
    for a in range(1, total):
        count += 1
        cut = g.cut_weight(a)
        den = min(g.vol(a), g.vol(total & ~a))
        if integral:
            val = _as_ratio(int(round(cut)), int(round(den)))
        else:
            val = cut / den
        if best is None or val < best:
            best, arg = val, [a]
        elif val == best and len(arg) < 8:
            arg.append(a)
    return CheegerReport(best, arg, count, "cheeger")


def _disjoint_tuples(n: int, k: int, start_mask=0, min_first=0):
    """Canonically ordered families of k disjoint nonempty subsets (each
    family once, blocks sorted by smallest element)."""
    total = full_mask(n)
    def rec(used, k_left, min_elt):
        if k_left == 0:
            yield ()
            return
        avail = total & ~used
        elems = [i for i in mask_members(avail) if i >= min_elt]
        for anchor in elems:
            rest = mask_of([i for i in mask_members(avail) if i > anchor])
            for sub in submasks(rest):
                block = sub | (1 << anchor)
                for tail in rec(used | block, k_left - 1, anchor + 1):
                    yield (block,) + tail
    yield from rec(start_mask, k, min_first)


def k_way_cheeger(g: WeightedGraph, k: int) -> CheegerReport:
    """h_k = min over disjoint nonempty S_1..S_k of max_i cut(S_i)/vol(S_i)."""
    if g.n > KWAY_CAP:
        raise CapExceeded(f"k-way enumeration capped at n <= {KWAY_CAP}")
    if k > g.n:
        raise ValueError("k exceeds the vertex count")
    integral = np.allclose(g.W, np.round(g.W))
    best, arg, count = None, [], 0
    for blocks in _disjoint_tuples(g.n, k):
        count += 1
        worst = None
        for b in blocks:
            cut, den = g.cut_weight(b), g.vol(b)
            val = _as_ratio(int(round(cut)), int(round(den))) if integral else cut / den
            if worst is None or val > worst:
                worst = val
        if best is None or worst < best:
            best, arg = worst, [blocks]
    return CheegerReport(best, arg, count, f"{k}-way")


def dual_cheeger_k(g: WeightedGraph, k: int) -> CheegerReport:
    """h_k^+ = max over disjoint pairs (V_1,V_2),...,(V_{2k-1},V_{2k}) of
    min_i 2 E(V_{2i-1}, V_{2i}) / vol(V_{2i-1} | V_{2i})."""
    if g.n > KWAY_CAP:
        raise CapExceeded(f"k-way enumeration capped at n <= {KWAY_CAP}")
    integral = np.allclose(g.W, np.round(g.W))
    best, arg, count = None, [], 0
    for blocks in _disjoint_tuples(g.n, 2 * k):
        # blocks are canonically ordered; pair them in every way is costly,
        # but pairing consecutive blocks after choosing the family misses
        # pairings, so enumerate pairings of the 2k blocks.
        count += 1
        for pairing in _pairings(list(blocks)):
            worst = None
            for (a, b) in pairing:
                num = 2 * g.edge_weight_between(a, b)
                den = g.vol(a | b)
                val = _as_ratio(int(round(num)), int(round(den))) if integral else num / den
                if worst is None or val < worst:
                    worst = val
            if best is None or worst > best:
                best, arg = worst, [pairing]
    return CheegerReport(best, arg, count, f"{k}-way-dual")


def _pairings(items: list):
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        b = items[i]
        rest = items[1:i] + items[i + 1:]
        for tail in _pairings(rest):
            yield [(a, b)] + tail


@dataclass
class MaxcutReport:
    value: float
    witness: int
    continuous_samples_ok: bool
    indicator_value: float


def maxcut(g: WeightedGraph, samples: int = 200, seed: int = 42) -> MaxcutReport:
    """Exact maxcut over bipartitions, plus the continuous form
    max over x, y >= 0 with x.y = 0 of sum w_ij x_i y_j / (||x||inf ||y||inf):
    sampled values never exceed the cut and the indicator pair attains it."""
    if g.n > MAXCUT_CAP:
        raise CapExceeded(f"maxcut capped at n <= {MAXCUT_CAP}")
    best, arg = -1.0, 0
    for a in range(1 << (g.n - 1)):       # fix vertex n-1 outside
        cut = g.cut_weight(a)
        if cut > best:
            best, arg = cut, a
    rng = np.random.default_rng(seed)
    ok = True
    comp = full_mask(g.n) & ~arg
    for _ in range(samples):
        support = rng.integers(0, 2, size=g.n).astype(bool)
        x = np.where(support, rng.uniform(0.1, 1.0, g.n), 0.0)
        y = np.where(~support, rng.uniform(0.1, 1.0, g.n), 0.0)
        if x.max() == 0 or y.max() == 0:
            continue
        val = float(x @ g.W @ y) / (x.max() * y.max())
        if val > best + 1e-8:
            ok = False
    xw = np.array([(arg >> i) & 1 for i in range(g.n)], dtype=float)
    yw = np.array([(comp >> i) & 1 for i in range(g.n)], dtype=float)
    ind = float(xw @ g.W @ yw)
    return MaxcutReport(best, arg, ok, ind)


# -- independence, cliques, Motzkin-Straus ------------------------------------

def independence_number(g: WeightedGraph) -> tuple[int, int]:
    """(alpha, witness mask) by branch and bound on the adjacency masks."""
    adj = [0] * g.n
    for i, j, _ in g.edges():
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    best = [0, 0]

    def bb(cand: int, chosen: int):
        if popcount(chosen) + popcount(cand) <= best[0]:
            return
        if cand == 0:
            if popcount(chosen) > best[0]:
                best[0] = popcount(chosen)
                best[1] = chosen
            return
        v = cand.bit_length() - 1
        bb(cand & ~(1 << v) & ~adj[v], chosen | (1 << v))   # take v
        bb(cand & ~(1 << v), chosen)                        # skip v
    bb(full_mask(g.n), 0)
    return best[0], best[1]


def clique_number(g: WeightedGraph) -> tuple[int, int]:
    return independence_number(g.complement())


def is_independent(g: WeightedGraph, mask: int) -> bool:
    for i, j, _ in g.edges():
        if (mask >> i) & 1 and (mask >> j) & 1:
            return False
    return True


@dataclass
class MotzkinStrausReport:
    omega: int
    clique_witness: int
    discrete_value: float          # 1 - 1/omega
    ascent_value: float
    ascent_witness: np.ndarray
    max_subset_density: Fraction   # max over A of ordered-pair density


def _replicator_ascent(grad_fn, value_fn, n, starts, seed, iters=400):
    """Multiplicative (Baum-Eagon) updates on the simplex; monotone for
    polynomials with nonnegative coefficients."""
    best, bx = -np.inf, None
    for c, x0 in enumerate(starts):
        x = np.asarray(x0, dtype=float)
        x = x / x.sum()
        for _ in range(iters):
            g = grad_fn(x)
            tot = float(x @ g)
            if tot <= 0:
                break
            xn = x * g / tot
            s = xn.sum()
            if s <= 0:
                break
            xn /= s
            if np.max(np.abs(xn - x)) < 1e-14:
                x = xn
                break
            x = xn
        v = value_fn(x)
        if v > best:
            best, bx = v, x
    return best, bx


def motzkin_straus(g: WeightedGraph, seed: int = 42, starts: int = 16) -> MotzkinStrausReport:
    """max 2 sum_{ij in E} x_i x_j on the simplex vs 1 - 1/omega.

    The ascent start list always contains the uniform point and the
    uniform-on-maximum-clique point, so the best ascent value is pinched
    between the clique value and the global optimum 1 - 1/omega.
    """
    omega, wit = clique_number(g)
    A = (g.W != 0).astype(float)
    rng = np.random.default_rng(seed)
    start_list = [np.ones(g.n)]
    xw = np.array([(wit >> i) & 1 for i in range(g.n)], dtype=float)
    if xw.sum() > 0:
        start_list.append(xw)
    for _ in range(starts):
        start_list.append(rng.uniform(0.05, 1.0, g.n))
    val, bx = _replicator_ascent(lambda x: A @ x, lambda x: float(x @ A @ x),
                                 g.n, start_list, seed)
    best_density = Fraction(0)
    for a in range(1, 1 << g.n):
        e2 = 0
        mem = mask_members(a)
        for i, j in combinations(mem, 2):
            if A[i, j]:
                e2 += 2
        best_density = max(best_density, Fraction(e2, popcount(a) ** 2))
    return MotzkinStrausReport(omega, wit, 1.0 - 1.0 / omega, val, bx, best_density)


def independence_via_ms(g: WeightedGraph, seed: int = 42) -> tuple[int, float]:
    """alpha via the complement Motzkin-Straus value: alpha = 1/(1 - ms)."""
    rep = motzkin_straus(g.complement(), seed=seed)
    alpha = independence_number(g)[0]
    cont = 1.0 / (1.0 - rep.ascent_value)
    return alpha, cont


@dataclass
class LagrangianReport:
    k: int
    discrete_value: Fraction       # max over U of #{edges inside U} / #U^k
    discrete_witness: int
    ascent_value: float
    clique_hypergraph: bool


def hypergraph_lagrangian(n: int, hyperedges: Sequence[Sequence[int]],
                          seed: int = 42, starts: int = 16,
                          clique_hypergraph: bool = False) -> LagrangianReport:
    """Lagrangian sup of sum_{e} prod_{i in e} x_i over the simplex against
    the best subset density; equality is a theorem when the hyperedges are
    all k-cliques of a graph, in general ascent >= subset density."""
    if n > 16:
        raise CapExceeded("lagrangian enumeration capped at n <= 16")
    k = len(hyperedges[0]) if hyperedges else 2
    masks = [mask_of(e) for e in hyperedges]

    best, wit = Fraction(0), 0
    for u in range(1, 1 << n):
        cnt = sum(1 for m in masks if (m & u) == m)
        val = Fraction(cnt, popcount(u) ** k)
        if val > best:
            best, wit = val, u

    edge_lists = [list(e) for e in hyperedges]

    def value(x):
        return float(sum(np.prod(x[e]) for e in edge_lists)) if edge_lists else 0.0

    def grad(x):
        g = np.zeros(n)
        for e in edge_lists:
            pe = np.prod(x[e])
            for i in e:
                g[i] += pe / x[i] if x[i] > 0 else 0.0
        return g

    rng = np.random.default_rng(seed)
    start_list = [np.ones(n),
                  np.array([(wit >> i) & 1 for i in range(n)], dtype=float)]
    for _ in range(starts):
        start_list.append(rng.uniform(0.05, 1.0, n))
    val, _ = _replicator_ascent(grad, value, n, start_list, seed)
    return LagrangianReport(k, best, wit, val, clique_hypergraph)


def clique_hypergraph(g: WeightedGraph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques of a graph as hyperedges."""
    out = []
    for c in combinations(range(g.n), k):
        if all(g.W[i, j] != 0 for i, j in combinations(c, 2)):
            out.append(c)
    return out


# -- level independence numbers ----------------------------------------------

def lambda_level_independence(kind: str, M, level: float, tol: float = 1e-9,
                              block_cap: int = 12) -> int:
    """Largest k with disjoint blocks U_1..U_k such that the ratio of the
    pair is identically ``level`` on span(1_{U_1}, ..., 1_{U_k}).

    ``kind`` = "quadratic": M = A - level*B; the span condition is that
    the form of M vanishes on the span, i.e. all block self- and
    cross-sums of M are zero, so the answer is a maximum clique over
    valid blocks.  ``kind`` = "tensor": (entries, n) of the level-shifted
    form with nonnegative cancellation-free entries; blocks reduce to
    singletons inside the largest entry-free support.
    """
    if kind == "quadratic":
        Mm = np.asarray(M, dtype=float)
        n = Mm.shape[0]
        if n > block_cap:
            raise CapExceeded(f"block search capped at n <= {block_cap}")

        def block_sum(a, b):
            ia = mask_members(a)
            ib = mask_members(b)
            return float(sum(Mm[i, j] for i in ia for j in ib))

        blocks = [u for u in range(1, 1 << n) if abs(block_sum(u, u)) <= tol]
        best = [0]

        def extend_family(chosen, used, start):
            best[0] = max(best[0], len(chosen))
            for idx in range(start, len(blocks)):
                u = blocks[idx]
                if u & used:
                    continue
                if all(abs(block_sum(u, v)) <= tol for v in chosen):
                    extend_family(chosen + [u], used | u, idx + 1)

        extend_family([], 0, 0)
        return best[0]
    if kind == "tensor":
        entries, n = M
        bad = [idx for idx, v in entries.items() if abs(v) > tol]
        best = 0
        for u in range(1, 1 << n):
            if all(any(not (u >> i) & 1 for i in idx) for idx in bad):
                best = max(best, popcount(u))
        return best
    raise ValueError("kind must be 'quadratic' or 'tensor'")


# -- chemical hypergraph Cheeger ----------------------------------------------

def chemical_cheeger(H: ChemicalHypergraph) -> CheegerReport:
    """min over proper nonempty A of #boundary(A) / min(vol A, vol A^c)."""
    if H.n > CHEEGER_CAP:
        raise CapExceeded(f"chemical cheeger capped at n <= {CHEEGER_CAP}")
    total = full_mask(H.n)
    best, arg, count = None, [], 0
    for a in range(1, total):
        count += 1
        num = H.boundary_edges(a)
        den = min(H.vol(a), H.vol(total & ~a))
        if den == 0:
            continue
        val = Fraction(num, int(round(den)))
        if best is None or val < best:
            best, arg = val, [a]
    return CheegerReport(best, arg, count, "chemical")


# -- simplicial Cheeger constants ----------------------------------------------

def _signed_counts(G: SignedGraph, a: int, b: int) -> tuple[int, int, int]:
    """(E_-(a), E_-(b), E_+(a, b)) edge counts in the signed graph."""
    em_a = em_b = ep_ab = 0
    n = G.n
    for i in range(n):
        for j in range(i + 1, n):
            w = G.W[i, j]
            if w == 0:
                continue
            ina, inb = (a >> i) & 1, (b >> i) & 1
            jna, jnb = (a >> j) & 1, (b >> j) & 1
            if w < 0 and ina and jna:
                em_a += 1
            if w < 0 and inb and jnb:
                em_b += 1
            if w > 0 and ((ina and jnb) or (inb and jna)):
                ep_ab += 1
    return em_a, em_b, ep_ab


def _boundary_count(G: SignedGraph, s: int) -> int:
    cnt = 0
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if G.W[i, j] != 0 and ((s >> i) & 1) != ((s >> j) & 1):
                cnt += 1
    return cnt


def signed_beta(G: SignedGraph, degrees, a: int, b: int) -> Fraction:
    """beta(A, A') of a signed graph with the given volume degrees."""
    em_a, em_b, ep = _signed_counts(G, a, b)
    s = a | b
    num = 2 * (em_a + em_b + ep) + _boundary_count(G, s)
    den = int(round(sum(degrees[i] for i in mask_members(s))))
    return _as_ratio(num, den)


def simplicial_cheeger(K: SimplicialComplex, d: int, k: int = 1) -> CheegerReport:
    """k-th Cheeger constant on the d-simplices through the anti-signed
    graph: min over 2k disjoint sets of the max beta of consecutive pairs."""
    G = K.anti_signed_graph(d)
    deg = K.up_degrees(d)
    nd = K.count(d)
    if nd > SIMPLICIAL_CAP:
        raise CapExceeded(f"simplicial enumeration capped at {SIMPLICIAL_CAP} simplices")
    best, arg, count = None, [], 0
    # sub-partitions: the second part of a pair may be empty; families are
    # canonical with pair minima strictly increasing and the top element of
    # each pair's support placed in the first part (beta is symmetric).
    total = full_mask(nd)

    def pairs_within(avail, lo):
        for s_anchor in [i for i in mask_members(avail) if i >= lo]:
            rest = mask_of([i for i in mask_members(avail) if i > s_anchor])
            for s_extra in submasks(rest):
                s = s_extra | (1 << s_anchor)
                for a in submasks(s):
                    if a.bit_length() == s.bit_length():
                        yield a, s & ~a, s, s_anchor

    def rec(avail, k_left, lo):
        if k_left == 0:
            yield []
            return
        for a, b, s, anchor in pairs_within(avail, lo):
            for tail in rec(avail & ~s, k_left - 1, anchor + 1):
                yield [(a, b)] + tail

    for fam in rec(total, k, 0):
        count += 1
        worst = None
        for a, b in fam:
            if sum(deg[i] for i in mask_members(a | b)) == 0:
                worst = np.inf
                break
            val = signed_beta(G, deg, a, b)
            if worst is None or val > worst:
                worst = val
        if worst is None or worst is np.inf:
            continue
        if best is None or worst < best:
            best, arg = worst, [fam]
    return CheegerReport(best, arg, count, f"simplicial-{k}-way-S{d}",
                         extra={"dimension": d})


def quotient_l1_norm(x, image_basis, degrees) -> float:
    """min over z in span(image columns) of sum_i deg_i |x_i + z_i| (LP)."""
    x = np.asarray(x, dtype=float)
    Z = np.asarray(image_basis, dtype=float)
    n = x.size
    if Z.size == 0:
        return float(np.sum(degrees * np.abs(x)))
    Z = Z.reshape(n, -1)
    m = Z.shape[1]
    # vars: t (m, free), s (n, >= 0); s_i >= |x_i + (Z t)_i|
    c = np.concatenate([np.zeros(m), np.asarray(degrees, dtype=float)])
    A_ub, b_ub = [], []
    for i in range(n):
        row = np.concatenate([Z[i], np.zeros(n)])
        row2 = np.concatenate([-Z[i], np.zeros(n)])
        row[m + i] = -1.0
        row2[m + i] = -1.0
        A_ub.append(row)
        b_ub.append(-x[i])
        A_ub.append(row2)
        b_ub.append(x[i])
    bounds = [(None, None)] * m + [(0.0, None)] * n
    res = linprog(c, A_ub=np.array(A_ub), b_ub=np.array(b_ub), bounds=bounds)
    if res.status != "optimal":
        return np.inf
    return max(res.objective, 0.0)


@dataclass
class SimplicialHReport:
    per_n: dict                    # N -> best upper bound found
    value: float                   # min over the N family
    witness: Optional[tuple]


def simplicial_h(K: SimplicialComplex, d: int, n_list=(1, 2),
                 cap: int = 200000) -> SimplicialHReport:
    """Upper-bound family for the 1-Laplacian Cheeger constant on S_d:
    minimum over integer multisets with multiplicities in [-N, N] of
    ||B_{d+1}^T x||_1 over the deg-weighted quotient l1 norm.

    Exactness for a finite N is not claimed; the report carries the
    per-N minima so convergence across N can be inspected.
    """
    nd = K.count(d)
    Bup = K.boundary_matrix(d + 1)            # S_d x S_{d+1}
    deg = K.up_degrees(d)
    img = K.boundary_matrix(d).T if d >= 1 else np.zeros((nd, 0))
    per_n = {}
    wit = None
    best_all = np.inf
    for N in n_list:
        if (2 * N + 1) ** nd > cap:
            raise CapExceeded("multiset enumeration over the N-box too large")
        best = np.inf
        for digits in product(range(-N, N + 1), repeat=nd):
            if all(v == 0 for v in digits):
                continue
            first = next(v for v in digits if v != 0)
            if first < 0:
                continue
            x = np.array(digits, dtype=float)
            num = float(np.sum(np.abs(Bup.T @ x)))
            if num == 0:
                continue
            cheap = float(np.sum(deg * np.abs(x)))
            if cheap > 0 and num / cheap >= best:
                continue            # quotient norm <= plain norm: prune
            den = quotient_l1_norm(x, img, deg)
            if den <= 1e-12:
                continue            # x is a coboundary: excluded
            val = num / den
            if val < best:
                best = val
                if val < best_all:
                    best_all, wit = val, digits
        per_n[N] = best
    return SimplicialHReport(per_n, best_all, wit)


def down_cheeger(K: SimplicialComplex, d: int, n_list=(1, 2),
                 cap: int = 200000) -> SimplicialHReport:
    """Analogous enumeration on B_d: min ||B_d x||_1 over the quotient norm
    modulo the image of B_{d+1}."""
    nd = K.count(d)
    Bd = K.boundary_matrix(d)
    deg = np.full(nd, float(d + 1))    # each d-simplex has d+1 facets
    img = K.boundary_matrix(d + 1) if d + 1 <= K.dim else np.zeros((nd, 0))
    per_n = {}
    wit = None
    best_all = np.inf
    for N in n_list:
        if (2 * N + 1) ** nd > cap:
            raise CapExceeded("multiset enumeration over the N-box too large")
        best = np.inf
        for digits in product(range(-N, N + 1), repeat=nd):
            if all(v == 0 for v in digits):
                continue
            first = next(v for v in digits if v != 0)
            if first < 0:
                continue
            x = np.array(digits, dtype=float)
            num = float(np.sum(np.abs(Bd @ x)))
            if num == 0:
                continue
            cheap = float(np.sum(deg * np.abs(x)))
            if cheap > 0 and num / cheap >= best:
                continue
            den = quotient_l1_norm(x, img, deg)
            if den <= 1e-12:
                continue
            val = num / den
            if val < best:
                best = val
                if val < best_all:
                    best_all, wit = val, digits
        per_n[N] = best
    return SimplicialHReport(per_n, best_all, wit)


# -- nodal domains -------------------------------------------------------------

def nodal_domains(x, g: WeightedGraph, tol: float = 1e-9) -> int:
    """Connected components of the support of x in the carrier graph."""
    support = [i for i in range(g.n) if abs(x[i]) > tol]
    if not support:
        return 0
    sset = set(support)
    seen = set()
    count = 0
    for s in support:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in range(g.n):
                if u in sset and u not in seen and g.W[v, u] != 0:
                    seen.add(u)
                    stack.append(u)
    return count
