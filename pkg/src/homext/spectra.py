"""Eigenvalue machinery for pairs (F, G) of p-homogeneous functions.

An eigenpair (lambda, x) satisfies 0 in dF(x) - lambda dG(x), with d the
Clarke subdifferential.  Subdifferentials are carried as finite data
(center + segment directions + hull points), which turns the membership
test into a small linear program.

The module also holds the dense symmetric eigensolver (cyclic Jacobi),
the Dinkelbach/RatioDCA iteration, the Collatz-Wielandt power iteration
for nonnegative tensor pairs, ternary-vertex enumeration for piecewise
linear pairs, and the norm-duality checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

import numpy as np

from .simplex import linprog
from .structures import ChemicalHypergraph, SymmetricTensor, WeightedGraph

JACOBI_SWEEP_TOL = 1e-12
JACOBI_MAX_SWEEPS = 64
DEFAULT_STARTS = 64


def _rng_for(seed: int, counter: int):
    return np.random.default_rng([seed, counter])


# ---------------------------------------------------------------------------
# dense symmetric eigensolver (cyclic Jacobi)
# ---------------------------------------------------------------------------

def jacobi_eigh(S) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric
    matrix by cyclic Jacobi rotations."""
    A = np.array(S, dtype=float)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    if not np.allclose(A, A.T, atol=1e-12 * max(1.0, np.abs(A).max())):
        raise ValueError("matrix must be symmetric")
    A = 0.5 * (A + A.T)
    V = np.eye(n)
    scale = max(1.0, np.abs(A).max())
    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.tril(A, -1) ** 2) * 2)
        if off <= JACOBI_SWEEP_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) \
                    if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = A[p].copy(), A[q].copy()
                A[p] = c * rp - s * rq
                A[q] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def quadratic_pair_spectrum(A, B) -> tuple[np.ndarray, np.ndarray]:
    """Generalized symmetric spectrum of (A, B), B positive definite.

    Whitens with B^{-1/2} and runs Jacobi; every returned pair satisfies
    ||A v - lambda B v|| <= 1e-9 ||A|| ||v||, which is asserted.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    wb, Vb = jacobi_eigh(B)
    if wb.size and wb[0] <= 1e-12 * max(1.0, wb[-1]):
        raise ValueError("B must be positive definite")
    Bihalf = Vb @ np.diag(wb ** -0.5) @ Vb.T
    C = Bihalf @ A @ Bihalf
    w, U = jacobi_eigh(0.5 * (C + C.T))
    V = Bihalf @ U
    scale = max(1.0, np.abs(A).max())
    for i in range(w.size):
        res = np.linalg.norm(A @ V[:, i] - w[i] * (B @ V[:, i]))
        assert res <= 1e-9 * scale * max(1.0, np.linalg.norm(V[:, i])), \
            f"eigen residual {res} too large"
    return w, V


# ---------------------------------------------------------------------------
# subdifferentials and pairs
# ---------------------------------------------------------------------------

@dataclass
class SubgradientSet:
    """Polytope  center + sum_i [-1,1] seg_i + conv(points).

    ``segments`` is an (m, n) array of segment directions (may be empty);
    ``points`` an (r, n) array of hull generators (empty means {0}).
    A smooth gradient is a bare center.
    """

    center: np.ndarray
    segments: Optional[np.ndarray] = None
    points: Optional[np.ndarray] = None

    def __post_init__(self):
        self.center = np.asarray(self.center, dtype=float)
        n = self.center.size
        if self.segments is None:
            self.segments = np.zeros((0, n))
        else:
            self.segments = np.asarray(self.segments, dtype=float).reshape(-1, n)
        if self.points is None:
            self.points = np.zeros((0, n))
        else:
            self.points = np.asarray(self.points, dtype=float).reshape(-1, n)

    @property
    def n(self) -> int:
        return self.center.size

    def is_singleton(self) -> bool:
        return self.segments.shape[0] == 0 and self.points.shape[0] == 0

    def any_point(self) -> np.ndarray:
        g = self.center.copy()
        if self.points.shape[0]:
            g = g + self.points[0]
        return g

    def linear_image(self, M) -> "SubgradientSet":
        M = np.asarray(M, dtype=float)
        return SubgradientSet(M @ self.center,
                              (M @ self.segments.T).T,
                              (M @ self.points.T).T)


@dataclass
class EigenPair:
    lam: float
    x: np.ndarray
    residual: Optional[float] = None
    history: Optional[list] = None
    converged: bool = True


@dataclass
class HomogeneousPair:
    """Two p-homogeneous locally Lipschitz functions with subgradient
    oracles.  ``tag`` records the structure class so solvers can pick
    exact routes."""

    p: float
    F: Callable[[np.ndarray], float]
    G: Callable[[np.ndarray], float]
    F_subgrad: Callable[[np.ndarray], SubgradientSet]
    G_subgrad: Callable[[np.ndarray], SubgradientSet]
    tag: str = "composite"
    data: dict = field(default_factory=dict)
    exact_F: Optional[Callable] = None
    exact_G: Optional[Callable] = None

    def ratio(self, x) -> float:
        return self.F(x) / self.G(x)

    def compose_odd_linear(self, M) -> "HomogeneousPair":
        """The pair (F o M, G o M) for an invertible linear map M."""
        M = np.asarray(M, dtype=float)
        MT = M.T
        return HomogeneousPair(
            self.p,
            lambda x: self.F(M @ x),
            lambda x: self.G(M @ x),
            lambda x: self.F_subgrad(M @ x).linear_image(MT),
            lambda x: self.G_subgrad(M @ x).linear_image(MT),
            tag="composite",
        )


def euler_identity_gap(pair: HomogeneousPair, x) -> float:
    """|<g, x> - p F(x)| relative, for one F-subgradient generator."""
    g = pair.F_subgrad(x).any_point()
    val = pair.p * pair.F(x)
    return abs(float(g @ x) - val) / max(1.0, abs(val))


def quadratic_form_pair(A, B) -> HomogeneousPair:
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    return HomogeneousPair(
        2.0,
        lambda x: float(x @ A @ x),
        lambda x: float(x @ B @ x),
        lambda x: SubgradientSet(2.0 * (A @ x)),
        lambda x: SubgradientSet(2.0 * (B @ x)),
        tag="quadratic-form",
        data={"A": A, "B": B},
    )


def _abs_subgrad_terms(x, weights, tol=0.0):
    """center and segments of d sum_i w_i |x_i|."""
    n = len(x)
    center = np.zeros(n)
    segs = []
    for i in range(n):
        if x[i] > tol:
            center[i] = weights[i]
        elif x[i] < -tol:
            center[i] = -weights[i]
        else:
            e = np.zeros(n)
            e[i] = weights[i]
            segs.append(e)
    return center, np.array(segs).reshape(-1, n)


def one_laplacian_pair(graph: WeightedGraph, signless: bool = False) -> HomogeneousPair:
    """F(x) = sum_e w_e |x_i -/+ x_j|, G(x) = sum_i deg_i |x_i|.

    Piecewise linear and 1-homogeneous; the linearity cells are simplicial
    cones on ternary rays, so ternary enumeration is exact for this pair.
    """
    W = graph.W
    deg = graph.degrees
    edges = graph.edges()
    sgn = 1.0 if signless else -1.0

    def F(x):
        return float(sum(w * abs(x[i] + sgn * x[j]) for i, j, w in edges))

    def G(x):
        return float(sum(deg[i] * abs(x[i]) for i in range(graph.n)))

    def F_sub(x):
        n = graph.n
        center = np.zeros(n)
        segs = []
        for i, j, w in edges:
            t = x[i] + sgn * x[j]
            d = np.zeros(n)
            d[i] = w
            d[j] = sgn * w
            if t > 0:
                center += d
            elif t < 0:
                center -= d
            else:
                segs.append(d)
        return SubgradientSet(center, np.array(segs).reshape(-1, n))

    def G_sub(x):
        center, segs = _abs_subgrad_terms(x, deg)
        return SubgradientSet(center, segs)

    exactF = None
    exactG = None
    if np.allclose(W, np.round(W)):
        def exactF(x):
            s = Fraction(0)
            for i, j, w in edges:
                t = Fraction(x[i]) + (Fraction(x[j]) if signless else -Fraction(x[j]))
                s += Fraction(int(round(w))) * abs(t)
            return s

        def exactG(x):
            return sum(Fraction(int(round(deg[i]))) * abs(Fraction(x[i]))
                       for i in range(graph.n))

    return HomogeneousPair(1.0, F, G, F_sub, G_sub,
                           tag="signless-one-laplacian" if signless else "one-laplacian",
                           data={"graph": graph},
                           exact_F=exactF, exact_G=exactG)


def graph_plap_pair(graph: WeightedGraph, p: float, signless: bool = False) -> HomogeneousPair:
    """Normalized graph p-Laplacian pair: sum w|x_i - x_j|^p over sum deg|x_i|^p."""
    if p <= 1:
        raise ValueError("use one_laplacian_pair for p = 1")
    edges = graph.edges()
    deg = graph.degrees
    sgn = 1.0 if signless else -1.0

    def F(x):
        return float(sum(w * abs(x[i] + sgn * x[j]) ** p for i, j, w in edges))

    def G(x):
        return float(sum(deg[i] * abs(x[i]) ** p for i in range(graph.n)))

    def phi(t):
        return abs(t) ** (p - 1) * np.sign(t)

    def F_sub(x):
        g = np.zeros(graph.n)
        for i, j, w in edges:
            t = x[i] + sgn * x[j]
            g[i] += p * w * phi(t)
            g[j] += p * w * phi(t) * sgn
        return SubgradientSet(g)

    def G_sub(x):
        return SubgradientSet(p * deg * phi(np.asarray(x, dtype=float)))

    return HomogeneousPair(p, F, G, F_sub, G_sub, tag="power-form",
                           data={"graph": graph, "signless": signless})


def chemical_plap_pair(H: ChemicalHypergraph, p: float) -> HomogeneousPair:
    """Extension-built p-Laplacian pair of a chemical hypergraph:
    F(x) = sum_e |max_{e_in} x - min_{e_out} x|^p, G(x) = sum deg_i |x_i|^p."""
    from .setfn import mask_members
    deg = H.degrees
    ins = [mask_members(e_in) for e_in, _ in H.edges]
    outs = [mask_members(e_out) for _, e_out in H.edges]

    def edge_terms(x):
        out = []
        for I, O in zip(ins, outs):
            imax = max(I, key=lambda i: (x[i], -i))
            jmin = min(O, key=lambda j: (x[j], j))
            out.append((imax, jmin, x[imax] - x[jmin]))
        return out

    def F(x):
        return float(sum(abs(t) ** p for _, _, t in edge_terms(x)))

    def G(x):
        return float(sum(deg[i] * abs(x[i]) ** p for i in range(H.n)))

    def phi(t):
        return abs(t) ** (p - 1) * np.sign(t)

    def F_sub(x):
        g = np.zeros(H.n)
        for imax, jmin, t in edge_terms(x):
            if p == 1.0 and t == 0:
                continue
            c = p * phi(t) if p > 1 else float(np.sign(t))
            g[imax] += c
            g[jmin] -= c
        return SubgradientSet(g)

    def G_sub(x):
        if p > 1:
            return SubgradientSet(p * deg * phi(np.asarray(x, dtype=float)))
        center, segs = _abs_subgrad_terms(x, deg)
        return SubgradientSet(center, segs)

    return HomogeneousPair(p, F, G, F_sub, G_sub, tag="power-form",
                           data={"hypergraph": H})


def tensor_pair(C: SymmetricTensor, D: SymmetricTensor) -> HomogeneousPair:
    k = C.order

    def F(x):
        return C.full_form(np.asarray(x, dtype=float))

    def G(x):
        return D.full_form(np.asarray(x, dtype=float))

    return HomogeneousPair(
        float(k), F, G,
        lambda x: SubgradientSet(k * C.apply(np.asarray(x, dtype=float))),
        lambda x: SubgradientSet(k * D.apply(np.asarray(x, dtype=float))),
        tag="tensor-form", data={"C": C, "D": D})


def diagonal_tensor(k: int, n: int, weights=None) -> SymmetricTensor:
    T = SymmetricTensor(k, n)
    for i in range(n):
        T[(i,) * k] = 1.0 if weights is None else float(weights[i])
    return T


# ---------------------------------------------------------------------------
# residual certification
# ---------------------------------------------------------------------------

def polytope_gap(U: SubgradientSet, V: SubgradientSet, lam: float) -> float:
    """min over u in U, v in V of ||u - lam v||_inf, by LP."""
    n = U.n
    mF, rF = U.segments.shape[0], U.points.shape[0]
    mG, rG = V.segments.shape[0], V.points.shape[0]
    if U.is_singleton() and V.is_singleton():
        return float(np.max(np.abs(U.center - lam * V.center)))
    nv = mF + rF + mG + rG + 1
    idx_eps = nv - 1
    const = U.center - lam * V.center

    def row(i, sign):
        r = np.zeros(nv)
        r[:mF] = sign * U.segments[:, i]
        r[mF:mF + rF] = sign * U.points[:, i]
        r[mF + rF:mF + rF + mG] = -sign * lam * V.segments[:, i]
        r[mF + rF + mG:mF + rF + mG + rG] = -sign * lam * V.points[:, i]
        r[idx_eps] = -1.0
        return r

    A_ub, b_ub = [], []
    for i in range(n):
        A_ub.append(row(i, 1.0))
        b_ub.append(-const[i])
        A_ub.append(row(i, -1.0))
        b_ub.append(const[i])
    A_eq, b_eq = [], []
    if rF:
        e = np.zeros(nv)
        e[mF:mF + rF] = 1.0
        A_eq.append(e)
        b_eq.append(1.0)
    if rG:
        e = np.zeros(nv)
        e[mF + rF + mG:mF + rF + mG + rG] = 1.0
        A_eq.append(e)
        b_eq.append(1.0)
    bounds = ([(-1.0, 1.0)] * mF + [(0.0, None)] * rF
              + [(-1.0, 1.0)] * mG + [(0.0, None)] * rG + [(0.0, None)])
    c = np.zeros(nv)
    c[idx_eps] = 1.0
    res = linprog(c, A_ub=np.array(A_ub), b_ub=np.array(b_ub),
                  A_eq=np.array(A_eq) if A_eq else None,
                  b_eq=np.array(b_eq) if b_eq else None, bounds=bounds)
    if res.status != "optimal":
        return np.inf
    return max(res.objective, 0.0)


def eigen_residual(pair: HomogeneousPair, lam: float, x) -> float:
    """Certified distance from 0 to dF(x) - lam dG(x) in the sup norm."""
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise ValueError("x must be nonzero")
    return polytope_gap(pair.F_subgrad(x), pair.G_subgrad(x), lam)


# ---------------------------------------------------------------------------
# subspace projections G_Pi
# ---------------------------------------------------------------------------

def g_pi_projection(x, v, weights, p: float) -> tuple[float, float]:
    """Minimize sum_i w_i |x_i - t v_i|^p over t; returns (value, t*).

    Closed form for p = 2 (weighted mean), weighted median for p = 1,
    ternary search on the convex objective otherwise.
    """
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    w = np.asarray(weights, dtype=float)

    def phi(t):
        return float(np.sum(w * np.abs(x - t * v) ** p))

    if p == 2:
        den = float(np.sum(w * v * v))
        t = float(np.sum(w * v * x)) / den if den > 0 else 0.0
        return phi(t), t
    nz = v != 0
    if not np.any(nz):
        return phi(0.0), 0.0
    ratios = x[nz] / v[nz]
    if p == 1:
        ww = w[nz] * np.abs(v[nz])
        order = np.argsort(ratios, kind="stable")
        cum = np.cumsum(ww[order])
        half = cum[-1] / 2.0
        t = float(ratios[order][min(np.searchsorted(cum, half), len(cum) - 1)])
        return phi(t), t
    lo, hi = float(ratios.min()), float(ratios.max())
    for _ in range(200):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if phi(m1) <= phi(m2):
            hi = m2
        else:
            lo = m1
    t = 0.5 * (lo + hi)
    return phi(t), t


class SubspaceProjection:
    """G_Pi(x) = inf over z in Pi of G(x + z), with a minimizer oracle."""

    def __init__(self, basis, minimize: Callable[[np.ndarray], tuple]):
        B = np.asarray(basis, dtype=float)
        self.basis = B.reshape(1, -1) if B.ndim == 1 else B
        self._minimize = minimize

    def minimize(self, x) -> tuple[float, np.ndarray]:
        """(G_Pi(x), z in Pi with G(x + z) = G_Pi(x))."""
        return self._minimize(np.asarray(x, dtype=float))


def projection_diag_power(weights, p: float, basis) -> SubspaceProjection:
    """Projection oracle for G(x) = sum w_i |x_i|^p along span(basis rows).

    One dimension uses the closed forms; higher dimensions run cyclic
    sweeps of one-dimensional minimizations (G convex, so this converges).
    """
    B = np.asarray(basis, dtype=float)
    if B.ndim == 1:
        B = B.reshape(1, -1)
    w = np.asarray(weights, dtype=float)

    def minimize(x):
        z = np.zeros_like(x)
        for _ in range(60 if B.shape[0] > 1 else 1):
            changed = 0.0
            for r in range(B.shape[0]):
                _, t = g_pi_projection(x + z, B[r], w, p)
                z = z - t * B[r]
                changed = max(changed, abs(t))
            if changed < 1e-13:
                break
        val = float(np.sum(w * np.abs(x + z) ** p))
        return val, z

    return SubspaceProjection(B, minimize)


def projection_quadratic(Bmat, basis) -> SubspaceProjection:
    """Exact projection for G(x) = x^T B x along span(basis rows)."""
    Bq = np.asarray(Bmat, dtype=float)
    Z = np.asarray(basis, dtype=float)
    if Z.ndim == 1:
        Z = Z.reshape(1, -1)
    Zt = Z.T
    M = Z @ Bq @ Zt

    def minimize(x):
        t = np.linalg.solve(M, -(Z @ (Bq @ x)))
        z = Zt @ t
        return float((x + z) @ Bq @ (x + z)), z

    return SubspaceProjection(Z, minimize)


# ---------------------------------------------------------------------------
# Dinkelbach / RatioDCA iteration
# ---------------------------------------------------------------------------

@dataclass
class ConvexSplit:
    """F = F1 - F2 with both parts convex and p-homogeneous (F2 may be 0)."""

    F1: Callable
    F1_subgrad: Callable
    F2: Optional[Callable] = None
    F2_subgrad: Optional[Callable] = None

    def F(self, x):
        v = self.F1(x)
        return v - self.F2(x) if self.F2 else v

    def u(self, x):
        if self.F2_subgrad is None:
            return np.zeros(len(x))
        return self.F2_subgrad(x)


def split_from_pair(pair: HomogeneousPair) -> ConvexSplit:
    return ConvexSplit(pair.F, lambda x: pair.F_subgrad(x).any_point())


def _inner_quadratic(M, w):
    """argmin over the unit ball of z^T M z - w.z (M symmetric PSD)."""
    n = M.shape[0]
    z = np.linalg.lstsq(2.0 * M, w, rcond=None)[0]
    if np.linalg.norm(z) <= 1.0:
        return z
    hi = 1.0
    while np.linalg.norm(np.linalg.solve(2.0 * M + hi * np.eye(n), w)) > 1.0:
        hi *= 2.0
        if hi > 1e12:
            break
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        z = np.linalg.solve(2.0 * M + mid * np.eye(n), w)
        if np.linalg.norm(z) > 1.0:
            lo = mid
        else:
            hi = mid
    return np.linalg.solve(2.0 * M + hi * np.eye(n), w)


def _inner_descent(obj, grad, z0, iters=200):
    """Projected subgradient descent on the unit ball, step eta_t =
    s0 / sqrt(t+1) with s0 from the first subgradient; keeps the best."""
    z = z0.copy()
    best, bz = obj(z), z.copy()
    s0 = 1.0 / max(1.0, np.linalg.norm(grad(z)))
    for t in range(iters):
        g = grad(z)
        z = z - (s0 / np.sqrt(t + 1.0)) * g
        nz = np.linalg.norm(z)
        if nz > 1.0:
            z = z / nz
        v = obj(z)
        if v < best:
            best, bz = v, z.copy()
    return bz


def dinkelbach_ratiodca(pair: HomogeneousPair, proj: SubspaceProjection, x0,
                        split: Optional[ConvexSplit] = None,
                        rtol: float = 1e-10, max_outer: int = 60,
                        inner_iters: int = 200,
                        certify: bool = True) -> EigenPair:
    """Minimize F(x) / G_Pi(x) by the Dinkelbach-type scheme.

    Each step linearizes F2 and G at the current point, solves the inner
    convex problem on the unit ball (exactly for quadratic forms, by
    projected subgradient descent otherwise) and re-projects along Pi.
    A candidate is accepted only if the ratio decreases, so the ratio
    sequence is monotone non-increasing; for nonconvex F the result is a
    certified local estimate, never claimed global.
    """
    if split is None:
        split = split_from_pair(pair)

    def project_out(x):
        _, z = proj.minimize(x)
        y = x + z
        nrm = np.linalg.norm(y)
        return y / nrm if nrm > 0 else y

    def ratio(x):
        gv, _ = proj.minimize(x)
        fv = split.F(x)
        return fv / gv if gv > 1e-300 else np.inf

    x = project_out(np.asarray(x0, dtype=float))
    r = ratio(x)
    history = [r]
    quad = pair.tag == "quadratic-form"
    converged = False
    for _ in range(max_outer):
        u = split.u(x)
        v = pair.G_subgrad(x).center.copy()
        for b in proj.basis:            # drop the Pi component: v ~ dG_Pi(x)
            nb = b @ b
            if nb > 0:
                v -= (v @ b) / nb * b
        w = u + r * v
        if quad:
            z = _inner_quadratic(pair.data["A"], w)
        else:
            z = _inner_descent(lambda y: split.F1(y) - w @ y,
                               lambda y: split.F1_subgrad(y) - w,
                               x, iters=inner_iters)
        cand = project_out(z) if np.any(z) else x
        rc = ratio(cand) if np.any(cand) else np.inf
        if not np.isfinite(rc) or rc > r - 1e-16:
            improved = False
            if np.any(cand):
                for t in np.linspace(0.05, 1.0, 20):
                    y = project_out((1 - t) * x + t * cand)
                    if not np.any(y):
                        continue
                    ry = ratio(y)
                    if ry < r - 1e-14:
                        x, r = y, ry
                        improved = True
                        break
            if not improved:
                converged = True
                break
        else:
            x, r = cand, rc
        history.append(r)
        if len(history) > 1 and abs(history[-2] - r) < rtol * max(1.0, abs(r)):
            converged = True
            break
    res = eigen_residual(pair, r, x) if certify else None
    return EigenPair(lam=r, x=x, residual=res, history=history, converged=converged)


def dinkelbach_multistart(pair, proj, n, seed=42, starts=DEFAULT_STARTS,
                          extra_starts=(), **kw) -> EigenPair:
    """Best Dinkelbach run over seeded random starts (order-independent min)."""
    best = None
    for c, x0 in enumerate(list(extra_starts) + [None] * starts):
        if x0 is None:
            x0 = _rng_for(seed, c).normal(size=n)
        ep = dinkelbach_ratiodca(pair, proj, x0, **kw)
        if np.isfinite(ep.lam) and (best is None or ep.lam < best.lam):
            best = ep
    return best


# ---------------------------------------------------------------------------
# second-eigenvalue characterizations (exact for p = 2)
# ---------------------------------------------------------------------------

def _orth_basis_of_complement(Z, n):
    """Orthonormal basis of the orthogonal complement of the rows of Z."""
    Z = np.asarray(Z, dtype=float).reshape(-1, n)
    A = np.eye(n)
    for b in Z:
        nb = b @ b
        if nb > 0:
            A = A - np.outer(A @ b, b) / nb
    cols = []
    for j in range(n):
        c = A[:, j].copy()
        for q in cols:
            c -= (c @ q) * q
        nc = np.linalg.norm(c)
        if nc > 1e-10:
            cols.append(c / nc)
    return np.array(cols).T if cols else np.zeros((n, 0))


@dataclass
class SecondEigenReport:
    projected_form: float          # min over x perp Pi of F(x)/G_Pi(x)
    constrained_form: float        # min over {x : dG(x) meets Pi-perp} of F/G
    spectrum_value: float          # lambda_{dim Pi + 1} from the full solve
    gap: float
    spectrum: np.ndarray


def second_eigen_characterizations(A, B, Pi) -> SecondEigenReport:
    """Compare the projected, constrained and min-max forms of the first
    nontrivial eigenvalue for the quadratic pair (A, B); exact at p = 2."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    Z = np.asarray(Pi, dtype=float)
    if Z.ndim == 1:
        Z = Z.reshape(1, -1)
    n = A.shape[0]
    d = Z.shape[0]
    w, _ = quadratic_pair_spectrum(A, B)
    lam_spec = w[d] if d < len(w) else np.inf

    # projected form: min over x perp Pi of x A x / G_Pi(x)
    Btilde = B - B @ Z.T @ np.linalg.solve(Z @ B @ Z.T, Z @ B)
    N = _orth_basis_of_complement(Z, n)
    wp, _ = quadratic_pair_spectrum(N.T @ A @ N, N.T @ Btilde @ N)
    lam_proj = wp[0]

    # constrained form: min over {x : B x perp Pi} of x A x / x B x
    K = _orth_basis_of_complement(Z @ B, n)
    wc, _ = quadratic_pair_spectrum(K.T @ A @ K, K.T @ B @ K)
    lam_con = wc[0]

    vals = [lam_proj, lam_con, lam_spec]
    return SecondEigenReport(lam_proj, lam_con, lam_spec,
                             float(max(vals) - min(vals)), w)


def mountain_pass_second(A, B, x1) -> float:
    """min over y perp x1 of F(y) / min_t G(y - t x1); equals lambda_2 at p=2."""
    rep = second_eigen_characterizations(A, B, np.asarray(x1, dtype=float))
    return rep.projected_form


# ---------------------------------------------------------------------------
# Collatz-Wielandt power iteration for nonnegative pairs
# ---------------------------------------------------------------------------

@dataclass
class CWReport:
    lam: float
    x: np.ndarray
    lo: float
    hi: float
    converged: bool
    iterations: int


def collatz_wielandt_max(C, D=None, x0=None, iters: int = 20000,
                         tol: float = 1e-10) -> CWReport:
    """Largest eigenvalue of a nonnegative pair by shifted power iteration.

    ``C`` is a nonnegative symmetric matrix or SymmetricTensor; ``D`` the
    positive diagonal reference (identity weights by default).  The
    certificate is the interval [min_i, max_i] of
    (C x^{k-1})_i / (D x^{k-1})_i, whose collapse proves optimality.
    """
    if isinstance(C, SymmetricTensor):
        k = C.order
        n = C.dim
        if D is None:
            dvec = np.ones(n)
        elif isinstance(D, SymmetricTensor):
            dvec = np.array([D[(i,) * k] for i in range(n)], dtype=float)
        else:
            dvec = np.asarray(D, dtype=float)
        apply_C = C.apply
    else:
        Cm = np.asarray(C, dtype=float)
        if np.any(Cm < 0):
            raise ValueError("matrix must be entrywise nonnegative")
        k = 2
        n = Cm.shape[0]
        if D is None:
            dvec = np.ones(n)
        else:
            Dm = np.asarray(D, dtype=float)
            dvec = np.diag(Dm) if Dm.ndim == 2 else Dm
        apply_C = lambda x: Cm @ x
    if np.any(dvec <= 0):
        raise ValueError("D must be positive on the diagonal")

    x = np.full(n, 1.0) if x0 is None else np.abs(np.asarray(x0, dtype=float))
    x = x / np.linalg.norm(x)
    lo = hi = np.nan
    it = 0
    for it in range(1, iters + 1):
        cx = apply_C(x)
        dx = dvec * x ** (k - 1)
        ratios = cx / dx
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= tol * max(1.0, abs(hi)):
            break
        y = ((cx + dx) / dvec) ** (1.0 / (k - 1))
        x = y / np.linalg.norm(y)
    lam = float((x @ apply_C(x)) / (x @ (dvec * x ** (k - 1))))
    return CWReport(lam, x, lo, hi, hi - lo <= tol * max(1.0, abs(hi)), it)


# ---------------------------------------------------------------------------
# ternary enumeration for piecewise linear pairs
# ---------------------------------------------------------------------------

TERNARY_CAP = 8
EXACT_TERNARY_TAGS = {"one-laplacian", "signless-one-laplacian"}


@dataclass
class TernarySpectrum:
    eigenvalues: list            # Fractions when the pair evaluates exactly
    witnesses: dict              # eigenvalue -> ternary vector (tuple)
    ratios_seen: set             # all candidate ratios, certified or not
    exact_for_pair: bool         # linearity cells generated by ternary rays
    tested: int


def ternary_eigen_enumerate(pair: HomogeneousPair, n: int,
                            tol: float = 1e-8) -> TernarySpectrum:
    """Certified eigenvalues with witnesses in {-1,0,1}^n.

    Every nonzero ternary vector (up to global sign; the pair is even) is
    scored by lambda = F(x)/G(x) and kept when the residual program
    certifies the eigenpair.  For pairs whose linearity cells are
    simplicial cones on ternary rays (graph 1-Laplacians and signless
    variants) this is the whole spectrum; otherwise a certified subset,
    which the ``exact_for_pair`` flag records.
    """
    if n > TERNARY_CAP:
        raise ValueError(f"ternary enumeration capped at n <= {TERNARY_CAP}")
    found: dict = {}
    seen = set()
    tested = 0
    for digits in product((-1, 0, 1), repeat=n):
        if all(d == 0 for d in digits):
            continue
        first = next(d for d in digits if d != 0)
        if first < 0:
            continue
        x = np.array(digits, dtype=float)
        tested += 1
        if pair.exact_F is not None:
            lam_exact = pair.exact_F(digits) / pair.exact_G(digits)
            lam = float(lam_exact)
        else:
            lam_exact = None
            lam = pair.ratio(x)
        seen.add(lam_exact if lam_exact is not None else round(lam, 12))
        if eigen_residual(pair, lam, x) <= tol:
            key = lam_exact if lam_exact is not None else lam
            close = [k for k in found if abs(float(k) - lam) <= tol]
            if close:
                continue
            found[key] = digits
    vals = sorted(found.keys(), key=float)
    return TernarySpectrum(vals, {v: found[v] for v in vals}, seen,
                           pair.tag in EXACT_TERNARY_TAGS, tested)


# ---------------------------------------------------------------------------
# norm duality
# ---------------------------------------------------------------------------

def _norm(x, p):
    x = np.asarray(x, dtype=float)
    if p == np.inf:
        return float(np.max(np.abs(x)))
    return float(np.sum(np.abs(x) ** p) ** (1.0 / p))


def holder_conjugate(p):
    if p == 1:
        return np.inf
    if p == np.inf:
        return 1.0
    return p / (p - 1.0)


def _dual_vector(g, q):
    """argmax of <g, x> over the unit q-norm ball."""
    g = np.asarray(g, dtype=float)
    if q == np.inf:
        s = np.sign(g)
        s[s == 0] = 1.0
        return s
    if q == 1:
        x = np.zeros_like(g)
        i = int(np.argmax(np.abs(g)))
        x[i] = np.sign(g[i]) if g[i] != 0 else 1.0
        return x
    qc = holder_conjugate(q)
    y = np.sign(g) * np.abs(g) ** (qc - 1)
    nrm = _norm(y, q)
    return y / nrm if nrm > 0 else y


def operator_norm_ascent(T, p, q, seed=42, starts=16, iters=200) -> tuple[float, np.ndarray]:
    """max ||T x||_p / ||x||_q by multi-start conditional-gradient ascent."""
    T = np.asarray(T, dtype=float)
    n = T.shape[1]
    best, bx = 0.0, None
    for c in range(starts):
        x = _rng_for(seed, c).normal(size=n)
        x = x / _norm(x, q)
        for _ in range(iters):
            y = T @ x
            if _norm(y, p) == 0:
                break
            g = T.T @ _dual_vector(y, holder_conjugate(p))
            xn = _dual_vector(g, q)
            if np.allclose(xn, x):
                x = xn
                break
            x = xn
        val = _norm(T @ x, p)
        if val > best:
            best, bx = val, x
    return best, bx


def operator_norm_exact(T, p, q) -> Optional[float]:
    """Exact mixed operator norm where a finite route exists:
    (2, 2) via singular values; q = inf or p = 1 by sign enumeration."""
    T = np.asarray(T, dtype=float)
    m, n = T.shape
    if p == 2 and q == 2:
        w, _ = jacobi_eigh(T.T @ T)
        return float(np.sqrt(max(w[-1], 0.0)))
    if q == np.inf and n <= 20:
        best = 0.0
        for signs in product((-1.0, 1.0), repeat=n):
            best = max(best, _norm(T @ np.array(signs), p))
        return best
    if p == 1 and m <= 20:
        best = 0.0
        qc = holder_conjugate(q)
        for signs in product((-1.0, 1.0), repeat=m):
            best = max(best, _norm(T.T @ np.array(signs), qc))
        return best
    return None


@dataclass
class DualityReport:
    primal: float
    dual: float
    gap: float
    primal_exact: Optional[float]
    dual_exact: Optional[float]


def duality_spectrum_check(T, p, q, seed=42, starts=16) -> DualityReport:
    """max ||T x||_p / ||x||_q against max ||T^t y||_{q*} / ||y||_{p*}."""
    T = np.asarray(T, dtype=float)
    pe = operator_norm_exact(T, p, q)
    de = operator_norm_exact(T.T, holder_conjugate(q), holder_conjugate(p))
    pa, _ = operator_norm_ascent(T, p, q, seed=seed, starts=starts)
    da, _ = operator_norm_ascent(T.T, holder_conjugate(q), holder_conjugate(p),
                                 seed=seed, starts=starts)
    primal = pe if pe is not None else pa
    dual = de if de is not None else da
    return DualityReport(primal, dual, abs(primal - dual), pe, de)


def incidence_vertex_edge_spectra(B, tol=1e-9) -> tuple[np.ndarray, np.ndarray, float]:
    """Nonzero spectra of B B^T and B^T B; must agree at p = 2."""
    B = np.asarray(B, dtype=float)
    wv, _ = jacobi_eigh(B @ B.T)
    we, _ = jacobi_eigh(B.T @ B)
    nv = np.sort(wv[wv > tol])
    ne = np.sort(we[we > tol])
    if nv.size != ne.size:
        return nv, ne, np.inf
    gap = float(np.max(np.abs(nv - ne))) if nv.size else 0.0
    return nv, ne, gap




# ---------------------------------------------------------------------------
# support-function duality of the inner problem
# ---------------------------------------------------------------------------

def _quad_min_ball(M, w, radius):
    """argmin of z^T M z - w.z over the l2 ball of the given radius."""
    if radius <= 0:
        return np.zeros(w.size)
    z = _inner_quadratic(M * radius * radius, w * radius)
    return radius * z


def _quad_min_box(M, w, radius, sweeps=300):
    """argmin of z^T M z - w.z over the box [-radius, radius]^n by exact
    coordinate minimization sweeps."""
    n = w.size
    z = np.zeros(n)
    for _ in range(sweeps):
        delta = 0.0
        for i in range(n):
            rest = 2.0 * (M[i] @ z - M[i, i] * z[i])
            if M[i, i] > 1e-300:
                zi = (w[i] - rest) / (2.0 * M[i, i])
            else:
                zi = radius * np.sign(w[i] - rest)
            zi = min(max(zi, -radius), radius)
            delta = max(delta, abs(zi - z[i]))
            z[i] = zi
        if delta < 1e-14:
            break
    return z


def _sphere_norm2_max(A, b, radius=1.0):
    """max of ||A y + b||_2 over ||y||_2 <= radius (attained on the sphere).

    Stationarity (A^T A - mu I) y = -A^T b with mu above the top eigenvalue;
    ||y(mu)|| decreases in mu, so bisection finds the norm constraint.  The
    degenerate case (A^T b orthogonal to the top eigenspace) pads with a top
    eigenvector.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    M = A.T @ A
    n = M.shape[0]
    w, V = jacobi_eigh(M)
    lam_top = w[-1]
    c = A.T @ b

    def y_of(mu):
        return np.linalg.solve(M - mu * np.eye(n), -c)

    hi = lam_top + max(np.linalg.norm(c) / radius, 1e-6) + 1.0
    lo = lam_top + 1e-12
    try:
        ylo = y_of(lo)
        nlo = np.linalg.norm(ylo)
    except np.linalg.LinAlgError:
        nlo = np.inf
    if nlo < radius:               # hard case: pad with a top eigenvector
        v = V[:, -1]
        t = np.sqrt(max(radius * radius - nlo * nlo, 0.0))
        y = (ylo if np.isfinite(nlo) else np.zeros(n)) + t * v
        return float(np.linalg.norm(A @ y + b)), y
    while np.linalg.norm(y_of(hi)) > radius:
        hi = lam_top + 2 * (hi - lam_top)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if np.linalg.norm(y_of(mid)) > radius:
            lo = mid
        else:
            hi = mid
    y = y_of(hi)
    ny = np.linalg.norm(y)
    if ny > 0:
        y = radius * y / ny
    return float(np.linalg.norm(A @ y + b)), y


def _l1_min_box_lp(A, b, lin, radius):
    """Exact min of ||A z + b||_1 - lin.z over the box [-radius, radius]^n."""
    m, n = A.shape
    # vars: z (n, boxed), s (m, >= 0) with s_i >= |(A z + b)_i|
    c = np.concatenate([-np.asarray(lin, dtype=float), np.ones(m)])
    A_ub = []
    b_ub = []
    for i in range(m):
        row = np.concatenate([A[i], np.zeros(m)])
        row[n + i] = -1.0
        A_ub.append(row)
        b_ub.append(-b[i])
        row2 = np.concatenate([-A[i], np.zeros(m)])
        row2[n + i] = -1.0
        A_ub.append(row2)
        b_ub.append(b[i])
    bounds = [(-radius, radius)] * n + [(0.0, None)] * m
    res = linprog(c, A_ub=np.array(A_ub), b_ub=np.array(b_ub), bounds=bounds)
    if res.status != "optimal":
        raise RuntimeError("box l1 LP failed")
    z = res.x[:n]
    return float(np.sum(np.abs(A @ z + b)) - lin @ z), z


def _mm_norm_min(A, b, lin, inner, fnorm, iters=120):
    """min of ||A z + b||_fnorm - lin.z over a convex set, by majorizing the
    norm with a quadratic at the current point; ``inner`` solves the
    quadratic model argmin z^T M z - w.z over the set exactly."""
    m, n = A.shape
    AtA = A.T @ A
    z = inner(np.eye(n) * 1e-12, lin)
    # the origin is always feasible and is where the majorant degenerates
    best_val, best_z = _norm(b, fnorm), np.zeros(n)
    prev = np.inf
    for _ in range(iters):
        r = A @ z + b
        if fnorm == 2:
            t = max(np.linalg.norm(r), 1e-12)
            M = AtA / (2.0 * t)
            w = lin - (A.T @ b) / t
        else:
            ws = np.maximum(np.abs(r), 1e-9)
            M = A.T @ (A / (2.0 * ws[:, None]))
            w = lin - A.T @ (b / ws)
        z = inner(M, w)
        val = _norm(A @ z + b, fnorm) - float(lin @ z)
        if val < best_val:
            best_val, best_z = val, z
        if val > prev - 1e-14:
            break
        prev = val
    return best_val, best_z


@dataclass
class DualInnerReport:
    min_primal: float
    min_dual: float
    max_primal: float
    max_dual: float

    @property
    def min_gap(self):
        return abs(self.min_primal - self.min_dual)

    @property
    def max_gap(self):
        return abs(self.max_primal - self.max_dual)


def dual_inner_problem_check(T, u, fnorm: float = 2.0, ball: str = "l2",
                             radius: float = 1.0, seed: int = 42,
                             starts: int = 16) -> DualInnerReport:
    """min/max over x in B of F(T x) - x.u against the support-function
    dual over the unit ball of the dual norm F*.

    F is the l1 or l2 norm and B an l2 or sup-norm ball.  Minima run by
    majorize-minimize with exact quadratic steps; maxima of the convex
    objectives sit on extreme sets and use sign enumeration, the spherical
    quadratic maximizer, or monotone conditional-gradient ascent.
    """
    T = np.asarray(T, dtype=float)
    u = np.asarray(u, dtype=float)
    m, n = T.shape
    if fnorm not in (1, 2, 1.0, 2.0):
        raise ValueError("fnorm must be 1 or 2")
    if ball not in ("l2", "linf"):
        raise ValueError("ball must be 'l2' or 'linf'")
    fnorm = float(fnorm)

    def inner_primal(M, w):
        return _quad_min_ball(M, w, radius) if ball == "l2" \
            else _quad_min_box(M, w, radius)

    if fnorm == 1.0 and ball == "linf":
        min_primal, _ = _l1_min_box_lp(T, np.zeros(m), u, radius)
    else:
        min_primal, _ = _mm_norm_min(T, np.zeros(m), u, inner_primal, fnorm)

    # dual: - min over F*(y) <= 1 of h_B(u - T^t y)
    hnorm = 2.0 if ball == "l2" else 1.0    # h_B = radius * ||.||_hnorm

    def inner_dual(M, w):
        return _quad_min_ball(M, w, 1.0) if fnorm == 2.0 \
            else _quad_min_box(M, w, 1.0)

    if hnorm == 1.0 and fnorm == 1.0:
        dval, _ = _l1_min_box_lp(-radius * T.T, radius * u, np.zeros(m), 1.0)
    else:
        dval, _ = _mm_norm_min(-radius * T.T, radius * u, np.zeros(m),
                               inner_dual, hnorm)
    min_dual = -dval

    # max over F*(y) <= 1 of h_B(T^t y - u)
    ywit = None
    if fnorm == 1.0:                        # F* ball is a box: vertices
        best = -np.inf
        for s in product((-1.0, 1.0), repeat=m):
            y = np.array(s)
            val = radius * _norm(T.T @ y - u, hnorm)
            if val > best:
                best, ywit = val, y
        max_dual = best
    else:
        if ball == "l2":
            val, ywit = _sphere_norm2_max(T.T, -u, 1.0)
            max_dual = radius * val
        else:                               # h = radius * l1 over the l2 ball
            best = -np.inf
            for s in product((-1.0, 1.0), repeat=n):
                sv = np.array(s)
                val = radius * (np.linalg.norm(T @ sv) - float(sv @ u))
                if val > best:
                    best, ywit = val, None
            max_dual = best

    # max over x in B of F(Tx) - x.u
    if ball == "linf":                      # box vertices, exact
        max_primal = max(_norm(T @ (radius * np.array(s)), fnorm)
                         - radius * float(np.array(s) @ u)
                         for s in product((-1.0, 1.0), repeat=n))
    else:
        def obj(x):
            return _norm(T @ x, fnorm) - float(x @ u)

        def grad(x):
            y = T @ x
            g = T.T @ _dual_vector(y, holder_conjugate(fnorm)) \
                if _norm(y, fnorm) > 0 else np.zeros(n)
            return g - u

        start_list = []
        if ywit is not None:
            g0 = T.T @ ywit - u if fnorm == 1.0 else None
        if fnorm == 2.0 and ywit is not None:
            g0 = T.T @ ywit - u
        if ywit is not None and g0 is not None and np.linalg.norm(g0) > 0:
            start_list.append(radius * g0 / np.linalg.norm(g0))
        for c in range(starts):
            x = _rng_for(seed, 100 + c).normal(size=n)
            start_list.append(radius * x / np.linalg.norm(x))
        best = -np.inf
        for x in start_list:
            for _ in range(300):
                g = grad(x)
                ng = np.linalg.norm(g)
                if ng == 0:
                    break
                xn = radius * g / ng
                if np.allclose(xn, x, atol=1e-15):
                    break
                x = xn
            best = max(best, obj(x))
        max_primal = best
    return DualInnerReport(min_primal, min_dual, max_primal, max_dual)
