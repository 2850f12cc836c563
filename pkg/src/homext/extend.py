"""Extension operators taking set functions to homogeneous functions on R^n.

All operators are exact on int/Fraction input: weights are differences of
coordinates and every value is a weight-combination of table entries.
Weights that are exactly zero skip the table lookup, so entries at tuples
with an empty component never contribute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .setfn import (CapExceeded, DisjointPairFunction, SetTupleFunction,
                    full_mask, is_chain_tuple, mask_of)

MULTILINEAR_PROBE_CAP = 10 ** 6


@dataclass
class LevelSetDecomposition:
    """Sorted view of one coordinate block.

    ``order`` is the stable non-decreasing permutation (index tie-break),
    ``sorted_values`` the rearranged coordinates with the x_(0) = 0
    convention prepended implicitly, and ``level_masks[i]`` the upper level
    set V^(i+1); level_masks[0] is all of V.
    """

    order: tuple[int, ...]
    sorted_values: tuple
    level_masks: tuple[int, ...]

    def weights(self):
        prev = 0
        out = []
        for v in self.sorted_values:
            out.append(v - prev)
            prev = v
        return out


def level_decomposition(x: Sequence) -> LevelSetDecomposition:
    n = len(x)
    order = tuple(sorted(range(n), key=x.__getitem__))
    sorted_values = tuple(x[i] for i in order)
    masks = [full_mask(n)]
    for i in range(1, n):
        thr = sorted_values[i - 1]
        masks.append(mask_of(j for j in range(n) if x[j] > thr))
    return LevelSetDecomposition(order, sorted_values, tuple(masks))


def _block_terms(x: Sequence) -> list[tuple[object, int]]:
    """(weight, upper-level-set mask) pairs with zero weights dropped.

    Level masks are built incrementally along the sorted order (suffix
    masks of the permutation), which keeps the call cheap; results match
    level_decomposition exactly.
    """
    n = len(x)
    # stable sort: equal coordinates keep index order, the fixed tie-break
    order = sorted(range(n), key=x.__getitem__)
    suffix = [0] * (n + 1)
    for t in range(n - 1, -1, -1):
        suffix[t] = suffix[t + 1] | (1 << order[t])
    terms = []
    prev = 0
    ptr = 0
    for i in range(n):
        v = x[order[i]]
        w = v - prev
        prev = v
        if w == 0:
            continue
        if i == 0:
            mask = suffix[0]
        else:
            thr = x[order[i - 1]]
            while ptr < n and x[order[ptr]] <= thr:
                ptr += 1
            mask = suffix[ptr]
        terms.append((w, mask))
    return terms


def lovasz(f: SetTupleFunction, x: Sequence):
    """Original Lovasz extension of a one-argument set function."""
    if f.k != 1:
        raise ValueError("lovasz expects a one-argument set function")
    if len(x) != f.n:
        raise ValueError(f"expected {f.n} coordinates, got {len(x)}")
    total = 0
    for w, mask in _block_terms(x):
        total += w * f(mask)
    return total


def multilinear(f: SetTupleFunction, xs: Sequence[Sequence]):
    """Piecewise multilinear extension at one coordinate tuple per block."""
    if len(xs) != f.k:
        raise ValueError(f"expected {f.k} blocks, got {len(xs)}")
    blocks = []
    probes = 1
    for x in xs:
        if len(x) != f.n:
            raise ValueError(f"block length {len(x)} != n={f.n}")
        terms = _block_terms(x)
        probes *= max(len(terms), 1)
        blocks.append(terms)
    if probes > MULTILINEAR_PROBE_CAP:
        raise CapExceeded(f"multilinear would probe {probes} > {MULTILINEAR_PROBE_CAP} tuples")
    if all(len(terms) == 1 for terms in blocks):     # single ordering cell
        w = 1
        for (wi, _), in blocks:
            w = w * wi
        return w * f(*(terms[0][1] for terms in blocks)) if w != 0 else 0
    total = 0
    for combo in product(*blocks):
        w = 1
        for wi, _ in combo:
            w = w * wi
        if w == 0:
            continue
        total += w * f(*(m for _, m in combo))
    return total


def diagonal(f: SetTupleFunction, x: Sequence):
    """Diagonal (piecewise polynomial) extension f^M(x, ..., x)."""
    return multilinear(f, [x] * f.k)


def _abs_block_terms(x: Sequence) -> list[tuple[object, int, int]]:
    """(cell width, plus mask, minus mask) over [0, ||x||_inf) breakpoints."""
    n = len(x)
    breaks = sorted({abs(v) for v in x} | {0})
    terms = []
    for lo, hi in zip(breaks, breaks[1:]):
        w = hi - lo
        if w == 0:
            continue
        plus = mask_of(j for j in range(n) if x[j] > lo)
        minus = mask_of(j for j in range(n) if -x[j] > lo)
        terms.append((w, plus, minus))
    return terms


def disjoint_pair_lovasz(f: DisjointPairFunction, x: Sequence):
    """Disjoint-pair Lovasz extension (multiple integral with k = 1)."""
    if f.k != 1:
        raise ValueError("disjoint_pair_lovasz expects k = 1")
    return multiple_integral(f, [x])


def multiple_integral(f: DisjointPairFunction, xs: Sequence[Sequence]):
    """Multiple integral extension over signed level sets.

    The integrand is piecewise constant on the grid of sorted absolute
    breakpoints per block; cells use half-open intervals [b_i, b_{i+1}).
    """
    if len(xs) != f.k:
        raise ValueError(f"expected {f.k} blocks, got {len(xs)}")
    blocks = []
    probes = 1
    for x in xs:
        if len(x) != f.n:
            raise ValueError(f"block length {len(x)} != n={f.n}")
        terms = _abs_block_terms(x)
        probes *= max(len(terms), 1)
        blocks.append(terms)
    if probes > MULTILINEAR_PROBE_CAP:
        raise CapExceeded(f"multiple_integral would probe {probes} cells")
    total = 0
    for combo in product(*blocks):
        w = 1
        for wi, _, _ in combo:
            w = w * wi
        if w == 0:
            continue
        total += w * f(*((p, m) for _, p, m in combo))
    return total


def comonotone_check(xs: Sequence[Sequence]) -> bool:
    """Pairwise comonotonicity: (x_i - x_j)(y_i - y_j) >= 0 for all i, j."""
    n = {len(x) for x in xs}
    if len(n) != 1:
        raise ValueError("blocks must have equal length")
    n = n.pop()
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            x, y = xs[a], xs[b]
            for i in range(n):
                for j in range(i + 1, n):
                    if (x[i] - x[j]) * (y[i] - y[j]) < 0:
                        return False
    return True


def _abs_comonotone_pair(x: Sequence, y: Sequence) -> bool:
    if any(x[i] * y[i] < 0 for i in range(len(x))):
        return False
    ax = [abs(v) for v in x]
    ay = [abs(v) for v in y]
    return comonotone_check([ax, ay])


def absolutely_comonotone_check(xs: Sequence[Sequence]) -> bool:
    """Pairwise: no opposite signs coordinate-wise, and comonotone in
    absolute value.  Equivalent to all signed upper level sets of the
    blocks forming one chain of disjoint pairs."""
    n = {len(x) for x in xs}
    if len(n) != 1:
        raise ValueError("blocks must have equal length")
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if not _abs_comonotone_pair(xs[a], xs[b]):
                return False
    return True


def comaximal_check(x: Sequence, y: Sequence) -> bool:
    """Some index attains the maximum of both vectors."""
    mx, my = max(x), max(y)
    return any(x[i] == mx and y[i] == my for i in range(len(x)))


def upper_level_tuples(xs: Sequence[Sequence]) -> set[tuple[int, ...]]:
    """All multiple upper level sets (V^{t_1}(x^1), ..., V^{t_k}(x^k))."""
    per_block = []
    for x in xs:
        n = len(x)
        masks = {mask_of(j for j in range(n) if x[j] > t) for t in x}
        masks.add(full_mask(n))
        per_block.append(sorted(masks))
    return set(product(*per_block))


def signed_level_tuples(xs: Sequence[Sequence]) -> set[tuple[tuple[int, int], ...]]:
    """All tuples of signed level-set pairs over thresholds t >= 0."""
    per_block = []
    for x in xs:
        n = len(x)
        thresholds = sorted({0} | {abs(v) for v in x})
        pairs = set()
        for t in thresholds:
            plus = mask_of(j for j in range(n) if x[j] > t)
            minus = mask_of(j for j in range(n) if -x[j] > t)
            pairs.add((plus, minus))
        per_block.append(sorted(pairs))
    return set(product(*per_block))


def perfect_pair_membership(xs: Sequence[Sequence], family="chain-comonotone",
                            custom=None) -> bool:
    """Membership of xs in the continuous side D of a domain pair.

    ``chain-comonotone``: nonnegative blocks, pairwise comonotone (the D of
    the inclusion-chain family).  ``diagonal``: all blocks equal and
    nonnegative.  ``custom``: every multiple upper level set must lie in
    the given collection, empty-component tuples excepted.
    """
    if family == "chain-comonotone":
        if any(min(x) < 0 for x in xs):
            return False
        return comonotone_check(xs)
    if family == "diagonal":
        if any(min(x) < 0 for x in xs):
            return False
        first = list(xs[0])
        return all(list(x) == first for x in xs)
    if family == "custom":
        if custom is None:
            raise ValueError("custom family requires the set collection")
        allowed = set(custom)
        for tup in upper_level_tuples(xs):
            if any(m == 0 for m in tup):
                continue
            if tup not in allowed:
                return False
        return True
    raise ValueError(f"unknown family {family!r}")


def induced_set_family(samples: Sequence[Sequence[Sequence]]) -> set[tuple[int, ...]]:
    """A(D) for a sampled D: all nonempty multiple upper level sets."""
    fam = set()
    for xs in samples:
        for tup in upper_level_tuples(xs):
            if all(m != 0 for m in tup):
                fam.add(tup)
    return fam


def chain_family(n: int, k: int) -> set[tuple[int, ...]]:
    """All k-tuples of nonempty sets that form an inclusion chain."""
    fam = set()
    for masks in product(range(1, 1 << n), repeat=k):
        if is_chain_tuple(masks):
            fam.add(masks)
    return fam


def as_fractions(x: Sequence) -> list[Fraction]:
    return [Fraction(v) for v in x]
