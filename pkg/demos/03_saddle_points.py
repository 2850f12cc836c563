"""Saddle points: the discrete game, its continuous extension, and the
path-graph counterexample.

A two-block set function f/g may have no discrete saddle while the
extension does.  On the path 0-1-2 with f = ordered adjacent pairs and
g = #(A & B), the discrete minimax and maximin are 2 and 1, yet the
continuous extension has the saddle value sqrt(2) (the top adjacency
eigenvalue).  For payoff games the extension value is the classical
mixed-strategy LP value.
"""

from fractions import Fraction

import numpy as np

from homext.setfn import SetTupleFunction, mask_members, popcount
from homext.structures import WeightedGraph
from homext.verify import (TwoBlockMinimax, discrete_minimax, game_lp_value)

print(__doc__)

g3 = WeightedGraph.path(3)
f = g3.ordered_edge_count()
gfun = SetTupleFunction(3, 2, lambda a, b: Fraction(popcount(a & b)))
dmm, dmx = discrete_minimax(f, gfun)
print(f"path graph: discrete minimax = {dmm}, maximin = {dmx}  (no saddle)")

eng = TwoBlockMinimax(f, gfun)
print(f"continuous extension: inf sup = {eng.infsup():.10f}")
print(f"                      sup inf = {eng.supinf():.10f}")
print(f"both equal sqrt(2) = {np.sqrt(2):.10f}")

print("\nrandom payoff game, mixed strategies:")
rng = np.random.default_rng(1)
C = rng.integers(-3, 4, size=(3, 3)).astype(float)
print(C)
fv = [[sum(C[i, j] for i in mask_members(a) for j in mask_members(b))
       for b in range(8)] for a in range(8)]
gv = [[popcount(a) * popcount(b) for b in range(8)] for a in range(8)]
eng = TwoBlockMinimax.from_tables(fv, gv, 3, 3)
v = game_lp_value(C)
print(f"extension inf sup = {eng.infsup():.8f}")
print(f"extension sup inf = {eng.supinf():.8f}")
print(f"LP game value     = {v:.8f}")
