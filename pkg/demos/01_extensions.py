"""Extensions of set functions: from tables to homogeneous functions.

A set function f on subsets of V = {0,...,n-1} extends to R^n by
interpolating between the indicator vectors along upper level sets.  This
walk-through builds the classical one-argument extension, the two-block
multilinear extension, and the signed multiple-integral extension, and
shows the closed forms they reproduce.
"""

from fractions import Fraction

import numpy as np

from homext.extend import (absolutely_comonotone_check, comonotone_check,
                           diagonal, disjoint_pair_lovasz, lovasz,
                           multilinear, multiple_integral)
from homext.setfn import (DisjointPairFunction, SetTupleFunction, mask_of,
                          popcount)
from homext.structures import WeightedGraph

print(__doc__)

# --- the cut function of a path and its total-variation extension ----------
g = WeightedGraph.path(3)
cut = g.cut_function()
x = [Fraction(1, 2), Fraction(1), Fraction(0)]
print("path 0-1-2, cut function extended at x = (1/2, 1, 0):")
print("  value:", lovasz(cut, x), " (equals sum over edges of |x_i - x_j|)")

# indicator consistency: the extension interpolates the table exactly
for mask in (0b001, 0b011, 0b101):
    ind = [Fraction((mask >> i) & 1) for i in range(3)]
    print(f"  at indicator of {bin(mask)}: extension={lovasz(cut, ind)}"
          f"  table={cut(mask)}")

# --- two-block extension: ordered adjacent pairs ----------------------------
print("\nordered adjacent pairs f(A, B) = #{(i, j) adjacent, i in A, j in B}:")
fE = g.ordered_edge_count()
rng = np.random.default_rng(0)
xf, yf = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
val = multilinear(fE, [list(xf), list(yf)])
closed = sum(g.W[i, j] * (xf[i] * yf[j] + xf[j] * yf[i])
             for i in range(3) for j in range(i + 1, 3))
print(f"  multilinear extension {float(val):.6f}  closed form {closed:.6f}")

# the diagonal of the extension of #(A & B) is the squared 2-norm
fint = SetTupleFunction(3, 2, lambda a, b: Fraction(popcount(a & b)))
print("  diagonal of #(A&B) at (1,2,3):", diagonal(fint, [1, 2, 3]),
      " = 1^2 + 2^2 + 3^2")

# --- signed extension over disjoint set pairs -------------------------------
print("\nsigned extension of the support size #(A+ | A-):")
fsupp = DisjointPairFunction(2, 1, lambda pr: Fraction(popcount(pr[0] | pr[1])))
print("  at x = (1, -2):", disjoint_pair_lovasz(fsupp, [1, -2]), " = |x|_1")

fpair = DisjointPairFunction(
    2, 2, lambda a, b: Fraction(popcount(a[0] | a[1]) * popcount(b[0] | b[1])))
print("  two blocks, product of support sizes at (1,-2), (-3,1):",
      multiple_integral(fpair, [[1, -2], [-3, 1]]), " = |x|_1 |y|_1")

# --- comonotone vectors are the continuous face of inclusion chains ---------
print("\ncomonotonicity (the continuous form of inclusion chains):")
print("  (1,2) vs (0,5):", comonotone_check([[1, 2], [0, 5]]))
print("  (1,2) vs (5,0):", comonotone_check([[1, 2], [5, 0]]))
print("  signed variant (1,-1) vs (2,-1):",
      absolutely_comonotone_check([[1, -1], [2, -1]]))
print("  signed variant (1,-2) vs (2,-1):",
      absolutely_comonotone_check([[1, -2], [2, -1]]))
