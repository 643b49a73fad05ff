"""Componentwise products and powers of linear codes, from the ground up.

The star product of two codes of the same length is the linear span of
all componentwise products of their codewords.  Iterating it gives the
powers C, C*C, C*C*C, ... whose dimensions stabilize after finitely many
steps; this script walks through the basic behaviour on Reed-Solomon and
parity codes.
"""

import numpy as np

from schurpow import GF, LinearCode
from schurpow.families import full_space, parity, reed_solomon, repetition
from schurpow.metrics import ddual, dmin

# -- the semiring of codes ---------------------------------------------------
# The repetition code (all-ones span) is the unit: C * 1 = C.

C = reed_solomon(5, 5, 3)
one = repetition(5, 5)
print("C           :", C)
print("C * 1 == C  :", C.star(one) == C)
print("C^[0] == 1  :", C.power(0) == one)

# -- dimension and distance sequences ----------------------------------------
# For the [5,3] Reed-Solomon code: evaluating degree <= 2 polynomials at
# the five points of GF(5).  Its square evaluates degree <= 4 polynomials,
# which is everything, so the dimension sequence saturates at n = 5.

print("\ndimension sequence:", C.dim_sequence(5))
print("distance sequence :", [dmin(P) for P in C.power_sequence(4)])
print("dual distances    :", [ddual(P) for P in C.power_sequence(4)])
print("regularity        :", C.regularity())

# The number of quadratic relations among products of basis rows: monomials
# 1*x^2 and x*x evaluate identically, giving exactly one relation.
print("relations in degree 2:", C.dim_It(2))

# -- squares can be surprisingly large ---------------------------------------
# The [3,2] parity code squares to the whole space: products of even-weight
# words already span everything.

P = parity(2, 3)
print("\nparity [3,2] squared == full space:", P.power(2) == full_space(2, 3))

# -- a product whose minimum weight needs a *sum* of products -----------------
# Two [7,2] binary codes whose elementary products all have weight >= 2,
# while a sum of three of them has weight 1: the span matters.

F2 = GF(2)
A = LinearCode(F2, 7, [[1, 0, 0, 1, 1, 1, 1], [0, 1, 1, 1, 1, 0, 0]])
B = LinearCode(F2, 7, [[1, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1]])
prod = A.star(B)
print("\ndmin(A * B)              :", dmin(prod))
print("contains (1000000)       :", prod.contains_word([1, 0, 0, 0, 0, 0, 0]))
weights = set()
for a in A.words():
    for b in B.words():
        w = int(np.count_nonzero(F2.mul(a, b)))
        if w:
            weights.add(w)
print("elementary product weights:", sorted(weights))
