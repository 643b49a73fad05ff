"""Structural anatomy of a code: support, slices, algebra, components.

Every code determines a partition of its support into classes of
proportional columns; the one-dimensional slices attached to the classes
span all sufficiently high powers.  The words that multiply the code into
itself form an algebra spanned by block indicators, and reading those
blocks off recovers the finest direct-sum decomposition.
"""

import numpy as np

from schurpow import GF, LinearCode
from schurpow.families import parity, repetition, full_space

F5 = GF(5)

# -- a code with repeated columns and a gap in its support --------------------
C = LinearCode(
    F5,
    7,
    [
        [1, 2, 0, 0, 0, 3, 0],
        [0, 0, 1, 4, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
    ],
)
print("support         :", C.support())
print("n_i sequence    :", C.n_i_sequence(3))

part = C.repeated_columns()
print("column classes  :", part.blocks)

sd = C.slices()
print("representatives :", sd.representatives)
print("slice generators:")
print(sd.generators)

# -- stabilizing algebra and decomposition -----------------------------------
ext, alg = C.stabilizing_algebra()
print("\nproper algebra dimension:", alg.k)
blocks, comps = C.decompose()
print("component blocks        :", blocks.blocks)
for comp in comps:
    print("  component:", comp, "support", comp.support())

# -- high powers are spanned by slice generators ------------------------------
r = C.regularity()
stable = C.power(r)
print("\nregularity", r, "and stable dimension", stable.k)
powered = LinearCode(F5, 7, F5.pow(sd.generators, max(r, 1)))
print("power == span of slice powers:", stable == powered)

# -- the parity code is indecomposable but its square is not ------------------
P = parity(2, 3)
print("\nparity code blocks:", P.decompose()[0].blocks)
print("square blocks     :", P.power(2).decompose()[0].blocks)
print("algebra of parity :", P.stabilizing_algebra()[1] == repetition(2, 3))
print("algebra of square :", P.power(2).stabilizing_algebra()[1] == full_space(2, 3))

# -- symmetry groups flip with the parity of the exponent ----------------------
D = LinearCode(F5, 2, [[1, 2]])
for t in range(1, 5):
    print(f"symmetries of D^[{t}]:", D.power(t).symmetry_group())
