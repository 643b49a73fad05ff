"""Concatenation that preserves control over powers of the code.

A symbol map made of trace forms whose t-th tensor powers span the
symmetric power turns an outer code over GF(q^r) into a code over GF(q)
whose t-th power still has its minimum distance bounded below by a
higher (degree-bound) power of the outer code.
"""

import numpy as np

from schurpow import GF
from schurpow.concat import build_symbol_map, concatenate, verify_power_bound
from schurpow.families import random_code, reed_solomon
from schurpow.metrics import dmin
from schurpow.necklace import degree_bound

# -- build the symbol map for q=3, r=2, t=2 ------------------------------------
sm = build_symbol_map(3, 2, 2)
print("symbol map size m:", sm.m, "(binomial C(r+t-1, t))")
print("trace multipliers:", sm.multipliers)
print("degree bound T   :", degree_bound(3, 2, 2))

# -- concatenate an outer Reed-Solomon code over GF(9) ---------------------------
F9 = GF(3, 2)
C = reed_solomon(F9, 4, 2)
inner = concatenate(C, sm)
print("\nouter:", C, "-> inner:", inner)
print("dimension multiplies by r:", inner.k == 2 * C.k)
print("dmin outer", dmin(C), "| dmin inner", dmin(inner))

# -- the power bound, exactly -----------------------------------------------------
rep = verify_power_bound(C, sm)
print("\ndmin(inner^[2]) =", rep.exact, ">= dmin(outer^[4]) =", rep.bound, ":", rep.holds)

# -- it keeps holding for random outer codes ---------------------------------------
rng = np.random.default_rng(2)
for trial in range(5):
    C = random_code(F9, 3, int(rng.integers(1, 4)), rng)
    rep = verify_power_bound(C, sm)
    print(f"random outer {C}: lhs={rep.exact} rhs={rep.bound} holds={rep.holds}")
