"""Construction D: lattices from nested chains of codes mod p.

Lifting codewords digit by digit into Z/p^a produces a lattice only when
the carries of coordinatewise addition stay inside the next code of the
chain.  For the naive lifting of GF(2) the first carry is exactly the
componentwise product, so the criterion reads: each code's square sits in
its successor.  The Teichmuller lifting makes the carries polynomial.
"""

import numpy as np

from schurpow.families import full_space, parity, reed_muller, repetition
from schurpow.lattices import (
    CodeChain,
    build_lifting,
    closure_is_lattice,
    is_lattice,
    lattice_invariants,
)

# -- liftings and their carries -----------------------------------------------
naive = build_lifting(2, 2, "naive")
print("naive GF(2) reps     :", list(naive.reps))
print("first carry table    :")
print(naive.carries[0])

tei = build_lifting(3, 2, "teichmuller")
print("\nTeichmuller GF(3) reps mod 9:", list(tei.reps))
print("first carry (equals -xy(x+y) on GF(3)):")
print(tei.carries[0])

# -- a chain that fails and a chain that works -----------------------------------
P = parity(2, 3)
bad = CodeChain([P, P, full_space(2, 3)])
lift2 = build_lifting(2, 2, "naive")
rep = is_lattice(bad, lift2)
ok, counter = closure_is_lattice(bad, lift2)
print("\nparity-parity chain is a lattice:", rep.holds, "| closure check:", ok)
print("violating sum:", counter)

good = CodeChain([repetition(2, 4), parity(2, 4), full_space(2, 4)])
rep = is_lattice(good, lift2)
print("\nrepetition-parity chain is a lattice:", rep.holds)
vol, norm = lattice_invariants(good, lift2)
print("volume (index in Z^n):", vol, "| minimum squared norm:", norm)

# -- Reed-Muller chains satisfy the square criterion -------------------------------
rm = CodeChain([reed_muller(2, 1, 2), reed_muller(2, 2, 2)])
lift1 = build_lifting(2, 1, "naive")
print("\nRM(1,2) chain accepted:", is_lattice(rm, lift1).holds)

# depth-2 ternary chain with the Teichmuller lifting: cubes must nest
C0 = repetition(3, 4)
chain3 = CodeChain([C0, C0, full_space(3, 4)])
lift3 = build_lifting(3, 2, "teichmuller")
print("ternary repetition chain (cube condition):", is_lattice(chain3, lift3).holds)
vol, norm = lattice_invariants(chain3, lift3)
print("volume:", vol, "| minimum squared norm:", norm)
