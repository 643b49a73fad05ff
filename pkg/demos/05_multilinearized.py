"""Multilinearized polynomials and necklaces of exponent tuples.

Monomials whose exponents are powers of q are the multilinear functions
on an extension field.  Sorting exponent tuples and letting the Frobenius
shift act turns their classification into a necklace problem: every orbit
has a representative below the equidistributed tuple, which bounds the
degrees needed to linearize all symmetric multilinear maps.
"""

import math

from schurpow.necklace import (
    boxplus,
    build_SI,
    degree_bound,
    derived_sequence,
    equidistributed,
    gap_sequence,
    neck,
    necklace_representative,
    orbit_table,
    universal_map_check,
)

# -- the shift action on nonincreasing tuples ----------------------------------
I = neck(10, (8, 7, 4, 2, 2))
print("I          :", I.entries)
print("I [+] 3    :", boxplus(I, 3).entries)

J = neck(10, (9, 8, 7, 6, 4, 3, 1))
print("J [+] 4    :", boxplus(J, 4).entries)
print("bound      :", equidistributed(10, 7).entries)
j, rep = necklace_representative(J)
print("first good shift:", j, "->", rep.entries)

# -- gaps and the derived necklace ----------------------------------------------
print("\ngaps of the bound:", gap_sequence(equidistributed(10, 7)))
print("derived sequence :", derived_sequence(equidistributed(10, 7)).entries)
print("matches          :", derived_sequence(equidistributed(10, 7)) == equidistributed(7, 4))

# -- orbit tables ------------------------------------------------------------------
for q, r, t in [(2, 2, 3), (2, 3, 3)]:
    table = orbit_table(q, r, t)
    print(f"\norbits for q={q}, r={r}, t={t} (total {table.total()} = C({r+t-1},{t})):")
    for o in table.orbits:
        print(f"  rep {o.representative.entries}  size {o.size}")
    print("  max degree:", table.max_degree(), " bound:", degree_bound(q, r, t))

# -- the polynomials themselves -------------------------------------------------
S = build_SI(2, 3, neck(3, (2, 1, 0)))
print("\nS_(2,1,0) over GF(8) has", len(S.coeffs), "monomials of degree", S.degree())
vals = {S.evaluate([x, y, z]) for x in range(8) for y in range(8) for z in range(8)}
print("its values:", sorted(vals), "(it lands in the prime field)")

# -- the universal isomorphism -----------------------------------------------------
for q, r, t in [(2, 2, 3), (2, 3, 3), (3, 2, 2)]:
    rep = universal_map_check(q, r, t)
    print(
        f"\nuniversal map q={q}, r={r}, t={t}: rank {rep['rank']}"
        f" = C({r+t-1},{t}) = {math.comb(r+t-1,t)}; bijective: {rep['bijective']}"
    )
