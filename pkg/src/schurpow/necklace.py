"""Multilinearized monomials, necklace orbits, and the universal map.

A nonincreasing t-tuple over Z/rZ indexes the monomial x1^(q^i1)...xt^(q^it);
the Frobenius shifts all exponents by one, which on tuples is the cyclic
action "add j mod r, then re-sort".  Symmetrizing a monomial over its
permutation orbit gives the homogeneous symmetric multilinearized
polynomial S_I, whose values land in the subfield fixed by the orbit
stabilizer.  Taken over a set of orbit representatives, these polynomials
linearize every symmetric multilinear map on the extension field; the
checker here verifies that statement rank-exactly at small sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import PreconditionError, TooLargeError
from .fields import GF, FieldSpec, SubfieldEmbedding, field_of_order


@dataclass(frozen=True)
class NeckTuple:
    """A nonincreasing t-tuple of exponents modulo r."""

    r: int
    entries: tuple

    def __post_init__(self):
        e = self.entries
        if any(not 0 <= x < self.r for x in e):
            raise ValueError(f"entries must lie in [0, {self.r})")
        if any(a < b for a, b in zip(e, e[1:])):
            raise ValueError("entries must be nonincreasing")

    @property
    def t(self) -> int:
        return len(self.entries)

    def __le__(self, other):
        return self.entries <= other.entries

    def __lt__(self, other):
        return self.entries < other.entries

    def degree(self, q: int) -> int:
        return sum(q**i for i in self.entries)

    def is_reduced(self) -> bool:
        return self.entries[-1] == 0


def neck(r: int, entries) -> NeckTuple:
    return NeckTuple(r, tuple(int(x) for x in entries))


def boxplus(I: NeckTuple, j: int) -> NeckTuple:
    """Shift all entries by j modulo r and re-sort nonincreasing."""
    return NeckTuple(I.r, tuple(sorted(((x + j) % I.r for x in I.entries), reverse=True)))


def equidistributed(r: int, t: int) -> NeckTuple:
    """The tuple with entries floor((t-m) r / t); the lex bound for orbits."""
    return NeckTuple(r, tuple((t - m) * r // t for m in range(1, t + 1)))


def necklace_representative(I: NeckTuple):
    """The first shift j with I [+] j lexicographically below the bound."""
    bound = equidistributed(I.r, I.t)
    for j in range(I.r):
        cand = boxplus(I, j)
        if cand <= bound:
            return j, cand
    raise AssertionError("every orbit has a representative below the bound")


def gap_sequence(J: NeckTuple) -> tuple:
    """Circular gaps of a reduced tuple; they sum to r."""
    if not J.is_reduced():
        raise PreconditionError("gap sequence is defined for reduced tuples (last entry 0)")
    e = J.entries
    gaps = [J.r - e[0]]
    for a in range(1, J.t):
        gaps.append(e[a - 1] - e[a])
    assert sum(gaps) == J.r
    return tuple(gaps)


def is_balanced(J: NeckTuple) -> bool:
    if not J.is_reduced():
        return False
    lo, hi = J.r // J.t, -(-J.r // J.t)
    return all(g in (lo, hi) for g in gap_sequence(J))


def derived_sequence(J: NeckTuple) -> NeckTuple:
    """The shorter tuple recording which gaps of a balanced J are small."""
    r, t = J.r, J.t
    if r % t == 0:
        raise PreconditionError("derived sequence needs t not dividing r")
    if not is_balanced(J):
        raise PreconditionError("derived sequence is defined for balanced tuples")
    Q = -(-r // t)
    u = t * Q - r
    small = r // t
    gaps = gap_sequence(J)
    bs = tuple(t - (a + 1) for a, g in enumerate(gaps) if g == small)
    assert len(bs) == u
    return NeckTuple(t, tuple(sorted(bs, reverse=True)))


def degree_bound(q: int, r: int, t: int) -> int:
    """Max degree T needed for the representative polynomials when t <= q."""
    return equidistributed(r, t).degree(q)


@dataclass(frozen=True)
class Orbit:
    representative: NeckTuple
    size: int
    members: tuple


@dataclass(frozen=True)
class OrbitTable:
    q: int
    r: int
    t: int
    rep_rule: str
    orbits: tuple

    @property
    def representatives(self):
        return tuple(o.representative for o in self.orbits)

    def max_degree(self) -> int:
        return max(o.representative.degree(self.q) for o in self.orbits)

    def total(self) -> int:
        return sum(o.size for o in self.orbits)


def orbit_table(q: int, r: int, t: int, rep_rule: str = "lex_min", budget: int = 10**6) -> OrbitTable:
    """Full orbit decomposition of the nonincreasing tuples under shifts.

    ``rep_rule`` picks the representative: "lex_min" (which stays below
    the equidistributed bound) or "min_degree" (useful when t > q, where
    lexicographic and degree order disagree).
    """
    if math.comb(r + t - 1, t) > budget:
        raise TooLargeError("tuple space exceeds budget")
    if rep_rule not in ("lex_min", "min_degree"):
        raise ValueError(f"unknown representative rule {rep_rule!r}")
    all_tuples = [
        NeckTuple(r, tuple(sorted(c, reverse=True)))
        for c in itertools.combinations_with_replacement(range(r), t)
    ]
    seen = set()
    orbits = []
    for I in all_tuples:
        if I.entries in seen:
            continue
        members = []
        for j in range(r):
            J = boxplus(I, j)
            if J.entries not in {m.entries for m in members}:
                members.append(J)
        for m in members:
            seen.add(m.entries)
        if rep_rule == "lex_min":
            rep = min(members, key=lambda m: m.entries)
        else:
            rep = min(members, key=lambda m: (m.degree(q), m.entries))
        orbits.append(Orbit(rep, len(members), tuple(sorted(m.entries for m in members))))
    table = OrbitTable(q, r, t, rep_rule, tuple(orbits))
    assert table.total() == math.comb(r + t - 1, t)
    if rep_rule == "lex_min" and t <= q:
        assert table.max_degree() <= degree_bound(q, r, t)
    return table


class MultilinPoly:
    """A t-multilinearized polynomial over GF(q^r): exponents are q-powers."""

    def __init__(self, small: FieldSpec, big: FieldSpec, t: int, coeffs: dict):
        self.small = small
        self.big = big
        self.t = t
        self.coeffs = dict(coeffs)  # exponent tuple in (Z/r)^t -> big value

    def evaluate(self, args) -> int:
        big, q = self.big, self.small.q
        args = [int(a) for a in args]
        out = 0
        for expo, c in self.coeffs.items():
            term = c
            for a, i in zip(args, expo):
                term = big.mul(term, big.pow(a, q**i))
                if term == 0:
                    break
            out = big.add(out, term)
        return out

    def degree(self) -> int:
        q = self.small.q
        return max(sum(q**i for i in expo) for expo in self.coeffs)


def extension_pair(q, r: int):
    small = field_of_order(q)
    big = small if r == 1 else GF(small.p, small.e * r)
    return small, big, SubfieldEmbedding(small, big)


def build_SI(q, r: int, I: NeckTuple) -> MultilinPoly:
    """The symmetrized monomial sum over the permutation orbit of I."""
    small, big, _ = extension_pair(q, r)
    coeffs = {perm: 1 for perm in set(itertools.permutations(I.entries))}
    return MultilinPoly(small, big, I.t, coeffs)


def orbit_size(I: NeckTuple) -> int:
    return len({boxplus(I, j).entries for j in range(I.r)})


def universal_map_check(q, r: int, t: int, rep_rule: str = "lex_min", budget: int = 1 << 20) -> dict:
    """Verify that the representative polynomials linearize symmetric maps.

    Builds the value matrix of all S_I on the multiset basis of the t-th
    symmetric power of GF(q^r) over GF(q), flattens values to GF(q)
    coordinates, and checks the map is bijective: rank equals the multiset
    count, which also equals the sum of orbit sizes.
    """
    small, big, emb = extension_pair(q, r)
    expected = math.comb(r + t - 1, t)
    if expected * big.q > budget:
        raise TooLargeError("evaluation grid exceeds budget")
    table = orbit_table(small.q, r, t, rep_rule)
    reps = table.representatives
    sizes = [o.size for o in table.orbits]
    # basis powers X^m and their Frobenius iterates
    X = big.from_coeffs([0, 1]) if big.e > 1 else 1
    xpow = [1]
    for _ in range(r - 1):
        xpow.append(big.mul(xpow[-1], X))
    frob = np.zeros((r, r), dtype=np.int64)  # frob[m, i] = (X^m)^(q^i)
    for m in range(r):
        v = xpow[m]
        for i in range(r):
            frob[m, i] = v
            v = big.pow(v, small.q)
    mus = list(itertools.combinations_with_replacement(range(r), t))
    rows = np.zeros((len(mus), len(reps) * r), dtype=np.int64)
    subfield_ok = True
    for rowi, mu in enumerate(mus):
        for repi, (I, size) in enumerate(zip(reps, sizes)):
            val = 0
            for perm in set(itertools.permutations(I.entries)):
                term = 1
                for m, i in zip(mu, perm):
                    term = big.mul(term, int(frob[m, i]))
                val = big.add(val, term)
            if big.pow(val, small.q**size) != val:
                subfield_ok = False
            rows[rowi, repi * r : (repi + 1) * r] = emb.coords(val)
    rank = linalg.rank(small, rows)
    return {
        "q": small.q,
        "r": r,
        "t": t,
        "rank": rank,
        "expected": expected,
        "sum_orbit_sizes": sum(sizes),
        "values_in_stated_subfields": subfield_ok,
        "bijective": rank == expected == sum(sizes) and subfield_ok,
        "max_degree": table.max_degree(),
    }
