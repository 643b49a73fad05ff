"""Concatenation of codes over GF(q^r) down to GF(q) via trace forms.

The symbol map stacks m = C(r+t-1, t) trace forms whose t-th tensor powers
span the symmetric power of the dual space; for t <= q such a spanning
family always exists, and the universal isomorphism from the necklace
module guarantees that the minimum distance of the t-th power of the
concatenated code is controlled by a higher power of the outer code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg, metrics, necklace, symtensor
from .bounds import BoundReport
from .codes import LinearCode
from .errors import MismatchError, PreconditionError
from .fields import FieldSpec, SubfieldEmbedding


@dataclass
class SymbolMap:
    """m trace forms on GF(q^r), injective jointly, with spanning t-th powers."""

    emb: SubfieldEmbedding
    t: int
    multipliers: tuple  # elements a of the big field defining x -> Tr(a x)
    tables: np.ndarray  # (m, q^r) lookup: tables[j][x] = Tr(a_j x)

    @property
    def m(self) -> int:
        return len(self.multipliers)

    def apply(self, word: np.ndarray) -> np.ndarray:
        """Blockwise image of an outer word: length n*m over the small field."""
        word = np.asarray(word, dtype=np.int64)
        return self.tables[:, word].T.reshape(-1)


def build_symbol_map(q, r: int, t: int) -> SymbolMap:
    """Select trace forms greedily until their t-th powers span.

    Requires t <= q, which guarantees the target rank C(r+t-1, t) is
    reachable; elements are scanned in packed-encoding order.
    """
    small, big, emb = necklace.extension_pair(q, r)
    if t > small.q:
        raise PreconditionError(f"need t <= q, got t={t} > q={small.q}")
    target = math.comb(r + t - 1, t)
    basis_pows = [big.from_coeffs([0] * m + [1]) if big.e > 1 else 1 for m in range(r)]
    mus = symtensor.multisets(r, t)
    chosen = []
    rows = []
    rank = 0
    for a in range(1, big.q):
        form = [emb.trace_value(big.mul(a, bp)) for bp in basis_pows]
        row = np.ones(len(mus), dtype=np.int64)
        for c, mu in enumerate(mus):
            v = 1
            for i in mu:
                v = small.mul(v, form[i])
            row[c] = v
        cand = np.array(rows + [row], dtype=np.int64)
        newrank = linalg.rank(small, cand)
        if newrank > rank:
            rows.append(row)
            chosen.append(a)
            rank = newrank
        if rank == target:
            break
    assert rank == target, "spanning is guaranteed for t <= q"
    tables = np.zeros((len(chosen), big.q), dtype=np.int64)
    xs = np.arange(big.q, dtype=np.int64)
    for j, a in enumerate(chosen):
        tables[j] = emb.trace_array(big.mul(a, xs))
    # joint injectivity: the forms span the dual space
    form_matrix = np.array([[tables[j][bp] for bp in basis_pows] for j in range(len(chosen))])
    assert linalg.rank(small, form_matrix) == r
    return SymbolMap(emb, t, tuple(chosen), tables)


def concatenate(C: LinearCode, sm: SymbolMap) -> LinearCode:
    """The concatenated [n*m, k*r] code over the small field."""
    if C.field != sm.emb.big:
        raise MismatchError("outer code is not over the symbol map's big field")
    big, r = sm.emb.big, sm.emb.r
    X = big.from_coeffs([0, 1]) if big.e > 1 else 1
    rows = []
    for g in C.G:
        lam = 1
        for _ in range(r):
            rows.append(sm.apply(big.mul(lam, g)))
            lam = big.mul(lam, X)
    out = LinearCode(sm.emb.small, C.n * sm.m, np.array(rows, dtype=np.int64) if rows else None)
    assert out.k == C.k * r
    return out


def verify_power_bound(C: LinearCode, sm: SymbolMap, t: int | None = None) -> BoundReport:
    """Exact check that dmin of the t-th concatenated power dominates
    dmin of the T-th outer power, T the representative degree bound."""
    t = sm.t if t is None else t
    small, big = sm.emb.small, sm.emb.big
    r = sm.emb.r
    if t != sm.t:
        raise PreconditionError("power must match the symbol map's arity")
    uni = necklace.universal_map_check(small.q, r, t)
    if not uni["bijective"]:
        raise PreconditionError("universal decomposition is not available")
    T = necklace.degree_bound(small.q, r, t)
    inner = concatenate(C, sm)
    lhs = metrics.dmin(inner.power(t)) if C.k else None
    rhs = metrics.dmin(C.power(T)) if C.k else None
    holds = C.k == 0 or lhs >= rhs
    dim_ok = inner.k == r * C.k
    return BoundReport(
        "concatenation-power",
        {"q": small.q, "r": r, "t": t, "T": T, "n": C.n, "k": C.k, "m": sm.m},
        rhs,
        lhs,
        holds and dim_ok,
        {"dmin_concat_power": lhs, "dmin_outer_power": rhs, "dim_concat": inner.k},
    )
