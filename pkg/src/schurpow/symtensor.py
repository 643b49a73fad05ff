"""Symmetric multilinear maps over GF(q) and their tensor decompositions.

A symmetric t-multilinear map V^t -> W is stored by its values on the
multiset basis (one coefficient per nondecreasing index tuple).  The key
question answered here is whether such a map is a sum of elementary
symmetric tensors l^(x)t (x) w, i.e. whether it admits a symmetric
multilinear algorithm; the decision procedure is exact linear algebra
over GF(q), and its agreement with the Frobenius exchange condition is
what the test suite checks.

Also here: the multiplication and trace tensors of an extension field,
exact symmetric / trisymmetric / normalized bilinear complexities at
small sizes, and Waring numbers for scalar sums of t-th powers.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from . import linalg
from .errors import PreconditionError, TooLargeError
from .fields import GF, FieldSpec, SubfieldEmbedding, field_of_order

INFINITE = math.inf


def multisets(vdim: int, t: int):
    """Nondecreasing index tuples: the canonical multiset basis order."""
    return list(itertools.combinations_with_replacement(range(vdim), t))


class SymMultiForm:
    """A symmetric t-multilinear map GF(q)^vdim -> GF(q)^wdim."""

    def __init__(self, field: FieldSpec, vdim: int, wdim: int, t: int, coeffs):
        self.field = field
        self.vdim = int(vdim)
        self.wdim = int(wdim)
        self.t = int(t)
        self.basis = multisets(self.vdim, self.t)
        self.index = {m: i for i, m in enumerate(self.basis)}
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (len(self.basis), self.wdim):
            raise ValueError(f"expected coefficient shape {(len(self.basis), self.wdim)}")
        self.coeffs = coeffs

    @staticmethod
    def zero(field, vdim, wdim, t):
        return SymMultiForm(field, vdim, wdim, t, np.zeros((len(multisets(vdim, t)), wdim), dtype=np.int64))

    @staticmethod
    def random(field, vdim, wdim, t, rng):
        shape = (len(multisets(vdim, t)), wdim)
        return SymMultiForm(field, vdim, wdim, t, rng.integers(0, field.q, shape))

    def coeff(self, idx_tuple):
        """Value on basis vectors indexed by any ordering of the tuple."""
        return self.coeffs[self.index[tuple(sorted(idx_tuple))]]

    def evaluate(self, vectors):
        """Multilinear evaluation at t vectors over GF(q)^vdim."""
        F = self.field
        vectors = [np.asarray(v, dtype=np.int64) for v in vectors]
        assert len(vectors) == self.t
        out = np.zeros(self.wdim, dtype=np.int64)
        for idx in itertools.product(range(self.vdim), repeat=self.t):
            c = 1
            for v, i in zip(vectors, idx):
                c = F.mul(c, int(v[i]))
                if c == 0:
                    break
            if c == 0:
                continue
            out = F.add(out, F.mul(c, self.coeff(idx)))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SymMultiForm)
            and (self.field, self.vdim, self.wdim, self.t) == (other.field, other.vdim, other.wdim, other.t)
            and np.array_equal(self.coeffs, other.coeffs)
        )


class MultiForm:
    """A general (not necessarily symmetric) multilinear map, on basis tuples."""

    def __init__(self, field, vdim, wdim, t, table):
        self.field = field
        self.vdim = vdim
        self.wdim = wdim
        self.t = t
        self.table = table  # dict: index tuple -> W coefficient array

    def __eq__(self, other):
        return (
            isinstance(other, MultiForm)
            and (self.vdim, self.wdim, self.t) == (other.vdim, other.wdim, other.t)
            and all(np.array_equal(self.table[k], other.table[k]) for k in self.table)
        )


def frobenius_reduced(f: SymMultiForm, i: int = 1) -> MultiForm:
    """Collapse q copies of the i-th argument; multilinear because x^q = x."""
    q = f.field.q
    if f.t < q:
        raise PreconditionError(f"need t >= q, got t={f.t} < q={q}")
    tr = f.t - q + 1
    if not 1 <= i <= tr:
        raise PreconditionError(f"slot must satisfy 1 <= i <= {tr}")
    table = {}
    for idx in itertools.product(range(f.vdim), repeat=tr):
        expanded = idx[: i - 1] + (idx[i - 1],) * q + idx[i:]
        table[idx] = f.coeff(expanded)
    return MultiForm(f.field, f.vdim, f.wdim, tr, table)


def is_frobenius_symmetric(f: SymMultiForm):
    """The Frobenius exchange condition; returns (verdict, witness).

    Automatic for t <= q.  Otherwise the first and second Frobenius
    reduced maps are compared on all basis tuples; the witness is the
    first differing tuple of basis indices.
    """
    if f.t <= f.field.q:
        return True, None
    r1 = frobenius_reduced(f, 1)
    r2 = frobenius_reduced(f, 2)
    for idx in itertools.product(range(f.vdim), repeat=f.t - f.field.q + 1):
        if not np.array_equal(r1.table[idx], r2.table[idx]):
            return False, idx
    return True, None


class SymAlgorithm:
    """A decomposition f = sum_j l_j^(x)t (x) w_j, stored as two matrices."""

    def __init__(self, field, t, forms, outputs):
        self.field = field
        self.t = t
        self.forms = np.asarray(forms, dtype=np.int64)  # one linear form per row
        self.outputs = np.asarray(outputs, dtype=np.int64)  # one W vector per row

    @property
    def length(self) -> int:
        return self.forms.shape[0]

    def evaluate(self, vectors):
        F = self.field
        out = np.zeros(self.outputs.shape[1], dtype=np.int64)
        for l, w in zip(self.forms, self.outputs):
            c = 1
            for v in vectors:
                val = 0
                for li, vi in zip(l, np.asarray(v, dtype=np.int64)):
                    val = F.add(val, F.mul(int(li), int(vi)))
                c = F.mul(c, val)
            out = F.add(out, F.mul(c, w))
        return out

    def verify(self, f: SymMultiForm) -> bool:
        """Exact agreement with f on a spanning set (all basis multisets)."""
        eye = np.eye(f.vdim, dtype=np.int64)
        for mu in f.basis:
            if not np.array_equal(self.evaluate([eye[i] for i in mu]), f.coeff(mu)):
                return False
        return True

    def as_dict(self):
        return {
            "field": self.field.header(),
            "t": self.t,
            "terms": [
                {"form": [int(x) for x in l], "output": [int(x) for x in w]}
                for l, w in zip(self.forms, self.outputs)
            ],
        }


def projective_forms(F: FieldSpec, vdim: int, budget: int = 1 << 16) -> np.ndarray:
    """All nonzero linear forms on GF(q)^vdim up to scalar, one per row."""
    count = (F.q**vdim - 1) // (F.q - 1)
    if count > budget:
        raise TooLargeError(f"{count} projective forms exceed budget {budget}")
    out = []
    for packed in range(1, F.q**vdim):
        v = [(packed // F.q**i) % F.q for i in range(vdim)]
        if next(x for x in v if x) == 1:
            out.append(v)
    return np.array(out, dtype=np.int64)


def _power_rows(F: FieldSpec, forms: np.ndarray, basis) -> np.ndarray:
    """Matrix of l^(x)t restricted to the multiset basis, one row per form."""
    rows = np.ones((forms.shape[0], len(basis)), dtype=np.int64)
    for c, mu in enumerate(basis):
        col = np.ones(forms.shape[0], dtype=np.int64)
        for i in mu:
            col = F.mul(col, forms[:, i])
        rows[:, c] = col
    return rows


def symmetric_algorithm(f: SymMultiForm, budget: int = 1 << 16):
    """A symmetric multilinear algorithm for f, or None when none exists.

    Solves, per output coordinate, for coefficients on the elementary
    symmetric powers of all projective linear forms.
    """
    F = f.field
    forms = projective_forms(F, f.vdim, budget)
    M = _power_rows(F, forms, f.basis)
    sols = []
    for w in range(f.wdim):
        x = linalg.solve_left(F, M, f.coeffs[:, w])
        if x is None:
            return None
        sols.append(x)
    outputs = np.stack(sols, axis=1)
    keep = np.any(outputs != 0, axis=1)
    return SymAlgorithm(F, f.t, forms[keep], outputs[keep])


def sym_frob_dimension(F: FieldSpec, t: int, vdim: int, budget: int = 1 << 16) -> int:
    """Dimension of the span of elementary symmetric t-th powers of forms."""
    forms = projective_forms(F, vdim, budget)
    return linalg.rank(F, _power_rows(F, forms, multisets(vdim, t)))


# ---------------------------------------------------------------------------
# Multiplication and trace tensors of an extension field
# ---------------------------------------------------------------------------


def _tower(q, k: int):
    small = field_of_order(q)
    big = small if k == 1 else GF(small.p, small.e * k)
    emb = SubfieldEmbedding(small, big)
    X = big.from_coeffs([0, 1]) if big.e > 1 else 1
    xpow = [1]
    for _ in range(2 * k):
        xpow.append(big.mul(xpow[-1], X))
    return small, big, emb, xpow


def mult_tensor(q, k: int, t: int = 2) -> SymMultiForm:
    """The t-wise multiplication map of GF(q^k) as a GF(q)-multilinear map.

    V = W = GF(q^k) with the polynomial basis X^m; coefficients are the
    coordinate vectors of products of basis elements.
    """
    small, big, emb, xpow = _tower(q, k)
    basis = multisets(k, t)
    coeffs = np.zeros((len(basis), k), dtype=np.int64)
    for i, mu in enumerate(basis):
        prod = 1
        for m in mu:
            prod = big.mul(prod, xpow[m])
        coeffs[i] = emb.coords(prod)
    return SymMultiForm(small, k, k, t, coeffs)


def trace_form(q, k: int, t: int) -> SymMultiForm:
    """The symmetric t-linear form (x_1, ..., x_t) -> Tr(x_1 ... x_t)."""
    small, big, emb, xpow = _tower(q, k)
    basis = multisets(k, t)
    coeffs = np.zeros((len(basis), 1), dtype=np.int64)
    for i, mu in enumerate(basis):
        prod = 1
        for m in mu:
            prod = big.mul(prod, xpow[m])
        coeffs[i, 0] = emb.trace_value(prod)
    return SymMultiForm(small, k, 1, t, coeffs)


def trace_form_vector(q, k: int, a: int) -> np.ndarray:
    """The linear form x -> Tr(a x) in polynomial-basis coordinates."""
    small, big, emb, xpow = _tower(q, k)
    return np.array([emb.trace_value(big.mul(a, xpow[m])) for m in range(k)], dtype=np.int64)


# ---------------------------------------------------------------------------
# Bilinear complexities of field multiplication
# ---------------------------------------------------------------------------


def _mu_setup(q, k: int, budget: int):
    small, big, emb, xpow = _tower(q, k)
    if big.q > budget:
        raise TooLargeError(f"GF({big.q}) exceeds the exhaustive-search budget {budget}")
    basis = multisets(k, 2)
    target = mult_tensor(q, k).coeffs  # (len(basis), k)
    # trace forms, one per field element, in polynomial-basis coordinates
    tvec = np.zeros((big.q, k), dtype=np.int64)
    for a in range(big.q):
        for m in range(k):
            tvec[a, m] = emb.trace_value(big.mul(a, xpow[m]))
    return small, big, emb, basis, target, tvec


def _proj_reps(emb: SubfieldEmbedding, big: FieldSpec):
    """Nonzero elements up to small-field scalars, by leading coordinate."""
    reps = []
    for a in range(1, big.q):
        c = emb.coords(a)
        if next(x for x in c if x) == 1:
            reps.append(a)
    return reps


def mu_sym(q, k: int, budget: int = 16):
    """Symmetric bilinear complexity of GF(q^k) over GF(q), exact."""
    small, big, emb, basis, target, tvec = _mu_setup(q, k, budget)
    reps = _proj_reps(emb, big)
    rows = _power_rows(small, tvec[reps], basis)
    for c in range(1, len(reps) + 1):
        for S in itertools.combinations(range(len(reps)), c):
            sub = rows[list(S)]
            red, piv = linalg.rref(small, sub)
            if all(
                not linalg.reduce_rows(small, red, piv, target[:, w]).any()
                for w in range(k)
            ):
                return c
    raise AssertionError("a symmetric bilinear algorithm always exists")


def _trisym_generators(small, big, emb, basis, tvec, reps):
    """Flattened elementary trisymmetric tensors t_a^(x)2 (x) a."""
    gens = np.zeros((len(reps), len(basis) * big.e // small.e), dtype=np.int64)
    width = big.e // small.e
    for gi, a in enumerate(reps):
        acoords = np.array(emb.coords(a), dtype=np.int64)
        for bi, (m1, m2) in enumerate(basis):
            scal = small.mul(int(tvec[a, m1]), int(tvec[a, m2]))
            gens[gi, bi * width : (bi + 1) * width] = small.mul(scal, acoords)
    return gens


def mu_tri(q, k: int, budget: int = 16):
    """Trisymmetric bilinear complexity; INFINITE when no algorithm exists."""
    small, big, emb, basis, target, tvec = _mu_setup(q, k, budget)
    reps = _proj_reps(emb, big)
    gens = _trisym_generators(small, big, emb, basis, tvec, reps)
    flat_target = target.reshape(-1)
    red, piv = linalg.rref(small, gens)
    if linalg.reduce_rows(small, red, piv, flat_target).any():
        return INFINITE
    for c in range(1, len(reps) + 1):
        for S in itertools.combinations(range(len(reps)), c):
            red, piv = linalg.rref(small, gens[list(S)])
            if not linalg.reduce_rows(small, red, piv, flat_target).any():
                return c
    raise AssertionError("membership in the full span was already checked")


def mu_nrm(q, k: int, budget: int = 16):
    """Normalized trisymmetric complexity: shortest coefficient-one sum.

    Exact bounded-multiplicity knapsack over all nonzero elements (each
    may repeat up to p-1 times; p repetitions cancel in characteristic p).
    """
    small, big, emb, basis, target, tvec = _mu_setup(q, k, budget)
    reps = list(range(1, big.q))
    gens = _trisym_generators(small, big, emb, basis, tvec, reps)
    flat_target = tuple(int(x) for x in mult_tensor(q, k).coeffs.reshape(-1))
    p = small.p
    dp = {tuple(0 for _ in flat_target): 0}
    for g in gens:
        new = dict(dp)
        for state, cost in dp.items():
            acc = np.array(state, dtype=np.int64)
            for c in range(1, p):
                acc = small.add(acc, g)
                key = tuple(int(x) for x in acc)
                if cost + c < new.get(key, math.inf):
                    new[key] = cost + c
        dp = new
    return dp.get(flat_target, INFINITE)


def waring_g(t: int, q, budget: int = 1 << 12):
    """Smallest g with every scalar a sum of g t-th powers; INFINITE if none."""
    F = field_of_order(q)
    if F.q > budget:
        raise TooLargeError(f"GF({F.q}) exceeds budget {budget}")
    powers = {F.pow(x, t) for x in F.elements()}
    full = set(F.elements())
    cur = set(powers)
    g = 1
    while cur != full:
        new = {F.add(a, b) for a in cur for b in powers}
        if new == cur:
            return INFINITE
        cur = new
        g += 1
    return g


def bshouty_check(field: FieldSpec, consts: np.ndarray, t: int) -> bool:
    """Whether t-wise multiplication in the algebra has a symmetric algorithm.

    ``consts[i, j]`` holds the coordinates of e_i * e_j.  For t <= q this
    always holds; beyond that it reduces to a^q = a on a basis, which
    suffices because x -> x^q - x is GF(q)-linear in characteristic p.
    """
    consts = np.asarray(consts, dtype=np.int64)
    n = consts.shape[0]
    if consts.shape != (n, n, n):
        raise PreconditionError("structure constants must be an n x n x n array")
    for i in range(n):
        for j in range(i):
            if not np.array_equal(consts[i, j], consts[j, i]):
                raise PreconditionError("algebra is not commutative")
    if t <= field.q:
        return True

    def mult(x, y):
        out = np.zeros(n, dtype=np.int64)
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                out = field.add(out, field.mul(field.mul(int(x[i]), int(y[j])), consts[i, j]))
        return out

    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        acc = e.copy()
        for _ in range(field.q - 1):
            acc = mult(acc, e)
        if not np.array_equal(acc, e):
            return False
    return True
