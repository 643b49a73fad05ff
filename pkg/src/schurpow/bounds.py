"""Bounds on products and powers of codes, each paired with a verifier.

Every operation returns a :class:`BoundReport` carrying the bound value,
the exactly computed quantity it constrains (when budgets allow), and a
``holds`` verdict.  Verifiers never assume their preconditions: stated
hypotheses are evaluated and reported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg, metrics
from .codes import LinearCode
from .errors import PreconditionError, TooLargeError
from .fields import FieldSpec


@dataclass
class BoundReport:
    name: str
    inputs: dict
    bound: int | None
    exact: int | None
    holds: bool
    witness: dict = field(default_factory=dict)

    def as_dict(self):
        def clean(x):
            if isinstance(x, np.ndarray):
                return [int(v) for v in x]
            if isinstance(x, (np.integer,)):
                return int(x)
            if isinstance(x, dict):
                return {k: clean(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [clean(v) for v in x]
            return x

        return {
            "name": self.name,
            "inputs": clean(self.inputs),
            "bound": self.bound,
            "exact": self.exact,
            "holds": bool(self.holds),
            "witness": clean(self.witness),
        }


def _full_support(C: LinearCode) -> bool:
    return len(C.support()) == C.n


def ddual_product_bound(C1: LinearCode, C2: LinearCode) -> BoundReport:
    """Lower bound on the dual distance of a product of full-support codes."""
    if not (_full_support(C1) and _full_support(C2)):
        raise PreconditionError("both codes must have full support")
    d1, d2 = metrics.ddual(C1), metrics.ddual(C2)
    bound = min(C1.n + 1, d1 + d2 - 2)
    exact = metrics.ddual(C1.star(C2))
    return BoundReport(
        "ddual-product",
        {"n": C1.n, "k1": C1.k, "k2": C2.k},
        bound,
        exact,
        exact >= bound,
        {"ddual1": d1, "ddual2": d2},
    )


def dim_product_bound(C1: LinearCode, C2: LinearCode) -> BoundReport:
    """Lower bound on dim(C1 * C2) from the dual distance of C2."""
    if not _full_support(C2):
        raise PreconditionError("the second code must have full support")
    d2 = metrics.ddual(C2)
    n1 = len(C1.support())
    bound = min(n1, C1.k + d2 - 2)
    exact = C1.star(C2).k
    return BoundReport(
        "dim-product",
        {"n": C1.n, "k1": C1.k, "k2": C2.k},
        bound,
        exact,
        exact >= bound,
        {"ddual2": d2, "support1": n1},
    )


def regularity_bounds(C: LinearCode, t0: int = 1, a: int = 1) -> BoundReport:
    """All three upper bounds on the regularity, against the exact value."""
    if not _full_support(C):
        raise PreconditionError("code must have full support")
    dd = metrics.ddual(C)
    if dd < 3:
        raise PreconditionError("code must have no repeated column (dual distance >= 3)")
    n, k = C.n, C.k
    r = C.regularity()
    b_ddual = math.ceil((n - 1) / (dd - 2))
    k0 = C.power(t0).k
    dda = metrics.ddual(C.power(a))
    b_mixed = t0 + a * math.ceil((n - k0) / (dda - 2))
    n2 = len(C.repeated_columns())
    b_stable = n2 - k + 1
    bounds = {"from-ddual": b_ddual, "from-k-and-ddual": b_mixed, "from-projective-length": b_stable}
    return BoundReport(
        "regularity",
        {"n": n, "k": k, "ddual": dd},
        min(bounds.values()),
        r,
        all(r <= b for b in bounds.values()),
        bounds,
    )


def singleton_product(codes, budget: int = 1 << 16) -> BoundReport:
    """Product Singleton bound: an upper bound on dmin_1 of the product."""
    codes = list(codes)
    t = len(codes)
    if t < 2:
        raise PreconditionError("need at least two factors")
    n = codes[0].n
    if t == 2:
        common = set(codes[0].support()) & set(codes[1].support())
        if not common:
            raise PreconditionError("factor supports must intersect")
    else:
        if not all(_full_support(c) for c in codes):
            raise PreconditionError("with three or more factors, all must have full support")
    ks = [c.k for c in codes]
    bound = max(t - 1, n - sum(ks) + t)
    ps = metrics.RankedProductStructure(codes)
    d1 = metrics.dmin_rank(ps, 1, budget)
    d = metrics.dmin(ps.ambient)
    return BoundReport(
        "singleton-product",
        {"n": n, "dims": ks, "t": t},
        bound,
        d1,
        d <= d1 <= bound,
        {"dmin": d, "dmin_rank1": d1},
    )


def kashyap_pair(C1: LinearCode, C2: LinearCode):
    """Greedy witness for the high-dimension case of the product Singleton.

    Returns ``(c1, c2, A1, A2, j)`` where the codeword product c1 * c2 has
    weight exactly 1 at coordinate j.
    """
    if not (_full_support(C1) and _full_support(C2)):
        raise PreconditionError("both codes must have full support")
    n = C1.n
    if C1.k + C2.k <= n:
        raise PreconditionError("dimensions must satisfy k1 + k2 > n")
    F = C1.field
    H = [C1.dual().G, C2.dual().G]
    A = [[], []]
    j_found = None
    for j in range(n):
        placed = False
        for i in (0, 1):
            cols = A[i] + [j]
            if linalg.rank(F, H[i][:, cols]) == len(cols):
                A[i].append(j)
                placed = True
                break
        if not placed:
            j_found = j
            break
    assert j_found is not None, "greedy must stop before exhausting the columns"

    words = []
    for i, C in enumerate((C1, C2)):
        Hi = H[i]
        c = np.zeros(n, dtype=np.int64)
        c[j_found] = 1
        if A[i]:
            # solve sum_{l in A_i} x_l H[:, l] = -H[:, j]
            M = Hi[:, A[i]].T  # rows indexed by A_i
            rhs = F.neg(Hi[:, j_found])
            x = linalg.solve_left(F, M, rhs)
            assert x is not None, "dependence discovered by the greedy scan"
            c[A[i]] = x
        assert not linalg.matmul(F, Hi, c.reshape(-1, 1)).any()
        words.append(c)
    prod = F.mul(words[0], words[1])
    assert int(np.count_nonzero(prod)) == 1 and prod[j_found] != 0
    return words[0], words[1], tuple(A[0]), tuple(A[1]), j_found


def weight_bounds(C1: LinearCode, C2: LinearCode, factors=None, budget: int = 1 << 16) -> BoundReport:
    """The generalized-weight inequalities for a product, all index ranges.

    ``factors``, when given, equips C1 with the product rank function of
    those factors for the rank-constrained family; otherwise C1 carries
    the trivial rank function.
    """
    if not _full_support(C2):
        raise PreconditionError("the second code must have full support")
    d2 = metrics.ddual(C2)
    P = C1.star(C2)
    failures = []
    w1 = metrics.generalized_weights(C1)
    wp = metrics.generalized_weights(P) if P.k else []
    for i in range(1, C1.k + 1):
        m = min(w1[i - 1] - i, d2 - 2)
        for j in range(1, i + m + 1):
            if j <= len(wp) and not (wp[j - 1] <= w1[i - 1] - i - m + j):
                failures.append(("weights", i, j))
    if _full_support(C1):
        wdp = metrics.generalized_weights(P.dual()) if P.k < P.n else []
        wd1 = metrics.generalized_weights(C1.dual()) if C1.k < C1.n else []
        for i in range(1, C1.n - P.k + 1):
            idx = i + d2 - 2
            if i <= len(wdp) and idx <= len(wd1):
                if not (wdp[i - 1] >= wd1[idx - 1]):
                    failures.append(("dual-weights", i, idx))
    # rank-constrained distances
    base = metrics.RankedProductStructure(factors if factors else [C1])
    prod_rank = metrics.RankedProductStructure((factors if factors else [C1]) + [C2])
    for i in (1, 2):
        if i > C1.k:
            break
        try:
            lhs = metrics.dmin_rank(prod_rank, i, budget)
            rhs = metrics.dmin_rank(base, i, budget)
        except TooLargeError:
            break
        if not lhs <= max(1, rhs - d2 + 2):
            failures.append(("rank-distance", i))
    return BoundReport(
        "weight-bounds",
        {"n": C1.n, "k1": C1.k, "k2": C2.k},
        None,
        None,
        not failures,
        {"failures": failures, "ddual2": d2},
    )


def filtration_bound(C: LinearCode, Cp: LinearCode, chain) -> BoundReport:
    """Lower bound on dim(C * C') from a filtration of C by subcodes."""
    chain = list(chain)
    if not chain or chain[0].k != 0:
        chain = [LinearCode.zero(C.field, C.n)] + chain
    for small, big in zip(chain, chain[1:]):
        if not big.contains_code(small):
            raise PreconditionError("chain is not nested")
    if chain[-1] != C:
        raise PreconditionError("chain must end at the code itself")
    total = 0
    pieces = []
    for small, big in zip(chain, chain[1:]):
        T = sorted(set(big.support()) - set(small.support()))
        if not T:
            pieces.append(0)
            continue
        pa = LinearCode(C.field, len(T), big.G[:, T])
        pb = LinearCode(C.field, len(T), Cp.G[:, T])
        d = pa.star(pb).k
        pieces.append(d)
        total += d
    exact = C.star(Cp).k
    return BoundReport(
        "filtration",
        {"n": C.n, "k": C.k, "kprime": Cp.k, "steps": len(chain) - 1},
        total,
        exact,
        total <= exact,
        {"pieces": pieces},
    )


def roos_bound(A: LinearCode, B: LinearCode, C: LinearCode, budget: int = 1 << 24) -> BoundReport:
    """The Roos-style lower bound on dmin(C) from a pair (A, B)."""
    n = A.n
    pre = {
        "product-orthogonal": (A.star(B)).dual().contains_code(C),
        "A-full-support": _full_support(A),
    }
    dminA = metrics.dmin(A, budget) if A.k else None
    ddualB = metrics.ddual(B, budget)
    pre["parameter-inequality"] = (
        dminA is not None and A.k + dminA + ddualB >= n + 3
    )
    bound = A.k + ddualB - 1
    exact = metrics.dmin(C, budget) if C.k else None
    if not all(pre.values()):
        return BoundReport(
            "roos", {"n": n, "dimA": A.k}, bound, exact, False,
            {"preconditions": pre, "dminA": dminA, "ddualB": ddualB},
        )
    holds = exact is None or exact >= bound
    return BoundReport(
        "roos", {"n": n, "dimA": A.k}, bound, exact, holds,
        {"preconditions": pre, "dminA": dminA, "ddualB": ddualB},
    )


def ecp_check(A: LinearCode, B: LinearCode, C: LinearCode, t: int, budget: int = 1 << 24) -> BoundReport:
    """Which of the four error-correcting-pair conditions hold for (A, B)."""
    n = C.n
    conds = {
        "i-product-orthogonal": (A.star(B)).dual().contains_code(C),
        "ii-dimA": A.k > t,
        "iii-dminA": A.k > 0 and C.k > 0 and metrics.dmin(A, budget) > n - metrics.dmin(C, budget),
        "iv-ddualB": metrics.ddual(B, budget) > t,
    }
    return BoundReport(
        "error-correcting-pair",
        {"n": n, "t": t, "dimA": A.k, "dimB": B.k},
        None,
        None,
        all(conds.values()),
        conds,
    )


def subspace_count(q: int, n: int, k: int) -> int:
    """Gaussian binomial: the number of k-dimensional subspaces of GF(q)^n."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def all_subspaces(F: FieldSpec, n: int, k: int):
    """Yield every [n, k] code over F, one canonical rref matrix each."""
    for pivots in itertools.combinations(range(n), k):
        free_pos = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j not in pivots and j > pivots[i]
        ]
        base = np.zeros((k, n), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for vals in itertools.product(range(F.q), repeat=len(free_pos)):
            G = base.copy()
            for (i, j), v in zip(free_pos, vals):
                G[i, j] = v
            yield LinearCode(F, n, G)


def fundamental_function(F: FieldSpec, n: int, d: int, t: int, budget: int = 1 << 20) -> int:
    """Exact max dimension of a code whose t-th power has distance >= d."""
    if d > n:
        return 0
    total = sum(subspace_count(F.q, n, k) for k in range(1, n + 1))
    if total > budget:
        raise TooLargeError(f"{total} subspaces exceed budget {budget}")
    for k in range(n, 0, -1):
        for C in all_subspaces(F, n, k):
            if metrics.dmin(C.power(t)) >= d:
                return k
    return 0
