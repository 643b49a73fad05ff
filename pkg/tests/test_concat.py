import math

import numpy as np
import pytest

from schurpow import concat, metrics, necklace
from schurpow.codes import LinearCode
from schurpow.errors import PreconditionError
from schurpow.families import random_code, reed_solomon, repetition
from schurpow.fields import GF


def test_symbol_map_t1_is_a_basis():
    sm = concat.build_symbol_map(2, 3, 1)
    assert sm.m == 3  # C(3, 1)


def test_symbol_map_sizes():
    assert concat.build_symbol_map(2, 3, 2).m == math.comb(4, 2) == 6
    assert concat.build_symbol_map(3, 2, 3).m == math.comb(4, 3) == 4
    assert concat.build_symbol_map(3, 2, 2).m == math.comb(3, 2) == 3


def test_symbol_map_requires_small_t():
    with pytest.raises(PreconditionError):
        concat.build_symbol_map(2, 2, 3)


def test_symbol_map_injective():
    sm = concat.build_symbol_map(2, 3, 2)
    big = sm.emb.big
    images = {tuple(sm.apply(np.array([x], dtype=np.int64))) for x in big.elements()}
    assert len(images) == big.q


def test_concatenate_repetition():
    F4 = GF(2, 2)
    sm = concat.build_symbol_map(2, 2, 2)
    C = repetition(F4, 3)
    inner = concat.concatenate(C, sm)
    assert inner.n == 3 * sm.m
    assert inner.k == 2  # k * r = 1 * 2


def test_concatenate_dimension_random():
    F4 = GF(2, 2)
    sm = concat.build_symbol_map(2, 2, 2)
    rng = np.random.default_rng(19)
    for _ in range(10):
        n = int(rng.integers(1, 5))
        C = random_code(F4, n, int(rng.integers(0, n + 1)), rng)
        inner = concat.concatenate(C, sm)
        assert inner.k == 2 * C.k
        if C.k:
            assert metrics.dmin(inner) >= metrics.dmin(C)


def test_power_bound_rs_outer():
    # q=3, r=2, t=2: outer code over GF(9), T = 3 + 1 = 4
    F9 = GF(3, 2)
    sm = concat.build_symbol_map(3, 2, 2)
    assert necklace.degree_bound(3, 2, 2) == 4
    C = reed_solomon(F9, 4, 2)
    rep = concat.verify_power_bound(C, sm)
    assert rep.holds


def test_power_bound_repetition_outer():
    F4 = GF(2, 2)
    sm = concat.build_symbol_map(2, 2, 2)
    C = repetition(F4, 3)
    rep = concat.verify_power_bound(C, sm)
    assert rep.holds
    assert rep.exact >= rep.bound


def test_power_bound_q2_r3():
    F8 = GF(2, 3)
    sm = concat.build_symbol_map(2, 3, 2)
    assert necklace.degree_bound(2, 3, 2) == 3
    C = LinearCode(F8, 3, [[1, 1, 1], [0, 1, 3]])
    rep = concat.verify_power_bound(C, sm)
    assert rep.holds


@pytest.mark.parametrize("q,t,r", [(2, 2, 2), (2, 2, 3), (3, 2, 2), (3, 3, 2)])
def test_power_bound_random_sample(q, t, r):
    sm = concat.build_symbol_map(q, r, t)
    big = sm.emb.big
    rng = np.random.default_rng(500 + 10 * q + r + t)
    for _ in range(8):
        n = int(rng.integers(2, 4))
        k = int(rng.integers(1, n + 1))
        C = random_code(big, n, k, rng)
        assert concat.verify_power_bound(C, sm).holds
