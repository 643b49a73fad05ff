import numpy as np
import pytest

from schurpow import lattices as lat
from schurpow.codes import LinearCode
from schurpow.errors import MismatchError, PreconditionError
from schurpow.families import full_space, parity, random_code, reed_muller, repetition
from schurpow.fields import GF

F2 = GF(2)
F3 = GF(3)


def test_naive_binary_carry_is_product():
    lift = lat.build_lifting(2, 3, "naive")
    # eps(u) + eps(v) = eps(u+v) + 2 eps(u*v)
    assert lift.carries[0, 1, 1] == 1
    assert lift.carries[0, 0, 1] == 0
    assert not lift.carries[1].any()  # higher carries vanish


def test_naive_carry_is_overflow_indicator():
    for p in (3, 5, 7):
        lift = lat.build_lifting(p, 2, "naive")
        for x in range(p):
            for y in range(p):
                assert lift.carries[0, x, y] == (1 if x + y >= p else 0)


def test_teichmuller_p3_reps_and_carry():
    lift = lat.build_lifting(3, 2, "teichmuller")
    assert list(lift.reps) == [0, 1, 8]  # 0, 1, -1 mod 9
    F = GF(3)
    for x in range(3):
        for y in range(3):
            expected = F.neg(F.mul(F.mul(x, y), F.add(x, y)))  # -xy(x+y)
            assert lift.carries[0, x, y] == expected


def test_teichmuller_p3_higher_carries_vanish():
    lift = lat.build_lifting(3, 4, "teichmuller")
    assert not lift.carries[1:].any()


def test_teichmuller_reps_are_roots_of_unity():
    for p, a in [(3, 3), (5, 2), (7, 2)]:
        lift = lat.build_lifting(p, a, "teichmuller")
        mod = p**a
        for x in range(1, p):
            assert pow(int(lift.reps[x]), p - 1, mod) == 1
            assert lift.reps[x] % p == x


def test_carry_identity_exhaustive():
    for p, a, kind in [(2, 2, "naive"), (2, 4, "naive"), (3, 2, "teichmuller"), (5, 3, "naive"), (3, 3, "teichmuller")]:
        lift = lat.build_lifting(p, a, kind)
        mod = p**a
        for x in range(p):
            for y in range(p):
                rhs = int(lift.reps[(x + y) % p])
                for j in range(1, a):
                    rhs += p**j * int(lift.reps[lift.carries[j - 1, x, y]])
                assert (int(lift.reps[x]) + int(lift.reps[y])) % mod == rhs % mod


def test_chain_validation():
    with pytest.raises(PreconditionError):
        lat.CodeChain([parity(2, 3)])  # does not end at the full space
    with pytest.raises(PreconditionError):
        lat.CodeChain([full_space(2, 3), repetition(2, 3)])  # not nested


def test_rm_chain_is_lattice():
    chain = lat.CodeChain([reed_muller(2, 1, 2), reed_muller(2, 2, 2)])
    lift = lat.build_lifting(2, chain.depth, "naive")
    rep = lat.is_lattice(chain, lift)
    assert rep.holds
    ok, _ = lat.closure_is_lattice(chain, lift)
    assert ok


def test_violating_chain_detected():
    C0 = parity(2, 3)
    chain = lat.CodeChain([C0, C0, full_space(2, 3)])
    lift = lat.build_lifting(2, 2, "naive")
    rep = lat.is_lattice(chain, lift)
    assert not rep.holds
    assert (0, 1) in [tuple(x) for x in rep.witness["violated"]]
    ok, counter = lat.closure_is_lattice(chain, lift)
    assert not ok and counter is not None
    u, v, s = counter
    mod = lift.modulus
    assert tuple((a + b) % mod for a, b in zip(u, v)) == s


def test_teichmuller_cube_condition_sufficient():
    # kappa_1 is a homogeneous cubic, so C_0^[3] inside C_1 gives a lattice
    C0 = repetition(3, 4)
    C1 = C0  # C0^[3] = C0 here
    chain = lat.CodeChain([C0, C1, full_space(3, 4)])
    lift = lat.build_lifting(3, 2, "teichmuller")
    assert C1.contains_code(C0.power(3))
    rep = lat.is_lattice(chain, lift)
    assert rep.holds
    ok, _ = lat.closure_is_lattice(chain, lift)
    assert ok


def test_criterion_agrees_with_closure_random():
    rng = np.random.default_rng(229)
    for _ in range(40):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 5))
        a = int(rng.integers(1, 3))
        kind = str(rng.choice(["naive", "teichmuller"]))
        codes = []
        prev = random_code(p, n, int(rng.integers(0, n + 1)), rng)
        codes.append(prev)
        for _ in range(a - 1):
            grow = prev.plus(random_code(p, n, int(rng.integers(0, n + 1)), rng))
            codes.append(grow)
            prev = grow
        codes.append(full_space(p, n))
        chain = lat.CodeChain(codes)
        lift = lat.build_lifting(p, a, kind)
        verdict = lat.is_lattice(chain, lift).holds
        closure, _ = lat.closure_is_lattice(chain, lift)
        assert verdict == closure


def test_trivial_chain_gives_Zn():
    chain = lat.CodeChain([full_space(2, 3), full_space(2, 3)])
    lift = lat.build_lifting(2, 1, "naive")
    vol, norm = lat.lattice_invariants(chain, lift)
    assert (vol, norm) == (1, 1)


def test_zero_chain_gives_scaled_Zn():
    n = 3
    chain = lat.CodeChain([LinearCode.zero(F2, n), full_space(2, n)])
    lift = lat.build_lifting(2, 1, "naive")
    vol, norm = lat.lattice_invariants(chain, lift)
    assert (vol, norm) == (2**n, 4)


def test_d4_checkerboard():
    # parity chain: Lambda = D_n, volume 2, min norm 2
    n = 4
    chain = lat.CodeChain([parity(2, n), full_space(2, n)])
    lift = lat.build_lifting(2, 1, "naive")
    vol, norm = lat.lattice_invariants(chain, lift)
    assert (vol, norm) == (2, 2)


def test_rm_chain_invariants_both_liftings():
    # n = 4 chain: repetition in parity in full, depth 2
    chain = lat.CodeChain([repetition(2, 4), parity(2, 4), full_space(2, 4)])
    lift = lat.build_lifting(2, 2, "naive")
    assert repetition(2, 4).power(2).contains_code(repetition(2, 4))
    rep = lat.is_lattice(chain, lift)
    assert rep.holds
    vol, norm = lat.lattice_invariants(chain, lift)
    # index p^((n-k0)+(n-k1)) = 2^(3+1) = 16, and (2,2,0,0)-type vectors give 8;
    # the actual minimum is the doubled unit vector norm 4
    assert vol == 16
    assert norm == 4


def test_invariants_require_lattice():
    C0 = parity(2, 3)
    chain = lat.CodeChain([C0, C0, full_space(2, 3)])
    lift = lat.build_lifting(2, 2, "naive")
    with pytest.raises(PreconditionError):
        lat.lattice_invariants(chain, lift)


def test_lifting_mismatch():
    chain = lat.CodeChain([parity(2, 3), full_space(2, 3)])
    lift = lat.build_lifting(3, 1, "naive")
    with pytest.raises(MismatchError):
        lat.is_lattice(chain, lift)
