import random
from fractions import Fraction

import pytest

from mpdiag import msp_algebra as mp
from mpdiag.cli import composable_triple
from mpdiag.partitions import MultisetPartition, enumerate_msp
from mpdiag.scalars import ONE, X

M = MultisetPartition.parse
D = lambda s: mp.MPElement.basis_element("D", M(s))


@pytest.fixture(scope="module")
def b22():
    return enumerate_msp(2, 2)


def test_k1_matches_partition_algebra_r1():
    # with one colour MP_{1,1} is P_1
    s = M("[[1],[-1]]")
    assert mp.olike_product(s, s) == (X - 2) * mp.MPElement.basis_element("O", s) \
        + (X - 1) * mp.MPElement.basis_element("O", M("[[1,-1]]"))


def test_incompatible_colours_multiply_to_zero():
    one = mp.MPElement.basis_element("D", M("[[1,-1]]", r=1, k=2))
    two = mp.MPElement.basis_element("D", M("[[2,-2]]", r=1, k=2))
    assert (one * two).is_zero()


def test_identity(b22):
    for basis in mp.BASES:
        rng = random.Random(0)
        for p in rng.sample(b22, 20):
            e = mp.MPElement.basis_element(basis, p)
            one = mp.identity_element(2, 2, basis)
            assert one * e == e and e * one == e


def test_products_match_projection(b22):
    rng = random.Random(1)
    for _ in range(150):
        p, q = rng.choice(b22), rng.choice(b22)
        assert mp.dlike_product(p, q) == mp.dlike_product_by_projection(p, q)
        assert mp.olike_product(p, q) == mp.olike_product_by_projection(p, q)


def test_gamma_tilde_matches_bruteforce(b22):
    rng = random.Random(2)
    for _ in range(150):
        p, q = rng.choice(b22), rng.choice(b22)
        assert sorted(mp.gamma_tilde(p, q)) == sorted(mp.gamma_tilde_bruteforce(p, q))


def test_snapshot_independence(b22):
    rng = random.Random(3)
    by_top = {}
    for q in b22:
        by_top.setdefault(q.top_composition(), []).append(q)
    for _ in range(60):
        p = rng.choice(b22)
        q = rng.choice(by_top[p.bottom_composition()])
        assert mp.snapshot_independence_check(p, q)


def test_omega_values():
    assert mp.omega(M("[[1,-1],[1,-1],[2,2,-1,-2]]")) == Fraction(1, 3)
    assert mp.omega(M("[[1,1,2,2,-1,-1,-1,-2]]")) == 1
    assert mp.omega(M("[[1],[1],[-1],[-1]]")) == 2


def test_conversions_round_trip(b22):
    rng = random.Random(4)
    for _ in range(40):
        e = sum((rng.randint(-2, 2) * mp.MPElement.basis_element("D", rng.choice(b22)) for _ in range(3)),
                mp.MPElement.zero("D", 2, 2))
        for target in ("O", "X"):
            assert mp.convert(mp.convert(e, target), "D") == e
        assert mp.convert(e, "X") == mp.O_to_X(mp.d_to_O(e))


def test_multiplication_commutes_with_conversion(b22):
    rng = random.Random(5)
    for _ in range(60):
        p, q, _ = composable_triple(b22, rng)
        dp, dq = (mp.MPElement.basis_element("D", t) for t in (p, q))
        assert mp.convert(dp * dq, "X") == mp.convert(dp, "X") * mp.convert(dq, "X")


@pytest.mark.parametrize("basis", mp.BASES)
def test_associativity(basis):
    rng = random.Random(6)
    B = enumerate_msp(3, 2)
    for _ in range(40):
        e = [mp.MPElement.basis_element(basis, t) for t in composable_triple(B, rng)]
        assert (e[0] * e[1]) * e[2] == e[0] * (e[1] * e[2])


def test_nbw_examples():
    assert mp.nonbasic_profile(M("[[1,-1],[1,1,-2,-2],[2,2,2,-2],[-2,-2]]")).nbw == 10
    assert mp.nonbasic_profile(M("[[1],[1,-1],[1,-2,-2],[2,2],[2,-2,-2,-2]]")).nbw == 9


def test_precedence():
    bars = M("[[1,-1],[1,-1]]")
    merged = M("[[1,1,-1,-1]]")
    assert mp.precedes(bars, merged)
    assert not mp.precedes(merged, bars)
    assert mp.prec_compare(bars, bars) == 0


def test_factorization_example():
    p = M("[[1,-1],[1,2,2,3,-1,-1],[3,-2,-2],[-2]]")
    block = next(b for b in p.blocks if len(b) == 6)
    f = mp.factor_at_block(p, block)
    assert f.restricted == M("[[-1],[-1],[1,-1],[1,2,2,3,-1,-1],[3,-3]]")
    assert f.quotient == M("[[1],[1],[1,-1],[1,-1],[1,-1],[-2],[3,-2,-2]]")
    coeff, ok = mp.factorization_check(p, block)
    assert coeff == X * X / 10 and ok


def test_factor_rejects_basic_block():
    p = M("[[1,-1],[1,1,-1,-1]]")
    with pytest.raises(ValueError):
        mp.factor_at_block(p, next(b for b in p.blocks if len(b) == 2))


def test_generators():
    assert mp.generator_P(2, 1, (2, 0, 1, 2)) == M("[[-1],[1,-1],[1,-1],[2],[3,-3],[4,-4],[4,-4]]")
    assert mp.generator_R((2, 0, 1), (0, 2, 1), (0, 0, 2)) == M("[[3,-3],[3,-3],[1,1,3,-2,-2,-3]]")
    with pytest.raises(ValueError):
        mp.generator_R((1, 0), (0, 2), (0, 0))


def test_q_ladder():
    for m in (1, 2, 3):
        b = (4, 0, 2)
        assert mp.dlike_product(mp.q_element(1, b), mp.q_element(m, b)) == mp.q_ladder_expected(m, b)


def test_span_closure_small():
    assert mp.span_closure([], 2, 2) == 1
    assert mp.span_closure(mp.generating_set(1, 2), 1, 2) == 8
    assert mp.span_closure(mp.generating_set(2, 2), 2, 2) == 95


def test_subgroup_sizes_and_split():
    s = (5, 6, 4, 3, 1, 2, 9, 8, 7)
    within, blocks = mp.split_block_permutation(s, [(1, 2, 4), (3, 5, 6), (8,), (7, 9)])
    assert tuple(within[b - 1] for b in blocks) == s


def test_json_round_trip():
    e = Fraction(1, 4) * X * D("[[1],[1,1,-2,-2],[2,-2,-2]]") + D("[[1],[1,1],[-2,-2],[2,-2,-2]]")
    assert mp.MPElement.from_json(e.to_json()) == e
