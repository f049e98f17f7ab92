import random

import pytest

from mpdiag.linalg import matmul
from mpdiag.partition_algebra import diagram_product_single
from mpdiag.partitions import SetPartition, enumerate_msp, enumerate_set_partitions
from mpdiag.tableaux import (Tableau, act_on_SPT, enumerate_SSMPT, enumerate_SSPT,
                             integer_partitions, is_semistandard, is_standard, module_matrix_MP,
                             module_matrix_P, polytabloid, shapes, straighten)

S = SetPartition.parse
T0 = Tableau((3, 2, 1), [(5,)], [[(1, 2), (4,)], [(3,)]])


def test_integer_partitions():
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(integer_partitions(10))) == 42


def test_parse_round_trip():
    text = "(([], [], [5]) / ([1,2], [4]) / ([3]))"
    assert Tableau.parse(text) == T0
    assert str(T0) == text


def test_standardness():
    assert is_standard(T0)
    bad = Tableau((3, 2, 1), [(5,)], [[(4,), (1, 2)], [(3,)]])
    assert not is_standard(bad)
    assert is_semistandard(Tableau((2, 2), [(1,), (1,)], [[(2,), (2,)]]))
    assert not is_standard(Tableau((2, 2), [(1,), (1,)], [[(2,), (2,)]]))


def test_sspt_dimensions_sum_to_bell():
    # P_2(4): dimensions 2, 3, 1, 1 and Bell(4) = 15
    dims = {lam: len(enumerate_SSPT(lam, 2)) for lam in shapes(4, 2)}
    assert dims == {(4,): 2, (3, 1): 3, (2, 2): 1, (2, 1, 1): 1}
    for r in (1, 2, 3):
        assert sum(len(enumerate_SSPT(lam, r)) ** 2 for lam in shapes(2 * r, r)) == \
            len(enumerate_set_partitions(r))


def test_ssmpt_dimension_identity():
    for r, k in [(1, 2), (2, 2), (2, 3)]:
        assert sum(len(enumerate_SSMPT(lam, r, k)) ** 2 for lam in shapes(2 * r, r)) == \
            len(enumerate_msp(r, k))


def test_action_examples():
    f, t = act_on_SPT(S("{{2,-3},{3,-2},{5,-4,-5},{1},{4},{-1}}"), T0)
    assert f.is_constant() and f.constant() == 1
    assert straighten(t) == {Tableau.parse("(([], [1], [4]) / ([2], [5]) / ([3]))"): -1}
    assert act_on_SPT(S("{{1,2,-3},{4,5,-4},{-1},{-2},{3},{-5}}"), T0) is None
    assert act_on_SPT(S("{{1,-1},{2,-2,-3},{3,-4,-5},{4,5}}"), T0) is None


def test_straightening_against_polytabloids():
    rng = random.Random(0)
    shape_cells = [(2, 2, 1), (3, 2), (2, 1, 1, 1)]
    for _ in range(30):
        shape = rng.choice(shape_cells)
        labels = [(i,) for i in range(1, sum(shape[1:]) + 1)]
        rng.shuffle(labels)
        it = iter(labels)
        upper = [[next(it) for _ in range(m)] for m in shape[1:]]
        t = Tableau(shape, [], upper)
        expected = polytabloid(t)
        total = {}
        for s, c in straighten(t).items():
            assert is_standard(s)
            for key, v in polytabloid(s).items():
                total[key] = total.get(key, 0) + c * v
        assert {k: v for k, v in total.items() if v} == expected


def test_P_modules_are_representations():
    n = 4
    sps = enumerate_set_partitions(2)
    for lam in shapes(n, 2):
        mats = {p: module_matrix_P(p, lam, n) for p in sps}
        for p in sps:
            for q in sps:
                c, g = diagram_product_single(p, q)
                assert matmul(mats[p], mats[q]) == [[v * n ** c for v in row] for row in mats[g]]


def test_module_needs_room():
    with pytest.raises(ValueError):
        module_matrix_P(S("{{1,-1},{2,-2}}"), (2, 1), 3)
    with pytest.raises(ValueError):
        module_matrix_MP(enumerate_msp(2, 2)[0], (3, 1), 4 + 1)
