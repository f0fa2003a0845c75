"""The 25-generator quantum supermatrix algebra and its comultiplication."""

import pytest

from qmink.algebra import check_confluence
from qmink.scalars import ONE, Q, QINV
from qmink.supergroup import (build_slq41, comultiplication_respects_rules,
                              comultiply, general_minor, minor)


def rank(pres, name):
    return pres.generator(name).rank


def test_generator_layout():
    pres = build_slq41()
    assert pres.ngens == 25
    assert sum(pres.parities) == 8  # a[i,5], a[5,j] for i,j <= 4
    assert pres.generator("a[5,5]").parity == 0
    assert pres.generator("a[1,5]").parity == 1
    assert len(pres.rules) == 300 + 8  # every unordered pair plus odd squares


def test_rule_lookup_examples():
    pres = build_slq41()
    r = pres.rule_for((rank(pres, "a[1,2]"), rank(pres, "a[1,1]")))
    assert r == {(rank(pres, "a[1,1]"), rank(pres, "a[1,2]")): Q}
    r = pres.rule_for((rank(pres, "a[5,2]"), rank(pres, "a[5,1]")))
    assert r == {(rank(pres, "a[5,1]"), rank(pres, "a[5,2]")): -QINV}
    r = pres.rule_for((rank(pres, "a[2,1]"), rank(pres, "a[1,2]")))
    assert r == {(rank(pres, "a[1,2]"), rank(pres, "a[2,1]")): ONE}


def test_manin_confluence():
    rep = check_confluence(build_slq41())
    assert rep.ok
    assert not rep.failures
    assert len(rep.overlaps) == 2500


def test_comultiply_unit_and_generator():
    pres = build_slq41()
    assert comultiply(pres.one()).terms == {((), ()): ONE}
    d = comultiply(pres.gen("a[1,1]"))
    expected = {}
    for k in range(1, 6):
        u = (rank(pres, "a[1,%d]" % k),)
        v = (rank(pres, "a[%d,1]" % k),)
        expected[(u, v)] = ONE
    assert d.terms == expected


def test_comultiplication_is_algebra_map():
    results = comultiplication_respects_rules()
    assert len(results) == 308
    assert all(ok for _lhs, ok in results)


def test_minor_values():
    pres = build_slq41()
    d12 = minor(1, 2)
    assert d12.value == pres.word(["a[1,1]", "a[2,2]"]) \
        - pres.word(["a[1,2]", "a[2,1]"]).scale(QINV)
    assert d12.parity() == 0
    d55 = minor(5, 5)
    assert d55.value == pres.word(["a[5,1]", "a[5,2]"])
    assert d55.parity() == 0
    d15 = minor(1, 5)
    assert d15.value == pres.word(["a[1,1]", "a[5,2]"]) \
        - pres.word(["a[1,2]", "a[5,1]"]).scale(QINV)
    assert d15.parity() == 1


def test_minor_index_validation():
    with pytest.raises(ValueError):
        minor(2, 1)
    with pytest.raises(ValueError):
        minor(5, 4)
    with pytest.raises(ValueError):
        minor(0, 1)


def test_general_minor():
    pres = build_slq41()
    m = general_minor((3, 4), (3, 4))
    assert m.value == pres.word(["a[3,3]", "a[4,4]"]) \
        - pres.word(["a[3,4]", "a[4,3]"]).scale(QINV)
    m2 = general_minor((3, 4), (4, 5))
    assert m2.value == pres.word(["a[3,4]", "a[4,5]"]) \
        - pres.word(["a[3,5]", "a[4,4]"]).scale(QINV)
    assert general_minor((1, 2), (1, 2)).value == minor(1, 2).value
    with pytest.raises(ValueError):
        general_minor((4, 3), (1, 2))
    with pytest.raises(ValueError):
        general_minor((1, 2), (5, 5))


def test_repeated_row_minor_vanishes():
    # a[k,1] a[k,2] - q^-1 a[k,2] a[k,1] is zero for an even row
    pres = build_slq41()
    for k in (1, 2, 3, 4):
        v = pres.word(["a[%d,1]" % k, "a[%d,2]" % k]) \
            - pres.word(["a[%d,2]" % k, "a[%d,1]" % k]).scale(QINV)
        assert v.is_zero()


def test_comultiply_requires_the_right_algebra():
    from qmink.supergroup import build_mq2
    with pytest.raises(ValueError):
        comultiply(build_mq2().one())
