import pytest

from triwidth.perms import ALL_PERMS, Permutation4


def test_identity():
    e = Permutation4.identity()
    assert e.is_identity()
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation4((0, 1, 2, 2))


def test_compose_order():
    # (p * q)(i) = p(q(i))
    p = Permutation4((1, 0, 2, 3))
    q = Permutation4((0, 2, 1, 3))
    assert (p * q)(1) == p(q(1)) == 2
    for i in range(4):
        assert (p * q)(i) == p(q(i))


def test_inverse():
    for p in ALL_PERMS:
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_transposition():
    t = Permutation4.transposition(1, 3)
    assert t(1) == 3 and t(3) == 1 and t(0) == 0 and t(2) == 2
    assert t.sign() == -1


def test_sign_multiplicative():
    for p in ALL_PERMS[:8]:
        for q in ALL_PERMS[::5]:
            assert (p * q).sign() == p.sign() * q.sign()


def test_all_perms_count():
    assert len(ALL_PERMS) == 24
    assert len(set(ALL_PERMS)) == 24
