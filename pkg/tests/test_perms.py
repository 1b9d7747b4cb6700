import pytest

from origami_veech.perms import (NotBijection, check_perm, cycle_index, cycles,
                                 identity, inv, is_transitive, mul, perm_order)


def test_composition_convention():
    # (p * q)(i) = p(q(i)): q acts first.  Guards the package-wide rule.
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert mul(p, q) == (1, 0, 2)
    assert mul(q, p) == (2, 1, 0)


def test_check_perm():
    assert check_perm((2, 0, 1)) == (2, 0, 1)
    with pytest.raises(NotBijection):
        check_perm((0, 0, 1))
    with pytest.raises(NotBijection):
        check_perm((0, 1, 3))


def test_identity_inv():
    assert identity(4) == (0, 1, 2, 3)
    p = (3, 1, 0, 2)
    assert mul(p, inv(p)) == identity(4)
    assert mul(inv(p), p) == identity(4)


def test_cycles():
    assert cycles((1, 0, 2)) == [(0, 1), (2,)]
    assert cycle_index((1, 0, 2)) == (0, 0, 1)
    assert perm_order((1, 0, 2)) == 2
    assert perm_order((1, 2, 0, 4, 3)) == 6


def test_is_transitive():
    assert is_transitive(((1, 0),), 2)
    assert not is_transitive(((0, 1),), 2)
    assert not is_transitive((), 0)
