import pytest

from origamis.errors import ParseError
from origamis.permutations import (
    cycles_from_string,
    cycles_to_string,
    perm_check,
    perm_commutator,
    perm_compose,
    perm_conjugate,
    perm_cycle_lengths,
    perm_cycles,
    perm_id,
    perm_inverse,
)


def test_compose_convention():
    # (s o t)(x) = s(t(x)): apply t first
    s = (1, 0, 2)  # (0,1)
    t = (0, 2, 1)  # (1,2)
    assert perm_compose(s, t) == (1, 2, 0)  # the 3-cycle 0->1->2->0


def test_inverse_and_identity():
    p = (2, 0, 1, 3)
    assert perm_compose(p, perm_inverse(p)) == perm_id(4)
    assert perm_compose(perm_inverse(p), p) == perm_id(4)


def test_conjugate():
    p = (1, 0, 2)
    s = (0, 2, 1)
    q = perm_conjugate(p, s)
    # s p s^-1 maps s(x) -> s(p(x))
    for x in range(3):
        assert q[s[x]] == s[p[x]]


def test_commutator_of_commuting_is_identity():
    a = (1, 0, 3, 2)
    b = (2, 3, 0, 1)
    assert perm_commutator(a, b) == perm_id(4)


def test_cycles():
    assert perm_cycles((1, 0, 2)) == ((0, 1), (2,))
    assert perm_cycle_lengths((1, 2, 0, 4, 3)) == (3, 2)


def test_cycle_strings_round_trip():
    p = (1, 0, 3, 4, 2)
    s = cycles_to_string(p)
    assert s == "(1,2)(3,4,5)"
    assert cycles_from_string(s, 5) == p
    assert cycles_to_string(perm_id(4)) == "()"
    assert cycles_from_string("()", 4) == perm_id(4)
    assert cycles_from_string("(1,2)(3)", 3) == (1, 0, 2)


def test_cycle_string_errors():
    with pytest.raises(ParseError):
        cycles_from_string("(1,4)", 3)
    with pytest.raises(ParseError):
        cycles_from_string("(1,2)(2,3)", 3)
    with pytest.raises(ParseError):
        cycles_from_string("1,2", 3)


def test_perm_check():
    assert perm_check((1, 0, 2))
    assert not perm_check((1, 1, 2))
    assert not perm_check((0, 3, 1), 3)
