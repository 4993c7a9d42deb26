import pytest

from gform_lab.groups import (
    Character,
    EnumerationBoundError,
    FiniteAbelianGroup,
    GroupSpecError,
    character_value_exponent,
    enumerate_elements,
    galois_twist,
)


def test_group_validation():
    FiniteAbelianGroup((3,))
    FiniteAbelianGroup((3, 9))
    FiniteAbelianGroup(())
    with pytest.raises(GroupSpecError):
        FiniteAbelianGroup((1,))
    with pytest.raises(GroupSpecError):
        FiniteAbelianGroup((3, 5))  # 3 does not divide 5


def test_from_spec():
    assert FiniteAbelianGroup.from_spec("3,9").invariant_factors == (3, 9)
    with pytest.raises(GroupSpecError):
        FiniteAbelianGroup.from_spec("3,5")
    with pytest.raises(GroupSpecError):
        FiniteAbelianGroup.from_spec("")


def test_enumeration_order():
    c3 = FiniteAbelianGroup((3,))
    assert [e.exponents for e in enumerate_elements(c3)] == [(0,), (1,), (2,)]
    c33 = FiniteAbelianGroup((3, 3))
    elems = enumerate_elements(c33)
    assert len(elems) == 9
    assert elems[0].is_identity
    trivial = FiniteAbelianGroup(())
    assert [e.exponents for e in enumerate_elements(trivial)] == [()]


def test_enumeration_bound():
    big = FiniteAbelianGroup((10007,)) if False else FiniteAbelianGroup((101, 101))
    with pytest.raises(EnumerationBoundError):
        enumerate_elements(big)


def test_element_arithmetic_and_order():
    g = FiniteAbelianGroup((3, 9))
    s = g.element((1, 2))
    t = g.element((2, 8))
    assert (s * t).exponents == (0, 1)
    assert (s**-1).exponents == s.inverse().exponents == (2, 7)
    assert g.element((0, 3)).order() == 3
    assert g.element((1, 0)).order() == 3
    assert g.element((1, 1)).order() == 9
    assert g.identity().order() == 1


def test_character_values():
    c3 = FiniteAbelianGroup((3,))
    chi = c3.character((1,))
    s = c3.element((1,))
    assert character_value_exponent(chi, s) == 1
    assert character_value_exponent(chi**2, s) == 2
    c9 = FiniteAbelianGroup((9,))
    assert character_value_exponent(c9.character((3,)), c9.element((3,))) == 0


def test_character_bilinearity_exhaustive():
    for facs in [(3,), (9,), (3, 3), (2, 4)]:
        g = FiniteAbelianGroup(facs)
        m = g.exponent
        for chi in g.characters():
            for s in g.elements():
                for t in g.elements():
                    lhs = character_value_exponent(chi, s * t)
                    rhs = character_value_exponent(chi, s) + character_value_exponent(chi, t)
                    assert lhs == rhs % m


def test_dual_pairing_is_perfect():
    for facs in [(3,), (5,), (9,), (3, 3), (2, 4), (7, 7), (100,)]:
        g = FiniteAbelianGroup(facs)
        chars = g.characters()
        for s in g.elements():
            if s.is_identity:
                continue
            assert any(character_value_exponent(chi, s) for chi in chars), (facs, s)


def test_group_mismatch_rejected():
    a = FiniteAbelianGroup((3,))
    b = FiniteAbelianGroup((9,))
    with pytest.raises(GroupSpecError):
        character_value_exponent(a.character((1,)), b.element((1,)))


def test_galois_twist_examples():
    c7 = FiniteAbelianGroup((7,))
    s = c7.element((1,))
    assert galois_twist(s, 2, -1).exponents == (4,)  # 2^{-1} = 4 mod 7
    assert galois_twist(s, 1, 1) == s
    c9 = FiniteAbelianGroup((9,))
    t = c9.element((3,))  # order 3
    assert galois_twist(t, 2, 1).exponents == (6,)
    with pytest.raises(ValueError):
        galois_twist(t, 3, 1)


def test_galois_twist_is_automorphism_and_invertible():
    g = FiniteAbelianGroup((3, 9))
    for k in [2, 4, 5]:
        for s in g.elements():
            for t in g.elements():
                assert galois_twist(s * t, k, 1) == galois_twist(s, k, 1) * galois_twist(t, k, 1)
            assert galois_twist(galois_twist(s, k, -1), k, 1) == s
            assert galois_twist(s, k, 0) == s
