"""Hypothesis property sweeps for the exact-arithmetic cores."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from gform_lab.cyclotomic import CyclotomicNumber
from gform_lab.group_ring import GroupRingElement, fourier, fourier_inverse
from gform_lab.groups import FiniteAbelianGroup
from gform_lab.stickelberger import DualLatticeElement, integrality_check

C9 = FiniteAbelianGroup((9,))
C33 = FiniteAbelianGroup((3, 3))

small_fractions = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
)


def cyclo(level):
    from gform_lab.arith import euler_phi

    return st.lists(
        small_fractions, min_size=euler_phi(level), max_size=euler_phi(level)
    ).map(lambda cs: CyclotomicNumber(level, cs))


@settings(max_examples=60, deadline=None)
@given(a=cyclo(9), b=cyclo(9), c=cyclo(9))
def test_cyclotomic_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    if not a.is_zero():
        assert (a * a.inverse()).is_one()


@settings(max_examples=40, deadline=None)
@given(a=cyclo(7), k=st.sampled_from([1, 2, 3, 4, 5, 6]))
def test_galois_commutes_with_inverse(a, k):
    if a.is_zero():
        return
    assert a.inverse().galois(k) == a.galois(k).inverse()


def group_ring_elements(G):
    elems = G.elements()
    return st.lists(
        st.integers(min_value=-6, max_value=6), min_size=len(elems), max_size=len(elems)
    ).map(lambda cs: GroupRingElement(G, dict(zip(elems, cs))))


@settings(max_examples=40, deadline=None)
@given(a=group_ring_elements(C33), b=group_ring_elements(C33))
def test_involution_is_ring_map(a, b):
    assert (a * b).involute() == a.involute() * b.involute()
    assert (a + b).involute() == a.involute() + b.involute()
    assert a.involute().involute() == a


@settings(max_examples=25, deadline=None)
@given(a=group_ring_elements(C9))
def test_fourier_roundtrip(a):
    assert fourier_inverse(fourier(a)) == a


@settings(max_examples=40, deadline=None)
@given(
    coeffs=st.lists(st.integers(min_value=-5, max_value=5), min_size=9, max_size=9)
)
def test_integrality_iff_kernel_c33(coeffs):
    psi = DualLatticeElement(C33, tuple(coeffs))
    assert integrality_check(psi, propcheck=True) == psi.det().is_trivial
