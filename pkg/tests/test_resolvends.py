import random
from fractions import Fraction

import pytest

from gform_lab.cyclotomic import CyclotomicNumber
from gform_lab.group_ring import GroupRingElement, NotInvertible
from gform_lab.groups import FiniteAbelianGroup
from gform_lab.number_fields import HomToG, build_field
from gform_lab.resolvends import (
    AlgebraElement,
    ReducedResolvend,
    homomorphism_property_check,
    inverse_resolvend,
    is_normal_basis_generator,
    is_self_dual,
    product_resolvend,
    reduced_resolvend,
    resolvend,
    resolvend_pairing_identity,
    resolvent_norms,
)

C3 = FiniteAbelianGroup((3,))


@pytest.fixture(scope="module")
def k7():
    return build_field(3, 7)


@pytest.fixture(scope="module")
def h7(k7):
    return HomToG.standard(k7)


def rand_element(hom, rng, span=6):
    K = hom.field
    coords = [Fraction(rng.randrange(-span, span + 1)) for _ in range(K.degree)]
    return AlgebraElement(hom, K.element(coords))


def test_resolvend_of_period_reads_off_conjugates(k7, h7):
    a = AlgebraElement(h7, k7.periods[0])
    r = resolvend(a)
    G = h7.group
    # coefficient at (gen^j)^{-1} is sigma^j(eta_0) = eta_j
    for j in range(3):
        s = G.element((j,))
        assert r.coefficient(s.inverse()) == k7.periods[j]


def test_resolvend_linear(k7, h7):
    rng = random.Random(1)
    a = rand_element(h7, rng)
    b = rand_element(h7, rng)
    ab = AlgebraElement(h7, a.alpha + b.alpha)
    assert resolvend(ab) == resolvend(a) + resolvend(b)


def test_group_action_shifts_resolvend(k7, h7):
    rng = random.Random(12)
    a = rand_element(h7, rng)
    G = h7.group
    for s in G.elements():
        lhs = resolvend(a.act(s))
        rhs = resolvend(a) * GroupRingElement.from_element(s)
        assert lhs == rhs


def test_split_identity_resolvend():
    a = AlgebraElement.split_identity(C3)
    assert resolvend(a) == GroupRingElement.one(C3)
    assert is_self_dual(a)
    assert inverse_resolvend(a) is a


def test_normal_basis_generator(k7, h7):
    assert is_normal_basis_generator(AlgebraElement(h7, k7.periods[0]))
    # constants are killed by nontrivial characters
    assert not is_normal_basis_generator(AlgebraElement(h7, CyclotomicNumber.rational(1, 7)))
    assert not is_normal_basis_generator(AlgebraElement(h7, CyclotomicNumber.rational(0, 7)))


def test_pairing_identity_on_period(k7, h7):
    a = AlgebraElement(h7, k7.periods[0])
    assert resolvend_pairing_identity(a, a)
    lhs = resolvend(a) * resolvend(a).involute()
    # coefficients are the Gram row (5, -2, -2) of the period basis
    G = h7.group
    assert lhs.demoted().coefficient(G.identity()) == 5
    assert lhs.demoted().coefficient(G.element((1,))) == -2
    b = AlgebraElement(h7, CyclotomicNumber.rational(0, 7))
    assert resolvend_pairing_identity(a, b)  # both sides zero


def test_pairing_identity_random_sweep(k7, h7):
    rng = random.Random(2)
    for _ in range(20):
        a = rand_element(h7, rng)
        b = rand_element(h7, rng)
        assert resolvend_pairing_identity(a, b)


def test_self_duality_routes_agree(k7, h7):
    rng = random.Random(3)
    a = AlgebraElement(h7, k7.periods[0])
    assert not is_self_dual(a)  # Tr(eta_0^2) = 5
    for _ in range(10):
        x = rand_element(h7, rng)
        assert is_self_dual(x, "gram") == is_self_dual(x, "resolvend")


def test_homomorphism_property(k7, h7):
    rng = random.Random(4)
    for _ in range(5):
        a = rand_element(h7, rng)
        assert homomorphism_property_check(a)


def test_inverse_resolvend(k7, h7):
    rng = random.Random(5)
    while True:
        a = rand_element(h7, rng)
        if is_normal_basis_generator(a):
            break
    a_inv = inverse_resolvend(a)
    assert resolvend(a_inv) * resolvend(a) == GroupRingElement.one(C3)
    assert a_inv.hom.sigma_image == h7.sigma_image.inverse()
    with pytest.raises(NotInvertible):
        inverse_resolvend(AlgebraElement(h7, CyclotomicNumber.rational(1, 7)))


def test_inverse_of_trivial_resolvend(k7, h7):
    # element with resolvend equal to a group element: a(s) = delta-like via
    # rational multiples of the all-ones... use the split algebra instead
    a = AlgebraElement.split_identity(C3)
    assert inverse_resolvend(a) is a


def test_product_with_split_identity(k7, h7):
    rng = random.Random(6)
    a = rand_element(h7, rng)
    e = AlgebraElement.split_identity(C3)
    assert product_resolvend(a, e) is a
    assert product_resolvend(e, a) is a


def test_product_rejects_conductor_clash(k7, h7):
    rng = random.Random(7)
    a = rand_element(h7, rng)
    b = rand_element(h7, rng)
    with pytest.raises(Exception):
        product_resolvend(a, b)


def test_product_resolvend_composite(k7, h7):
    k13 = build_field(3, 13)
    h13 = HomToG.standard(k13)
    a1 = AlgebraElement(h7, k7.periods[0])
    a2 = AlgebraElement(h13, k13.periods[0])
    a = product_resolvend(a1, a2)
    assert a.hom.field.conductor == 91
    assert resolvend(a) == resolvend(a1) * resolvend(a2)
    # self-duality multiplies: neither factor is self-dual here, but the
    # resolvend identity itself was verified inside product_resolvend
    assert a.hom.sigma_image == h7.group.element((1,))


def test_reduced_resolvend_orbits(k7, h7):
    rng = random.Random(8)
    G = h7.group
    for _ in range(5):
        a = rand_element(h7, rng)
        r = resolvend(a)
        red = ReducedResolvend(r)
        for t in G.elements():
            shifted = r * GroupRingElement.from_element(t)
            assert ReducedResolvend(shifted) == red
        b = rand_element(h7, rng)
        if not (resolvend(b) == r):
            rb = ReducedResolvend(resolvend(b))
            in_same_orbit = any(
                resolvend(b) == r * GroupRingElement.from_element(t) for t in G.elements()
            )
            assert (rb == red) == in_same_orbit


def test_reduction_commutes_with_inverse(k7, h7):
    rng = random.Random(9)
    while True:
        a = rand_element(h7, rng)
        if is_normal_basis_generator(a):
            break
    G = h7.group
    reductions = []
    for t in G.elements():
        at = AlgebraElement(h7, a.value_at(t))  # same right-orbit as a
        reductions.append(reduced_resolvend(inverse_resolvend(at)))
    assert all(r == reductions[0] for r in reductions)


def test_zero_element_edge_cases(k7, h7):
    zero = AlgebraElement(h7, CyclotomicNumber.rational(0, 7))
    assert not is_self_dual(zero)
    assert not is_normal_basis_generator(zero)


def test_resolvend_is_injective_spot(k7, h7):
    rng = random.Random(10)
    seen = []
    for _ in range(10):
        a = rand_element(h7, rng)
        r = resolvend(a)
        for b_alpha, rb in seen:
            if not (a.alpha == b_alpha):
                assert not (r == rb)
        seen.append((a.alpha, r))


def test_reduction_commutes_with_product(k7, h7):
    k13 = build_field(3, 13)
    h13 = HomToG.standard(k13)
    G = h7.group
    a1 = AlgebraElement(h7, k7.periods[0])
    a2 = AlgebraElement(h13, k13.periods[0])
    base = reduced_resolvend(product_resolvend(a1, a2))
    for t in G.elements():
        shifted = AlgebraElement(h7, a1.value_at(t))  # same reduced class as a1
        assert reduced_resolvend(product_resolvend(shifted, a2)) == base


def test_resolvent_norms_divisibility(k7, h7):
    # an integral generator of the maximal order only meets the ramified prime
    a = AlgebraElement(h7, k7.periods[0])
    norms = resolvent_norms(a)
    for chi, nrm in norms.items():
        assert nrm.denominator == 1
        n = int(nrm)
        if not chi.is_trivial:
            assert n != 0
            while n % 7 == 0:
                n //= 7
            assert abs(n) == 1, "resolvent norm has a prime outside the ramified set"
