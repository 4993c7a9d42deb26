from fractions import Fraction

import pytest

from gform_lab.cyclotomic import CyclotomicNumber
from gform_lab.groups import FiniteAbelianGroup
from gform_lab.number_fields import (
    FieldConstructionError,
    FractionalIdeal,
    HomToG,
    build_field,
    compose_fields,
    different,
    dual_lattice,
    prime_above,
    sqrt_inverse_different,
    trace_gram,
)

Z = CyclotomicNumber.zeta


@pytest.fixture(scope="module")
def k7():
    return build_field(3, 7)


@pytest.fixture(scope="module")
def k13():
    return build_field(3, 13)


@pytest.fixture(scope="module")
def k91(k7, k13):
    return compose_fields(k7, k13)


def test_conductor7_periods(k7):
    assert k7.periods[0] == Z(7) + Z(7, 6)
    assert k7.periods[1] == Z(7, 3) + Z(7, 4)
    assert k7.periods[2] == Z(7, 2) + Z(7, 5)
    assert k7.discriminant == 49
    assert k7.gram == ((5, -2, -2), (-2, 5, -2), (-2, -2, 5))


def test_conductor7_gram_against_bruteforce(k7):
    # oracle: trace of x = sum of the three Galois conjugates, computed in the
    # ambient cyclotomic field without the degree shortcut
    def tr(x):
        acc = CyclotomicNumber.rational(0, 7)
        for j in range(3):
            acc = acc + k7.sigma(x, j)
        return acc.to_rational()

    for i in range(3):
        for j in range(3):
            assert tr(k7.periods[i] * k7.periods[j]) == k7.gram[i][j]


def test_trace_gram_function(k7):
    M = trace_gram(k7, list(k7.periods))
    assert [[int(x) for x in row] for row in M] == [list(r) for r in k7.gram]
    one = CyclotomicNumber.rational(1, 7)
    assert trace_gram(k7, [one])[0][0] == 3


def test_field_rejections():
    with pytest.raises(FieldConstructionError):
        build_field(3, 9)  # wild and non-squarefree
    with pytest.raises(FieldConstructionError):
        build_field(2, 7)  # even degree
    with pytest.raises(FieldConstructionError):
        build_field(3, 11)  # 11 is not 1 mod 3
    with pytest.raises(FieldConstructionError):
        build_field(3, 14)  # 2 is not 1 mod 3


def test_degree5_conductor11():
    k = build_field(5, 11)
    assert k.discriminant == 11**4
    assert len(k.periods) == 5
    A = sqrt_inverse_different(k)
    assert A.norm() == Fraction(1, 11**2)
    # A = L^{-2} for the ramified prime
    L = prime_above(k, 11)
    assert (L**2) * A == k.maximal_order()


def test_sigma_permutes_periods(k7):
    for j in range(3):
        assert k7.sigma(k7.periods[j]) == k7.periods[(j + 1) % 3]
    # coordinate action matches
    assert k7.sigma_coords((1, 2, 3)) == (3, 1, 2)


def test_gram_is_sigma_invariant(k7, k13):
    for K in (k7, k13):
        p = K.degree
        for i in range(p):
            for j in range(p):
                assert K.gram[(i + 1) % p][(j + 1) % p] == K.gram[i][j]


def test_coordinates_roundtrip(k7):
    x = k7.element((1, -2, 5), 3)
    assert k7.coordinates(x) == (Fraction(1, 3), Fraction(-2, 3), Fraction(5, 3))
    with pytest.raises(ValueError):
        k7.coordinates(Z(7))  # zeta_7 itself is not in the cubic field


def test_prime_above_and_ramification(k7):
    L = prime_above(k7, 7)
    assert L.norm() == 7
    assert L.is_integral()
    with pytest.raises(ValueError):
        prime_above(k7, 5)


def test_different_conductor7(k7):
    d = different(k7)
    L = prime_above(k7, 7)
    assert d == L * L
    assert d.norm() == 49  # norm of the different = |disc|


def test_sqrt_inverse_different_conductor7(k7):
    A = sqrt_inverse_different(k7)
    L = prime_above(k7, 7)
    assert A == L.inverse()
    assert A * A == different(k7).inverse()
    assert dual_lattice(A) == A
    # Gram determinant of an A-basis is 1 (unimodular)
    M = trace_gram(k7, A.basis_elements())
    from gform_lab import linalg

    assert linalg.det(M) == 1


def test_dual_lattice_properties(k7):
    O = k7.maximal_order()
    dinv = different(k7).inverse()
    assert dual_lattice(O) == dinv
    assert dual_lattice(dual_lattice(dinv)) == dinv
    A = sqrt_inverse_different(k7)
    assert dual_lattice(dual_lattice(A)) == A


def test_ideal_arithmetic_basics(k7):
    L = prime_above(k7, 7)
    O = k7.maximal_order()
    assert L * L.inverse() == O
    assert L**0 == O
    assert (L**3).norm() == 343
    seven = FractionalIdeal(k7, [[7 if i == j else 0 for j in range(3)] for i in range(3)], 1)
    assert L**3 == seven
    assert O.contains_ideal(L)
    assert not L.contains_ideal(O)
    assert L.galois_image() == L  # totally ramified primes are Galois stable


def test_composite_field(k7, k13, k91):
    assert k91.conductor == 91
    assert k91.degree == 3
    assert k91.discriminant == 91**2
    d = different(k91)
    L7 = prime_above(k91, 7)
    L13 = prime_above(k91, 13)
    assert d == (L7 * L13) ** 2
    A = sqrt_inverse_different(k91)
    assert A == (L7 * L13).inverse()
    assert dual_lattice(A) == A
    from gform_lab import linalg

    assert linalg.det(trace_gram(k91, A.basis_elements())) == 1


def test_compose_rejections(k7, k13):
    with pytest.raises(FieldConstructionError):
        compose_fields(k7, k7)  # conductor clash
    with pytest.raises(FieldConstructionError):
        compose_fields(k7, k13, weights=(1, 3))  # weight 0 mod 3 drops the order


def test_hom_to_g(k7):
    h = HomToG.standard(k7)
    G = h.group
    assert h.galois_power(G.element((1,))) == 1
    assert h.galois_power(G.element((2,))) == 2
    hinv = h.inverse_hom()
    assert hinv.galois_power(G.element((1,))) == 2  # sigma^2 maps to gen under h^{-1}
    with pytest.raises(ValueError):
        HomToG(k7, FiniteAbelianGroup((9,)), FiniteAbelianGroup((9,)).element((1,)))
    assert h.product_weights(hinv) == (1, 2)
