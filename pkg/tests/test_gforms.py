import pytest

from gform_lab.gforms import (
    GForm,
    IsometryResult,
    WitnessNotFound,
    find_self_dual_generator,
    gform_from_A,
    is_self_dual_generator,
    isometry_equivalence,
    norm_one_vectors,
    standard_form,
    verify_inverse_law,
    verify_weak_multiplicativity,
    witness_element,
)
from gform_lab.groups import FiniteAbelianGroup
from gform_lab.number_fields import HomToG, build_field, sqrt_inverse_different
from gform_lab.resolvends import is_self_dual, stickelberger_factorization_check

C3 = FiniteAbelianGroup((3,))
C5 = FiniteAbelianGroup((5,))
C7 = FiniteAbelianGroup((7,))


@pytest.fixture(scope="module")
def k7():
    return build_field(3, 7)


@pytest.fixture(scope="module")
def k13():
    return build_field(3, 13)


@pytest.mark.parametrize("G", [C3, C5, C7])
def test_standard_form_witness_is_identity(G):
    form = standard_form(G)
    w = find_self_dual_generator(form)
    assert w is not None
    assert w.coords == tuple(1 if i == 0 else 0 for i in range(G.order))  # the identity
    assert w.verify()
    # norm-one vectors are exactly the group elements up to sign
    vecs = norm_one_vectors(form)
    assert len(vecs) == G.order
    assert all(sum(abs(x) for x in v) == 1 for v in vecs)


def test_gform_from_A_conductor7(k7):
    form = gform_from_A(k7)
    assert form.rank == 3
    assert abs(form.determinant()) == 1
    assert form.is_positive_definite()
    w = find_self_dual_generator(form)
    assert w is not None and w.verify()


def test_witness_element_is_self_dual_generator(k7):
    form = gform_from_A(k7)
    w = find_self_dual_generator(form)
    a = witness_element(form, w)
    assert is_self_dual(a, "both")
    assert is_self_dual_generator(a, sqrt_inverse_different(k7))


def test_maximal_order_form_is_rejected(k7):
    # the maximal order has Gram determinant 49: fails the unimodular gate
    from gform_lab import linalg
    from gform_lab.groups import FiniteAbelianGroup

    shift = [[int(j == (i + 1) % 3) for j in range(3)] for i in range(3)]
    actions = {
        C3.element((0,)): linalg.identity_matrix(3),
        C3.element((1,)): shift,
        C3.element((2,)): linalg.mat_mul(shift, shift),
    }
    form = GForm(C3, k7.gram, actions, label="(O_K, trace)")
    with pytest.raises(ValueError):
        find_self_dual_generator(form)


def test_witness_corpus_degree3():
    for f in (7, 13, 19, 31):
        K = build_field(3, f)
        form = gform_from_A(K)
        w = find_self_dual_generator(form)
        assert w is not None and w.verify(), f"no witness at conductor {f}"


@pytest.mark.parametrize("f", [37, 43, 61, 67, 73, 79, 97])
def test_witness_full_prime_corpus_to_100(f):
    # witness existence across every prime conductor up to 100
    K = build_field(3, f)
    w = find_self_dual_generator(gform_from_A(K))
    assert w is not None and w.verify()


def test_gform_composite_conductor91(k7, k13):
    from gform_lab.number_fields import compose_fields

    K91 = compose_fields(k7, k13)
    form = gform_from_A(K91)
    assert abs(form.determinant()) == 1
    assert form.is_positive_definite()


def test_witness_degree5_conductor11():
    K = build_field(5, 11)
    form = gform_from_A(K)
    assert form.rank == 5
    w = find_self_dual_generator(form)
    assert w is not None and w.verify()


def test_verify_inverse_law(k7, k13):
    assert verify_inverse_law(k7)
    assert verify_inverse_law(k13)


def test_verify_inverse_law_nonstandard_hom(k7):
    h = HomToG(k7, C3, C3.element((2,)))
    assert verify_inverse_law(k7, h)


def test_weak_multiplicativity_7_13(k7, k13):
    assert verify_weak_multiplicativity(k7, k13)


def test_weak_multiplicativity_rejects_same_conductor(k7):
    with pytest.raises(Exception):
        verify_weak_multiplicativity(k7, k7)


def test_factorization_check_conductor7(k7):
    form = gform_from_A(k7)
    w = find_self_dual_generator(form)
    a = witness_element(form, w)
    result = stickelberger_factorization_check(a)
    assert result.passed
    assert result.witness is not None and not result.witness.is_identity
    # the identity branch (dividing by nothing) must fail for a ramified field
    trivial = stickelberger_factorization_check(a, branch=a.group.identity())
    assert not trivial.passed


def test_isometry_equivalence(k7):
    std = standard_form(C3)
    formA = gform_from_A(k7)
    assert isometry_equivalence(std, std) is IsometryResult.ISOMETRIC
    assert isometry_equivalence(formA, std) is IsometryResult.ISOMETRIC
    assert bool(isometry_equivalence(formA, std))
    std5 = standard_form(C5)
    with pytest.raises(ValueError):
        isometry_equivalence(std, std5)  # different groups


def test_even_order_group_rejected():
    from gform_lab import linalg

    C2 = FiniteAbelianGroup((2,))
    with pytest.raises(ValueError):
        GForm(
            C2,
            linalg.identity_matrix(2),
            {s: linalg.identity_matrix(2) for s in C2.elements()},
        )


def test_isometry_rank_mismatch_detected():
    # two forms over the same group with different determinants
    form = standard_form(C3)
    doubled = GForm(
        C3,
        [[2 if i == j else 0 for j in range(3)] for i in range(3)],
        {s: form.actions[s] for s in C3.elements()},
        label="scaled",
    )
    assert isometry_equivalence(form, doubled) is IsometryResult.NOT_ISOMETRIC
    assert not bool(IsometryResult.INCONCLUSIVE)
