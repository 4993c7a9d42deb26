"""G-forms over Z, self-dual generator searches, and the instance checks of
the inverse and product laws for trace forms on square roots of inverse
differents.

A form is a lattice in coordinates (rows), an exact Gram matrix, and the
right-action matrices of the group on coordinates. Witnesses found by the
enumeration are always re-verified from scratch: full delta-orthonormality of
the group orbit plus two-sided lattice equality, never trust in the search
path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import linalg
from .groups import FiniteAbelianGroup, GroupElement
from .number_fields import (
    FractionalIdeal,
    HomToG,
    PeriodField,
    compose_fields,
    sqrt_inverse_different,
)
from .resolvends import (
    AlgebraElement,
    inverse_resolvend,
    is_self_dual,
    product_resolvend,
)


class WitnessNotFound(RuntimeError):
    """The exhaustive candidate set contained no self-dual generator."""


class GForm:
    """Unimodular positive-definite G-form in explicit coordinates: row
    vectors, v . gram . w^T pairing, right action v -> v @ M_s."""

    def __init__(self, group: FiniteAbelianGroup, gram, actions, label: str = "",
                 field: PeriodField | None = None, hom: HomToG | None = None,
                 basis_num=None, basis_den: int = 1):
        self.group = group
        self.gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        self.rank = len(self.gram)
        self.actions = {s: tuple(tuple(int(x) for x in row) for row in m) for s, m in actions.items()}
        self.label = label or f"form of rank {self.rank} over {group}"
        self.field = field
        self.hom = hom
        self.basis_num = basis_num
        self.basis_den = basis_den
        self._validate()

    def _validate(self):
        if self.group.order % 2 == 0:
            raise ValueError("G-forms are only handled for groups of odd order")
        for row in self.gram:
            if len(row) != self.rank:
                raise ValueError("Gram matrix is not square")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix is not symmetric")
        elems = self.group.elements()
        if set(self.actions) != set(elems):
            raise ValueError("need one action matrix per group element")
        gram = [list(r) for r in self.gram]
        for s, m in self.actions.items():
            mg = linalg.mat_mul([list(r) for r in m], gram)
            mgmt = linalg.mat_mul(mg, linalg.transpose([list(r) for r in m]))
            if not linalg.mat_eq(mgmt, gram):
                raise ValueError(f"form is not invariant under {s}")
        # the action matrices must represent the group
        for s in elems:
            for t in elems:
                prod = linalg.mat_mul(
                    [list(r) for r in self.actions[s]], [list(r) for r in self.actions[t]]
                )
                if not linalg.mat_eq(prod, [list(r) for r in self.actions[s * t]]):
                    raise ValueError("action matrices do not compose")

    def pair(self, v, w) -> Fraction:
        acc = Fraction(0)
        for i, a in enumerate(v):
            if a:
                for j, b in enumerate(w):
                    if b:
                        acc += Fraction(a) * self.gram[i][j] * Fraction(b)
        return acc

    def act(self, v, s: GroupElement):
        m = self.actions[s]
        n = self.rank
        return tuple(sum(v[i] * m[i][j] for i in range(n)) for j in range(n))

    def determinant(self) -> Fraction:
        return linalg.det([list(r) for r in self.gram])

    def is_positive_definite(self) -> bool:
        try:
            linalg.ldl([list(r) for r in self.gram])
            return True
        except ValueError:
            return False

    def __repr__(self):
        return f"GForm({self.label})"


def standard_form(group: FiniteAbelianGroup) -> GForm:
    """The group ring with the delta pairing on group elements."""
    elems = group.elements()
    n = len(elems)
    index = {s: i for i, s in enumerate(elems)}
    actions = {}
    for s in elems:
        m = [[0] * n for _ in range(n)]
        for i, h in enumerate(elems):
            m[i][index[h * s]] = 1
        actions[s] = m
    return GForm(group, linalg.identity_matrix(n), actions, label=f"(Z{group}, delta)")


def gform_from_A(field: PeriodField, hom: HomToG | None = None) -> GForm:
    """The trace form on the square root of the inverse different, in the
    coordinates of its HNF basis; unimodularity is asserted."""
    if hom is None:
        hom = HomToG.standard(field)
    A = sqrt_inverse_different(field)
    p = field.degree
    B = [list(r) for r in A.num]
    den = A.den
    gram = []
    for i in range(p):
        row = []
        for j in range(p):
            val = Fraction(
                sum(B[i][t] * field.gram[t][u] * B[j][u] for t in range(p) for u in range(p)),
                den * den,
            )
            if val.denominator != 1:
                raise ArithmeticError("trace Gram of the A-basis is not integral")
            row.append(int(val))
        gram.append(row)
    d = linalg.det(gram)
    if abs(d) != 1:
        raise ArithmeticError(f"A-form has determinant {d}, expected a unit")
    # generator acts through the Galois power pinned by the identification
    shift = [[int(j == (i + 1) % p) for j in range(p)] for i in range(p)]
    t = hom.galois_power(hom.group.element((1,)))
    s_power = linalg.identity_matrix(p)
    for _ in range(t):
        s_power = linalg.mat_mul(s_power, shift)
    binv = linalg.inverse(B)
    m_gen_frac = linalg.mat_mul(linalg.mat_mul(B, s_power), binv)
    m_gen = []
    for row in m_gen_frac:
        out = []
        for c in row:
            c = Fraction(c)
            if c.denominator != 1:
                raise ArithmeticError("Galois action does not stabilize the A-lattice")
            out.append(int(c))
        m_gen.append(out)
    actions = {}
    acc = linalg.identity_matrix(p)
    for j in range(p):
        actions[hom.group.element((j,))] = [row[:] for row in acc]
        acc = linalg.mat_mul(acc, m_gen)
    return GForm(
        hom.group,
        gram,
        actions,
        label=f"(A, trace) for conductor {field.conductor}",
        field=field,
        hom=hom,
        basis_num=tuple(tuple(r) for r in A.num),
        basis_den=den,
    )


@dataclass(frozen=True)
class IsometryWitness:
    """A self-dual generator: coordinates of x and the change-of-basis matrix
    whose rows are the orbit coordinates of s . x in enumeration order."""

    form: GForm
    coords: tuple[int, ...]
    orbit_matrix: tuple[tuple[int, ...], ...]

    def verify(self) -> bool:
        """Re-derive delta-orthonormality and two-sided lattice equality from
        the coordinates alone."""
        form = self.form
        orbit = [form.act(self.coords, s) for s in form.group.elements()]
        if tuple(tuple(int(x) for x in row) for row in orbit) != self.orbit_matrix:
            return False
        for i, v in enumerate(orbit):
            for j, w in enumerate(orbit):
                if form.pair(v, w) != (1 if i == j else 0):
                    return False
        d = linalg.det([list(r) for r in self.orbit_matrix])
        return abs(d) == 1

    def to_json(self) -> dict:
        return {
            "coords": list(self.coords),
            "orbit_matrix": [list(r) for r in self.orbit_matrix],
        }


def find_self_dual_generator(form: GForm) -> IsometryWitness | None:
    """Enumerate the finitely many lattice vectors of norm 1 (exact
    enumeration over the Gram matrix, canonical descending order, one vector
    per +/- pair since both signs behave identically) and return the first
    whose group orbit is delta-orthonormal and spans the lattice; None when
    the candidate set is exhausted."""
    if form.rank != form.group.order:
        raise ValueError("form rank differs from the group order")
    if abs(form.determinant()) != 1:
        raise ValueError("form is not unimodular")
    if not form.is_positive_definite():
        raise ValueError("form is not positive definite")
    for v in linalg.quadratic_solutions([list(r) for r in form.gram], 1):
        orbit = [form.act(v, s) for s in form.group.elements()]
        ok = True
        for i, a in enumerate(orbit):
            for j, b in enumerate(orbit):
                if form.pair(a, b) != (1 if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if abs(linalg.det([list(r) for r in orbit])) != 1:
            continue
        witness = IsometryWitness(
            form, tuple(int(x) for x in v), tuple(tuple(int(x) for x in row) for row in orbit)
        )
        if not witness.verify():
            raise AssertionError("witness failed its own re-verification")
        return witness
    return None


def norm_one_vectors(form: GForm) -> list[tuple[int, ...]]:
    """All vectors with T(x, x) = 1, up to sign."""
    return linalg.quadratic_solutions([list(r) for r in form.gram], 1)


def witness_element(form: GForm, witness: IsometryWitness) -> AlgebraElement:
    """Present a witness on an A-form as an element of the Galois algebra."""
    if form.field is None or form.hom is None:
        raise ValueError("form does not carry number-field provenance")
    p = form.field.degree
    period_coords = [
        Fraction(sum(witness.coords[i] * form.basis_num[i][t] for i in range(p)), form.basis_den)
        for t in range(p)
    ]
    alpha = form.field.element(period_coords)
    return AlgebraElement(form.hom, alpha)


def is_self_dual_generator(a: AlgebraElement, lattice: FractionalIdeal) -> bool:
    """Whether a is self-dual for the trace form and its group orbit spans the
    given fractional ideal (two-sided HNF equality)."""
    K = a.hom.field
    if not is_self_dual(a, method="both"):
        return False
    rows = []
    dens = 1
    coords_list = []
    for s in a.group.elements():
        coords = K.coordinates(a.value_at(s))
        coords_list.append(coords)
        for c in coords:
            dens = lcm(dens, c.denominator)
    for coords in coords_list:
        rows.append([int(c * dens) for c in coords])
    try:
        span = FractionalIdeal(K, rows, dens)
    except ValueError:
        return False  # orbit does not have full rank
    return span == lattice


def verify_inverse_law(field: PeriodField, hom: HomToG | None = None) -> bool:
    """Instance check that inverting the resolvend of a self-dual generator
    of A yields a self-dual generator of A for the inverse identification."""
    if hom is None:
        hom = HomToG.standard(field)
    form = gform_from_A(field, hom)
    witness = find_self_dual_generator(form)
    if witness is None:
        raise WitnessNotFound(f"no self-dual generator for conductor {field.conductor}")
    a = witness_element(form, witness)
    A = sqrt_inverse_different(field)
    if not is_self_dual_generator(a, A):
        raise AssertionError("witness element failed independent re-verification")
    a_inv = inverse_resolvend(a)
    return is_self_dual_generator(a_inv, A)


def verify_weak_multiplicativity(
    field1: PeriodField,
    field2: PeriodField,
    hom1: HomToG | None = None,
    hom2: HomToG | None = None,
) -> bool:
    """Instance check that the product of resolvends of self-dual generators
    of A for two fields with disjoint ramification is a self-dual generator
    of A for the composite-cut field."""
    if hom1 is None:
        hom1 = HomToG.standard(field1)
    if hom2 is None:
        hom2 = HomToG.standard(field2, hom1.group)
    form1 = gform_from_A(field1, hom1)
    form2 = gform_from_A(field2, hom2)
    w1 = find_self_dual_generator(form1)
    w2 = find_self_dual_generator(form2)
    if w1 is None or w2 is None:
        raise WitnessNotFound("missing witness on a factor field")
    a1 = witness_element(form1, w1)
    a2 = witness_element(form2, w2)
    composite = compose_fields(field1, field2, weights=hom1.product_weights(hom2))
    a = product_resolvend(a1, a2, composite)
    A12 = sqrt_inverse_different(composite)
    return is_self_dual_generator(a, A12)


class IsometryResult(enum.Enum):
    ISOMETRIC = "isometric"
    NOT_ISOMETRIC = "not_isometric"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self):
        return self is IsometryResult.ISOMETRIC


def isometry_equivalence(form1: GForm, form2: GForm) -> IsometryResult:
    """Decide G-isometry by matching self-dual generator witnesses. Sound
    always; complete for unimodular positive-definite forms of rank |G|,
    where an exhausted search certifies no isometry with the standard form.
    Inconclusive cases are reported as such, never as false."""
    if form1.group != form2.group:
        raise ValueError("forms carry different groups")
    if form1.rank != form2.rank:
        return IsometryResult.NOT_ISOMETRIC
    if form1.determinant() != form2.determinant():
        return IsometryResult.NOT_ISOMETRIC
    if form1.gram == form2.gram and form1.actions == form2.actions:
        return IsometryResult.ISOMETRIC
    try:
        w1 = find_self_dual_generator(form1)
        w2 = find_self_dual_generator(form2)
    except ValueError:
        return IsometryResult.INCONCLUSIVE
    if w1 is not None and w2 is not None:
        return IsometryResult.ISOMETRIC
    if (w1 is None) != (w2 is None):
        return IsometryResult.NOT_ISOMETRIC
    return IsometryResult.INCONCLUSIVE
