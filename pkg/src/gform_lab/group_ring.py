"""Group algebras RG over exact coefficient rings.

Coefficients are Fractions or CyclotomicNumbers (ints are coerced to
Fractions); storage is sparse and canonical, so equality is structural.
The involution sends each group element to its inverse, and the character
(Fourier) transform turns convolution into pointwise multiplication, which
is how invertibility is decided. A regular-representation linear solve is
kept alongside as an independent oracle.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import lcm

from .cyclotomic import CyclotomicNumber
from .groups import Character, FiniteAbelianGroup, GroupElement, GroupSpecError


class NotInvertible(ArithmeticError):
    """The element has no inverse; carries a vanishing character when known."""

    def __init__(self, message: str, character: Character | None = None):
        super().__init__(message)
        self.character = character


def _coeff(c):
    if isinstance(c, CyclotomicNumber):
        return c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, CyclotomicNumber) else c == 0


def _demote(c):
    """CyclotomicNumber with rational value -> Fraction."""
    if isinstance(c, CyclotomicNumber) and c.is_rational():
        return c.to_rational()
    return c


def _coeff_is_integral(c) -> bool:
    if isinstance(c, CyclotomicNumber):
        return c.is_integral()
    return c.denominator == 1


class GroupRingElement:
    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteAbelianGroup, coeffs):
        cleaned = {}
        for s, c in dict(coeffs).items():
            if not isinstance(s, GroupElement) or s.group != group:
                raise GroupSpecError("coefficient keyed by a foreign group element")
            c = _coeff(c)
            if not _is_zero(c):
                cleaned[s] = c
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, *_):
        raise AttributeError("GroupRingElement is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group):
        return cls(group, {})

    @classmethod
    def one(cls, group):
        return cls(group, {group.identity(): Fraction(1)})

    @classmethod
    def scalar(cls, group, c):
        return cls(group, {group.identity(): c})

    @classmethod
    def from_element(cls, s: GroupElement, c=1):
        return cls(s.group, {s: c})

    # -- basic structure -------------------------------------------------------

    def coefficient(self, s: GroupElement):
        return self.coeffs.get(s, Fraction(0))

    @property
    def support(self):
        return set(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(not isinstance(c, CyclotomicNumber) for c in self.coeffs.values())

    def is_integral(self) -> bool:
        return all(_coeff_is_integral(c) for c in self.coeffs.values())

    def coefficient_level(self) -> int:
        out = 1
        for c in self.coeffs.values():
            if isinstance(c, CyclotomicNumber):
                out = lcm(out, c.level)
        return out

    def map_coefficients(self, fn) -> "GroupRingElement":
        return GroupRingElement(self.group, {s: fn(c) for s, c in self.coeffs.items()})

    def demoted(self) -> "GroupRingElement":
        return self.map_coefficients(_demote)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "GroupRingElement"):
        if self.group != other.group:
            raise GroupSpecError("group mismatch in group-ring arithmetic")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        self._check(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, Fraction(0)) + c
        return GroupRingElement(self.group, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __neg__(self):
        return GroupRingElement(self.group, {s: -c for s, c in self.coeffs.items()})

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, GroupElement):
            return GroupRingElement.from_element(other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return GroupRingElement.scalar(self.group, other)
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        self._check(other)
        out = {}
        for s, c in self.coeffs.items():
            for t, d in other.coeffs.items():
                key = s * t
                prod = c * d
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return GroupRingElement(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        e = int(e)
        if e < 0:
            return try_invert(self) ** (-e)
        result = GroupRingElement.one(self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def involute(self) -> "GroupRingElement":
        """Coefficient at s moves to s^{-1}; an involution, and for abelian G a
        ring automorphism."""
        return GroupRingElement(self.group, {s.inverse(): c for s, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.group != other.group:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[s] == other.coeffs[s] for s in self.coeffs)

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0].exponents)
        return " + ".join(f"{c}*{s}" for s, c in items)

    __repr__ = __str__

    def to_json(self) -> dict:
        items = sorted(self.coeffs.items(), key=lambda kv: kv[0].exponents)
        terms = []
        for s, c in items:
            if isinstance(c, CyclotomicNumber):
                coeff = c.to_json()
            else:
                coeff = f"{c.numerator}/{c.denominator}"
            terms.append({"element": list(s.exponents), "coeff": coeff})
        return {"group": list(self.group.invariant_factors), "terms": terms}


class FourierVector:
    """Character transform of a group-ring element: chi -> sum_s c_s chi(s)."""

    __slots__ = ("group", "level", "values")

    def __init__(self, group: FiniteAbelianGroup, level: int, values):
        self.group = group
        self.level = level
        self.values = dict(values)

    def __getitem__(self, chi: Character) -> CyclotomicNumber:
        return self.values[chi]

    def __eq__(self, other):
        return (
            isinstance(other, FourierVector)
            and self.group == other.group
            and self.values.keys() == other.values.keys()
            and all(self.values[k] == other.values[k] for k in self.values)
        )

    def pointwise_mul(self, other: "FourierVector") -> "FourierVector":
        vals = {chi: self.values[chi] * other.values[chi] for chi in self.values}
        return FourierVector(self.group, lcm(self.level, other.level), vals)


def _zeta_powers(m: int, level: int) -> list[CyclotomicNumber]:
    z = [CyclotomicNumber.zeta(level, (level // m) * e) for e in range(m)]
    return z


def fourier(gamma: GroupRingElement) -> FourierVector:
    """Exact character transform; values live in Q(zeta_L) with
    L = lcm(exp(G), coefficient levels)."""
    G = gamma.group
    m = G.exponent
    level = lcm(m, gamma.coefficient_level())
    roots = _zeta_powers(m, level)
    values = {}
    for chi in G.characters():
        acc = CyclotomicNumber.rational(0, level)
        for s, c in gamma.coeffs.items():
            acc = acc + roots[chi.value_exponent(s)] * c
        values[chi] = acc
    return FourierVector(G, level, values)


def fourier_inverse(vec: FourierVector) -> GroupRingElement:
    """Inverse transform (division by |G|); rational coefficients are demoted
    back to Fractions so round trips are structural identities."""
    G = vec.group
    m = G.exponent
    n = G.order
    level = vec.level
    roots = _zeta_powers(m, level)
    coeffs = {}
    for s in G.elements():
        acc = CyclotomicNumber.rational(0, level)
        s_inv = s.inverse()
        for chi, v in vec.values.items():
            acc = acc + roots[chi.value_exponent(s_inv)] * v
        coeffs[s] = _demote(acc * Fraction(1, n))
    return GroupRingElement(G, coeffs)


def try_invert(gamma: GroupRingElement) -> GroupRingElement:
    """Invert via the character transform; raises NotInvertible (carrying the
    vanishing character) when some Fourier value is zero. The product with the
    input is verified to be 1 before returning."""
    vec = fourier(gamma)
    inv_values = {}
    for chi, v in vec.values.items():
        if v.is_zero():
            raise NotInvertible(f"Fourier value vanishes at {chi}", character=chi)
        inv_values[chi] = v.inverse()
    inv = fourier_inverse(FourierVector(gamma.group, vec.level, inv_values))
    if not (inv * gamma == GroupRingElement.one(gamma.group)):
        raise ArithmeticError("inverse verification failed")
    return inv


def is_integral_unit(gamma: GroupRingElement) -> bool:
    """True iff gamma has integral coefficients and an integral inverse."""
    if not gamma.is_integral():
        return False
    try:
        inv = try_invert(gamma)
    except NotInvertible:
        return False
    return inv.is_integral()


class SelfDualityClass(enum.Enum):
    STRICT = "strict"  # gamma * gamma^[-1] = 1
    UNIT_SELF_DUAL = "unit_self_dual"  # gamma * gamma^[-1] an integral unit
    NEITHER = "neither"


def class_membership(gamma: GroupRingElement) -> SelfDualityClass:
    """Classify gamma by the self-duality of the lattice it generates: strict
    when gamma * gamma^[-1] = 1, unit-self-dual when that product is a unit of
    the integral group ring. Raises NotInvertible for non-units of FG."""
    try_invert(gamma)  # membership requires invertibility
    u = gamma * gamma.involute()
    if u == GroupRingElement.one(gamma.group):
        return SelfDualityClass.STRICT
    if is_integral_unit(u):
        return SelfDualityClass.UNIT_SELF_DUAL
    return SelfDualityClass.NEITHER


# ---------------------------------------------------------------------------
# regular representation oracle


def regular_representation_matrix(gamma: GroupRingElement):
    """Matrix of left multiplication by gamma on the basis enumerate(G)."""
    G = gamma.group
    elems = G.elements()
    index = {s: i for i, s in enumerate(elems)}
    n = len(elems)
    zero = Fraction(0)
    mat = [[zero] * n for _ in range(n)]
    for j, h in enumerate(elems):
        for s, c in gamma.coeffs.items():
            mat[index[s * h]][j] = c
    return mat


def regular_representation_determinant(gamma: GroupRingElement):
    """Division-free determinant of the regular representation by minor
    expansion; intended for small groups (|G| <= 6), where it decides
    invertibility without a single coefficient inversion."""
    if gamma.group.order > 6:
        raise ValueError("minor expansion is only sensible for |G| <= 6")
    return _det_by_minors(regular_representation_matrix(gamma))


def _det_by_minors(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc = None
    for j in range(n):
        c = mat[0][j]
        if _is_zero(c):
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = c * _det_by_minors(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else Fraction(0)


def invert_by_linear_solve(gamma: GroupRingElement) -> GroupRingElement:
    """Independent inversion oracle: solve gamma * x = 1 in the regular
    representation by exact Gaussian elimination."""
    G = gamma.group
    elems = G.elements()
    n = len(elems)
    mat = regular_representation_matrix(gamma)
    rhs = [Fraction(0)] * n
    rhs[0] = Fraction(1)  # identity is first in enumeration order

    # generic field Gaussian elimination (works for Fractions and cyclotomics)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not _is_zero(a[i][col])), None)
        if piv is None:
            raise NotInvertible("regular representation is singular")
        a[col], a[piv] = a[piv], a[col]
        pivot = a[col][col]
        pinv = pivot.inverse() if isinstance(pivot, CyclotomicNumber) else 1 / pivot
        a[col] = [x * pinv for x in a[col]]
        for i in range(n):
            if i != col and not _is_zero(a[i][col]):
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    coeffs = {elems[i]: _demote(a[i][n]) for i in range(n)}
    out = GroupRingElement(G, coeffs)
    if not (out * gamma == GroupRingElement.one(G)):
        raise ArithmeticError("linear-solve inverse verification failed")
    return out
