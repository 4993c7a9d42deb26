"""Resolvends of explicit Galois-algebra elements, their reduction mod the
group, inverse and product laws, and the prime-by-prime factorization check
of resolvent ratios.

An algebra element is a field element alpha of a period field K carried by an
identification h of Gal(K/Q) with a cyclic group G; its function table is
s -> sigma^(a(s))(alpha) and its resolvend is the group-ring element
sum_s a(s) s^{-1} over Q(zeta_f). The degenerate split algebra (trivial h) is
supported through the indicator of the identity, whose resolvend is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, units_mod
from .cyclotomic import CyclotomicNumber
from .group_ring import (
    GroupRingElement,
    NotInvertible,
    fourier,
    invert_by_linear_solve,
    regular_representation_determinant,
)
from .groups import FiniteAbelianGroup, GroupElement
from .number_fields import HomToG, compose_fields
from .stickelberger import EquivariantMap, det_kernel_basis, transpose_value


class AlgebraElement:
    """Element of the G-Galois algebra attached to a hom h, stored as the
    underlying field element; `split_identity` gives the identity-indicator
    of the split algebra (h trivial)."""

    __slots__ = ("hom", "alpha", "_group")

    def __init__(self, hom: HomToG | None, alpha, group: FiniteAbelianGroup | None = None):
        self.hom = hom
        if hom is None:
            if group is None:
                raise ValueError("the split algebra needs an explicit group")
            self._group = group
            self.alpha = Fraction(alpha)
        else:
            self._group = hom.group
            a = alpha if isinstance(alpha, CyclotomicNumber) else CyclotomicNumber.rational(alpha, 1)
            a = a.raise_level(hom.field.conductor)
            hom.field.coordinates(a)  # membership check
            self.alpha = a

    @classmethod
    def split_identity(cls, group: FiniteAbelianGroup) -> "AlgebraElement":
        return cls(None, 1, group=group)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self._group

    @property
    def is_split(self) -> bool:
        return self.hom is None

    def value_at(self, s: GroupElement):
        """The function-table value a(s)."""
        if self.is_split:
            return self.alpha if s.is_identity else Fraction(0)
        return self.hom.field.sigma(self.alpha, self.hom.galois_power(s))

    def act(self, s: GroupElement) -> "AlgebraElement":
        """The group action (s . a)(t) = a(ts); for field algebras this is the
        Galois translate of alpha."""
        if self.is_split:
            raise NotImplementedError("group translates of split elements are not stored")
        return AlgebraElement(self.hom, self.value_at(s))

    def _same_algebra(self, other: "AlgebraElement") -> None:
        if self.is_split and other.is_split:
            if self.group != other.group:
                raise ValueError("elements carry different groups")
            return
        if self.is_split or other.is_split or self.hom != other.hom:
            raise ValueError("elements live in different algebras")

    def trace_pair(self, other: "AlgebraElement") -> Fraction:
        """Trace form of the algebra: sum_t a(t) b(t)."""
        self._same_algebra(other)
        if self.is_split:
            return self.alpha * other.alpha
        return self.hom.field.trace(self.alpha * other.alpha)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.is_split != other.is_split:
            return False
        if self.is_split:
            return self.group == other.group and self.alpha == other.alpha
        return self.hom == other.hom and self.alpha == other.alpha

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_split:
            return f"AlgebraElement(split over {self.group})"
        return f"AlgebraElement(conductor={self.hom.field.conductor}, alpha={self.alpha})"


def resolvend(a: AlgebraElement) -> GroupRingElement:
    """sum_s a(s) s^{-1} as a group-ring element with cyclotomic coefficients."""
    G = a.group
    coeffs = {}
    for s in G.elements():
        coeffs[s.inverse()] = a.value_at(s)
    return GroupRingElement(G, coeffs)


def _invertible(r: GroupRingElement) -> bool:
    if r.group.order <= 6:
        det = regular_representation_determinant(r)
        return not (det.is_zero() if hasattr(det, "is_zero") else det == 0)
    try:
        invert_by_linear_solve(r)
        return True
    except NotInvertible:
        return False


def is_normal_basis_generator(a: AlgebraElement) -> bool:
    """Whether the algebra is generated by a over the rational group ring,
    i.e. the resolvend is invertible (all character resolvents nonzero);
    decided by a division-free regular-representation determinant."""
    return _invertible(resolvend(a))


def resolvend_pairing_identity(a: AlgebraElement, b: AlgebraElement) -> bool:
    """Exact check of r(a) r(b)^[-1] = sum_s Tr((s.a) b) s^{-1}."""
    a._same_algebra(b)
    lhs = resolvend(a) * resolvend(b).involute()
    G = a.group
    rhs_coeffs = {}
    for s in G.elements():
        if a.is_split:
            tr = a.alpha * b.alpha if s.is_identity else Fraction(0)
        else:
            tr = a.hom.field.trace(a.value_at(s) * b.alpha)
        rhs_coeffs[s.inverse()] = tr
    rhs = GroupRingElement(G, rhs_coeffs)
    return lhs.demoted() == rhs


def is_self_dual(a: AlgebraElement, method: str = "both") -> bool:
    """Self-duality of a for the trace form, decided by the Gram route
    (Tr((s.a) a) = delta) or the resolvend route (r r^[-1] = 1); with
    method="both" the two independent computations must agree."""
    if method not in ("gram", "resolvend", "both"):
        raise ValueError(f"unknown method {method!r}")
    got = {}
    if method in ("gram", "both"):
        ok = True
        for s in a.group.elements():
            want = Fraction(1) if s.is_identity else Fraction(0)
            if a.is_split:
                tr = a.alpha * a.alpha if s.is_identity else Fraction(0)
            else:
                tr = a.hom.field.trace(a.value_at(s) * a.alpha)
            if tr != want:
                ok = False
                break
        got["gram"] = ok
    if method in ("resolvend", "both"):
        r = resolvend(a)
        got["resolvend"] = r * r.involute() == GroupRingElement.one(a.group)
    if method == "both" and got["gram"] != got["resolvend"]:
        raise AssertionError("gram and resolvend self-duality routes disagree")
    return got.popitem()[1]


def inverse_resolvend(a: AlgebraElement) -> AlgebraElement:
    """The element of the inverse-identified algebra whose resolvend is the
    inverse of the resolvend of a; verified by an exact product."""
    if a.is_split:
        return a
    r = resolvend(a)
    r_inv = invert_by_linear_solve(r)  # stays at the field level
    beta = r_inv.coefficient(a.group.identity())
    if not isinstance(beta, CyclotomicNumber):
        beta = CyclotomicNumber.rational(beta, 1)
    out = AlgebraElement(a.hom.inverse_hom(), beta)
    if resolvend(out) != r_inv:
        raise ArithmeticError("inverse resolvend does not define an algebra element")
    return out


def product_resolvend(a1: AlgebraElement, a2: AlgebraElement, composite=None) -> AlgebraElement:
    """The element of the product-identified algebra whose resolvend is
    r(a1) r(a2); the two conductors must be coprime."""
    if a1.group != a2.group:
        raise ValueError("elements carry different groups")
    if a1.is_split:
        return a2
    if a2.is_split:
        return a1
    K1 = a1.hom.field
    K2 = a2.hom.field
    weights = a1.hom.product_weights(a2.hom)
    if composite is None:
        composite = compose_fields(K1, K2, weights=weights)
    r = resolvend(a1) * resolvend(a2)
    beta = r.coefficient(a1.group.identity())
    if not isinstance(beta, CyclotomicNumber):
        beta = CyclotomicNumber.rational(beta, 1)
    h12 = HomToG(composite, a1.group, a1.group.element((1,)))
    out = AlgebraElement(h12, beta)
    if resolvend(out) != r:
        raise ArithmeticError("product resolvend does not define a composite algebra element")
    return out


def homomorphism_property_check(a: AlgebraElement) -> bool:
    """Exhaustive check over the finite acting group that applying any
    ambient automorphism to the resolvend coefficients multiplies the
    resolvend by the corresponding group element."""
    if a.is_split:
        return True
    K = a.hom.field
    r = resolvend(a)
    for k in units_mod(K.conductor):
        twisted = r.map_coefficients(
            lambda c: c.galois(k) if isinstance(c, CyclotomicNumber) else c
        )
        h_omega = a.hom.sigma_image ** K.character[k]
        if twisted != r * GroupRingElement.from_element(h_omega):
            return False
    return True


class ReducedResolvend:
    """Canonical representative of a resolvend modulo right multiplication by
    group elements: the lexicographically minimal coefficient vector over the
    right orbit."""

    __slots__ = ("representative",)

    def __init__(self, r: GroupRingElement):
        candidates = [r * GroupRingElement.from_element(t) for t in r.group.elements()]
        self.representative = min(candidates, key=_orbit_key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedResolvend):
            return NotImplemented
        return self.representative == other.representative

    __hash__ = None

    def __repr__(self) -> str:
        return f"ReducedResolvend({self.representative})"


def _orbit_key(r: GroupRingElement):
    level = r.coefficient_level()
    key = []
    for s in r.group.elements():
        c = r.coefficient(s)
        if not isinstance(c, CyclotomicNumber):
            c = CyclotomicNumber.rational(c, 1)
        key.append(c.raise_level(level).coeffs)
    return key


def reduced_resolvend(a: AlgebraElement) -> ReducedResolvend:
    return ReducedResolvend(resolvend(a))


def resolvent_values(a: AlgebraElement) -> dict:
    """Character resolvents (Fourier values of the resolvend)."""
    return fourier(resolvend(a)).values


def resolvent_norms(a: AlgebraElement) -> dict:
    """Rational norms of the character resolvents; the only primes allowed to
    divide them for an integral generator are the ramified ones."""
    return {chi: v.norm_to_rational() for chi, v in resolvent_values(a).items()}


@dataclass(frozen=True)
class FactorizationResult:
    passed: bool
    ell: int
    witness: GroupElement | None
    details: tuple


def stickelberger_factorization_check(
    a: AlgebraElement, ell: int | None = None, branch: GroupElement | None = None
) -> FactorizationResult:
    """Evaluate the reduced resolvend of a (a generator of the square root of
    the inverse different, prime conductor) on a kernel basis through its
    character resolvents, divide by the transpose value of the equivariant
    branch map at ell, and require the ratio and its inverse to be algebraic
    integers for every basis vector. Searches the branch element when none is
    given and reports the witness.

    The branch map carries a prime element over ell at the branch element and
    its conjugates along the twist orbit; a bare prime power would only match
    valuations at the single prime of Q(zeta) picked by one embedding.
    Passing the identity as branch means dividing by nothing, the unramified
    shape of the factorization.
    """
    if a.is_split:
        raise ValueError("the split algebra has no ramified prime to factor at")
    K = a.hom.field
    if ell is None:
        if len(K.ramified_primes) != 1:
            raise ValueError("field has several ramified primes; pass ell explicitly")
        ell = K.ramified_primes[0]
    if ell not in K.ramified_primes or not is_prime(ell):
        raise ValueError(f"{ell} is not a ramified prime of the field")
    G = a.group
    values = resolvent_values(a)
    basis = det_kernel_basis(G)
    resolvent_on_basis = []
    for psi in basis:
        acc = CyclotomicNumber.rational(1, 1)
        for chi, n in zip(G.characters(), psi.coeffs):
            if n:
                acc = acc * values[chi] ** int(n)
        resolvent_on_basis.append(acc)

    if branch is not None:
        candidates = [branch]
    else:
        candidates = [s for s in G.elements() if not s.is_identity]
    details = []
    for s in candidates:
        branch_map = None if s.is_identity else EquivariantMap.prime_orbit_map(G, ell, s)
        ok = True
        for psi, rv in zip(basis, resolvent_on_basis):
            ratio = rv if branch_map is None else rv * transpose_value(branch_map, psi).inverse()
            unit = ratio.is_integral() and ratio.inverse().is_integral()
            details.append((tuple(s.exponents), tuple(psi.coeffs), unit))
            if not unit:
                ok = False
                break
        if ok:
            return FactorizationResult(True, ell, s, tuple(details))
    return FactorizationResult(False, ell, None, tuple(details))
