"""Finite abelian groups, their elements, and root-of-unity valued characters.

A group is an invariant-factor chain d_1 | d_2 | ... | d_k (each >= 2; the
empty chain is the trivial group). Elements and characters are exponent
vectors; character values are never floats, only the exponent e with
chi(s) = zeta_m^e for m = exp(G).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm

DEFAULT_ENUMERATION_BOUND = 10_000


class GroupSpecError(ValueError):
    """Invalid invariant-factor data or group spec string."""


class EnumerationBoundError(ValueError):
    """Group too large for an exhaustive enumeration."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for d in facs:
            if d < 2:
                raise GroupSpecError(f"invariant factor {d} is < 2")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise GroupSpecError(
                    f"invariant factors must form a divisibility chain; {a} does not divide {b}"
                )

    @classmethod
    def from_spec(cls, spec: str) -> "FiniteAbelianGroup":
        """Parse a CLI group spec such as "3" or "3,9"."""
        parts = [s for s in spec.replace(" ", "").split(",") if s]
        if not parts:
            raise GroupSpecError("empty group spec")
        try:
            facs = tuple(int(s) for s in parts)
        except ValueError as exc:
            raise GroupSpecError(f"bad group spec {spec!r}") from exc
        return cls(facs)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, exponents) -> "GroupElement":
        return GroupElement(self, tuple(exponents))

    def character(self, exponents) -> "Character":
        return Character(self, tuple(exponents))

    def trivial_character(self) -> "Character":
        return Character(self, (0,) * self.rank)

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list["GroupElement"]:
        return enumerate_elements(self, bound)

    def characters(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list["Character"]:
        if self.order > bound:
            raise EnumerationBoundError(f"|G| = {self.order} exceeds bound {bound}")
        ranges = [range(d) for d in self.invariant_factors]
        return [Character(self, exps) for exps in itertools.product(*ranges)]

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "C1"
        return "x".join(f"C{d}" for d in self.invariant_factors)


def _reduced(group: FiniteAbelianGroup, exponents) -> tuple[int, ...]:
    facs = group.invariant_factors
    if len(exponents) != len(facs):
        raise GroupSpecError(
            f"exponent vector of length {len(exponents)} for rank-{len(facs)} group"
        )
    return tuple(int(e) % d for e, d in zip(exponents, facs))


def _vector_order(group: FiniteAbelianGroup, exponents) -> int:
    o = 1
    for e, d in zip(exponents, group.invariant_factors):
        o = lcm(o, d // gcd(d, e))
    return o


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", _reduced(self.group, self.exponents))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        _same_group(self, other)
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple(e * int(k) for e in self.exponents))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-e for e in self.exponents))

    def order(self) -> int:
        return _vector_order(self.group, self.exponents)

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.exponents) + "]"


@dataclass(frozen=True)
class Character:
    """Character chi with chi(s) = zeta_m^((m/d_i) * sum a_i e_i mod m)."""

    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", _reduced(self.group, self.exponents))

    def value_exponent(self, s: GroupElement) -> int:
        return character_value_exponent(self, s)

    def __mul__(self, other: "Character") -> "Character":
        _same_group(self, other)
        return Character(
            self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __pow__(self, k: int) -> "Character":
        return Character(self.group, tuple(a * int(k) for a in self.exponents))

    def inverse(self) -> "Character":
        return Character(self.group, tuple(-a for a in self.exponents))

    def order(self) -> int:
        return _vector_order(self.group, self.exponents)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return "chi[" + ",".join(str(a) for a in self.exponents) + "]"


def _same_group(a, b) -> None:
    if a.group != b.group:
        raise GroupSpecError(f"group mismatch: {a.group} vs {b.group}")


def enumerate_elements(
    group: FiniteAbelianGroup, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[GroupElement]:
    """All elements in lexicographic exponent order; the identity comes first."""
    if group.order > bound:
        raise EnumerationBoundError(f"|G| = {group.order} exceeds bound {bound}")
    ranges = [range(d) for d in group.invariant_factors]
    return [GroupElement(group, exps) for exps in itertools.product(*ranges)]


def character_value_exponent(chi: Character, s: GroupElement) -> int:
    """The exponent k with chi(s) = zeta_m^k, m = exp(G)."""
    if chi.group != s.group:
        raise GroupSpecError(f"group mismatch: {chi.group} vs {s.group}")
    m = chi.group.exponent
    acc = 0
    for a, e, d in zip(chi.exponents, s.exponents, chi.group.invariant_factors):
        acc += (m // d) * a * e
    return acc % m


def galois_twist(s: GroupElement, k: int, n_sign: int) -> GroupElement:
    """s -> s^(k^n_sign); the residue k plays the role of a cyclotomic-character
    value mod exp(G), so k must be a unit. n_sign is usually -1, 0 or 1."""
    m = s.group.exponent
    if gcd(k, m) != 1:
        raise ValueError(f"{k} is not a unit mod {m}")
    e = pow(k, n_sign, m) if m > 1 else 0
    return s**e
