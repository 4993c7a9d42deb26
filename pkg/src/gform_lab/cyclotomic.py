"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is a Fraction coefficient vector over the power basis
1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial, so
every value has a unique normal form and equality is decidable. The
compatible system of roots fixes zeta_n := zeta_N^(N/n) inside any ambient
level N; cross-level operations raise both operands to the lcm level.

Supported levels are capped (default 200, override with the
GFORM_LAB_MAX_LEVEL environment variable) to keep exhaustive exact sweeps at
desk scale.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .arith import divisors, euler_phi, moebius, subgroup_closure
from . import linalg

DEFAULT_MAX_LEVEL = 200
MAX_LEVEL_ENV = "GFORM_LAB_MAX_LEVEL"


class LevelBoundError(ValueError):
    """Requested cyclotomic level exceeds the configured cap."""


def max_level() -> int:
    raw = os.environ.get(MAX_LEVEL_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_LEVEL


def _check_level(n: int) -> None:
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    if n > max_level():
        raise LevelBoundError(f"level {n} exceeds cap {max_level()} (set {MAX_LEVEL_ENV})")


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (den monic), ascending coeffs."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Ascending integer coefficients of Phi_n, computed by exact division of
    x^n - 1 by the lower-level cyclotomic polynomials."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coefficients of zeta_n^j for j = 0..n-1 (all integers)."""
    _check_level(n)
    phi = euler_phi(n)
    red = tuple(-c for c in cyclotomic_polynomial(n)[:phi])  # z^phi = red
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if top:
            for i in range(phi):
                nxt[i] += top * red[i]
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_table(n: int) -> tuple[int, ...]:
    """Tr_{Q(zeta_n)/Q}(zeta_n^j) for j = 0..n-1."""
    phi = euler_phi(n)
    out = []
    for j in range(n):
        d = n // gcd(j, n)
        out.append(moebius(d) * (phi // euler_phi(d)))
    return tuple(out)


_ZERO = Fraction(0)


class CyclotomicNumber:
    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        _check_level(level)
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != euler_phi(level):
            raise ValueError(
                f"need {euler_phi(level)} coefficients at level {level}, got {len(cs)}"
            )
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *_):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def _raw(cls, level: int, coeffs: tuple[Fraction, ...]) -> "CyclotomicNumber":
        self = object.__new__(cls)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def rational(cls, value, level: int = 1) -> "CyclotomicNumber":
        phi = euler_phi(level)
        return cls(level, [Fraction(value)] + [0] * (phi - 1))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_n^k at level n."""
        _check_level(n)
        table = _power_table(n)
        return cls._raw(n, tuple(Fraction(c) for c in table[k % n]))

    # -- representation plumbing ------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(other, 1)
        return None

    def raise_level(self, new_level: int) -> "CyclotomicNumber":
        if new_level == self.level:
            return self
        if new_level % self.level:
            raise ValueError(f"{self.level} does not divide {new_level}")
        _check_level(new_level)
        table = _power_table(new_level)
        step = new_level // self.level
        phi = euler_phi(new_level)
        out = [_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i * step) % new_level]
                for j, t in enumerate(row):
                    if t:
                        out[j] += c * t
        return CyclotomicNumber._raw(new_level, tuple(out))

    def lower_level(self, new_level: int) -> "CyclotomicNumber":
        """Rewrite at a divisor level; ValueError if the value is not in the
        smaller field."""
        if new_level == self.level:
            return self
        if self.level % new_level:
            raise ValueError(f"{new_level} does not divide {self.level}")
        cols = [
            CyclotomicNumber.zeta(new_level, j).raise_level(self.level).coeffs
            for j in range(euler_phi(new_level))
        ]
        mat = [[col[i] for col in cols] for i in range(euler_phi(self.level))]
        try:
            sol = linalg.solve_overdetermined(mat, list(self.coeffs))
        except ValueError as exc:
            raise ValueError(f"value is not in Q(zeta_{new_level})") from exc
        return CyclotomicNumber(new_level, sol)

    def _align(self, other: "CyclotomicNumber"):
        n = lcm(self.level, other.level)
        return self.raise_level(n), other.raise_level(n)

    # -- ring and field operations ----------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        return CyclotomicNumber._raw(
            a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return CyclotomicNumber._raw(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber._raw(self.level, tuple(c * f for c in self.coeffs))
        a, b = self._align(o)
        n = a.level
        phi = len(a.coeffs)
        raw = [_ZERO] * (2 * phi - 1)
        for i, ci in enumerate(a.coeffs):
            if ci:
                for j, cj in enumerate(b.coeffs):
                    if cj:
                        raw[i + j] += ci * cj
        out = list(raw[:phi])
        table = _power_table(n)
        for d in range(phi, len(raw)):
            cd = raw[d]
            if cd:
                row = table[d % n]
                for i, t in enumerate(row):
                    if t:
                        out[i] += cd * t
        return CyclotomicNumber._raw(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """1/x via the product of the nontrivial Galois conjugates divided by
        the norm. Unlike a rational-coefficient Euclidean algorithm this has
        no intermediate coefficient blowup at high degree."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.rational(Fraction(1) / self.coeffs[0], self.level)
        n = self.level
        conj = None
        for k in range(2, n):
            if gcd(k, n) == 1:
                img = self.galois(k)
                conj = img if conj is None else conj * img
        norm = (conj * self).to_rational()
        result = conj * (Fraction(1) / norm)
        if not (result * self).is_one():
            raise ArithmeticError("inverse verification failed")
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(1, self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- Galois action and traces -----------------------------------------

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^k; k must be a unit mod level."""
        n = self.level
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit mod {n}")
        table = _power_table(n)
        phi = len(self.coeffs)
        out = [_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i * k) % n]
                for j, t in enumerate(row):
                    if t:
                        out[j] += c * t
        return CyclotomicNumber._raw(n, tuple(out))

    def trace_to_rational(self) -> Fraction:
        """Trace down to Q."""
        table = _trace_table(self.level)
        return sum((c * table[i] for i, c in enumerate(self.coeffs)), Fraction(0))

    def norm_to_rational(self) -> Fraction:
        """Norm down to Q (product over the full Galois orbit)."""
        acc = CyclotomicNumber.rational(1, self.level)
        for k in range(1, self.level + 1):
            if gcd(k, self.level) == 1:
                acc = acc * self.galois(k)
        return acc.to_rational()

    # -- predicates and conversions ----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        """True iff the value lies in Z[zeta_n] (the full ring of integers)."""
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if self.level == o.level:
            return self.coeffs == o.coeffs
        a, b = self._align(o)
        return a.coeffs == b.coeffs

    __hash__ = None  # values at different levels compare equal; not hashable

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*z{self.level}")
                else:
                    terms.append(f"{c}*z{self.level}^{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }


@dataclass(frozen=True)
class GaloisAutomorphism:
    """sigma_k : zeta_n -> zeta_n^k on Q(zeta_n)."""

    level: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.level if self.level > 1 else 1)
        if gcd(self.k, self.level) != 1:
            raise ValueError(f"{self.k} is not a unit mod {self.level}")

    def __call__(self, x: CyclotomicNumber) -> CyclotomicNumber:
        return apply_galois(self, x)

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        if self.level != other.level:
            raise ValueError("automorphism levels differ")
        return GaloisAutomorphism(self.level, self.k * other.k)


def apply_galois(sigma: GaloisAutomorphism, x: CyclotomicNumber) -> CyclotomicNumber:
    if sigma.level != x.level:
        raise ValueError(f"automorphism level {sigma.level} != value level {x.level}")
    return x.galois(sigma.k)


def compatible_root(n: int, ambient: int) -> CyclotomicNumber:
    """zeta_n presented inside Q(zeta_ambient), i.e. zeta_ambient^(ambient/n)."""
    if ambient % n:
        raise ValueError(f"{n} does not divide {ambient}")
    return CyclotomicNumber.zeta(ambient, ambient // n)


@lru_cache(maxsize=None)
def prime_element_above(ell: int, level: int) -> "CyclotomicNumber":
    """A generator of a prime ideal over ell in Z[zeta_level], i.e. an
    integral element of norm +/- ell, found by bounded search over small
    coefficient vectors. Requires ell to split completely (ell = 1 mod level),
    which makes the residue degree 1; desk-scale class numbers are trivial so
    a generator of small height exists."""
    if level == 1:
        return CyclotomicNumber.rational(ell, 1)
    if ell % level != 1:
        raise ValueError(f"{ell} is not 1 mod {level}; no degree-one prime")
    phi = euler_phi(level)
    import itertools

    for height in range(1, ell + 1):
        for coeffs in itertools.product(range(-height, height + 1), repeat=phi):
            if max(abs(c) for c in coeffs) != height:
                continue
            x = CyclotomicNumber(level, coeffs)
            if abs(x.norm_to_rational()) == ell:
                return x
    raise ArithmeticError(f"no small generator of a prime over {ell} at level {level}")


def trace_to_subfield(x: CyclotomicNumber, subgroup_generators) -> CyclotomicNumber:
    """Sum of sigma_k(x) over the subgroup of (Z/level)^x generated by the
    given residues; the result is fixed by that subgroup."""
    H = subgroup_closure(tuple(subgroup_generators), x.level)
    acc = CyclotomicNumber.rational(0, x.level)
    for k in sorted(H):
        acc = acc + x.galois(k if x.level > 1 else 1)
    return acc
