"""Cyclic degree-p subfields of Q(zeta_f) with Gaussian-period bases, exact
fractional-ideal arithmetic, the different, and the square root of its
inverse.

A field is cut out by a surjective character chi: (Z/f)^x -> Z/p (f
squarefree, every prime factor = 1 mod p, p odd and prime to f, so every
ramified prime is tame and totally ramified). The periods are the orbit sums
of zeta_f under ker(chi), translated along powers of a generator g with
chi(g) = 1; for squarefree conductors they are a Z-basis of the maximal
order, which is certified here by the exact discriminant identity
disc = f^(p-1) rather than assumed.

Ideals are stored as row-HNF integer matrices over the period basis with a
single positive denominator, so equality of ideals is equality of canonical
forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .arith import (
    discrete_log_table,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    moebius,
    primitive_root,
    units_mod,
)
from .cyclotomic import CyclotomicNumber
from .groups import FiniteAbelianGroup, GroupElement


class FieldConstructionError(ValueError):
    """Invalid (p, f, character) data for a period field."""


class PeriodField:
    """Cyclic degree-p subfield of Q(zeta_f) with its period basis, exact
    integer multiplication table, and trace Gram matrix."""

    def __init__(self, degree: int, conductor: int, character: dict[int, int], generator: int):
        self.degree = degree
        self.conductor = conductor
        self.character = dict(character)
        self.generator = generator
        self.ramified_primes = tuple(p for p, _ in factorize(conductor))

        p, f = degree, conductor
        H = frozenset(x for x, v in self.character.items() if v == 0)
        if len(H) * p != len(self.character):
            raise FieldConstructionError("character kernel has the wrong index")
        self.subgroup = H
        if self.character.get(generator % f) != 1 % p:
            raise FieldConstructionError("generator must map to 1 under the character")
        self.cosets = tuple(pow(generator, j, f) for j in range(p))

        self.periods = tuple(self._orbit_sum(c) for c in self.cosets)
        self._init_expansion()
        self._init_tables()

    # -- construction internals ------------------------------------------

    def _orbit_sum(self, coset_rep: int) -> CyclotomicNumber:
        f = self.conductor
        acc = CyclotomicNumber.rational(0, f)
        for k in sorted(self.subgroup):
            acc = acc + CyclotomicNumber.zeta(f, coset_rep * k % f)
        return acc

    def _init_expansion(self):
        cols = [eta.coeffs for eta in self.periods]
        nrows = len(cols[0])
        self._embed_matrix = [[col[i] for col in cols] for i in range(nrows)]
        pivots = linalg._independent_rows(
            [[int(x) for x in row] for row in self._embed_matrix], self.degree
        )
        self._pivot_rows = pivots
        sub = [self._embed_matrix[i] for i in pivots]
        self._pivot_inverse = linalg.inverse(sub)

    def _init_tables(self):
        p, f = self.degree, self.conductor
        mu = moebius(f)
        table = []
        for i in range(p):
            row = []
            for j in range(p):
                prod = self.periods[i] * self.periods[j]
                coords = self.coordinates(prod)
                if any(c.denominator != 1 for c in coords):
                    raise FieldConstructionError(
                        "period products leave the period lattice; order not maximal"
                    )
                row.append(tuple(int(c) for c in coords))
            table.append(tuple(row))
        self.mult_table = tuple(table)

        # trace of every period is mu(f); Gram via the cyclotomic trace
        self.trace_of_period = mu
        gram = []
        for i in range(p):
            row = []
            for j in range(p):
                t = self.trace(self.periods[i] * self.periods[j])
                if t.denominator != 1:
                    raise FieldConstructionError("trace Gram is not integral")
                row.append(int(t))
            gram.append(tuple(row))
        self.gram = tuple(gram)
        # cross-check the Gram against the integer route through the tables
        for i in range(p):
            for j in range(p):
                alt = mu * sum(self.mult_table[i][j])
                if alt != self.gram[i][j]:
                    raise FieldConstructionError("trace tables disagree")
        disc = linalg.det([list(r) for r in self.gram])
        if disc != f ** (p - 1):
            raise FieldConstructionError(
                f"discriminant {disc} != {f}^{p-1}; conductor drops or order not maximal"
            )
        self.discriminant = int(disc)

    # -- element plumbing ---------------------------------------------------

    def element(self, coords, den: int = 1) -> CyclotomicNumber:
        acc = CyclotomicNumber.rational(0, self.conductor)
        for c, eta in zip(coords, self.periods):
            acc = acc + eta * Fraction(c, den)
        return acc

    def coordinates(self, x: CyclotomicNumber) -> tuple[Fraction, ...]:
        """Period-basis coordinates of x; raises ValueError if x is not in
        the field (checked against the full embedding, not just the pivots)."""
        x = x.raise_level(self.conductor)
        rhs = [x.coeffs[i] for i in self._pivot_rows]
        v = linalg.mat_vec(self._pivot_inverse, rhs)
        for i, row in enumerate(self._embed_matrix):
            if sum(a * b for a, b in zip(row, v)) != x.coeffs[i]:
                raise ValueError("value does not lie in the period field")
        return tuple(v)

    def contains(self, x: CyclotomicNumber) -> bool:
        try:
            self.coordinates(x)
            return True
        except ValueError:
            return False

    def sigma(self, x: CyclotomicNumber, power: int = 1) -> CyclotomicNumber:
        """The chosen Galois generator (restriction of zeta -> zeta^g)."""
        k = pow(self.generator, power % self.degree, self.conductor)
        return x.raise_level(self.conductor).galois(k)

    def sigma_coords(self, coords, power: int = 1):
        """sigma permutes the periods cyclically: index j -> j + power."""
        p = self.degree
        power %= p
        return tuple(coords[(j - power) % p] for j in range(p))

    def trace(self, x: CyclotomicNumber) -> Fraction:
        """Tr_{K/Q} via the full cyclotomic trace."""
        x = x.raise_level(self.conductor)
        return x.trace_to_rational() * Fraction(self.degree, euler_phi(self.conductor))

    def trace_pair_coords(self, v, w) -> Fraction:
        acc = Fraction(0)
        for i, a in enumerate(v):
            if a:
                for j, b in enumerate(w):
                    if b:
                        acc += Fraction(a) * Fraction(b) * self.gram[i][j]
        return acc

    def multiplication_matrix(self, coords):
        """Row t is the coordinate vector of eta_t * x for x with the given
        integer coordinates."""
        p = self.degree
        rows = []
        for t in range(p):
            row = [Fraction(0)] * p
            for u, c in enumerate(coords):
                if c:
                    for k, e in enumerate(self.mult_table[t][u]):
                        row[k] += Fraction(c) * e
            rows.append(row)
        return rows

    def maximal_order(self) -> "FractionalIdeal":
        return FractionalIdeal(self, linalg.identity_matrix(self.degree), 1)

    def principal_ideal(self, coords, den: int = 1) -> "FractionalIdeal":
        rows = self.multiplication_matrix(coords)
        num = []
        for row in rows:
            out = []
            for c in row:
                c = Fraction(c)
                if c.denominator != 1:
                    raise ValueError("principal generator must have integer numerator coordinates")
                out.append(int(c))
            num.append(out)
        return FractionalIdeal(self, num, den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodField):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.conductor == other.conductor
            and self.generator == other.generator
            and self.character == other.character
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.conductor, self.generator))

    def __repr__(self) -> str:
        return f"PeriodField(degree={self.degree}, conductor={self.conductor})"


def build_field(degree: int, conductor: int, generator: int | None = None,
                character: dict[int, int] | None = None) -> PeriodField:
    """Construct the canonical (or a chosen) cyclic degree-p field of the
    given squarefree conductor inside Q(zeta_f)."""
    p, f = degree, conductor
    if not is_prime(p) or p == 2:
        raise FieldConstructionError(f"degree {p} must be an odd prime")
    if f < 3:
        raise FieldConstructionError(f"conductor {f} is too small")
    if f % p == 0:
        raise FieldConstructionError(f"wild prime: {p} divides the conductor {f}")
    if not is_squarefree(f):
        raise FieldConstructionError(f"conductor {f} is not squarefree")
    for ell, _ in factorize(f):
        if (ell - 1) % p:
            raise FieldConstructionError(
                f"prime {ell} is not 1 mod {p}; no degree-{p} character of conductor {f}"
            )
    if character is None:
        parts = []
        for ell, _ in factorize(f):
            g_ell = primitive_root(ell)
            parts.append((ell, discrete_log_table(g_ell, ell)))
        character = {}
        for x in units_mod(f):
            character[x] = sum(dlog[x % ell] for ell, dlog in parts) % p
    if set(character.values()) != set(range(p)):
        raise FieldConstructionError("character is not surjective onto Z/p")
    if generator is None:
        generator = min(x for x, v in character.items() if v == 1)
    return PeriodField(p, f, character, generator)


class FractionalIdeal:
    """Full-rank fractional ideal as (1/den) times the row span of a
    canonical HNF integer matrix over the period basis."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: PeriodField, num_rows, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        rows = linalg.hnf([[int(x) for x in row] for row in num_rows])
        if len(rows) != field.degree:
            raise ValueError("ideal basis does not have full rank")
        g = den
        for row in rows:
            for c in row:
                g = gcd(g, c)
        if g > 1:
            rows = [[c // g for c in row] for row in rows]
            den //= g
        self.field = field
        self.num = tuple(tuple(r) for r in rows)
        self.den = den

    # -- structure -----------------------------------------------------------

    def basis_elements(self) -> list[CyclotomicNumber]:
        return [self.field.element(row, self.den) for row in self.num]

    def norm(self) -> Fraction:
        d = linalg.det([list(r) for r in self.num])
        return abs(Fraction(int(d), self.den**self.field.degree))

    def is_integral(self) -> bool:
        return self.den == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FractionalIdeal)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"FractionalIdeal(den={self.den}, rows={[list(r) for r in self.num]})"

    def to_json(self) -> dict:
        return {"den": self.den, "hnf_rows": [list(r) for r in self.num]}

    # -- membership ------------------------------------------------------------

    def contains_coords(self, coords, den: int = 1) -> bool:
        """Whether (1/den) * coords (period coordinates) lies in the ideal."""
        rhs = [Fraction(c, den) * self.den for c in coords]
        sol = linalg.solve([list(col) for col in zip(*self.num)], rhs)
        return all(s.denominator == 1 for s in sol)

    def contains_ideal(self, other: "FractionalIdeal") -> bool:
        return all(self.contains_coords(row, other.den) for row in other.num)

    # -- arithmetic ------------------------------------------------------------

    def __mul__(self, other: "FractionalIdeal") -> "FractionalIdeal":
        if not isinstance(other, FractionalIdeal):
            return NotImplemented
        if self.field is not other.field:
            raise ValueError("ideals live in different fields")
        K = self.field
        rows = []
        for a in self.num:
            mat = K.multiplication_matrix(a)
            for b in other.num:
                prod = [Fraction(0)] * K.degree
                for t, c in enumerate(b):
                    if c:
                        for k in range(K.degree):
                            prod[k] += c * mat[t][k]
                rows.append([int(x) for x in prod])
        return FractionalIdeal(K, linalg.hnf(rows), self.den * other.den)

    def __pow__(self, e: int) -> "FractionalIdeal":
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.maximal_order()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "FractionalIdeal":
        """{x : x * I is contained in the maximal order}, computed exactly."""
        K = self.field
        stacked = []
        for b in self.num:
            mat = K.multiplication_matrix(b)
            mt = [list(col) for col in zip(*mat)]  # act on column vectors
            for row in mt:
                stacked.append([Fraction(c, self.den) for c in row])
        rows, den = linalg.preimage_lattice(stacked)
        out = FractionalIdeal(K, rows, den)
        prod = out * self
        if prod != K.maximal_order():
            raise ArithmeticError("ideal inverse verification failed")
        return out

    def galois_image(self, power: int = 1) -> "FractionalIdeal":
        rows = [list(self.field.sigma_coords(row, power)) for row in self.num]
        return FractionalIdeal(self.field, rows, self.den)


def dual_lattice(lattice: FractionalIdeal) -> FractionalIdeal:
    """{x : Tr(x * L) integral} with respect to the trace form."""
    K = lattice.field
    mat = []
    for row in lattice.num:
        mat.append([
            Fraction(sum(row[t] * K.gram[t][k] for t in range(K.degree)), lattice.den)
            for k in range(K.degree)
        ])
    rows, den = linalg.preimage_lattice(mat)
    return FractionalIdeal(K, rows, den)


def prime_above(field: PeriodField, ell: int) -> FractionalIdeal:
    """The unique (totally ramified) prime over a ramified prime ell, found as
    the Frobenius kernel of the period order mod ell; total ramification is
    re-verified by an exact ideal power."""
    if ell not in field.ramified_primes:
        raise ValueError(f"{ell} is not ramified in this field")
    p = field.degree

    def mul_mod(v, w):
        out = [0] * p
        for t, a in enumerate(v):
            if a:
                for u, b in enumerate(w):
                    if b:
                        row = field.mult_table[t][u]
                        for k in range(p):
                            out[k] = (out[k] + a * b * row[k]) % ell
        return out

    frob_cols = []
    for t in range(p):
        base = [0] * p
        base[t] = 1
        acc = None
        power = base
        e = ell
        while e:
            if e & 1:
                acc = power if acc is None else mul_mod(acc, power)
            e >>= 1
            if e:
                power = mul_mod(power, power)
        frob_cols.append(acc)
    mat = [[frob_cols[t][i] for t in range(p)] for i in range(p)]
    kernel = linalg.kernel_mod_prime(mat, ell)
    rows = [[ell * int(i == j) for j in range(p)] for i in range(p)]
    rows.extend([list(v) for v in kernel])
    ideal = FractionalIdeal(field, linalg.hnf(rows), 1)
    if ideal.norm() != ell:
        raise ArithmeticError(f"prime over {ell} has norm {ideal.norm()}, expected {ell}")
    ell_ideal = FractionalIdeal(field, [[ell * int(i == j) for j in range(p)] for i in range(p)], 1)
    if ideal**p != ell_ideal:
        raise ArithmeticError(f"{ell} is not totally ramified; wrong Frobenius kernel")
    return ideal


def different(field: PeriodField) -> FractionalIdeal:
    """Product of the ramified primes to the (p-1): tame Hilbert exponents.
    Cross-checked against the dual-lattice characterization: the inverse of
    the different is the trace-dual of the maximal order."""
    p = field.degree
    d = field.maximal_order()
    for ell in field.ramified_primes:
        d = d * prime_above(field, ell) ** (p - 1)
    oracle = dual_lattice(field.maximal_order())
    if d.inverse() != oracle:
        raise ArithmeticError("Hilbert-formula different disagrees with the trace dual")
    return d


def sqrt_inverse_different(field: PeriodField) -> FractionalIdeal:
    """The ideal A with A^2 equal to the inverse different (exponents
    -(p-1)/2 at each ramified prime); the square is verified exactly."""
    p = field.degree
    half = (p - 1) // 2
    pos = field.maximal_order()
    for ell in field.ramified_primes:
        pos = pos * prime_above(field, ell) ** half
    A = pos.inverse()
    if A * A != different(field).inverse():
        raise ArithmeticError("square of the candidate is not the inverse different")
    return A


def trace_gram(field: PeriodField, elements) -> list[list[Fraction]]:
    """Exact matrix Tr(x_i * x_j) for elements of the field."""
    xs = [x.raise_level(field.conductor) for x in elements]
    return [[field.trace(a * b) for b in xs] for a in xs]


def compose_fields(field1: PeriodField, field2: PeriodField,
                   weights: tuple[int, int] = (1, 1)) -> PeriodField:
    """The degree-p field cut out by the weighted product of the two defining
    characters inside Q(zeta_{f1 f2}); conductors must be coprime and both
    weights nonzero mod p."""
    p = field1.degree
    if field2.degree != p:
        raise FieldConstructionError("fields have different degrees")
    f1, f2 = field1.conductor, field2.conductor
    if gcd(f1, f2) != 1:
        raise FieldConstructionError(f"conductor clash: gcd({f1}, {f2}) != 1")
    w1, w2 = weights
    if w1 % p == 0 or w2 % p == 0:
        raise FieldConstructionError("product character has smaller order")
    f = f1 * f2
    character = {}
    for x in units_mod(f):
        character[x] = (w1 * field1.character[x % f1] + w2 * field2.character[x % f2]) % p
    return build_field(p, f, character=character)


@dataclass(frozen=True)
class HomToG:
    """Isomorphism from the Galois group of a period field onto a cyclic
    group G of the same odd prime order, pinned by the image of the chosen
    Galois generator sigma."""

    field: PeriodField
    group: FiniteAbelianGroup
    sigma_image: GroupElement

    def __post_init__(self):
        p = self.field.degree
        if self.group.invariant_factors != (p,):
            raise ValueError(f"group must be cyclic of order {p}")
        if self.sigma_image.order() != p:
            raise ValueError("sigma must map to a generator")

    @classmethod
    def standard(cls, field: PeriodField, group: FiniteAbelianGroup | None = None) -> "HomToG":
        G = group if group is not None else FiniteAbelianGroup((field.degree,))
        return cls(field, G, G.element((1,)))

    def inverse_hom(self) -> "HomToG":
        return HomToG(self.field, self.group, self.sigma_image.inverse())

    def galois_power(self, s: GroupElement) -> int:
        """The exponent a with h(sigma^a) = s."""
        p = self.field.degree
        u = self.sigma_image.exponents[0]
        return s.exponents[0] * pow(u, -1, p) % p

    def product_weights(self, other: "HomToG") -> tuple[int, int]:
        """Character weights realizing the pointwise product of the two
        homomorphisms on the composite field."""
        if self.group != other.group:
            raise ValueError("homomorphisms target different groups")
        return (self.sigma_image.exponents[0], other.sigma_image.exponents[0])
