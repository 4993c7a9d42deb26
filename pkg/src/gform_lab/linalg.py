"""Exact dense linear algebra over Z and Q.

Matrices are lists of row lists; entries are python ints or Fractions.
Everything is small (rank <= ~100) and exact, so plain Gaussian elimination
and textbook normal-form algorithms are used throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


# ---------------------------------------------------------------------------
# integer normal forms


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form of the lattice spanned by `rows`.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    zero rows are dropped. The output depends only on the row span.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    pr = 0
    for col in range(ncols):
        piv = None
        for i in range(pr, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[pr], mat[piv] = mat[piv], mat[pr]
        for i in range(pr + 1, len(mat)):
            b = mat[i][col]
            if b == 0:
                continue
            a = mat[pr][col]
            g, x, y = xgcd(a, b)
            u, v = a // g, b // g
            rp, ri = mat[pr], mat[i]
            for j in range(ncols):
                rj, sj = rp[j], ri[j]
                rp[j] = x * rj + y * sj
                ri[j] = -v * rj + u * sj
        if mat[pr][col] < 0:
            mat[pr] = [-x for x in mat[pr]]
        p = mat[pr][col]
        for i in range(pr):
            q = mat[i][col] // p
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[pr])]
        pr += 1
        if pr == len(mat):
            break
    return [r for r in mat[:pr] if any(r)]


def hnf_with_transform(rows: list[list[int]]):
    """(H, U, r) with U unimodular, U @ rows stacking the canonical HNF H (r
    rows) over zero rows. Entry growth is tamed by reducing above each pivot
    as soon as it is found."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    mat = [list(r) + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    pr = 0
    for col in range(ncols):
        piv = next((i for i in range(pr, m) if mat[i][col]), None)
        if piv is None:
            continue
        mat[pr], mat[piv] = mat[piv], mat[pr]
        for i in range(pr + 1, m):
            b = mat[i][col]
            if b == 0:
                continue
            a = mat[pr][col]
            g, x, y = xgcd(a, b)
            u, v = a // g, b // g
            rp, ri = mat[pr], mat[i]
            for j in range(len(rp)):
                rj, sj = rp[j], ri[j]
                rp[j] = x * rj + y * sj
                ri[j] = -v * rj + u * sj
        if mat[pr][col] < 0:
            mat[pr] = [-x for x in mat[pr]]
        p = mat[pr][col]
        for i in range(pr):
            q = mat[i][col] // p
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[pr])]
        pr += 1
        if pr == m:
            break
    H = [row[:ncols] for row in mat[:pr]]
    U = [row[ncols:] for row in mat]
    return H, U, pr


def integer_kernel(mat: list[list[int]]) -> list[list[int]]:
    """Canonical basis (rows) of {v in Z^n : mat @ v = 0}."""
    if not mat:
        return []
    rows = [list(col) for col in zip(*mat)]  # relations among columns of mat
    _H, U, r = hnf_with_transform(rows)
    return hnf([U[i] for i in range(r, len(rows))])


def preimage_lattice(mat: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    """Basis of {x in Q^n : mat @ x in Z^m} for a rational matrix of full
    column rank, returned as (rows, den): the lattice is (1/den) * rowspan(rows).
    """
    m = len(mat)
    n = len(mat[0])
    d = 1
    for row in mat:
        for c in row:
            c = Fraction(c)
            d = d * c.denominator // gcd(d, c.denominator)
    A = [[int(Fraction(c) * d) for c in row] for row in mat]
    # bound denominators: D * L is an integer lattice for D the determinant of
    # any nonsingular n x n submatrix of A
    pivot_rows = _independent_rows(A, n)
    D = abs(int(det([A[i] for i in pivot_rows])))
    if D == 0:
        raise ValueError("matrix does not have full column rank")
    q = D * d
    C = [row + [q if k == i else 0 for k in range(m)] for i, row in enumerate(A)]
    kernel = integer_kernel(C)
    proj = hnf([row[:n] for row in kernel])
    if len(proj) != n:
        raise ArithmeticError("preimage lattice has unexpected rank")
    den = D
    g = den
    for row in proj:
        for c in row:
            g = gcd(g, c)
    if g > 1:
        proj = [[c // g for c in row] for row in proj]
        den //= g
    return proj, den


def _independent_rows(A: list[list[int]], n: int) -> list[int]:
    """Indices of n rows of A forming a nonsingular n x n submatrix."""
    chosen = []
    basis: list[list[Fraction]] = []
    for idx, row in enumerate(A):
        v = [Fraction(x) for x in row]
        for b in basis:
            lead = next((j for j in range(n) if b[j]), None)
            if lead is not None and v[lead]:
                f = v[lead] / b[lead]
                v = [x - f * y for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
            chosen.append(idx)
            if len(chosen) == n:
                return chosen
    raise ValueError("matrix does not have full column rank")


# ---------------------------------------------------------------------------
# rational Gaussian elimination


def det(mat) -> Fraction:
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * d


def inverse(mat) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def solve(mat, rhs) -> list[Fraction]:
    """Solve mat @ x = rhs for square nonsingular mat."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


def solve_overdetermined(mat, rhs) -> list[Fraction]:
    """Solve mat @ x = rhs exactly where mat (m x n, m >= n) has full column
    rank; raises ValueError if the system is inconsistent."""
    m = len(mat)
    n = len(mat[0])
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if r < n:
        raise ValueError("matrix does not have full column rank")
    for i in range(r, m):
        if a[i][n] != 0:
            raise ValueError("inconsistent overdetermined system")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = a[i][n]
    return x


def kernel_mod_prime(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of mat over F_p, entries lifted to [0, p)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [[x % p for x in row] for row in mat]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, rr in pivots.items():
            v[c] = (-a[rr][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# quadratic form enumeration


def ldl(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Decompose a symmetric matrix as Q = R^T D R with R unit upper
    triangular; returns (diag of D, R). Raises if Q is not positive definite.
    """
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        acc = q[i][i] - sum(d[k] * r[k][i] * r[k][i] for k in range(i))
        if acc <= 0:
            raise ValueError("form is not positive definite")
        d[i] = acc
        for j in range(i + 1, n):
            acc = q[i][j] - sum(d[k] * r[k][i] * r[k][j] for k in range(i))
            r[i][j] = acc / d[i]
    return d, r


def _sqrt_floor(x: Fraction) -> int:
    if x < 0:
        return -1
    return isqrt(x.numerator // x.denominator)


def quadratic_solutions(gram, target) -> list[tuple[int, ...]]:
    """All nonzero integer vectors v with v^T gram v == target, up to sign.

    Representatives are normalized so the first nonzero coordinate is
    positive, and returned sorted descending-lexicographically. Exact
    Fincke-Pohst style enumeration over the LDL decomposition.
    """
    n = len(gram)
    t = Fraction(target)
    d, r = ldl(gram)
    sols = []
    v = [0] * n

    def recurse(i: int, rem: Fraction):
        if i < 0:
            if rem == 0 and any(v):
                sols.append(tuple(v))
            return
        c = sum(r[i][j] * v[j] for j in range(i + 1, n))
        bound = rem / d[i]
        # integer window for (v_i + c)^2 <= bound
        s = _sqrt_floor(bound)
        base = -c
        lo = int(base) - s - 2
        hi = int(base) + s + 2
        for vi in range(lo, hi + 1):
            w = vi + c
            term = d[i] * w * w
            if term <= rem:
                v[i] = vi
                recurse(i - 1, rem - term)
        v[i] = 0

    recurse(n - 1, t)
    canon = set()
    for s in sols:
        lead = next(x for x in s if x)
        canon.add(s if lead > 0 else tuple(-x for x in s))
    return sorted(canon, key=lambda s: tuple(-x for x in s))
