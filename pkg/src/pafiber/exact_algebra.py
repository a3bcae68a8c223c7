"""Exact arithmetic: rationals, the golden field Q(sqrt5), cyclotomic integers
Z[zeta_5], integer matrices, Smith normal form and characteristic polynomials.

Everything here is immutable and exact.  Floats appear only in ``__float__``
and ``to_complex`` helpers used by numeric cross-checks.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]
Matrix = tuple  # tuple of row tuples


# ---------------------------------------------------------------------------
# Q(sqrt 5)
# ---------------------------------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class GoldenNumber:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def coerce(x) -> "GoldenNumber":
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNumber(Fraction(x), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNumber(self.a * other.a + 5 * self.b * other.b,
                            self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenNumber":
        """Galois conjugate ``a - b*sqrt(5)``."""
        return GoldenNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "GoldenNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        c = self.conjugate()
        return GoldenNumber(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = GoldenNumber(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        return golden_sign(self)

    def __eq__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        other = GoldenNumber.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return golden_sign(self - other) < 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(5.0)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt5"


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def golden_sign(x: GoldenNumber) -> int:
    """Exact sign of ``a + b*sqrt5``."""
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with 5 b^2
    d = _sgn(x.a * x.a - 5 * x.b * x.b)
    return sa * d


SQRT5 = GoldenNumber(0, 1)
GOLDEN_RATIO = GoldenNumber(Fraction(1, 2), Fraction(1, 2))   # lambda
GOLDEN_RATIO_INV = GoldenNumber(Fraction(-1, 2), Fraction(1, 2))

# Re(eta^k) for eta = exp(i*pi/5), k = 0..9
_RE_ETA = (
    GoldenNumber(1),
    GoldenNumber(Fraction(1, 4), Fraction(1, 4)),
    GoldenNumber(Fraction(-1, 4), Fraction(1, 4)),
    GoldenNumber(Fraction(1, 4), Fraction(-1, 4)),
    GoldenNumber(Fraction(-1, 4), Fraction(-1, 4)),
    GoldenNumber(-1),
)


def cos_tenth_pi(k: int) -> GoldenNumber:
    """``cos(k*pi/5)`` as an exact element of Q(sqrt5)."""
    k %= 10
    return _RE_ETA[k] if k <= 5 else _RE_ETA[10 - k]


# ---------------------------------------------------------------------------
# Z[zeta_5]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicInt:
    """``c0 + c1 z + c2 z^2 + c3 z^3`` with ``z = exp(2 pi i / 5)``."""

    coeffs: tuple = (0, 0, 0, 0)

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        if len(c) != 4:
            raise ValueError("need exactly four coefficients")
        object.__setattr__(self, "coeffs", c)

    @staticmethod
    def from_powers(powers: Iterable[int]) -> "CyclotomicInt":
        """Reduce a length-5 (or shorter) list of coefficients of 1..z^4."""
        p = list(powers) + [0] * 5
        c4 = p[4]
        return CyclotomicInt(tuple(p[i] - c4 for i in range(4)))

    @staticmethod
    def zeta_power(k: int) -> "CyclotomicInt":
        p = [0] * 5
        p[k % 5] = 1
        return CyclotomicInt.from_powers(p)

    @staticmethod
    def coerce(x) -> "CyclotomicInt":
        if isinstance(x, CyclotomicInt):
            return x
        if isinstance(x, int):
            return CyclotomicInt((x, 0, 0, 0))
        return NotImplemented

    def __add__(self, other):
        other = CyclotomicInt.coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = CyclotomicInt.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = CyclotomicInt.coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * 5
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    prod[(i + j) % 5] += x * y
        return CyclotomicInt.from_powers(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need an explicit unit inverse")
        out, base = CyclotomicInt((1, 0, 0, 0)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, k: int) -> "CyclotomicInt":
        """Apply the automorphism ``z -> z^k`` (k prime to 5)."""
        if k % 5 == 0:
            raise ValueError("k must be prime to 5")
        p = [0] * 5
        for i, x in enumerate(self.coeffs):
            p[(i * k) % 5] += x
        return CyclotomicInt.from_powers(p)

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugation ``z -> z^-1``."""
        return self.galois(4)

    def real_part(self, k: int = 1) -> GoldenNumber:
        """Exact real part of the embedding ``z -> exp(2 pi i k / 5)``."""
        out = GoldenNumber(0)
        for i, x in enumerate(self.coeffs):
            if x:
                out = out + x * cos_tenth_pi(2 * i * k)
        return out

    def to_complex(self, k: int = 1) -> complex:
        z = cmath.exp(2j * math.pi * k / 5)
        return sum(x * z ** i for i, x in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicInt({self.coeffs})"


ZETA = CyclotomicInt((0, 1, 0, 0))
ONE = CyclotomicInt((1, 0, 0, 0))
# golden unit and its inverse: -z^2 - z^3 and z + z^4
LAMBDA = CyclotomicInt((0, 0, -1, -1))
LAMBDA_INV = CyclotomicInt.from_powers([0, 1, 0, 0, 1])


# ---------------------------------------------------------------------------
# Angles in tenths of pi
# ---------------------------------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class AngleTenth:
    """An angle ``value * pi / 10``; a full turn is 20 units."""

    value: int

    def __add__(self, other):
        if isinstance(other, AngleTenth):
            return AngleTenth(self.value + other.value)
        if isinstance(other, int):
            return AngleTenth(self.value + other)
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other):
        if isinstance(other, AngleTenth):
            return self.value < other.value
        if isinstance(other, int):
            return self.value < other
        return NotImplemented

    def radians(self) -> float:
        return self.value * math.pi / 10

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value}pi/10"


FULL_TURN = AngleTenth(20)


# ---------------------------------------------------------------------------
# Matrices (tuples of row tuples of ints or Fractions)
# ---------------------------------------------------------------------------

def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix")
    return m


def shape(m: Matrix) -> tuple:
    return (len(m), len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def matmul(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        if len(out[0]) != len(m):
            raise ValueError("shape mismatch")
        cols = tuple(zip(*m))
        out = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                    for row in out)
    return out


def matvec(m: Matrix, v: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def scale(m: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in m)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def matneg(m: Matrix) -> Matrix:
    return scale(m, -1)


def matpow(m: Matrix, n: int) -> Matrix:
    out = identity(len(m))
    for _ in range(n):
        out = matmul(out, m)
    return out


def det(m: Matrix):
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d.numerator if d.denominator == 1 else d


def inverse(m: Matrix) -> Matrix:
    """Exact inverse over Q (entries become Fractions or ints when integral)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(_simplify(x) for x in row[n:]) for row in a)


def _simplify(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def rank(m: Matrix) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(m: Matrix) -> tuple:
    """Return ``(D, U, V)`` with ``U @ m @ V == D`` and U, V unimodular.

    D is diagonal with non-negative entries ``d1 | d2 | ...``.  The pivot at
    each stage is an entry of minimal absolute value.
    """
    rows, cols = shape(m)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                # divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            nz = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            nz += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return as_matrix(a), as_matrix(u), as_matrix(v)


def invariant_factors(m: Matrix) -> list:
    """Nonzero diagonal entries of the Smith form."""
    if not m or not m[0]:
        return []
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(shape(d))) if d[i][i]]


def solve_integer_rows(m: Matrix, v: Sequence):
    """An integer vector x with ``x @ m == v``, or None if there is none."""
    d, u, w = smith_normal_form(m)
    rows, cols = shape(m)
    target = [sum(v[i] * w[i][j] for i in range(cols)) for j in range(cols)]
    y = [0] * rows
    for j, t in enumerate(target):
        dj = d[j][j] if j < min(rows, cols) else 0
        if dj == 0:
            if t:
                return None
        elif t % dj:
            return None
        else:
            y[j] = t // dj
    return tuple(sum(y[k] * u[k][i] for k in range(rows)) for i in range(rows))


def abelian_group_from_relations(relation_matrix: Matrix, n_generators: int) -> tuple:
    """Structure of Z^n / row-span as ``(free_rank, torsion)``."""
    if not relation_matrix:
        return n_generators, []
    facs = invariant_factors(relation_matrix)
    torsion = [f for f in facs if f != 1]
    return n_generators - len(facs), torsion


# ---------------------------------------------------------------------------
# Characteristic polynomials
# ---------------------------------------------------------------------------

def char_poly(m: Matrix) -> tuple:
    """Coefficients of ``det(xI - m)``, highest degree first.

    Uses the Faddeev-LeVerrier recursion over Q.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [Fraction(1)]
    mk = identity(n)
    aug = identity(n)
    for k in range(1, n + 1):
        mk = matmul(m, aug)
        c = -Fraction(sum(mk[i][i] for i in range(n)), k)
        coeffs.append(c)
        aug = matadd(mk, scale(identity(n), c))
    return tuple(_simplify(c) for c in coeffs)


def poly_eval_matrix(coeffs: Sequence, m: Matrix) -> Matrix:
    """Horner evaluation of a polynomial at a square matrix."""
    n = len(m)
    out = scale(identity(n), 0)
    for c in coeffs:
        out = matadd(matmul(out, m), scale(identity(n), c))
    return out


def poly_mul(p: Sequence, q: Sequence) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return tuple(out)


# ---------------------------------------------------------------------------
# Volumes
# ---------------------------------------------------------------------------

def cayley_menger_sq_volume(points: Sequence[Sequence]) -> Fraction:
    """Squared volume of the tetrahedron on four points, from pairwise distances.

    ``288 V^2 = det(CM)`` where CM is the bordered matrix of squared distances.
    """
    if len(points) != 4:
        raise ValueError("need exactly four points")
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d2 = [[sum((x - y) ** 2 for x, y in zip(p, q)) for q in pts] for p in pts]
    cm = [[0, 1, 1, 1, 1]] + [[1] + row for row in d2]
    return Fraction(det(as_matrix(cm))) / 288


# ---------------------------------------------------------------------------
# Self checks
# ---------------------------------------------------------------------------

def algebra_certificates() -> list:
    """Identities the other suites rely on, checked in exact arithmetic."""
    from .certificates import check

    g = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
    z_sum = CyclotomicInt.from_powers([1, 1, 1, 1, 1])
    cos_ok = cos_tenth_pi(1) == g * Fraction(1, 2) and cos_tenth_pi(5) == GoldenNumber(-1)
    snf = invariant_factors(((2, 4), (6, 8)))
    unit = cayley_menger_sq_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    return [
        check("algebra.golden", g * g == g + 1 and cos_ok, "golden ratio and cos(pi/5) in Q(sqrt5)"),
        check("algebra.cyclotomic", z_sum == CyclotomicInt(), "1 + z + ... + z^4 = 0 for z^5 = 1"),
        check("algebra.smith", snf == [2, 4], "Smith form of a small integer matrix", factors=snf),
        check("algebra.cayley_menger", unit == Fraction(1, 36), "squared volume of the unit corner simplex",
              value=str(unit)),
    ]
