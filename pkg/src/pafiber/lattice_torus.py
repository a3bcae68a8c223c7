"""The lattice Lambda in C^2, the torus C^2/Lambda and its A4 description.

Lambda is the image of Z[zeta] (zeta = exp(2 pi i/5)) under
``x -> (sigma1(x), sigma2(x))`` with ``sigma2: zeta -> zeta^2``.  A point of
Lambda is stored as the coefficient vector ``(c0, c1, c2, c3)`` of
``c0 + c1 zeta + c2 zeta^2 + c3 zeta^3``, which is also its coordinate vector
in the basis (1,1), (zeta, zeta^2), (zeta^2, zeta^4), (zeta^3, zeta).

Every affine map considered here is a 4x4 integer matrix acting on these
coordinate columns plus a rational translation, so all checks are exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .certificates import check
from .exact_algebra import (
    GOLDEN_RATIO,
    GOLDEN_RATIO_INV,
    LAMBDA,
    CyclotomicInt,
    GoldenNumber,
    as_matrix,
    char_poly,
    det,
    identity,
    inverse,
    matmul,
    matvec,
    poly_mul,
    smith_normal_form,
    transpose,
)

Matrix = tuple


# ---------------------------------------------------------------------------
# the pairing
# ---------------------------------------------------------------------------

def as_cyclotomic(v) -> CyclotomicInt:
    return v if isinstance(v, CyclotomicInt) else CyclotomicInt(tuple(v))


def lattice_pairing(x, y) -> Fraction:
    """Real inner product in C^2 of the images of x and y.

    Computed as ``Re sigma1(x conj y) + Re sigma2(x conj y)`` in Q(sqrt5);
    the sqrt5 parts cancel, which is asserted.
    """
    p = as_cyclotomic(x) * as_cyclotomic(y).conjugate()
    val = p.real_part(1) + p.real_part(2)
    if not val.is_rational():
        raise AssertionError(f"pairing of {x} and {y} is irrational: {val}")
    return val.a


def _rational_pairing(x: Sequence, y: Sequence) -> Fraction:
    """The pairing extended bilinearly to rational coordinate vectors."""
    return sum(Fraction(a) * b * GRAM[i][j] for i, a in enumerate(x) for j, b in enumerate(y))


def gram_matrix(vectors) -> Matrix:
    return as_matrix([[lattice_pairing(u, v) for v in vectors] for u in vectors])


BASIS = tuple(CyclotomicInt.zeta_power(k) for k in range(4))
GRAM = gram_matrix(BASIS)

# bases of Lambda cap (iR)^2 and Lambda cap R^2
Z = CyclotomicInt.zeta_power
T_BASIS = (Z(1) - Z(4), Z(2) - Z(3))
T_PRIME_BASIS = (Z(0), Z(1) + Z(4))

EXPECTED_GRAM = as_matrix([[Fraction(4 if i == j else -1, 2) for j in range(4)] for i in range(4)])
EXPECTED_GRAM_T = ((5, 0), (0, 5))
EXPECTED_GRAM_T_PRIME = ((2, -1), (-1, 3))


# ---------------------------------------------------------------------------
# affine maps of the torus
# ---------------------------------------------------------------------------

def multiplication_matrix(c) -> Matrix:
    """Matrix of ``x -> c x`` on coordinate columns."""
    c = as_cyclotomic(c)
    return transpose(tuple((c * b).coeffs for b in BASIS))


def galois_matrix(k: int) -> Matrix:
    """Matrix of the ring automorphism ``zeta -> zeta^k``."""
    return transpose(tuple(b.galois(k).coeffs for b in BASIS))


def _frac1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def reduce_point(p) -> tuple:
    return tuple(_frac1(x) for x in p)


@dataclass(frozen=True)
class TorusIsometry:
    """``x -> linear x + translation`` on C^2/Lambda in lattice coordinates."""

    linear: Matrix
    translation: tuple = (0, 0, 0, 0)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "linear", as_matrix(self.linear))
        object.__setattr__(self, "translation", reduce_point(self.translation))

    def __call__(self, p) -> tuple:
        return reduce_point(a + b for a, b in zip(matvec(self.linear, p), self.translation))

    def __matmul__(self, other: "TorusIsometry") -> "TorusIsometry":
        return TorusIsometry(matmul(self.linear, other.linear),
                             [a + b for a, b in zip(matvec(self.linear, other.translation),
                                                     self.translation)],
                             f"{self.name}{other.name}")

    def __pow__(self, n: int) -> "TorusIsometry":
        out = TorusIsometry(identity(4))
        for _ in range(n):
            out = self @ out
        return out

    def is_identity(self) -> bool:
        return self.linear == identity(4) and not any(self.translation)

    def preserves_lattice(self) -> bool:
        """Integral invertible linear part and integral translation."""
        lin_ok = all(Fraction(x).denominator == 1 for row in self.linear for x in row)
        return lin_ok and abs(det(self.linear)) == 1 and not any(self.translation)

    def preserves_pairing(self) -> bool:
        m = self.linear
        return matmul(transpose(m), GRAM, m) == GRAM


R = TorusIsometry(multiplication_matrix(Z(1)), name="r")
S = TorusIsometry(matmul(multiplication_matrix(-Z(0)), galois_matrix(4)), name="s")
PHI = TorusIsometry(multiplication_matrix(LAMBDA), name="phi")

LISTED_MONODROMY = as_matrix([
    [0, 1, 0, -1],
    [0, 1, 1, -1],
    [-1, 1, 1, 0],
    [-1, 0, 1, 0],
])


def d10_elements() -> list:
    return [R ** k @ S ** e for k in range(5) for e in range(2)]


def verify_d10(r: TorusIsometry = R, s: TorusIsometry = S):
    """Relations of the dihedral group of order 10 and lattice preservation."""
    failures = []
    if not (r ** 5).is_identity() or any((r ** k).is_identity() for k in range(1, 5)):
        failures.append("order 5")
    if not (s ** 2).is_identity() or s.is_identity():
        failures.append("order 2")
    if not ((s @ r) ** 2).is_identity():
        failures.append("(sr)^2 = 1")
    for g in (r, s):
        if not g.preserves_lattice():
            failures.append(f"{g.name or 'map'} preserves the lattice")
        if not g.preserves_pairing():
            failures.append(f"{g.name or 'map'} preserves the pairing")
    return check("lattice.d10", not failures, "r and s generate a dihedral group of order 10",
                 failed_relations=failures)


# ---------------------------------------------------------------------------
# fixed points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositiveDimensional:
    """Outcome for a map whose fixed set is a union of subtori."""

    dimension: int


def fixed_points(g: TorusIsometry):
    """Solve ``(M - I) x = -t (mod Z^4)`` exactly with the Smith form."""
    n = 4
    a = as_matrix([[g.linear[i][j] - (i == j) for j in range(n)] for i in range(n)])
    if any(Fraction(x).denominator != 1 for row in a for x in row):
        raise ValueError("linear part must be integral")
    d, u, v = smith_normal_form(tuple(tuple(int(x) for x in row) for row in a))
    rhs = matvec(u, [-x for x in g.translation])
    diag = [d[i][i] for i in range(n)]
    zeros = [i for i in range(n) if diag[i] == 0]
    if zeros:
        if any(_frac1(rhs[i]) for i in zeros):
            return set()
        return PositiveDimensional(len(zeros))
    out = set()
    for ks in itertools.product(*[range(x) for x in diag]):
        y = [(Fraction(rhs[i]) + ks[i]) / diag[i] for i in range(n)]
        out.add(reduce_point(matvec(v, y)))
    return out


def t_coordinates(p) -> Optional[tuple]:
    """Coordinates of a torus point in the orthogonal basis of T, or None.

    Some translate p + n by a lattice vector lies in the real span of T iff
    p is on T; the basis is orthogonal with norm 5, so the coordinates are
    pairings divided by 5.
    """
    tvec = [b.coeffs for b in T_BASIS]
    tpvec = [b.coeffs for b in T_PRIME_BASIS]
    for n in itertools.product((-1, 0, 1), repeat=4):
        q = [Fraction(x) + y for x, y in zip(p, n)]
        if all(_rational_pairing(q, w) == 0 for w in tpvec):
            return tuple(_frac1(_rational_pairing(q, w) / 5) for w in tvec)
    return None


def r_fixed_points_formula() -> list:
    """``P_t = (t-1)/5 (4 + 3 zeta + 2 zeta^2 + zeta^3)`` for t = 1..5."""
    return [reduce_point(Fraction(t * c, 5) for c in (4, 3, 2, 1)) for t in range(5)]


EXPECTED_P_T = [(Fraction(0), Fraction(0)), (Fraction(4, 5), Fraction(3, 5)),
                (Fraction(3, 5), Fraction(1, 5)), (Fraction(2, 5), Fraction(4, 5)),
                (Fraction(1, 5), Fraction(2, 5))]

Q_POINTS = [reduce_point(x) for x in (
    (0, 0, 0, 0),
    (Fraction(1, 2), 0, 0, 0),
    tuple(Fraction(c, 2) for c in (Z(1) + Z(4)).coeffs),
    tuple(Fraction(c, 2) for c in (Z(2) + Z(3)).coeffs),
)]


def _restriction(g: TorusIsometry, basis, gram) -> Matrix:
    """Matrix of the linear part of g on the span of ``basis``."""
    vecs = [b.coeffs for b in basis]
    ginv = inverse(gram)
    cols = []
    for v in vecs:
        img = matvec(g.linear, v)
        pair = [_rational_pairing(img, w) for w in vecs]
        cols.append(matvec(ginv, pair))
    return transpose(tuple(cols))


def restriction_to_t(g: TorusIsometry) -> Matrix:
    return _restriction(g, T_BASIS, EXPECTED_GRAM_T)


def restriction_to_t_prime(g: TorusIsometry) -> Matrix:
    return _restriction(g, T_PRIME_BASIS, EXPECTED_GRAM_T_PRIME)


def _same_in_orbifold(p, q) -> bool:
    return any(d(p) == q for d in d10_elements())


def point_permutation(g: TorusIsometry, points, modulo_d10: bool = True) -> tuple:
    """Images of the points as a 1-based index tuple."""
    same = _same_in_orbifold if modulo_d10 else (lambda a, b: a == b)
    out = []
    for p in points:
        img = g(p)
        hits = [j + 1 for j, q in enumerate(points) if same(img, q)]
        if len(hits) != 1:
            raise AssertionError(f"{g.name}: image of {p} matches {hits}")
        out.append(hits[0])
    return tuple(out)


def cycle_notation(perm: Sequence[int]) -> str:
    """``(2453)``-style notation for a 1-based permutation tuple."""
    seen, parts = set(), []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x - 1]
        parts.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(parts) or "id"


def fixed_point_certificates() -> list:
    pts = fixed_points(R)
    formula = r_fixed_points_formula()
    tco = [t_coordinates(p) for p in formula]
    perm = point_permutation(PHI, formula, modulo_d10=False)
    s_fixed = fixed_points(S)
    phi_fixed = fixed_points(TorusIsometry(PHI.linear))
    qperm = point_permutation(PHI, Q_POINTS, modulo_d10=False)
    return [
        check("lattice.r_fixed_points",
              isinstance(pts, set) and pts == set(formula) and tco == EXPECTED_P_T,
              "r has five fixed points, all on T",
              count=len(pts) if isinstance(pts, set) else None,
              t_coordinates=[[str(a), str(b)] for a, b in tco]),
        check("lattice.s_fixed_set", isinstance(s_fixed, PositiveDimensional)
              and s_fixed.dimension == 2,
              "the fixed set of s is a torus",
              dimension=getattr(s_fixed, "dimension", None)),
        check("lattice.phi_fixed_point", phi_fixed == {(0, 0, 0, 0)},
              "the linear part of phi fixes only the origin",
              det_m_minus_i=det(tuple(tuple(PHI.linear[i][j] - (i == j) for j in range(4))
                                      for i in range(4)))),
        check("lattice.phi_on_p", cycle_notation(perm) == "(2453)",
              "phi fixes P1 and permutes the others cyclically", permutation=cycle_notation(perm)),
        check("lattice.phi_on_q", qperm == (1, 4, 2, 3),
              "phi permutes Q2, Q3, Q4", permutation=cycle_notation(qperm)),
    ]


# ---------------------------------------------------------------------------
# monodromy
# ---------------------------------------------------------------------------

def _g(x) -> GoldenNumber:
    return GoldenNumber.coerce(x) if not isinstance(x, GoldenNumber) else x


LAM = GOLDEN_RATIO
EIGENVECTORS = [
    ((-1, 0, LAM, LAM), LAM),
    ((1, 2, LAM, 2 - LAM), LAM),
    ((LAM, 0, 1, 1), -GOLDEN_RATIO_INV),
    ((1, 2, 1 - LAM, 1 + LAM), -GOLDEN_RATIO_INV),
]

GOLDEN_POLY = (1, -1, -1)   # x^2 - x - 1


def eigenvector_residuals(m: Matrix, pairs=EIGENVECTORS) -> list:
    """Indices of the (vector, eigenvalue) pairs with ``m v != value v``."""
    bad = []
    for i, (v, val) in enumerate(pairs):
        gv = [_g(x) for x in v]
        mv = [sum((gv[j] * m[r][j] for j in range(4)), GoldenNumber(0)) for r in range(4)]
        if any(a != val * b for a, b in zip(mv, gv)):
            bad.append(i)
    return bad


def monodromy_checks(eigenvalue_sign: int = 1) -> list:
    m = PHI.linear
    cp = char_poly(m)
    pairs = [(v, eigenvalue_sign * val) for v, val in EIGENVECTORS]
    resid = eigenvector_residuals(m, pairs)
    t_mat = restriction_to_t(PHI)
    tp_mat = restriction_to_t_prime(PHI)
    fib = ((1, 1), (1, 0))
    return [
        check("monodromy.matrix", m == LISTED_MONODROMY, "action of phi on the lattice",
              derived=[list(r) for r in m]),
        check("monodromy.char_poly", cp == poly_mul(GOLDEN_POLY, GOLDEN_POLY),
              "characteristic polynomial (x^2 - x - 1)^2", coefficients=list(cp)),
        check("monodromy.eigenvectors", not resid, "the four listed eigenvectors",
              failing=resid),
        check("monodromy.on_t", t_mat == fib and tp_mat == fib,
              "phi acts on T and T' as the Anosov map",
              on_t=[list(r) for r in t_mat], on_t_prime=[list(r) for r in tp_mat]),
    ]


def gram_certificates() -> list:
    gt = gram_matrix(T_BASIS)
    gtp = gram_matrix(T_PRIME_BASIS)
    index_ok = det(gt) * det(gtp) == 16 * det(GRAM)
    return [
        check("lattice.gram", GRAM == EXPECTED_GRAM, "Gram matrix of the four generators",
              gram=[[str(x) for x in r] for r in GRAM]),
        check("lattice.gram_t", gt == EXPECTED_GRAM_T and gtp == EXPECTED_GRAM_T_PRIME,
              "Gram matrices of the two Lagrangian tori",
              gram_t=[list(r) for r in gt], gram_t_prime=[list(r) for r in gtp]),
        check("lattice.index", index_ok, "the two tori span a sublattice of index 4",
              product=str(det(gt) * det(gtp)), sixteen_det_g=str(16 * det(GRAM))),
    ]


# ---------------------------------------------------------------------------
# symmetries of the orbifold
# ---------------------------------------------------------------------------

P2 = r_fixed_points_formula()[1]
RHO = TorusIsometry(identity(4), P2, "rho")
SIGMA = TorusIsometry(multiplication_matrix(-Z(0)), name="sigma")
TAU = TorusIsometry(galois_matrix(2), name="tau")
PSI = TorusIsometry(matmul(multiplication_matrix(LAMBDA.galois(2)), galois_matrix(3)), name="psi")

SYMMETRY_ACTIONS_ON_T = {
    "phi": ((1, 1), (1, 0)),
    "sigma": ((-1, 0), (0, -1)),
    "tau": ((0, -1), (1, 0)),
    "psi": ((1, 0), (-1, -1)),
}
SYMMETRY_PERMUTATIONS = {"phi": "(2453)", "tau": "(2453)", "rho": "(12345)",
                         "sigma": "(25)(34)", "psi": "id"}


def equal_in_orbifold(f: TorusIsometry, g: TorusIsometry) -> bool:
    """f = d g for some d in D10 (both maps are affine)."""
    return any((d @ g).linear == f.linear and (d @ g).translation == f.translation
               for d in d10_elements())


def orbifold_order(g: TorusIsometry, limit: int = 12) -> Optional[int]:
    ident = TorusIsometry(identity(4))
    for k in range(1, limit + 1):
        if equal_in_orbifold(g ** k, ident):
            return k
    return None


def normalizes_d10(g: TorusIsometry) -> bool:
    ginv = TorusIsometry(inverse(g.linear), [-x for x in matvec(inverse(g.linear), g.translation)])
    elems = d10_elements()
    return all(any((g @ d @ ginv).linear == e.linear and (g @ d @ ginv).translation == e.translation
                   for e in elems) for d in elems)


def orbifold_symmetry_checks() -> list:
    maps = {"phi": PHI, "rho": RHO, "sigma": SIGMA, "tau": TAU, "psi": PSI}
    orders = {k: orbifold_order(g) for k, g in maps.items() if k != "phi"}
    on_t = {k: restriction_to_t(maps[k]) for k in SYMMETRY_ACTIONS_ON_T}
    perms = {k: cycle_notation(point_permutation(g, r_fixed_points_formula()))
             for k, g in maps.items()}
    isometric = {k: g.preserves_pairing() for k, g in maps.items()}
    return [
        check("orbifold.normalize", all(normalizes_d10(g) and abs(det(g.linear)) == 1
                                        for g in maps.values()),
              "the symmetries normalize the lattice and the dihedral group"),
        check("orbifold.orders", orders == {"rho": 5, "sigma": 2, "tau": 4, "psi": 2},
              "rho, sigma, tau, psi have orders 5, 2, 4, 2", orders=orders),
        check("orbifold.relations", equal_in_orbifold(TAU @ TAU, SIGMA)
              and equal_in_orbifold(TAU @ PSI, PHI),
              "sigma = tau^2 and phi = tau psi"),
        check("orbifold.isometries", isometric == {"phi": False, "rho": True, "sigma": True,
                                                   "tau": True, "psi": False},
              "rho, sigma, tau are isometries; phi and psi are not", isometric=isometric),
        check("orbifold.action_on_t", all(on_t[k] == v for k, v in SYMMETRY_ACTIONS_ON_T.items())
              and t_coordinates(P2) == (Fraction(4, 5), Fraction(3, 5)),
              "linear actions on the singular torus",
              actions={k: [list(r) for r in v] for k, v in on_t.items()}),
        check("orbifold.permutations", perms == SYMMETRY_PERMUTATIONS,
              "permutations of the five points", permutations=perms),
    ]


# ---------------------------------------------------------------------------
# the A4 model
# ---------------------------------------------------------------------------

A4_BASIS = tuple(tuple(int(j == i + 1) - int(j == i) for j in range(5)) for i in range(4))
GAMMA_BASIS = ((0, -1, 1, 1, -1), (-1, 0, -1, 1, 1), (1, -1, 0, -1, 1), (1, 1, -1, 0, -1))

MAT_A = as_matrix([
    [1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0],
])
MAT_B = as_matrix([[Fraction(x, 5) for x in row] for row in [
    [-1, -1, 4, 4, -1],
    [4, -1, -1, -1, 4],
    [-1, 4, 4, -1, -1],
    [-1, -1, -1, 4, 4],
    [4, 4, -1, -1, -1],
]])
MAT_C = as_matrix([[Fraction(x, 5) for x in row] for row in [
    [-1, -1, 4, 4, -1],
    [-1, 4, 4, -1, -1],
    [4, 4, -1, -1, -1],
    [4, -1, -1, -1, 4],
    [-1, -1, -1, 4, 4],
]])
MAT_R5 = as_matrix([[int(i == (j + 1) % 5) for j in range(5)] for i in range(5)])
MAT_S5 = as_matrix([
    [-1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1],
    [0, 0, 0, -1, 0],
    [0, 0, -1, 0, 0],
    [0, -1, 0, 0, 0],
])


def dot5(u, v):
    return sum(a * b for a, b in zip(u, v))


class SublatticeOfH:
    """A rank-4 lattice in the hyperplane sum(x) = 0 of R^5."""

    def __init__(self, basis):
        self.basis = tuple(tuple(b) for b in basis)
        if any(sum(b) for b in self.basis):
            raise ValueError("basis vectors must have coordinate sum 0")
        gram = as_matrix([[dot5(u, v) for v in self.basis] for u in self.basis])
        if det(gram) == 0:
            raise ValueError("basis is degenerate")
        self.gram = gram
        self._gram_inv = inverse(gram)

    def coordinates(self, v) -> tuple:
        """Coordinates of a vector of H in this basis (rational)."""
        return matvec(self._gram_inv, [dot5(v, b) for b in self.basis])

    def contains(self, v) -> bool:
        if sum(v) != 0:
            return False
        return all(Fraction(c).denominator == 1 for c in self.coordinates(v))

    def reduce(self, v) -> tuple:
        """Representative of v + L with coordinates in [0, 1)."""
        c = self.coordinates(v)
        shift = [Fraction(x) - _frac1(x) for x in c]
        return tuple(x - sum(s * b[i] for s, b in zip(shift, self.basis)) for i, x in enumerate(v))

    def matrix_of(self, m: Matrix) -> Matrix:
        """Matrix of the linear map m (5x5) in this basis; rational if m does not preserve it."""
        cols = [self.coordinates(matvec(m, b)) for b in self.basis]
        return transpose(tuple(cols))


A4 = SublatticeOfH(A4_BASIS)
GAMMA = SublatticeOfH(GAMMA_BASIS)

SIMPLEX_EXAMPLE = ((0, 0, 0, 0, 0), (-1, 1, 0, 0, 0), (-1, 0, 1, 0, 0), (-1, 0, 0, 1, 0), (-1, 0, 0, 0, 1))


def tessellation_cell(corner, m: int) -> tuple:
    """Vertices of the cell ``{x : floor(x) = corner}``, where sum(corner) = -m.

    The cell is ``corner + {f in [0,1]^5 : sum f = m}``; its vertices are
    corner plus the 0/1 vectors with m ones.  m = 1, 4 give simplices and
    m = 2, 3 rectified simplices.
    """
    if sum(corner) != -m or not 1 <= m <= 4:
        raise ValueError("corner must have coordinate sum -m with 1 <= m <= 4")
    verts = []
    for ones in itertools.combinations(range(5), m):
        verts.append(tuple(c + (i in ones) for i, c in enumerate(corner)))
    return tuple(sorted(verts))


def _canonical_cell(cell, lattice: SublatticeOfH) -> tuple:
    base = cell[0]
    rep = lattice.reduce(base)
    shift = tuple(a - b for a, b in zip(base, rep))
    return tuple(sorted(tuple(x - s for x, s in zip(v, shift)) for v in cell))


def _census_at(lattice: SublatticeOfH, radius: int, offset) -> tuple:
    simplices, rectified = set(), set()
    rng = range(-radius, radius + 1)
    for head in itertools.product(rng, repeat=4):
        for m in range(1, 5):
            last = -m - sum(head)
            corner = tuple(h + o for h, o in zip(head + (last,), offset))
            if sum(corner) != -m:
                continue
            cell = tessellation_cell(corner, m)
            key = _canonical_cell(cell, lattice)
            (simplices if len(cell) == 5 else rectified).add(key)
    return len(simplices), len(rectified)


class RegionTooSmall(ValueError):
    pass


def a4_census(sublattice=GAMMA_BASIS, region_radius: int = 2, offset=(0, 0, 0, 0, 0)) -> tuple:
    """Orbits of simplices and rectified simplices of the 5-cell tessellation.

    Cells with corner in a box of the given radius are reduced modulo the
    sublattice.  The count is confirmed by re-running with a radius one
    larger; a change means the box did not cover a fundamental domain.
    """
    lat = sublattice if isinstance(sublattice, SublatticeOfH) else SublatticeOfH(sublattice)
    if sum(offset) != 0:
        raise ValueError("offset must lie in H")
    first = _census_at(lat, region_radius, offset)
    second = _census_at(lat, region_radius + 1, offset)
    if first != second:
        raise RegionTooSmall(f"radius {region_radius} gives {first}, radius {region_radius + 1} gives {second}")
    return first


def lattice_index(sub: SublatticeOfH, sup: SublatticeOfH = A4) -> int:
    return abs(det(as_matrix([sup.coordinates(b) for b in sub.basis])))


def gamma_symmetry_checks(a: Matrix = MAT_A, b: Matrix = MAT_B) -> list:
    c = matmul(a, b)
    out = []
    for name, m in (("A", a), ("B", b), ("C", c)):
        mat = GAMMA.matrix_of(m)
        integral = all(Fraction(x).denominator == 1 for row in mat for x in row)
        out.append(check(f"gamma.preserves_{name}", integral and abs(det(mat)) == 1,
                         f"{name} maps the sublattice onto itself",
                         matrix=[[str(x) for x in r] for r in mat]))
    # The listed matrices describe maps of the orbifold, so they agree with
    # the torus maps only up to the dihedral group.
    match = {name: _d10_factor(m, target)
             for name, m, target in (("A", a, TAU.linear), ("B", b, PSI.linear), ("C", c, PHI.linear))}
    out.append(check("gamma.c_equals_ab", c == MAT_C, "C = AB"))
    out.append(check("gamma.match_torus_maps", all(v is not None for v in match.values()),
                     "A, B, C are tau, psi, phi up to the dihedral group",
                     dihedral_factor=match))
    corrected = GAMMA.matrix_of(matmul(_a4_dihedral()[match["C"]], c)) if match["C"] else None
    cp = char_poly(corrected) if corrected else ()
    out.append(check("gamma.c_char_poly", cp == poly_mul(GOLDEN_POLY, GOLDEN_POLY),
                     "C gives the monodromy with characteristic polynomial (x^2 - x - 1)^2",
                     coefficients=[str(x) for x in cp],
                     raw_c_coefficients=[str(x) for x in char_poly(GAMMA.matrix_of(c))],
                     matches_lattice_matrix=corrected == LISTED_MONODROMY))
    return out


def _a4_dihedral() -> dict:
    out = {}
    for k in range(5):
        for e in range(2):
            m = identity(5)
            for _ in range(k):
                m = matmul(MAT_R5, m)
            if e:
                m = matmul(MAT_S5, m)
            out[f"r^{k} s^{e}"] = m
    return out


def _d10_factor(m: Matrix, target: Matrix) -> Optional[str]:
    """Name of the d with ``d m = target`` in the sublattice basis, if any."""
    for name, d in _a4_dihedral().items():
        if GAMMA.matrix_of(matmul(d, m)) == target:
            return name
    return None


def a4_model_checks(radius: int = 2) -> list:
    gram_g = GAMMA.gram
    twice = tuple(tuple(2 * x for x in r) for r in GRAM)
    r_mat = GAMMA.matrix_of(MAT_R5)
    s_mat = GAMMA.matrix_of(MAT_S5)
    fixed = [(0, -t, 0, t, 0) for t in range(5)]
    fixed_ok = all(GAMMA.contains(tuple(a - b for a, b in zip(matvec(MAT_R5, p), p))) for p in fixed)
    alt_ok = all(GAMMA.contains(tuple(a - b for a, b in zip((0, -t, 0, t, 0), (0, -2 * t, -t, t, 2 * t))))
                 for t in range(5))
    census_a4 = a4_census(A4_BASIS, radius)
    census_gamma = a4_census(GAMMA_BASIS, radius)
    shifted = a4_census(GAMMA_BASIS, radius, offset=(1, -1, 0, 0, 0))
    idx = lattice_index(GAMMA)
    return [
        check("a4.gamma_gram", gram_g == twice and GAMMA.contains((-1, 1, 1, -1, 0)),
              "the sublattice has twice the Gram matrix of the torus lattice",
              gram=[list(r) for r in gram_g]),
        check("a4.gamma_index", idx == 5, "the sublattice has index 5", index=idx),
        check("a4.r_s", r_mat == multiplication_matrix(Z(1)) and s_mat == S.linear,
              "r and s act as the cyclic shift and the signed reversal",
              r=[list(x) for x in r_mat], s=[list(x) for x in s_mat]),
        check("a4.fixed_points", fixed_ok and alt_ok, "fixed points of the cyclic shift"),
        check("a4.census", census_a4 == (2, 2) and census_gamma == (10, 10) and shifted == census_gamma
              and census_gamma == tuple(idx * x for x in census_a4),
              "simplices and rectified simplices in the two tori",
              a4=census_a4, gamma=census_gamma, shifted_region=shifted),
    ]


def lattice_certificates() -> list:
    return (gram_certificates() + [verify_d10()] + fixed_point_certificates()
            + monodromy_checks() + orbifold_symmetry_checks() + gamma_symmetry_checks()
            + a4_model_checks())
