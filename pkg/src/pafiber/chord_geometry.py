"""Numeric spherical geometry for chords between blue edges.

Points of S^3 are written ``(e^{i alpha} cos theta, e^{i beta} sin theta)``.
The chord-length functions below give the length of a geodesic chord as a
function of where its endpoints sit on two blue arcs; minimizing them over
their feasible regions reproduces the minimal chord lengths, and sampling
their partial derivatives reproduces the sliding monotonicity claims.

Nothing in the exact search depends on these floats: it uses the integer
tenth-of-pi constants that these computations corroborate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .exact_algebra import AngleTenth, cos_tenth_pi

PI = math.pi
HALF_PI = math.pi / 2
MARGIN = 1e-9

ETA = complex(math.cos(PI / 5), math.sin(PI / 5))
RE_ETA = [float(cos_tenth_pi(k)) for k in range(10)]   # Re eta^k = cos(k pi/5)
K_PLUS = (3 + math.sqrt(5)) / 2
K_MINUS = (3 - math.sqrt(5)) / 2


# ---------------------------------------------------------------------------
# points and distances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphericalPoint:
    alpha: float
    beta: float
    theta: float

    def __post_init__(self):
        if not -1e-12 <= self.theta <= HALF_PI + 1e-12:
            raise ValueError("theta must lie in [0, pi/2]")
        # canonical zeroing of the undefined phase
        if self.theta <= 1e-15:
            object.__setattr__(self, "beta", 0.0)
        elif self.theta >= HALF_PI - 1e-15:
            object.__setattr__(self, "alpha", 0.0)

    @property
    def z(self) -> complex:
        return complex(math.cos(self.alpha), math.sin(self.alpha)) * math.cos(self.theta)

    @property
    def w(self) -> complex:
        return complex(math.cos(self.beta), math.sin(self.beta)) * math.sin(self.theta)

    def vector(self) -> np.ndarray:
        z, w = self.z, self.w
        return np.array([z.real, z.imag, w.real, w.imag])

    @classmethod
    def on_arc(cls, z0_power: int, w0_power: int, theta: float) -> "SphericalPoint":
        """The point ``(eta^m cos theta, eta^n sin theta)``."""
        return cls(z0_power * PI / 5, w0_power * PI / 5, theta)


def sphere_distance(p, q) -> float:
    u = p.vector() if isinstance(p, SphericalPoint) else np.asarray(p, float)
    v = q.vector() if isinstance(q, SphericalPoint) else np.asarray(q, float)
    return math.acos(float(np.clip(u @ v, -1.0, 1.0)))


def point_line_distance(q: SphericalPoint, z0: complex, w0: complex) -> float:
    """Distance from q to the great circle ``{(cos t z0, sin t w0)}``."""
    a = (q.z / z0).real
    b = (q.w / w0).real
    return math.acos(min(1.0, math.sqrt(a * a + b * b)))


# ---------------------------------------------------------------------------
# chord types
# ---------------------------------------------------------------------------

TAGS = "abcdefgh"


@dataclass(frozen=True)
class ChordType:
    """One oriented chord type leaving the reference blue edge.

    Vectors are in original coordinates (the midpoint displacement and the
    sector directions).  Orientations are unit diagonal vectors giving the
    direction along each blue edge in which sliding the endpoint shortens the
    chord; they are filled in by :func:`derive_orientations`.
    """

    tag: str
    displacement: tuple
    base_length: AngleTenth
    start_sector: tuple
    end_sector: tuple
    start_orientation: Optional[tuple] = None
    end_orientation: Optional[tuple] = None

    @property
    def norm_sq(self) -> int:
        return sum(x * x for x in self.displacement)


# Reference data: displacement, sector at the start, sector at the end and
# minimal length in tenths of pi.  The displacement of (e) is (1,1,-3): it is
# the only chord with these two sectors (see the notes on the chord census).
REFERENCE_CHORDS = {
    "a": ChordType("a", (0, -2, 2), AngleTenth(4), (-1, -1, 2), (-2, 1, -1)),
    "b": ChordType("b", (1, -1, 1), AngleTenth(2), (1, -2, 1), (-2, 1, -1)),
    "c": ChordType("c", (2, 0, 0), AngleTenth(2), (2, -1, -1), (-2, 1, -1)),
    "d": ChordType("d", (3, 1, -1), AngleTenth(5), (1, 1, -2), (-2, 1, -1)),
    "e": ChordType("e", (1, 1, -3), AngleTenth(6), (1, 1, -2), (-1, -1, 2)),
    "f": ChordType("f", (-1, 3, -1), AngleTenth(6), (-1, 2, -1), (1, -2, 1)),
    "g": ChordType("g", (1, 3, 1), AngleTenth(5), (-1, 2, -1), (-1, -1, -2)),
    "h": ChordType("h", (0, 2, 2), AngleTenth(4), (-2, 1, 1), (-1, -1, -2)),
}

# The (e) vector as listed has squared norm 19; it is kept for the record.
LISTED_E_DISPLACEMENT = (3, 3, -1)

# Chord-length coefficients (A, B) in arccos(A cos t cos p + B sin t sin p).
CHORD_COEFFICIENTS = {
    "a": (RE_ETA[2], RE_ETA[4]),
    "h": (RE_ETA[2], RE_ETA[4]),
    "b": (RE_ETA[1], RE_ETA[2]),
    "c": (RE_ETA[3], RE_ETA[1]),
    "e": (RE_ETA[3], RE_ETA[6]),
    "f": (RE_ETA[3], RE_ETA[6]),
    "d": (RE_ETA[3], RE_ETA[4]),
    "g": (RE_ETA[3], RE_ETA[4]),
}


def _band(t, p):
    """Both inequalities of the symmetric band, as non-negative quantities."""
    return [np.tan(p) - K_MINUS * np.tan(t), K_PLUS * np.tan(t) - np.tan(p)]


def _above_two(t, p):
    return [np.tan(p) - K_PLUS * np.tan(t)]


CHORD_CONSTRAINTS = {
    "e": _band, "f": _band,
    "d": _above_two, "g": _above_two,
}


def chord_length(tag: str, theta, phi, check: bool = True):
    """Length of a geodesic chord of the given type with parameters (theta, phi)."""
    if tag not in CHORD_COEFFICIENTS:
        raise ValueError(f"unknown chord type {tag!r}")
    if check:
        cons = CHORD_CONSTRAINTS.get(tag)
        if cons is not None:
            for i, c in enumerate(cons(np.asarray(theta, float), np.asarray(phi, float))):
                if np.any(c < -MARGIN):
                    raise ValueError(f"parameters violate constraint {i} of type ({tag})")
    a, b = CHORD_COEFFICIENTS[tag]
    arg = a * np.cos(theta) * np.cos(phi) + b * np.sin(theta) * np.sin(phi)
    return np.arccos(np.clip(arg, -1.0, 1.0))


# ---------------------------------------------------------------------------
# constrained minimization
# ---------------------------------------------------------------------------

@dataclass
class ConstrainedObjective:
    """A vectorized objective on a box with inequality constraints ``c(x) >= 0``."""

    name: str
    objective: Callable
    dim: int
    constraints: Sequence[Callable] = field(default_factory=list)
    bounds: Optional[Sequence[tuple]] = None

    def box(self):
        return list(self.bounds) if self.bounds else [(0.0, HALF_PI)] * self.dim

    def feasible(self, *xs):
        ok = np.ones(np.broadcast(*xs).shape, bool)
        for c in self.constraints:
            for val in c(*xs):
                ok &= np.asarray(val) >= -MARGIN
        return ok

    def __call__(self, *xs):
        return self.objective(*xs)


def minimize(obj: ConstrainedObjective, grid_n: int = 64, iterations: int = 40):
    """Grid scan followed by coordinate descent with a shrinking step."""
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    box = obj.box()
    axes = [np.linspace(lo, hi, grid_n) for lo, hi in box]
    best_val, best_x = math.inf, None
    # scan in slabs along the first axis to keep memory bounded
    for x0 in axes[0]:
        mesh = np.meshgrid(np.array([x0]), *axes[1:], indexing="ij")
        mask = obj.feasible(*mesh)
        if not mask.any():
            continue
        vals = np.where(mask, obj(*mesh), np.inf)
        idx = np.unravel_index(int(np.argmin(vals)), vals.shape)
        v = float(vals[idx])
        if v < best_val:
            best_val, best_x = v, [float(m[idx]) for m in mesh]
    if best_x is None:
        raise ValueError(f"{obj.name}: empty feasible grid")

    def evaluate(x):
        arr = [np.array(xi) for xi in x]
        if not bool(obj.feasible(*arr)):
            return math.inf
        return float(obj(*arr))

    step = max(hi - lo for lo, hi in box) / (grid_n - 1)
    x = list(best_x)
    val = evaluate(x)
    for _ in range(iterations):
        improved = False
        for i, (lo, hi) in enumerate(box):
            for s in (step, -step):
                y = list(x)
                y[i] = min(hi, max(lo, y[i] + s))
                v = evaluate(y)
                if v < val:
                    x, val, improved = y, v, True
        if not improved:
            step /= 2
    return val, tuple(x)


def chord_objective(tag: str) -> ConstrainedObjective:
    cons = CHORD_CONSTRAINTS.get(tag)
    return ConstrainedObjective(
        f"chord.{tag}",
        lambda t, p: chord_length(tag, t, p, check=False),
        2,
        [cons] if cons else [],
    )


def _pt(zp, wp, t):
    """Vectorized coordinates of (eta^zp cos t, eta^wp sin t); zp, wp may be half-turn shifted."""
    za, wa = zp * PI / 5, wp * PI / 5
    return (np.cos(za) * np.cos(t), np.sin(za) * np.cos(t), np.cos(wa) * np.sin(t), np.sin(wa) * np.sin(t))


def _d(p, q):
    return np.arccos(np.clip(p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3], -1.0, 1.0))


def _neg(p):
    return tuple(-x for x in p)


def _bc(t, p, s):
    P, Q, R = _pt(0, 0, t), _pt(1, 2, p), _pt(4, 3, s)
    return _d(P, Q) + _d(Q, R)


def _bc_reduced(t):
    den = 4 * np.sqrt(np.cos(t) ** 2 + K_PLUS ** 2 * np.sin(t) ** 2)
    return np.arccos(np.clip(-(math.sqrt(5) + 1) / den, -1, 1))


def _ef_reduced(t):
    den = 4 * np.sqrt(np.cos(t) ** 2 + K_PLUS ** 2 * np.sin(t) ** 2)
    num = -(math.sqrt(5) - 1) * np.cos(t) ** 2 - (2 * math.sqrt(5) + 4) * np.sin(t) ** 2
    return np.arccos(np.clip(num / den, -1, 1))


def _bbc(t, p, s, a):
    P, Q, R, S = _pt(0, 0, t), _pt(1, 2, p), _pt(4, 3, s), _pt(-1, -2, a)
    return _d(R, Q) + _d(Q, P) + _d(P, S)


def _bfb(t, p, s, a):
    P = _pt(-2, 6, t)
    Q = _pt(0, 5, p)          # (cos p, -sin p)
    R = _pt(3, 1, s)
    S = _pt(5, 0, a)          # (-cos a, sin a)
    return _d(P, Q) + _d(Q, R) + _d(R, S)


def _antipodal_pair(p):
    """Reduced form in the same-line lemma: after sliding, the two outer
    endpoints are antipodal, (0,-1) and (0,1), and Q runs over its arc."""
    Q = _pt(4, 3, p)
    return _d(_pt(0, 5, HALF_PI), Q) + _d(Q, _pt(0, 0, HALF_PI))


def _bd_reduced(t):
    first = np.arccos(np.clip(np.sqrt((3 - math.sqrt(5)) / 8 + math.sqrt(5) / 4 * t ** 2), -1, 1))
    second = np.arccos(np.clip(-(math.sqrt(5) - 1) / 4 * t, -1, 1))
    return first + second


def _cd_reduced(p):
    Q = _pt(0, 5, p)
    return _d(_pt(1, 0, 0.0), Q) + _d(Q, _pt(3, 0, 0.0))


def lemma_objectives() -> dict:
    """Objectives whose minima are the lower bounds used by the bonus rules.

    Each value is a list of objectives; the bound is the least of their minima.
    """
    return {
        "bc": [
            ConstrainedObjective("bc", _bc, 3, [lambda t, p, s: [K_PLUS * np.tan(t) - np.tan(s)]]),
            ConstrainedObjective("bc.reduced", _bc_reduced, 1),
        ],
        "bbc": [
            # constraints from the two pictures together with the stationarity
            # consequence; second reading uses its corollary alpha >= psi
            ConstrainedObjective("bbc.first", _bbc, 4, [
                lambda t, p, s, a: [K_PLUS * np.tan(t) - np.tan(s), a - p, np.tan(a) - K_PLUS * np.tan(t)]]),
            ConstrainedObjective("bbc.second", _bbc, 4, [
                lambda t, p, s, a: [K_PLUS * np.tan(t) - np.tan(s), a - p, a - s]]),
        ],
        "hc": [
            ConstrainedObjective("hc.antipodal", _antipodal_pair, 1),
        ],
        "bfb": [
            ConstrainedObjective("bfb", _bfb, 4, [lambda t, p, s, a: _band(p, s)]),
        ],
        "bd": [
            ConstrainedObjective("bd.first", _bd_reduced, 1, bounds=[(0.0, 1.0)]),
            ConstrainedObjective("bd.second", _cd_reduced, 1),
        ],
    }


def extra_objectives() -> dict:
    return {
        "ef.boundary": ConstrainedObjective("ef.boundary", _ef_reduced, 1),
        "bc.reduced": ConstrainedObjective("bc.reduced", _bc_reduced, 1),
        "bbc.stated_only": ConstrainedObjective("bbc.stated_only", _bbc, 4, [
            lambda t, p, s, a: [K_PLUS * np.tan(t) - np.tan(s), a - p]]),
    }


def lemma_minimum(name: str, grid_n: int = 64) -> float:
    return min(minimize(o, grid_n)[0] for o in lemma_objectives()[name])


# Lower bounds (tenths of pi) the lemmas assert, and the bonus patterns they back.
LEMMA_BOUNDS = {"bc": 6, "bbc": 10, "hc": 10, "bfb": 12, "bd": 8}

BONUS_BACKING = [
    # (pattern, bonus in tenths, lemma)
    (("b", "b", "c"), 4, "bbc"),
    (("c", "b", "b"), 4, "bbc"),
    (("b", "f", "b"), 2, "bfb"),
    (("h", "c"), 4, "hc"),
    (("c", "a"), 4, "hc"),
    (("g", "b"), 3, "hc"),
    (("b", "d"), 3, "hc"),
    (("h", "d"), 1, "hc"),
    (("g", "a"), 1, "hc"),
    (("b", "c"), 1, "bc"),
    (("c", "b"), 1, "bc"),
    (("b", "d"), 1, "bd"),
    (("g", "b"), 1, "bd"),
    (("c", "d"), 1, "bd"),
    (("g", "c"), 1, "bd"),
]


# ---------------------------------------------------------------------------
# derivative sign checks
# ---------------------------------------------------------------------------

def _fd(tag, t, p, wrt, h=1e-6):
    if wrt == "theta":
        return (chord_length(tag, t + h, p, False) - chord_length(tag, t - h, p, False)) / (2 * h)
    return (chord_length(tag, t, p + h, False) - chord_length(tag, t, p - h, False)) / (2 * h)


# claim id -> (type, derivative, expected sign)
SIGN_CLAIMS = {
    "ah.dtheta": ("a", "theta", +1),
    "ah.dphi": ("a", "phi", +1),
    "c.dtheta": ("c", "theta", -1),
    "c.dphi": ("c", "phi", -1),
    "ef.dtheta": ("e", "theta", +1),
    "ef.dphi": ("e", "phi", +1),
    "dg.dtheta": ("d", "theta", +1),
    "dg.dphi": ("d", "phi", -1),
    "b.sum": ("b", "sum", +1),
}


@dataclass
class SignReport:
    claim: str
    points: int
    violations: list

    @property
    def passed(self) -> bool:
        return self.points > 0 and not self.violations


def sign_check(claim: str, grid_n: int = 256, expected: Optional[int] = None) -> SignReport:
    """Sample a partial derivative on the interior feasible grid and check its sign."""
    tag, wrt, sign = SIGN_CLAIMS[claim]
    if expected is not None:
        sign = expected
    ax = (np.arange(grid_n) + 0.5) * HALF_PI / grid_n
    t, p = np.meshgrid(ax, ax, indexing="ij")
    cons = CHORD_CONSTRAINTS.get(tag)
    mask = np.ones_like(t, bool)
    if cons is not None:
        for c in cons(t, p):
            mask &= c > 1e-6
    if wrt == "sum":
        val = _fd(tag, t, p, "theta") + _fd(tag, t, p, "phi")
    else:
        val = _fd(tag, t, p, wrt)
    bad = mask & ~(sign * val > 0)
    violations = [(float(t[i]), float(p[i]), float(val[i])) for i in zip(*np.nonzero(bad))]
    return SignReport(claim, int(mask.sum()), violations[:10])


# ---------------------------------------------------------------------------
# orientations from the developed chords
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DevelopedChord:
    """A reference chord developed into S^3.

    ``coefficients`` are the inner products of the developed red endpoints
    and of the green endpoints; ``directions`` are the parameter directions
    (+1 towards the green endpoint) that shorten the chord.
    """

    tag: str
    coefficients: tuple
    feasible_fraction: float
    directions: tuple
    start_orientation: tuple
    end_orientation: tuple


def _feasible_points(tag: str, grid_n: int):
    from .flat.development import initial_chart, lift_great_arc, s3_position
    from .flat.triangulation import blue_edge_at, sector_vector, tetrahedra_at_edge

    ref = REFERENCE_CHORDS[tag]
    e0 = blue_edge_at((0, 0, 0))
    e1 = blue_edge_at(tuple(2 * x for x in ref.displacement))

    def tet_with_sector(edge, sector):
        found = [t for t in tetrahedra_at_edge(*edge) if sector_vector(edge, t) == tuple(sector)]
        if len(found) != 1:
            raise AssertionError(f"({tag}): sector {sector} not found at {edge}")
        return found[0]

    t0 = tet_with_sector(e0, ref.start_sector)
    t1 = tet_with_sector(e1, ref.end_sector)
    chart = initial_chart(t0)
    r0, g0 = s3_position(chart[e0[0]]), s3_position(chart[e0[1]])
    ax = (np.arange(grid_n) + 0.5) * HALF_PI / grid_n
    arcs = [(("r", a), ("g", b)) for a in range(10) for b in range(10) if (b - 2 * a) % 5 == 0]
    hits = {}
    for rl, gl in arcs:
        r1, g1 = s3_position(rl), s3_position(gl)
        pts = []
        for th in ax:
            P = math.cos(th) * r0 + math.sin(th) * g0
            for ph in ax:
                Q = math.cos(ph) * r1 + math.sin(ph) * g1
                res = lift_great_arc(t0, chart, P, Q)
                if res is None:
                    continue
                tet, lab = res
                if tet == t1 and lab[e1[0]] == rl and lab[e1[1]] == gl:
                    pts.append((th, ph))
        if pts:
            hits[(rl, gl)] = pts
    if len(hits) != 1:
        raise AssertionError(f"({tag}): expected one developed end arc, found {len(hits)}")
    ((rl, gl), pts), = hits.items()
    coeffs = (float(r0 @ s3_position(rl)), float(g0 @ s3_position(gl)))
    return e0, e1, coeffs, pts, grid_n * grid_n


def _decreasing_direction(values, tag):
    if all(v < 0 for v in values):
        return +1
    if all(v > 0 for v in values):
        return -1
    raise ValueError(f"({tag}): ambiguous derivative sign on the feasible region")


def _half(u, v):
    return tuple((x - y) // 2 for x, y in zip(u, v))


@lru_cache(maxsize=None)
def develop_chord(tag: str, grid_n: int = 24) -> DevelopedChord:
    e0, e1, (A, B), pts, total = _feasible_points(tag, grid_n)

    def f(t, p):
        return math.acos(max(-1.0, min(1.0, A * math.cos(t) * math.cos(p) + B * math.sin(t) * math.sin(p))))

    h = 1e-6
    dt = [(f(t + h, p) - f(t - h, p)) / (2 * h) for t, p in pts]
    dp = [(f(t, p + h) - f(t, p - h)) / (2 * h) for t, p in pts]
    if tag == "b":
        pairs = [(s0, s1) for s0 in (1, -1) for s1 in (1, -1)
                 if all(s0 * a + s1 * b < 0 for a, b in zip(dt, dp))]
        if len(pairs) != 1:
            raise ValueError(f"(b): {len(pairs)} equal-rate decreasing directions")
        directions = pairs[0]
    else:
        directions = (_decreasing_direction(dt, tag), _decreasing_direction(dp, tag))
    # +1 means towards the green endpoint of the edge
    start = _half(e0[1], e0[0]) if directions[0] > 0 else _half(e0[0], e0[1])
    end = _half(e1[1], e1[0]) if directions[1] > 0 else _half(e1[0], e1[1])
    return DevelopedChord(tag, (A, B), len(pts) / total, directions, start, end)


def derive_orientations(chord) -> tuple:
    """(start, end) orientation vectors induced by a reference chord type."""
    tag = chord.tag if isinstance(chord, ChordType) else chord
    dev = develop_chord(tag)
    return dev.start_orientation, dev.end_orientation


@lru_cache(maxsize=None)
def oriented_reference_chords() -> dict:
    return {tag: replace(ch, start_orientation=derive_orientations(tag)[0],
                         end_orientation=derive_orientations(tag)[1])
            for tag, ch in REFERENCE_CHORDS.items()}


CHORD_MINIMA = {tag: ch.base_length.value for tag, ch in REFERENCE_CHORDS.items()}


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

TENTH = PI / 10


def chord_certificates(grid_n: int = 64, sign_grid: int = 256, tol: float = 1e-6) -> list:
    """Minima of the chord and lemma objectives, sign claims and bonus backing."""
    from .certificates import check

    certs = []
    minima = {}
    for tag in TAGS:
        val, arg = minimize(chord_objective(tag), grid_n)
        minima[tag] = val
    err = {t: abs(minima[t] - CHORD_MINIMA[t] * TENTH) for t in TAGS}
    certs.append(check("chords.minima", max(err.values()) < tol,
                       "minimal length of each chord type",
                       minima_tenths={t: round(v / TENTH, 9) for t, v in minima.items()},
                       expected_tenths=CHORD_MINIMA, max_error=max(err.values())))

    lemma = {name: lemma_minimum(name, grid_n) for name in LEMMA_BOUNDS}
    lerr = {n: abs(lemma[n] - LEMMA_BOUNDS[n] * TENTH) for n in LEMMA_BOUNDS}
    certs.append(check("chords.lemma_bounds", max(lerr.values()) < tol,
                       "lower bounds for chord pairs and triples",
                       minima_tenths={n: round(v / TENTH, 9) for n, v in lemma.items()},
                       expected_tenths=LEMMA_BOUNDS, max_error=max(lerr.values())))

    stab = {}
    for tag in ("a", "b", "c"):
        coarse = minimize(chord_objective(tag), grid_n)[0]
        fine = minimize(chord_objective(tag), 2 * grid_n)[0]
        stab[tag] = abs(coarse - fine)
    certs.append(check("chords.minimize_stability", max(stab.values()) < 1e-8,
                       "doubling the grid does not move the minimum", differences=stab))

    reports = [sign_check(c, sign_grid) for c in SIGN_CLAIMS]
    certs.append(check("chords.derivative_signs", all(r.passed for r in reports),
                       "sliding an endpoint changes the length monotonically",
                       points={r.claim: r.points for r in reports},
                       violations={r.claim: r.violations for r in reports if r.violations}))

    rows = []
    for pattern, extra, name in BONUS_BACKING:
        base = sum(CHORD_MINIMA[t] for t in pattern)
        ok = (base + extra) * TENTH <= lemma[name] + tol
        rows.append({"pattern": "".join(pattern), "base": base, "bonus": extra,
                     "lemma": name, "lemma_min_tenths": round(lemma[name] / TENTH, 9), "ok": ok})
    certs.append(check("chords.bonus_consistency", all(r["ok"] for r in rows),
                       "base plus bonus never exceeds the lemma bound", rows=rows))

    oriented = oriented_reference_chords()
    certs.append(check("chords.orientations", all(c.start_orientation and c.end_orientation
                                                  for c in oriented.values()),
                       "each chord type orients the blue edges it meets",
                       orientations={t: [c.start_orientation, c.end_orientation]
                                     for t, c in oriented.items()}))
    return certs
