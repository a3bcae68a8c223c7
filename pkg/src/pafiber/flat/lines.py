"""Blue lines in R^3, the translation lattice H and the crystallographic group G.

Coordinates are doubled: the integer triple ``p`` stands for the point ``p/2``.
In these units the blue line through the origin is spanned by (1,1,1) and the
translation lattice H consists of the vectors ``4*(a,b,c)`` with
``a = b = c (mod 2)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

Vec = tuple  # integer 3-tuple


def add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def neg(u):
    return (-u[0], -u[1], -u[2])


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def scale(c, u):
    return (c * u[0], c * u[1], c * u[2])


def is_parallel(u, v) -> bool:
    return cross(u, v) == (0, 0, 0)


def in_translation_lattice(v) -> bool:
    """Membership in H (doubled units)."""
    if v[0] % 4 or v[1] % 4 or v[2] % 4:
        return False
    return (v[0] // 4) % 2 == (v[1] // 4) % 2 == (v[2] // 4) % 2


def _canonical_direction(d):
    for x in d:
        if x:
            return tuple(d) if x > 0 else neg(d)
    raise ValueError("zero direction")


@dataclass(frozen=True)
class BlueLine:
    """A line ``point + s*direction``; stored in a canonical form.

    The direction is a diagonal vector (+-1,+-1,+-1) with positive first entry
    and the point is the (integer) intersection with the plane x = 0.
    """

    point: Vec
    direction: Vec

    def __post_init__(self):
        d = _canonical_direction(self.direction)
        if any(abs(x) != 1 for x in d):
            raise ValueError(f"blue lines are diagonal, got direction {self.direction}")
        s = -self.point[0] * d[0]
        p = add(self.point, scale(s, d))
        object.__setattr__(self, "direction", d)
        object.__setattr__(self, "point", p)

    def contains(self, p) -> bool:
        return is_parallel(sub(p, self.point), self.direction)

    def distance_sq_to_origin(self) -> Fraction:
        """Squared distance from the origin in original (undoubled) units."""
        p, d = self.point, self.direction
        return (Fraction(dot(p, p)) - Fraction(dot(p, d) ** 2, 3)) / 4

    def distance_sq(self, other: "BlueLine") -> Fraction:
        """Squared distance between two lines in original units."""
        w = sub(other.point, self.point)
        n = cross(self.direction, other.direction)
        if n == (0, 0, 0):
            d = self.direction
            return (Fraction(dot(w, w)) - Fraction(dot(w, d) ** 2, 3)) / 4
        return Fraction(dot(w, n) ** 2, dot(n, n)) / 4


BASE_LINES = (
    BlueLine((0, 0, 0), (1, 1, 1)),
    BlueLine((0, 0, 4), (1, -1, 1)),
    BlueLine((4, 0, 0), (1, 1, -1)),
    BlueLine((0, 4, 0), (-1, 1, 1)),
)

# raw (point, direction) pairs used for the membership test
_BASE_RAW = (
    ((0, 0, 0), (1, 1, 1)),
    ((0, 0, 4), (1, -1, 1)),
    ((4, 0, 0), (1, 1, -1)),
    ((0, 4, 0), (-1, 1, 1)),
)


@lru_cache(maxsize=None)
def line_through(p) -> Optional[BlueLine]:
    """The blue line containing the integer point ``p``, or None.

    ``p`` lies on a translate ``l_k + h`` iff ``p - p_k - t*d_k`` is in H for
    some integer ``t``; since ``4*d_k`` is in H only ``t`` mod 4 matters.
    """
    p = tuple(p)
    for pk, dk in _BASE_RAW:
        for t in range(4):
            if in_translation_lattice(sub(sub(p, pk), scale(t, dk))):
                return BlueLine(p, dk)
    return None


def is_on_blue_line(p) -> bool:
    return line_through(tuple(p)) is not None


def on_same_blue_line(p, q) -> bool:
    """True when the points p and q lie on one common blue line."""
    line = line_through(tuple(p))
    return line is not None and line.contains(q)


def blue_lines_in_ball(radius) -> list:
    """All blue lines at distance <= radius (original units) from the origin."""
    r2 = Fraction(radius) ** 2 if not isinstance(radius, float) else radius * radius
    bound = int(2 * float(radius)) + 12
    bound -= bound % 4
    found = set()
    for base in BASE_LINES:
        for h in itertools.product(range(-bound, bound + 1, 4), repeat=3):
            if not in_translation_lattice(h):
                continue
            line = BlueLine(add(base.point, h), base.direction)
            if line not in found and line.distance_sq_to_origin() <= r2:
                found.add(line)
    return sorted(found, key=lambda l: (l.distance_sq_to_origin(), l.direction, l.point))


# ---------------------------------------------------------------------------
# isometries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isometry3:
    """The affine map ``x -> linear @ x + translation`` on doubled coordinates."""

    linear: tuple
    translation: Vec = (0, 0, 0)

    def __call__(self, p):
        m = self.linear
        return (
            m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2] + self.translation[0],
            m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2] + self.translation[1],
            m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2] + self.translation[2],
        )

    def vector(self, v):
        m = self.linear
        return (
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        )

    def __matmul__(self, other: "Isometry3") -> "Isometry3":
        a, b = self.linear, other.linear
        lin = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))
        return Isometry3(lin, add(self.vector(other.translation), self.translation))

    def inverse(self) -> "Isometry3":
        lt = tuple(tuple(self.linear[j][i] for j in range(3)) for i in range(3))
        inv = Isometry3(lt)
        return Isometry3(lt, neg(inv.vector(self.translation)))

    def map_line(self, line: BlueLine) -> Optional[BlueLine]:
        d = self.vector(line.direction)
        if any(abs(x) != 1 for x in d):
            return None
        return BlueLine(self(line.point), d)

    def preserves_blue_lines(self) -> bool:
        """Whether the map sends the set of blue lines onto itself.

        The point part of a signed permutation preserves H, so it suffices
        that the four base lines land on blue lines; their directions are then
        pairwise distinct, so the four H-classes are permuted.
        """
        for line in BASE_LINES:
            img = self.map_line(line)
            if img is None or line_through(img.point) != img:
                return False
        return True

    def is_identity(self) -> bool:
        return self.linear == IDENTITY and self.translation == (0, 0, 0)

    def determinant(self) -> int:
        m = self.linear
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def signed_permutation_matrices() -> list:
    """The 48 signed permutation matrices (the octahedral group)."""
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            rows = []
            for i in range(3):
                row = [0, 0, 0]
                row[perm[i]] = signs[i]
                rows.append(tuple(row))
            out.append(tuple(rows))
    return out


@dataclass(frozen=True)
class SpaceGroup:
    """Coset representatives of H in G, one per point-group element."""

    representatives: tuple   # Isometry3, in the order of signed_permutation_matrices()
    translations_per_point_part: tuple   # number of valid translations in [0,8)^3

    def __len__(self):
        return len(self.representatives)

    def contains(self, g: Isometry3) -> bool:
        return g.preserves_blue_lines()

    def reduce(self, g: Isometry3) -> Isometry3:
        """The representative with the same point part as g."""
        for rep in self.representatives:
            if rep.linear == g.linear:
                return rep
        raise ValueError("not an isometry of the blue lines")


@lru_cache(maxsize=None)
def build_group() -> SpaceGroup:
    """Find, for each signed permutation, the translations that make it a symmetry.

    Translations are taken in the box [0,8)^3, which contains exactly two
    elements of every coset of H; the lexicographically least is kept.
    """
    reps = []
    counts = []
    for m in signed_permutation_matrices():
        good = [t for t in itertools.product(range(8), repeat=3)
                if Isometry3(m, t).preserves_blue_lines()]
        counts.append(len(good))
        if good:
            cosets = {min(t, _coset_partner(t)) for t in good}
            if len(cosets) != 1:
                raise AssertionError(f"point part {m} has {len(cosets)} translation classes")
            reps.append(Isometry3(m, min(cosets)))
    return SpaceGroup(tuple(reps), tuple(counts))


def _coset_partner(t):
    """The other element of t + H inside the box [0,8)^3."""
    return tuple((x + 4) % 8 for x in t)


def stabilizer(edge_midpoint=(0, 0, 0), axis=(1, 1, 1)) -> list:
    """Elements of G mapping the blue edge ``midpoint +- axis`` onto itself."""
    group = build_group()
    a, b = add(edge_midpoint, axis), sub(edge_midpoint, axis)
    out = []
    for rep in group.representatives:
        # the image of the midpoint must be the midpoint: solve for h in H
        h = sub(edge_midpoint, rep(edge_midpoint))
        if not in_translation_lattice(h):
            continue
        g = Isometry3(rep.linear, add(rep.translation, h))
        if {g(a), g(b)} == {a, b}:
            out.append(g)
    return out


def coordinate_half_turns() -> list:
    """Linear parts of the half-turns about the coordinate axes."""
    return [
        ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
        ((-1, 0, 0), (0, 1, 0), (0, 0, -1)),
        ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    ]


def lattice_vectors(bound: int) -> Iterable:
    """Elements of H with coordinates in [-bound, bound]."""
    b = bound - bound % 4
    for h in itertools.product(range(-b, b + 1, 4), repeat=3):
        if in_translation_lattice(h):
            yield h
