"""Facets and 3-faces of the ideal cross-polytope and their face pairings.

The ideal vertices are ``+-e_i``.  A facet is a sign vector ``s`` in
``{-1,1}^5`` with vertices ``s_i e_i``; a 3-face is a sign vector with one
zero, lying on the two facets obtained by filling the zero with ``+-1``.

A pairing row with permutation ``p`` sends the source vertex ``s_i e_i`` to
the target vertex ``t_p(i) e_p(i)``.  Copies of the polytope are numbered
1..3; the single-polytope table uses copy 1 throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from ..certificates import check

DIHEDRAL = Fraction(2, 3)   # dihedral angle, in units of pi
FULL = Fraction(2)


class GluingError(ValueError):
    """A pairing table that is not an involution on the facets."""


@dataclass(frozen=True, order=True)
class Facet:
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != 5 or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad facet signs {self.signs}")

    @property
    def vertices(self) -> frozenset:
        return frozenset((i + 1, s) for i, s in enumerate(self.signs))

    def faces(self) -> list:
        return [ThreeFace(self.signs[:k] + (0,) + self.signs[k + 1:]) for k in range(5)]

    def __str__(self):
        return "F" + "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True, order=True)
class ThreeFace:
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != 5 or self.signs.count(0) != 1 or any(s not in (1, 0, -1) for s in self.signs):
            raise ValueError(f"bad 3-face signs {self.signs}")

    @property
    def gap(self) -> int:
        """Coordinate (1-based) of the zero."""
        return self.signs.index(0) + 1

    @property
    def vertices(self) -> frozenset:
        return frozenset((i + 1, s) for i, s in enumerate(self.signs) if s)

    def facets(self) -> tuple:
        k = self.gap - 1
        return tuple(Facet(self.signs[:k] + (s,) + self.signs[k + 1:]) for s in (1, -1))

    def lies_on(self, facet: Facet) -> bool:
        return all(x == 0 or x == y for x, y in zip(self.signs, facet.signs))

    def __str__(self):
        return "F" + "".join("+-0"[(1, -1, 0).index(s)] for s in self.signs)


ALL_FACETS = tuple(Facet(s) for s in itertools.product((1, -1), repeat=5))
ALL_FACES = tuple(ThreeFace(s) for s in itertools.product((1, 0, -1), repeat=5) if s.count(0) == 1)


def perm_from_text(text: str) -> tuple:
    """``"(34)(25)"`` or ``"id"`` as the image tuple of 1..5."""
    p = list(range(1, 6))
    if text != "id":
        for cyc in text.strip("()").split(")("):
            xs = [int(c) for c in cyc]
            for k, x in enumerate(xs):
                p[x - 1] = xs[(k + 1) % len(xs)]
    return tuple(p)


def perm_text(p: tuple) -> str:
    seen, out = set(), []
    for i in range(1, 6):
        if i in seen or p[i - 1] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j - 1]
        out.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(out) or "id"


def perm_inverse(p: tuple) -> tuple:
    out = [0] * 5
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def perm_compose(p: tuple, q: tuple) -> tuple:
    """``p`` after ``q``."""
    return tuple(p[q[i] - 1] for i in range(5))


@dataclass(frozen=True, order=True)
class PairingRow:
    source: Facet
    perm: tuple
    target: Facet
    source_copy: int = 1
    target_copy: int = 1

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3, 4, 5]:
            raise ValueError(f"bad permutation {self.perm}")

    def inverse(self) -> "PairingRow":
        return PairingRow(self.target, perm_inverse(self.perm), self.source, self.target_copy, self.source_copy)

    def vertex_map(self) -> dict:
        t = self.target.signs
        return {(i, s): (self.perm[i - 1], t[self.perm[i - 1] - 1]) for i, s in self.source.vertices}

    def canonical(self) -> tuple:
        """Key independent of row orientation."""
        a = (self.source_copy, self.source.signs, self.perm, self.target_copy, self.target.signs)
        inv = self.inverse()
        b = (inv.source_copy, inv.source.signs, inv.perm, inv.target_copy, inv.target.signs)
        return min(a, b)

    def __str__(self):
        return f"{self.source}^{self.source_copy} -{perm_text(self.perm)}-> {self.target}^{self.target_copy}"


def _copy_rule(text: str):
    """``"a-1"``, ``"1-a"``, ``"2-a"`` as a function of the copy index."""
    text = text.replace(" ", "")
    if text.startswith("a"):
        off = int(text[1:] or 0)
        return lambda a: (a + off - 1) % 3 + 1
    const = int(text[: text.index("-a")])
    return lambda a: (const - a - 1) % 3 + 1


def parse_table(text: str) -> list:
    """Rows of a pairing table file; a fourth column expands the row over 3 copies."""
    rows = []
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 4) or any(set(parts[k]) - set("+-") for k in (0, 2)):
            raise ValueError(f"cannot parse table line {line!r}")
        src = Facet(tuple(1 if c == "+" else -1 for c in parts[0]))
        p = perm_from_text(parts[1])
        dst = Facet(tuple(1 if c == "+" else -1 for c in parts[2]))
        if len(parts) == 3:
            rows.append(PairingRow(src, p, dst))
        else:
            rule = _copy_rule(parts[3])
            rows.extend(PairingRow(src, p, dst, a, rule(a)) for a in (1, 2, 3))
    return rows


def load_table(name: str) -> list:
    """``"table1"`` (one polytope) or ``"table4"`` (three copies)."""
    text = resources.files(__package__).joinpath("tables", f"{name}.txt").read_text()
    return parse_table(text)


def induced_face_map(row: PairingRow, f: ThreeFace) -> ThreeFace:
    if not f.lies_on(row.source):
        raise ValueError(f"{f} is not a face of {row.source}")
    out = [0] * 5
    for i, s in enumerate(f.signs, start=1):
        if s:
            j = row.perm[i - 1]
            out[j - 1] = row.target.signs[j - 1]
    return ThreeFace(tuple(out))


def pairing_map(rows) -> dict:
    """``(copy, facet) -> row`` leaving that facet; checks the table is an involution."""
    out = {}
    copies = sorted({r.source_copy for r in rows} | {r.target_copy for r in rows})
    for r in rows:
        for x in (r, r.inverse()):
            key = (x.source_copy, x.source)
            if key in out:
                raise GluingError(f"facet {x.source} of copy {x.source_copy} is paired twice")
            out[key] = x
    missing = [(c, str(f)) for c in copies for f in ALL_FACETS if (c, f) not in out]
    if missing:
        raise GluingError(f"unpaired facets: {missing[:5]}")
    return out


@dataclass
class Cycle:
    faces: list          # [(copy, ThreeFace)] in walking order
    steps: list          # PairingRow used after each face
    holonomy: tuple      # composed vertex permutation back on the first face

    @property
    def length(self) -> int:
        return len(self.faces)


@dataclass
class CycleReport:
    cycles: list
    copies: int
    lengths: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lengths = {}
        for c in self.cycles:
            self.lengths[c.length] = self.lengths.get(c.length, 0) + 1

    def angle_sum(self, cycle: Cycle) -> Fraction:
        return cycle.length * DIHEDRAL

    def cone_faces(self) -> list:
        return [c.faces[0] for c in self.cycles if c.length == 1]


def _other_facet(f: ThreeFace, facet: Facet) -> Facet:
    a, b = f.facets()
    return b if a == facet else a


def cycle_decomposition(rows) -> CycleReport:
    """Cycles of (copy, 3-face) pairs: leave through one facet, re-enter, exit through the other."""
    gl = pairing_map(rows)
    copies = sorted({c for c, _ in gl})
    seen = set()
    cycles = []
    for c in copies:
        for f in ALL_FACES:
            start = (c, f, f.facets()[0])
            if start in seen:
                continue
            faces, steps, hol = [], [], tuple(range(1, 6))
            cur = start
            while True:
                cc, g, exit_ = cur
                seen.add(cur)
                seen.add((cc, g, _other_facet(g, exit_)))
                row = gl[(cc, exit_)]
                faces.append((cc, g))
                steps.append(row)
                hol = perm_compose(row.perm, hol)
                g2 = induced_face_map(row, g)
                cur = (row.target_copy, g2, _other_facet(g2, row.target))
                if cur == start:
                    break
                if len(faces) > 4 * len(ALL_FACES):
                    raise GluingError("face walk does not close")
            cycles.append(Cycle(faces, steps, hol))
    return CycleReport(cycles, len(copies))


def holonomy_on_face(cycle: Cycle) -> dict:
    """Composed vertex map restricted to the first face, as axis -> axis."""
    f = cycle.faces[0][1]
    return {i: cycle.holonomy[i - 1] for i, s in enumerate(f.signs, start=1) if s}


def angle_certificate(report: CycleReport, claim_id: str = "gluing.angles"):
    bad = [[f"{str(g)}^{c}" for c, g in cyc.faces] for cyc in report.cycles if cyc.length not in (1, 3)]
    sums = sorted({str(report.angle_sum(c)) for c in report.cycles if c.length == 3})
    # going once around a cycle must fix the face pointwise; a cone face is
    # fixed by the rotation about it, so the same holds there
    trivial_hol = all(all(i == j for i, j in holonomy_on_face(c).items()) for c in report.cycles)
    cone = [str(f) for _, f in report.cone_faces()]
    ok = not bad and sums in ([], [str(FULL)]) and trivial_hol
    return check(claim_id, ok, "angle sums of 3-face cycles with dihedral angle 2pi/3",
                 cycle_lengths=dict(sorted(report.lengths.items())), angle_sums_in_pi=sums,
                 cone_faces=cone, cone_angle_in_pi=str(DIHEDRAL) if cone else None,
                 identity_holonomy=trivial_hol, bad_cycles=bad[:5])


# Explicit rows of the listed cycle lists: (face, permutation, face, ...).
CYCLE_DISPLAY = [
    ("0----", "(34)(25)", "0++++", "(2453)", "0-++-", "(2453)"),
    ("-0---", "(34)(25)", "++++0", "(2453)", "+-0-+", "(2453)"),
    ("----0", "(34)(25)", "+0+++", "(2453)", "++-0-", "(2453)"),
    ("+0---", "(3542)", "+-0+-", "id", "+-0++", "(2453)"),
    ("-+0--", "(3542)", "+-+-0", "id", "+++-0", "(2453)"),
    ("0---+", "(3542)", "0+-+-", "id", "0+++-", "(2453)"),
    ("+-0--", "(3542)", "+-++0", "(2453)", "++0--", "id"),
    ("-+-0-", "(3542)", "+0+-+", "(2453)", "-++0-", "id"),
    ("-0--+", "(3542)", "++0+-", "(2453)", "+0--+", "id"),
    ("+--0-", "(3542)", "+0++-", "(2453)", "+--0+", "id"),
    ("-+--0", "(3542)", "+-+0+", "(2453)", "++--0", "id"),
    ("--0-+", "(3542)", "++-+0", "(2453)", "--0++", "id"),
    ("+---0", "(3542)", "+-+0-", "id", "+++0-", "(2453)"),
    ("0+---", "(3542)", "0-+-+", "id", "0-+++", "(2453)"),
    ("---0+", "(3542)", "+0-+-", "id", "+0-++", "(2453)"),
]
CONE_DISPLAY = ["+0+--", "-+0+-", "0+--+"]


def face_from_text(text: str) -> ThreeFace:
    return ThreeFace(tuple({"+": 1, "-": -1, "0": 0}[c] for c in text))


def display_arrow_ok(gl: dict, x: ThreeFace, perm: tuple, y: ThreeFace, copy: int = 1) -> bool:
    """Is there a facet through ``x`` whose pairing has permutation ``perm`` and sends x to y?"""
    for facet in x.facets():
        row = gl.get((copy, facet))
        if row and row.perm == perm and induced_face_map(row, x) == y:
            return True
    return False


def display_check(rows) -> list:
    """Listed cycle arrows that the table does not realize."""
    gl = pairing_map(rows)
    bad = []
    for line in CYCLE_DISPLAY:
        faces = [face_from_text(t) for t in line[0::2]]
        perms = [perm_from_text(t) for t in line[1::2]]
        for k, (x, p) in enumerate(zip(faces, perms)):
            y = faces[(k + 1) % len(faces)]
            if not display_arrow_ok(gl, x, p, y):
                bad.append(f"{x} -{perm_text(p)}-> {y}")
    for t in CONE_DISPLAY:
        f = face_from_text(t)
        if not display_arrow_ok(gl, f, tuple(range(1, 6)), f):
            bad.append(f"{f} -id-> {f}")
    return bad
