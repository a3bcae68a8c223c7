"""The tessellation by simplices and rectified simplices, built from coordinates.

Each sheet ``a`` carries a simplex ``S_a`` (vertices ``e_i``) and a rectified
simplex ``R_a`` (vertices ``e_i + e_j``) in R^5.  Every vertex has a label in
1..5: ``e_i`` has label i and ``e_j + e_k`` has the label l with
``j + k = 2l (mod 5)``.  The octahedral facets ``x_i = 0`` of R are cut by
their middle squares ``Q_i`` into two pyramids.

Gluings (all label preserving):
  * facet ``x_i = 0`` of ``S_a`` to facet ``x_i = 1`` of ``R_a``;
  * pyramid ``P_i^+`` of ``R_a`` (apex ``e_{i+2}+e_{i-2}``) to pyramid
    ``P_i^-`` of ``R_{a+1}`` (apex ``e_{i+1}+e_{i-1}``).

With one sheet the pyramids of the same R are folded onto each other, which
gives the orbifold; with three sheets it gives the branched cover.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..exact_algebra import det, rank
from .complex import CellComplex, ComplexError


def m5(i: int) -> int:
    return (i - 1) % 5 + 1


def m3(a: int, sheets: int = 3) -> int:
    return (a - 1) % sheets + 1


def unit(i: int) -> tuple:
    return tuple(int(j == m5(i)) for j in range(1, 6))


def vadd(u, v) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def support(v) -> tuple:
    return tuple(i + 1 for i, x in enumerate(v) if x)


def label(v) -> int:
    s = support(v)
    if len(s) == 1:
        return s[0]
    j, k = s
    return m5(3 * (j + k))


def pair(j: int, k: int) -> tuple:
    return vadd(unit(j), unit(k))


S_VERTICES = tuple(unit(i) for i in range(1, 6))
R_VERTICES = tuple(pair(j, k) for j, k in itertools.combinations(range(1, 6), 2))


def apex(i: int, sign: int) -> tuple:
    return pair(i + 2, i - 2) if sign > 0 else pair(i + 1, i - 1)


def square(i: int) -> frozenset:
    """Vertices of the middle square ``Q_i`` of the octahedron ``x_i = 0``."""
    return frozenset(v for v in R_VERTICES if v[i - 1] == 0 and label(v) != i)


def affine_dim(vertices) -> int:
    vs = sorted(vertices)
    if len(vs) == 1:
        return 0
    return rank(tuple(tuple(x - y for x, y in zip(v, vs[0])) for v in vs[1:]))


@lru_cache(maxsize=None)
def simplex_faces() -> tuple:
    return tuple(frozenset(c) for k in range(1, 6) for c in itertools.combinations(S_VERTICES, k))


@lru_cache(maxsize=None)
def rectified_cells() -> tuple:
    """Faces of R with each octahedron replaced by its square and two pyramids."""
    faces = set()
    for signs in itertools.product((None, 0, 1), repeat=5):
        vs = frozenset(v for v in R_VERTICES
                       if all(s is None or v[i] == s for i, s in enumerate(signs)))
        if vs:
            faces.add(vs)
    octahedra = {f for f in faces if len(f) == 6 and affine_dim(f) == 3}
    cells = faces - octahedra
    for i in range(1, 6):
        q = square(i)
        cells.add(q)
        cells.add(q | {apex(i, +1)})
        cells.add(q | {apex(i, -1)})
    return tuple(sorted(cells, key=lambda c: (len(c), sorted(c))))


# ---------------------------------------------------------------------------
# orientation bookkeeping
# ---------------------------------------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def basis(cell) -> tuple:
    """Deterministic ``(origin, difference vectors)`` spanning the cell."""
    vs = sorted(cell)
    chosen = [vs[0]]
    vecs = []
    for v in vs[1:]:
        w = tuple(x - y for x, y in zip(v, vs[0]))
        if rank(tuple(vecs + [w])) > len(vecs):
            vecs.append(w)
            chosen.append(v)
    return tuple(chosen), tuple(vecs)


def relative_sign(vectors, reference) -> int:
    """Sign of the change of basis from ``reference`` to ``vectors`` (same span)."""
    k = len(reference)
    if k == 0:
        return 1
    for cols in itertools.combinations(range(len(reference[0])), k):
        d_ref = det(tuple(tuple(r[c] for c in cols) for r in reference))
        if d_ref:
            d = det(tuple(tuple(r[c] for c in cols) for r in vectors))
            if not d:
                raise ComplexError("vectors do not span the cell")
            return _sign(d) * _sign(d_ref)
    raise ComplexError("degenerate reference basis")


def incidence_sign(cell, facet) -> int:
    """Outward-normal-first convention."""
    n, m = len(cell), len(facet)
    out = tuple(n * sum(v[i] for v in facet) - m * sum(v[i] for v in cell) for i in range(5))
    _, fb = basis(facet)
    _, cb = basis(cell)
    return relative_sign((out,) + fb, cb)


def transport_sign(cell, vmap) -> int:
    """Orientation change of ``cell`` under the vertex map ``vmap``."""
    pts, vecs = basis(cell)
    if not vecs:
        return 1
    img = [vmap[p] for p in pts]
    moved = tuple(tuple(x - y for x, y in zip(v, img[0])) for v in img[1:])
    _, ref = basis(frozenset(vmap[v] for v in cell))
    return relative_sign(moved, ref)


# ---------------------------------------------------------------------------
# pieces and gluings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gluing:
    source: tuple  # (kind, sheet)
    target: tuple
    vmap: tuple  # sorted (vertex, image) pairs

    @property
    def mapping(self) -> dict:
        return dict(self.vmap)

    @property
    def domain(self) -> frozenset:
        return frozenset(v for v, _ in self.vmap)

    def inverse(self) -> "Gluing":
        return Gluing(self.target, self.source, tuple(sorted((w, v) for v, w in self.vmap)))


def gluings(sheets: int) -> list:
    out = []
    for a in range(1, sheets + 1):
        for i in range(1, 6):
            vmap = {unit(j): pair(i, 2 * j - i) for j in range(1, 6) if j != i}
            out.append(Gluing(("S", a), ("R", a), tuple(sorted(vmap.items()))))
            vmap = {v: v for v in square(i)}
            vmap[apex(i, +1)] = apex(i, -1)
            out.append(Gluing(("R", a), ("R", m3(a + 1, sheets)), tuple(sorted(vmap.items()))))
    for g in out:
        for v, w in g.vmap:
            if label(v) != label(w):
                raise ComplexError(f"gluing {g.source}->{g.target} breaks labels at {v}")
    return out


def local_cells(kind: str) -> tuple:
    return simplex_faces() if kind == "S" else rectified_cells()


class _ParityUnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = (x, 1)
        root, par = self.parent[x]
        if root == x:
            return x, 1
        r, p = self.find(root)
        self.parent[x] = (r, par * p)
        return r, par * p

    def union(self, x, y, sign):
        """Record ``x = sign * y``; return False on an orientation conflict."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return px == sign * py
        self.parent[ry] = (rx, px * sign * py)
        return True


def _cell_key(local):
    (kind, a), vs = local
    return (len(vs), kind != "S", a, sorted(vs))


def _name(dim, members, sheets):
    """Stratum names following the usual notation for the branched cover."""
    labels = sorted({label(v) for _, vs in members for v in vs})
    s_sheets = sorted({a for (kind, a), _ in members if kind == "S"})
    r_sheets = sorted({a for (kind, a), _ in members if kind == "R"})
    word = "".join(map(str, labels))
    (_, vs0) = members[0]
    if dim == 0:
        return f"P{word}"
    if dim == 1:
        return f"e{word}"
    if dim == 2:
        if len(vs0) == 4:
            (missing,) = set(range(1, 6)) - set(labels)
            return f"Q{missing}"
        return f"T{s_sheets[0]}^{word}"
    if dim == 3:
        if len(vs0) == 5:
            (top,) = [v for v in vs0 if vs0 - {v} == square(label(v))]
            others = set(range(1, sheets + 1)) - set(r_sheets)
            a = min(others) if others else r_sheets[0]
            return f"Pyr{a}^{label(top)}"
        return f"T{s_sheets[0]}^{word}"
    kind = members[0][0][0]
    return f"{kind}{members[0][0][1]}"


@lru_cache(maxsize=None)
def _build_pi(sheets: int) -> tuple:
    pieces = [(k, a) for a in range(1, sheets + 1) for k in ("S", "R")]
    uf = _ParityUnionFind()
    locals_ = [(p, c) for p in pieces for c in local_cells(p[0])]
    for loc in locals_:
        uf.find(loc)
    for g in gluings(sheets):
        m = g.mapping
        target_cells = set(local_cells(g.target[0]))
        for c in local_cells(g.source[0]):
            if not c <= g.domain:
                continue
            img = frozenset(m[v] for v in c)
            if img not in target_cells:
                raise ComplexError(f"gluing {g.source}->{g.target} sends {sorted(c)} to a non-cell")
            if not uf.union((g.source, c), (g.target, img), transport_sign(c, m)):
                raise ComplexError(f"orientation-reversing self-identification of {sorted(c)}")
    classes = {}
    for loc in locals_:
        root, _ = uf.find(loc)
        classes.setdefault(root, []).append(loc)
    return tuple(tuple(sorted(ms, key=_cell_key)) for ms in classes.values()), uf


def build_pi_complex(sheets: int) -> tuple:
    """Quotient complex plus ``{name: [(local cell, parity)]}`` members."""
    grouped, uf = _build_pi(sheets)
    names = {}
    members = {}
    for ms in grouped:
        dim = affine_dim(ms[0][1])
        name = _name(dim, list(ms), sheets)
        if name in members:
            raise ComplexError(f"two strata both named {name}")
        rep_parity = uf.find(ms[0])[1]
        members[name] = [(loc, uf.find(loc)[1] * rep_parity) for loc in ms]
        for loc in ms:
            names[loc] = name
    cx = CellComplex("Pi-fiber" if sheets == 3 else f"Pi-{sheets}")
    parity = {loc: p for name, ls in members.items() for loc, p in ls}
    for name in sorted(members, key=lambda n: (affine_dim(members[n][0][0][1]), n)):
        (piece, vs), _ = members[name][0]
        dim = affine_dim(vs)
        chains = []
        for loc, p in members[name]:
            pc, cvs = loc
            ch = []
            if dim:
                for f in local_cells(pc[0]):
                    if len(f) < len(cvs) and f < cvs and affine_dim(f) == dim - 1:
                        ch.append((names[(pc, f)], p * incidence_sign(cvs, f) * parity[(pc, f)]))
            chains.append(sorted(ch))
        if any(c != chains[0] for c in chains):
            raise ComplexError(f"stratum {name}: boundary depends on the representative")
        lab = sorted({label(v) for v in vs})
        cx.add(name, dim, lab, chains[0])
    return cx.validate(), members
