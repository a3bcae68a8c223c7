"""The 12-simplex triangulations of the orbifold and their 36-simplex lifts.

Every 4-simplex has one vertex of each label 1..5 and facets are glued by
the label-preserving map, so faces of a simplex are determined by label
subsets and the quotient is an ordered Delta-complex.

Simplex names: ``S2-`` and ``S2+`` are the central simplex of ``R_2`` and the
simplex ``S_2``; ``S2-^4`` and ``S2+^4`` are the side simplices with upper
index 4.  A trailing ``'`` marks the second triangulation (``S2+'`` is the
same simplex as ``S2+``).
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .complex import CellComplex, ComplexError
from .polytopes import S_VERTICES, gluings, label, m3, m5, pair


def sname(a: int, sign: str, i: int = None, primed: bool = False) -> str:
    base = f"S{a}{sign}" + (f"^{i}" if i is not None else "")
    return base + ("'" if primed and not (sign == "+" and i is None) else "")


def parse_sname(name: str) -> tuple:
    """Inverse of :func:`sname`: ``(a, sign, i or None, primed)``."""
    primed = name.endswith("'")
    core = name.rstrip("'")
    a, sign = int(core[1]), core[2]
    i = int(core.split("^")[1]) if "^" in core else None
    return a, sign, i, primed


def simplex_names(sheets: int, primed: bool = False) -> list:
    out = []
    for a in range(1, sheets + 1):
        for sign in "-+":
            out.append(sname(a, sign, None, primed))
            out.extend(sname(a, sign, i, primed) for i in range(1, 6))
    return out


# vertex sets of the 11 simplices subdividing R, for each variant
def _r_simplices(primed: bool) -> dict:
    out = {}
    if not primed:
        out[("-", None)] = [pair(2, 4), pair(1, 3), pair(2, 5), pair(1, 4), pair(3, 5)]
        for i in range(1, 6):
            out[("-", i)] = [pair(i + 2, i + 3), pair(i, i + 2), pair(i + 1, i + 3),
                             pair(i + 2, i + 4), pair(i + 3, i)]
            out[("+", i)] = [pair(i + 4, i), pair(i, i + 1), pair(i + 3, i),
                             pair(i + 4, i + 1), pair(i, i + 2)]
    else:
        out[("-", None)] = [pair(1, 2), pair(2, 3), pair(3, 4), pair(4, 5), pair(5, 1)]
        for i in range(1, 6):
            out[("-", i)] = [pair(i + 4, i + 1), pair(i + 3, i + 4), pair(i + 4, i),
                             pair(i, i + 1), pair(i + 1, i + 2)]
            out[("+", i)] = [pair(i, i + 1), pair(i, i + 2), pair(i, i + 3),
                             pair(i, i + 4), pair(i + 2, i + 3)]
    return out


# A second vertex list for the primed side simplices that has no vertex of
# multiplicity four, so it cannot carry a tetrahedral facet of R.  Kept to
# show that it does not close up.
def unusable_primed_plus(i: int) -> list:
    return [pair(i + 1, i + 3), pair(i + 2, i + 4), pair(i + 1, i + 2),
            pair(i + 2, i + 3), pair(i + 3, i + 4)]


def cutting_hyperplanes(primed: bool) -> list:
    """Index pairs (j, k) of the hyperplanes ``x_j + x_k = 1`` cutting R."""
    step = 2 if primed else 1
    return [(j, m5(j + step)) for j in range(1, 6)]


def straddling(vertices, hyperplanes) -> list:
    """Hyperplanes with vertices strictly on both sides."""
    out = []
    for j, k in hyperplanes:
        vals = {v[j - 1] + v[k - 1] - 1 for v in vertices}
        if min(vals) < 0 < max(vals):
            out.append((j, k))
    return out


@lru_cache(maxsize=None)
def geometric_simplices(sheets: int, primed: bool = False) -> dict:
    """``name -> (piece, frozenset of vertices)`` for the geometric model."""
    out = {}
    for a in range(1, sheets + 1):
        out[sname(a, "+", None, primed)] = (("S", a), frozenset(S_VERTICES))
        for (sign, i), vs in _r_simplices(primed).items():
            fs = frozenset(vs)
            if len(fs) != 5 or sorted(label(v) for v in fs) != [1, 2, 3, 4, 5]:
                raise ComplexError(f"simplex {sname(a, sign, i, primed)} has repeated labels")
            out[sname(a, sign, i, primed)] = (("R", a), fs)
    return out


def normalized_volume(vertices) -> int:
    """Lattice volume of a 4-simplex in a hyperplane ``sum x = const`` (drop x5)."""
    from ..exact_algebra import det

    vs = sorted(vertices)
    return abs(det(tuple(tuple(v[k] - vs[0][k] for k in range(4)) for v in vs[1:])))


def geometric_pairing(sheets: int, primed: bool = False) -> dict:
    """Facet pairing ``(name, j) -> name`` read off from the coordinates.

    Facets inside one polytope are matched by their vertex sets, facets on
    the boundary are pushed through the polytope gluings.
    """
    simp = geometric_simplices(sheets, primed)
    by_facet = {}
    for name, (piece, vs) in simp.items():
        for v in vs:
            by_facet.setdefault((piece, vs - {v}), []).append((name, label(v)))
    maps = []
    for g in gluings(sheets):
        maps.extend([g, g.inverse()])
    out = {}
    for (piece, facet), owners in by_facet.items():
        for name, j in owners:
            partners = [o for o in owners if o[0] != name]
            for g in maps:
                if g.source == piece and facet <= g.domain:
                    img = frozenset(g.mapping[v] for v in facet)
                    partners.extend(by_facet.get((g.target, img), []))
            partners = sorted(set(p for p in partners if p != (name, j)))
            if len(partners) != 1:
                raise ComplexError(f"facet {j} of {name} has {len(partners)} partners")
            (other, k), = partners
            if k != j:
                raise ComplexError(f"facet {j} of {name} is glued to facet {k} of {other}")
            out[(name, j)] = other
    return out


def display_pairing(sheets: int, shift_on_far: bool = False) -> dict:
    """The facet pairing as a closed formula in the sheet and label indices.

    The side simplex ``S^i_{a,-}`` meets ``S^{i-+2}_{.,+}`` across its facets
    ``i+-1`` and ``i+-2``; one of the two families crosses into the previous
    sheet.  With ``shift_on_far`` the crossing family is ``i+-2``, which is
    what the coordinates give; otherwise it is ``i+-1``.
    """
    out = {}

    def glue(x, y, j):
        for p, q in ((x, y), (y, x)):
            j5 = m5(j)
            if out.get((p, j5), q) != q:
                raise ComplexError(f"facet {j5} of {p} is paired twice")
            out[(p, j5)] = q

    for a in range(1, sheets + 1):
        for i in range(1, 6):
            glue(sname(a, "-"), sname(a, "-", i), i)
            near, far = (a, m3(a - 1, sheets)) if shift_on_far else (m3(a - 1, sheets), a)
            for s in (1, -1):
                glue(sname(a, "-", i), sname(near, "+", m5(i - 2 * s)), i + s)
                glue(sname(a, "-", i), sname(far, "+", m5(i - 2 * s)), i + 2 * s)
            glue(sname(a, "+", i), sname(a, "+"), i)
    return out


def check_pairing(pairing: dict, names) -> None:
    for x in names:
        for j in range(1, 6):
            if (x, j) not in pairing:
                raise ComplexError(f"facet {j} of {x} is unmatched")
            y = pairing[(x, j)]
            if pairing.get((y, j)) != x:
                raise ComplexError(f"pairing is not an involution at facet {j} of {x}")


def delta_complex(name: str, simplices, pairing) -> CellComplex:
    """Ordered Delta-complex of label-preserving facet gluings."""
    check_pairing(pairing, simplices)
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    faces = [(s, ls) for s in simplices for k in range(1, 6)
             for ls in itertools.combinations(range(1, 6), k)]
    for (x, j), y in pairing.items():
        for k in range(1, 5):
            for ls in itertools.combinations([l for l in range(1, 6) if l != j], k):
                rx, ry = find((x, ls)), find((y, ls))
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    cell_name = {}
    for f in faces:
        r = find(f)
        cell_name[f] = r[0] if len(r[1]) == 5 else f"{r[0]}|{''.join(map(str, r[1]))}"
    cx = CellComplex(name)
    seen = set()
    for f in sorted(faces, key=lambda f: (len(f[1]), f)):
        c = cell_name[f]
        if c in seen:
            continue
        seen.add(c)
        s, ls = find(f)
        chain = [(cell_name[(s, ls[:t] + ls[t + 1:])], (-1) ** t) for t in range(len(ls))] if len(ls) > 1 else []
        cx.add(c, len(ls) - 1, ls, chain)
    return cx.validate()


def build_delta(space: str = "fiber", variant: str = "delta") -> CellComplex:
    """Triangulation ``delta`` or ``delta'`` with the pairing read from coordinates."""
    sheets = {"fiber": 3, "orbifold": 1}[space]
    primed = variant in ("delta'", "delta_prime")
    names = simplex_names(sheets, primed)
    return delta_complex(f"{'Delta-prime' if primed else 'Delta'}-{space}", names,
                         geometric_pairing(sheets, primed))
