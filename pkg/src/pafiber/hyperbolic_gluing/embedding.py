"""The two triangulations of R as top and bottom of the cross-polytope, and
the mapping torus built from three copies.

An R-vertex ``e_j + e_k`` with label ``l`` goes to ``-e_l`` when ``j, k`` are
cyclically adjacent and to ``+e_l`` otherwise.  A 4-simplex with one vertex
of each label then lands on a facet, and a facet pairing row permutes
labels, so the monodromy's label permutation is the row permutation.
"""
from __future__ import annotations

from ..cell_complexes.delta import geometric_pairing, geometric_simplices, parse_sname, sname
from ..cell_complexes.polytopes import R_VERTICES, label, m5, pair, support
from ..cell_complexes.symmetries import TAU_LABELS, monodromy_rule, tau_rule
from ..certificates import check
from .crosspolytope import (ALL_FACETS, Facet, GluingError, PairingRow, ThreeFace, cycle_decomposition,
                            induced_face_map, load_table, pairing_map, perm_compose, perm_inverse, perm_text)

IDENTITY = (1, 2, 3, 4, 5)

# the vertex map as listed: R-vertex -> (axis, sign)
DISPLAYED_VERTEX_MAP = {
    pair(1, 2): (4, -1), pair(3, 5): (4, 1),
    pair(2, 3): (5, -1), pair(1, 4): (5, 1),
    pair(3, 4): (1, -1), pair(2, 5): (1, 1),
    pair(4, 5): (2, -1), pair(1, 3): (2, 1),
    pair(1, 5): (3, -1), pair(2, 4): (3, 1),
}


def vertex_image(v) -> tuple:
    j, k = support(v)
    return label(v), (-1 if (k - j) % 5 in (1, 4) else 1)


def _signs(*minus, base=1) -> Facet:
    return Facet(tuple(-base if i in minus else base for i in range(1, 6)))


def _rotations(signs) -> set:
    return {tuple(signs[(i - k) % 5] for i in range(5)) for k in range(5)}


# listed images of the top simplices (first triangulation) and bottom ones
DISPLAYED_TOP = {"S-": _signs()}
DISPLAYED_BOTTOM = {"S-": _signs(base=-1)}
for _i in range(1, 6):
    DISPLAYED_TOP[f"S-^{_i}"] = _signs(_i)
    DISPLAYED_TOP[f"S+^{_i}"] = _signs(m5(_i + 1), m5(_i - 1))
    DISPLAYED_BOTTOM[f"S-^{_i}"] = _signs(_i, base=-1)
    DISPLAYED_BOTTOM[f"S+^{_i}"] = _signs(m5(_i + 2), m5(_i + 3), base=-1)
DISPLAYED_OVERLAP = {ThreeFace(s) for s in _rotations((-1, 0, -1, 1, 1))}
DISPLAYED_VERTICAL = {Facet(s) for s in _rotations((1, -1, 1, -1, -1)) | _rotations((1, 1, 1, -1, -1))}


def _key(name: str) -> str:
    _, sign, i, _ = parse_sname(name)
    return f"S{sign}" + (f"^{i}" if i else "")


def _is_thin(name: str) -> bool:
    _, sign, i, _ = parse_sname(name)
    return sign == "+" and i is None


def simplex_image(vertices, negate: bool = False):
    """Facet spanned by the images, or None when two vertices share an axis."""
    signs = [0] * 5
    for v in vertices:
        axis, s = vertex_image(v)
        if signs[axis - 1]:
            return None
        signs[axis - 1] = -s if negate else s
    return Facet(tuple(signs))


def embedded_facets(primed: bool, negate: bool = False) -> dict:
    """``"S-"``, ``"S-^i"``, ``"S+^i"`` -> image facet (None if not a facet)."""
    out = {}
    for name, (piece, vs) in geometric_simplices(1, primed).items():
        if not _is_thin(name):
            out[_key(name)] = simplex_image(vs, negate)
    return out


def boundary_faces(facets) -> set:
    """3-faces lying on exactly one of the given facets."""
    count = {}
    for f in facets:
        for g in f.faces():
            count[g] = count.get(g, 0) + 1
    return {g for g, n in count.items() if n == 1}


def _face_of(vertices, negate=False) -> ThreeFace:
    signs = [0] * 5
    for v in vertices:
        axis, s = vertex_image(v)
        signs[axis - 1] = -s if negate else s
    return ThreeFace(tuple(signs))


def _layout(negate: bool = False, exchanged: bool = False) -> dict:
    top = embedded_facets(exchanged, negate)
    bottom = embedded_facets(not exchanged, negate)
    used = set(top.values()) | set(bottom.values())
    overlap = boundary_faces(top.values()) & boundary_faces(bottom.values())
    x_faces = {_face_of([v for v in R_VERTICES if v[i]], negate) for i in range(5)}
    return {"top": top, "bottom": bottom, "vertical": set(ALL_FACETS) - used,
            "overlap": overlap, "x_faces": x_faces, "distinct": len(used)}


def embed_triangulations():
    """Certify the vertex map embeds both triangulations of R in the boundary of C."""
    listed_ok = all(vertex_image(v) == DISPLAYED_VERTEX_MAP[v] for v in R_VERTICES)
    bijective = sorted(DISPLAYED_VERTEX_MAP.values()) == sorted((i, s) for i in range(1, 6) for s in (1, -1))
    lay = _layout()
    not_facets = [f"{side}:{k}" for side in ("top", "bottom") for k, f in lay[side].items() if f is None]
    counts = (len(lay["top"]), len(lay["bottom"]), len(lay["vertical"]))
    central = (lay["top"]["S-"], lay["bottom"]["S-"]) == (_signs(), _signs(base=-1))
    ok = (listed_ok and bijective and not not_facets and counts == (11, 11, 10) and lay["distinct"] == 22
          and central and len(lay["overlap"]) == 5 and lay["overlap"] == lay["x_faces"])
    return check("gluing.embeddings", ok, "two simplicial embeddings of R into the boundary of C",
                 vertex_map_as_listed=listed_ok, bijective=bijective, not_facets=not_facets,
                 facet_partition=list(counts), central_to_opposite_facets=central,
                 overlap=sorted(str(f) for f in lay["overlap"]),
                 overlap_is_image_of_x_i_equal_1=lay["overlap"] == lay["x_faces"])


def display_comparison() -> dict:
    """Which listed facet lists agree with the vertex map as listed, and with
    the negated map on the exchanged pair of triangulations."""
    def compare(lay):
        out = {}
        for side, shown in (("top", DISPLAYED_TOP), ("bottom", DISPLAYED_BOTTOM)):
            for fam, keys in (("S-", ["S-"]), ("S-^i", [f"S-^{i}" for i in range(1, 6)]),
                              ("S+^i", [f"S+^{i}" for i in range(1, 6)])):
                out[f"{side}:{fam}"] = all(lay[side][k] == shown[k] for k in keys)
        out["vertical"] = lay["vertical"] == DISPLAYED_VERTICAL
        out["overlap"] = lay["overlap"] == DISPLAYED_OVERLAP
        return out
    return {"as_listed": compare(_layout()), "negated_exchanged": compare(_layout(True, True))}


def display_certificate():
    cmp = display_comparison()
    literal = cmp["as_listed"]
    ok = all(cmp["negated_exchanged"].values())
    return check("gluing.embedding_display", ok,
                 "listed facet lists are the images of the second triangulation as top, under the negated vertex map",
                 literal_agreement=literal, disagreeing_with_literal=sorted(k for k, v in literal.items() if not v))


# ---------------------------------------------------------------------------
# Mapping torus
# ---------------------------------------------------------------------------

def vertical_rows_from_table() -> list:
    return [r for r in load_table("table4") if r.perm == IDENTITY]


def vertical_rows_from_geometry(negate: bool = False) -> list:
    """Identity gluings of vertical facets forced by the cross-sheet facet pairings.

    Facet j of a top simplex in copy a is a 3-face of C whose other facet is
    vertical; the pairing of that simplex to one in copy b fixes the gluing.
    """
    rows = {}
    for primed in (False, True):
        simp = geometric_simplices(3, primed)
        for (x, j), y in geometric_pairing(3, primed).items():
            (px, vx), (py, vy) = simp[x], simp[y]
            if px[0] == "S" or py[0] == "S" or px[1] == py[1]:
                continue
            fx, fy = simplex_image(vx, negate), simplex_image(vy, negate)
            k = j - 1
            v = Facet(fx.signs[:k] + (-fx.signs[k],) + fx.signs[k + 1:])
            w = Facet(fy.signs[:k] + (-fy.signs[k],) + fy.signs[k + 1:])
            row = PairingRow(v, IDENTITY, w, px[1], py[1])
            face_x = ThreeFace(fx.signs[:k] + (0,) + fx.signs[k + 1:])
            face_y = ThreeFace(fy.signs[:k] + (0,) + fy.signs[k + 1:])
            if induced_face_map(row, face_x) != face_y:
                raise GluingError(f"vertical gluing for facet {j} of {x} does not carry the face")
            rows[row.canonical()] = row
    return list(rows.values())


def derive_table(top: dict, bottom: dict, vertical: list, rule=monodromy_rule, labels=TAU_LABELS) -> list:
    """Facet pairing of C_1, C_2, C_3 from the monodromy's action on simplex names.

    A top simplex of copy a goes to the bottom simplex named by ``rule``; the
    thin simplex lies on both sides, so a top facet sent to it continues
    through a second application.
    """
    rows = list(vertical)
    for a in (1, 2, 3):
        for key, facet in top.items():
            _, sign, i, _ = parse_sname(f"S1{key[1:]}")
            y, perm = rule(sname(a, sign, i)), tuple(labels)
            hops = 0
            while _is_thin(y):
                y, perm = rule(y), perm_compose(tuple(labels), perm)
                hops += 1
                if hops > 3:
                    raise GluingError(f"{key} never reaches a bottom facet")
            b, _, _, _ = parse_sname(y)
            rows.append(PairingRow(facet, perm, bottom[_key(y)], a, b))
    return rows


def conjugate(rows, perm: tuple) -> list:
    """Image of a pairing table under the isometry ``e_i -> e_perm(i)``."""
    def move(f):
        s = [0] * 5
        for i, x in enumerate(f.signs):
            s[perm[i] - 1] = x
        return Facet(tuple(s))
    inv = perm_inverse(perm)
    return [PairingRow(move(r.source), perm_compose(perm, perm_compose(r.perm, inv)), move(r.target),
                       r.source_copy, r.target_copy) for r in rows]


def canonical_rows(rows) -> set:
    return {r.canonical() for r in rows}


def first_mismatch(derived, reference):
    d, r = canonical_rows(derived), canonical_rows(reference)
    extra, missing = sorted(d - r), sorted(r - d)
    if not extra and not missing:
        return None

    def show(t):
        return str(PairingRow(Facet(t[1]), t[2], Facet(t[4]), t[0], t[3])) if t else None
    return {"derived_only": show(extra[0] if extra else None), "table_only": show(missing[0] if missing else None),
            "counts": [len(extra), len(missing)]}


def displayed_derivation(rule=monodromy_rule) -> list:
    return derive_table(DISPLAYED_TOP, DISPLAYED_BOTTOM, vertical_rows_from_table(), rule)


def geometric_derivation() -> list:
    return derive_table(embedded_facets(False), embedded_facets(True), vertical_rows_from_geometry())


def _valid_manifold(rows) -> bool:
    try:
        pairing_map(rows)
    except GluingError:
        return False
    return cycle_decomposition(rows).lengths == {3: 80}


def mapping_torus_cross_check(rule=monodromy_rule):
    table = load_table("table4")
    shown = displayed_derivation(rule)
    mism = first_mismatch(shown, table)
    geo = geometric_derivation()
    geo_valid = _valid_manifold(geo)
    geo_moved = first_mismatch(conjugate(geo, TAU_LABELS), table)
    top = next(r for r in shown if r.source == _signs() and r.source_copy == 1)
    ok = mism is None and geo_valid and geo_moved is None
    return check("gluing.mapping_torus", ok, "glue top to bottom through the monodromy and recover the pairing",
                 listed_lists_match=mism is None, first_mismatch=mism, top_facet_rule=str(top),
                 vertex_lists_give_manifold=geo_valid,
                 vertex_lists_match_after_isometry=geo_moved is None,
                 isometry=f"e_i -> e_p(i), p = {perm_text(TAU_LABELS)}")


def tau_instead_certificate():
    """The same derivation with the monodromy replaced by tau must not give the table."""
    mism = first_mismatch(displayed_derivation(tau_rule), load_table("table4"))
    return check("gluing.tau_control", mism is not None, "replacing the monodromy by tau breaks the gluing",
                 first_mismatch=mism)
