"""Certificates for the crystallographic group and the triangulation of R^3."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ..certificates import Certificate, INFO, check
from ..exact_algebra import cayley_menger_sq_volume, rank
from ..flat.lines import (
    BASE_LINES, IDENTITY, Isometry3, blue_lines_in_ball, build_group, in_translation_lattice,
    lattice_vectors, stabilizer,
)
from ..flat.triangulation import (
    BLACK, BLUE, GREEN, RED, Triangulation, network_girth, sectors_around, blue_edge_at,
    six_volume, tetrahedron_signature, vertex_colour, vertices_in_box,
)

CYCLE = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
MINUS = ((-1, 0, 0), (0, -1, 0), (0, 0, -1))


def half_turn(point, axis) -> Isometry3:
    """Rotation by pi about the line ``point + t*axis`` (doubled coordinates)."""
    n = sum(a * a for a in axis)
    lin = tuple(tuple((2 * axis[i] * axis[j]) // n - (1 if i == j else 0) for j in range(3)) for i in range(3))
    return _about(point, lin)


def _about(point, lin) -> Isometry3:
    """The map x -> point + lin (x - point)."""
    img = Isometry3(lin)(point)
    return Isometry3(lin, tuple(p - m for p, m in zip(point, img)))


def screw(point, axis_index: int, step: int) -> Isometry3:
    """Half-turn about the coordinate-parallel line through ``point`` followed by a
    translation by ``step`` (doubled units) along it."""
    axis = [0, 0, 0]
    axis[axis_index] = 1
    rot = half_turn(point, tuple(axis))
    t = list(rot.translation)
    t[axis_index] += step
    return Isometry3(rot.linear, tuple(t))


def isometry_families() -> dict:
    """Samples of the six families of elements of G, keyed by family name.

    Coordinates are doubled; cubes of the grid have edge 4 in these units,
    with vertices at multiples of 4.
    """
    fam = {}
    fam["translations"] = [Isometry3(IDENTITY, h) for h in lattice_vectors(8) if h != (0, 0, 0)]
    fam["vertex_reflections"] = [_about(v, MINUS) for v in itertools.product((0, 4, -4), repeat=3)]
    fam["blue_rotations"] = []
    for line in BASE_LINES:
        d = line.direction
        # rotations by 2pi/3 about d: the cyclic permutations conjugated by a sign change
        signs = tuple(1 if x > 0 else -1 for x in d)
        lin = tuple(tuple(signs[i] * CYCLE[i][j] * signs[j] for j in range(3)) for i in range(3))
        fam["blue_rotations"].append(_about(line.point, lin))
    light, dark = [], []
    # x-parallel light gray lines sit at (y, z) = (2, 0) mod 4, dark gray ones at (0, 2);
    # the other axes follow by cycling the coordinates
    for ax in range(3):
        nxt, last = (ax + 1) % 3, (ax + 2) % 3
        axis = [0, 0, 0]
        axis[ax] = 1
        for a, b in ((2, 0), (6, 4), (2, -4), (-2, 8)):
            p = [0, 0, 0]
            p[nxt], p[last] = a, b
            light.append(half_turn(tuple(p), tuple(axis)))
            q = [0, 0, 0]
            q[nxt], q[last] = b, a
            dark.append(screw(tuple(q), ax, 4))
    fam["light_gray_reflections"] = light
    fam["dark_gray_screws"] = dark
    rg = []
    for v in [(1, 1, 1), (-1, -1, -1), (3, -1, 1)]:
        for w, kind in Triangulation.neighbours(v).items():
            if kind in (RED, GREEN):
                rg.append(half_turn(v, tuple((b - a) // 2 for a, b in zip(v, w))))
    fam["red_green_reflections"] = rg
    return fam


def _fixed_point_exists(g: Isometry3) -> bool:
    """Whether (I - L) x = t has a real solution."""
    m = [[(1 if i == j else 0) - g.linear[i][j] for j in range(3)] for i in range(3)]
    aug = [row + [g.translation[i]] for i, row in enumerate(m)]
    return rank(m) == rank(aug)


def rototranslation_subgroup(radius: int = 12) -> list:
    """Elements of the subgroup generated by the dark-gray screws, with
    translation parts bounded by ``radius`` (breadth-first closure)."""
    gens = isometry_families()["dark_gray_screws"]
    gens = gens + [g.inverse() for g in gens]
    ident = Isometry3(IDENTITY)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in seen and max(abs(x) for x in b.translation) <= radius:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen, key=lambda g: (g.linear, g.translation))


def group_certificates(samples: int = 10_000, seed: int = 0) -> list:
    group = build_group()
    out = []
    out.append(check("group.point_parts", len(group) == 48, "exact sequence 0 -> H -> G -> O48 -> 0",
                     representatives=len(group),
                     translations_per_point_part=sorted(set(group.translations_per_point_part))))
    fams = isometry_families()
    bad = {name: [str(g) for g in gs if not g.preserves_blue_lines()] for name, gs in fams.items()}
    out.append(check("group.families", not any(bad.values()), "the listed isometries are elements of G",
                     counts={k: len(v) for k, v in fams.items()}, failures={k: v for k, v in bad.items() if v}))
    lins = {g.linear for gs in fams.values() for g in gs}
    closure = set(lins)
    while True:
        new = {Isometry3(a) @ Isometry3(b) for a in closure for b in closure}
        new = {g.linear for g in new} | closure
        if new == closure:
            break
        closure = new
    out.append(check("group.families_generate_point_group", len(closure) == 48,
                     "rotational parts generate the full octahedral group", order=len(closure)))
    swaps = []
    for g in group.representatives:
        v = (1, 1, 1)
        swapped = vertex_colour(g(v)) != vertex_colour(v)
        if swapped != (g.determinant() < 0):
            swaps.append(str(g))
    out.append(check("group.colour_swap_iff_orientation_reversing", not swaps,
                     "exchanges red and green iff orientation reversing", failures=swaps))
    rng = random.Random(seed)
    reps = group.representatives
    hs = list(lattice_vectors(8))
    failures = 0
    for _ in range(samples):
        a = _with_h(rng.choice(reps), rng.choice(hs))
        b = _with_h(rng.choice(reps), rng.choice(hs))
        if not (a @ b).preserves_blue_lines() or not a.inverse().preserves_blue_lines():
            failures += 1
    out.append(check("group.closure_random", failures == 0, "G is a group", samples=samples, failures=failures))
    stab = stabilizer()
    lin = {g.linear for g in stab}
    out.append(check("group.stabilizer_e0", CYCLE in lin and MINUS in lin and len(stab) == 6,
                     "rotation of angle 2pi/3 along a blue line; reflection in a vertex",
                     order=len(stab), contains_rotation=CYCLE in lin, contains_minus_identity=MINUS in lin))
    sub = rototranslation_subgroup()
    fixed = [str(g) for g in sub if g.linear != IDENTITY or g.translation != (0, 0, 0)
             if _fixed_point_exists(g)]
    trans = [g.translation for g in sub if g.linear == IDENTITY]
    out.append(check("group.rototranslations_act_freely", not fixed and len(sub) > 100,
                     "G' acts freely on R^3", elements_checked=len(sub), with_fixed_points=fixed[:5],
                     point_parts=len({g.linear for g in sub})))
    covol = _covolume(trans)
    # two adjacent cubes of edge 2 have volume 16; in doubled units 128
    out.append(check("group.rototranslation_fundamental_domain",
                     covol is not None and covol == 4 * 128,
                     "two adjacent cubes form a fundamental domain for G'",
                     translation_lattice_covolume_doubled=covol, point_group_order=len({g.linear for g in sub})))
    return out


def _with_h(rep, h):
    return Isometry3(rep.linear, tuple(a + b for a, b in zip(rep.translation, h)))


def _covolume(vectors):
    """Covolume of the lattice spanned by integer vectors (via Smith form of a basis search)."""
    from ..exact_algebra import det, smith_normal_form

    vs = [v for v in vectors if v != (0, 0, 0)]
    if len(vs) < 3:
        return None
    D, _, _ = smith_normal_form([list(v) for v in vs])
    diag = [D[i][i] for i in range(3)]
    if 0 in diag:
        return None
    return abs(diag[0] * diag[1] * diag[2])


# ---------------------------------------------------------------------------
# triangulation
# ---------------------------------------------------------------------------

NEIGHBOUR_OFFSETS = {
    RED: [(-2, 0, 2), (0, 2, -2), (2, -2, 0)],
    BLUE: [(-2, -2, -2), (2, 2, 2)],
}


def triangulation_certificates() -> list:
    out = []
    val = Triangulation.edge_valences(6)
    per_kind = {}
    for (kind, n), count in val.items():
        per_kind.setdefault(kind, set()).add(n)
    expected = {BLUE: {6}, RED: {10}, GREEN: {10}, BLACK: {4}}
    out.append(check("triangulation.valences", per_kind == expected,
                     "cone angles 3pi, 2pi, 2pi, 2pi",
                     valences={k: sorted(v) for k, v in per_kind.items()}))
    census = Triangulation.tetrahedra_in_domain()
    kinds = {(sig, vol): n for (sig, vol), n in census.items()}
    sig1 = (BLACK, BLACK, BLACK, BLUE, GREEN, RED)
    sig2 = (BLACK, BLACK, BLACK, BLACK, GREEN, RED)
    # six times the volume in doubled units is 48 * volume
    ok = set(kinds) == {(sig1, 24), (sig2, 32)}
    out.append(check("triangulation.two_tetrahedron_classes", ok, "two kinds of tetrahedra, volumes 1/2 and 2/3",
                     classes=[{"edges": list(s), "volume": str(Fraction(v, 48)), "count_in_two_domains": n}
                              for (s, v), n in sorted(kinds.items())]))
    if ok:
        n1, n2 = kinds[(sig1, 24)], kinds[(sig2, 32)]
        # Euler characteristic of the quotient by the two-domain lattice
        verts = vertices_in_box(0, 8)
        edges = sum(len(Triangulation.neighbours(v)) for v in verts) // 2
        tets = n1 + n2
        chi = len(verts) - edges + 2 * tets - tets
        out.append(check("triangulation.euler", chi == 0, "the triangulation of the 3-torus has Euler characteristic 0",
                         vertices=len(verts), edges=edges, triangles=2 * tets, tetrahedra=tets))
        # two copies of R^3/H, volume 64; G has index 48 over H
        vol = Fraction(n1, 2) * Fraction(1, 2) + Fraction(n2, 2) * Fraction(2, 3)
        out.append(check("triangulation.domain_volume", vol == 32 and Fraction(n1, 96) == 1 and Fraction(n2, 96) == Fraction(1, 4),
                         "fundamental domain: one tetrahedron of the first kind and a quarter of the second",
                         volume_per_H_domain=str(vol), first_kind_per_G_domain=str(Fraction(n1, 96)),
                         second_kind_per_G_domain=str(Fraction(n2, 96))))
    offs = Triangulation.neighbour_offsets((1, 1, 1))
    black = offs.get(BLACK, [])
    ok = (sorted(offs.get(RED, [])) == sorted(NEIGHBOUR_OFFSETS[RED])
          and sorted(offs.get(BLUE, [])) == sorted(NEIGHBOUR_OFFSETS[BLUE])
          and GREEN not in offs and len(black) == 12
          and all(sorted(abs(x) for x in b) == [0, 2, 4] for b in black))
    listed = [(0, 4, 2), (2, 0, 4), (4, 2, 0), (0, -4, -2), (-2, 0, -4), (-4, -2, 0)]
    out.append(check("triangulation.neighbours", ok, "neighbours of v = (1,1,1)/2",
                     red=offs.get(RED), blue=offs.get(BLUE), black_count=len(black), black=black,
                     listed_black_present=[b for b in listed if b in black],
                     listed_black_absent=[b for b in listed if b not in black]))
    lengths = {RED: 2, GREEN: 2, BLUE: 3, BLACK: 5}
    bad = []
    for v in vertices_in_box(-4, 4):
        for w, kind in Triangulation.neighbours(v).items():
            n2 = sum((a - b) ** 2 for a, b in zip(v, w))
            if n2 != 4 * lengths[kind]:
                bad.append((v, w, kind))
    out.append(check("triangulation.edge_lengths", not bad, "edge lengths sqrt2, sqrt3, sqrt5",
                     squared_lengths=lengths, failures=bad[:5]))
    e0 = blue_edge_at((0, 0, 0))
    ring = sectors_around(e0)
    out.append(check("triangulation.blue_cone_angle", len(ring) == 6, "each with cone angle 3pi",
                     sectors=len(ring), cone_angle_tenths=len(ring) * 5))
    red, green = network_girth(RED), network_girth(GREEN)
    out.append(check("triangulation.network_girth", red == 10 and green == 10,
                     "no loop with less than 10 segments", red=red, green=green))
    near = blue_lines_in_ball(6)
    dmin = min(a.distance_sq(b) for a, b in itertools.combinations(near, 2))
    out.append(check("triangulation.blue_line_distance", dmin == 2,
                     "minimum distance sqrt2 between two distinct blue lines",
                     lines=len(near), min_distance_sq=str(dmin)))
    return out


# ---------------------------------------------------------------------------
# volumes
# ---------------------------------------------------------------------------

# the two tetrahedra of the figure, doubled coordinates
FIGURE_TETRAHEDRA = (
    ((-1, -1, -1), (1, 1, 1), (3, -1, 1), (-1, -3, 1)),
    ((-1, -1, -1), (3, -1, 1), (-1, -3, 1), (3, -3, -1)),
)


def tetrahedron_stabilizer(tet) -> list:
    """Elements of G mapping the tetrahedron onto itself."""
    group = build_group()
    verts = set(tet)
    centroid4 = tuple(sum(v[i] for v in tet) for i in range(3))
    out = []
    for rep in group.representatives:
        # g must fix the centroid c: L(4c) + 4(t + h) = 4c, solve for h in H
        img = rep.vector(centroid4)
        diff = tuple(a - b - 4 * t for a, b, t in zip(centroid4, img, rep.translation))
        if any(x % 4 for x in diff):
            continue
        h = tuple(x // 4 for x in diff)
        if not in_translation_lattice(h):
            continue
        g = _with_h(rep, h)
        if {g(v) for v in verts} == verts:
            out.append(g)
    return out


def volume_certificates() -> list:
    sq = [cayley_menger_sq_volume([[Fraction(x, 2) for x in v] for v in t]) for t in FIGURE_TETRAHEDRA]
    six = [six_volume(t) for t in FIGURE_TETRAHEDRA]
    sigs = [tetrahedron_signature(t) for t in FIGURE_TETRAHEDRA]
    stab_groups = [tetrahedron_stabilizer(t) for t in FIGURE_TETRAHEDRA]
    stabs = [len(g) for g in stab_groups]
    cyclic = any(not (g @ g).is_identity() and (g @ g @ g @ g).is_identity() for g in stab_groups[1])
    h_volume = Fraction(_covolume([(4, 4, 4), (4, -4, 4), (4, 4, -4), (8, 0, 0)]), 8)
    g_volume = h_volume / len(build_group())
    domain = Fraction(1, 2) / stabs[0] + Fraction(2, 3) / stabs[1]
    return [
        check("volumes.cayley_menger", sq == [Fraction(1, 4), Fraction(4, 9)]
              and six == [24, 32] and all(s is not None and None not in s for s in sigs),
              "the two tetrahedra have volume 1/2 and 2/3",
              squared_volumes=[str(x) for x in sq], edge_kinds=[list(s) for s in sigs]),
        check("volumes.fundamental_domain", h_volume == 32 and g_volume == Fraction(2, 3)
              and stabs == [1, 4] and cyclic and domain == g_volume,
              "a fundamental domain has volume 1/2 + 1/6 = 2/3",
              h_domain_volume=str(h_volume), g_domain_volume=str(g_volume),
              stabilizer_orders=stabs, second_stabilizer_cyclic=cyclic,
              tetrahedral_domain=str(domain)),
    ]
