"""The spine dual to the tessellation of the fiber and two presentations of its group.

Dual cells: a 4-cell ``S_a`` or ``R_a`` gives a vertex, a 3-cell gives an edge
(``e_a^m`` for the tetrahedron missing the label m, ``h_a^i`` for the pyramid
``P_a^i``), a 2-cell gives a 2-cell and an edge ``e_ij`` gives a polyhedron.
Edges are oriented ``R_a -> S_a`` and ``R_{a+1} -> R_{a-1}``.
"""
from __future__ import annotations

from functools import lru_cache

from ..certificates import check
from ..exact_algebra import smith_normal_form
from .complex import CellComplex, ComplexError
from .polytopes import affine_dim, build_pi_complex, gluings, local_cells, m3, m5
from .words import (GroupPresentation, abelianize, cyclic_normal_form, free_reduce,
                    inverse, substitute)

SPINE_GENERATORS = [f"e{a}^{i}" for a in range(1, 4) for i in range(1, 6)] + \
                   [f"h{a}^{i}" for a in range(1, 4) for i in range(1, 6)]
_GEN = {g: k + 1 for k, g in enumerate(SPINE_GENERATORS)}


def e(a, i):
    return _GEN[f"e{m3(a)}^{m5(i)}"]


def h(a, i):
    return _GEN[f"h{m3(a)}^{m5(i)}"]


def dual_edge(cell: str) -> str:
    """Spine edge dual to a 3-cell of the tessellation."""
    if cell.startswith("Pyr"):
        a, i = cell[3:].split("^")
        return f"h{a}^{i}"
    a, labels = cell[1:].split("^")
    (m,) = set("12345") - set(labels)
    return f"e{a}^{m}"


def edge_ends(gen: str) -> tuple:
    a, i = map(int, gen[1:].split("^"))
    if gen[0] == "e":
        return f"R{a}", f"S{a}"
    return f"R{m3(a + 1)}", f"R{m3(a - 1)}"


def _crossing(piece, cell, sheets=3):
    """The gluing that carries the facet ``cell`` of ``piece`` to its partner."""
    for g in gluings(sheets):
        for h in (g, g.inverse()):
            if h.source == piece and cell <= h.domain:
                return h
    raise ComplexError(f"facet {sorted(cell)} of {piece} is not glued")


@lru_cache(maxsize=None)
def derived_two_cell_words() -> dict:
    """Attaching word of each dual 2-cell, read by walking once around the 2-cell."""
    _, members = build_pi_complex(3)
    name_of = {loc: n for n, ls in members.items() for loc, _ in ls}
    facets = {k: [c for c in local_cells(k) if affine_dim(c) == 3] for k in "SR"}
    out = {}
    for t, ls in members.items():
        if affine_dim(ls[0][0][1]) != 2:
            continue
        piece, t_loc = ls[0][0]
        c_in = next(c for c in facets[piece[0]] if t_loc < c)
        start = (piece, t_loc, c_in)
        word = []
        while True:
            around = [c for c in facets[piece[0]] if t_loc < c and c != c_in]
            if len(around) != 1:
                raise ComplexError(f"2-cell {t} is not in exactly two facets of {piece}")
            c_out = around[0]
            g = _crossing(piece, c_out)
            gen = dual_edge(name_of[(piece, c_out)])
            tail, head = edge_ends(gen)
            p0, p1 = f"{piece[0]}{piece[1]}", f"{g.target[0]}{g.target[1]}"
            if (tail, head) == (p0, p1):
                word.append(_GEN[gen])
            elif (tail, head) == (p1, p0):
                word.append(-_GEN[gen])
            else:
                raise ComplexError(f"edge {gen} does not join {p0} and {p1}")
            m = g.mapping
            piece, t_loc, c_in = g.target, frozenset(m[v] for v in t_loc), frozenset(m[v] for v in c_out)
            if (piece, t_loc, c_in) == start:
                break
            if len(word) > 12:
                raise ComplexError(f"walk around {t} does not close")
        out[t + "*"] = tuple(word)
    return out


def listed_two_cell_words() -> list:
    """The 35 attaching words as closed formulas (triangles, then two square families)."""
    out = [(h(1, n), h(2, n), h(3, n)) for n in range(1, 6)]
    for a in range(1, 4):
        for i in range(1, 6):
            j, k, l = i + 1, i + 2, i + 3
            out.append((e(a, j), -e(a, k), h(a - 1, i), -h(a - 1, l)))
    for a in range(1, 4):
        for i in range(1, 6):
            j, k, l = i + 1, i + 2, i + 3
            out.append((e(a, l), -e(a, i), -h(a + 1, j), h(a + 1, k)))
    return out


def tree_relators() -> list:
    return [(e(a, 1),) for a in range(1, 4)] + [(h(a, 1),) for a in range(1, 4)]


def left_kernel(rows) -> list:
    d, u, _ = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])
    return [u[i] for i in range(r, len(rows))]


@lru_cache(maxsize=None)
def build_spine() -> CellComplex:
    """The dual spine with 6 vertices, 30 edges, 35 two-cells and 10 polyhedra."""
    pi, _ = build_pi_complex(3)
    words = derived_two_cell_words()
    cx = CellComplex("spine")
    for w in pi.cells(4):
        cx.add(w + "*", 0, pi.labels[w])
    for g in SPINE_GENERATORS:
        tail, head = edge_ends(g)
        cx.add(g, 1, (), [(head + "*", 1), (tail + "*", -1)])
    for t, word in sorted(words.items()):
        chain = [(SPINE_GENERATORS[abs(x) - 1], 1 if x > 0 else -1) for x in word]
        cx.add(t, 2, pi.labels[t[:-1]], chain)
    for edge in pi.cells(1):
        around = [t + "*" for t in pi.cells(2) if edge in pi.faces(t)]
        rows = tuple(tuple(c for c in _edge_vector(cx, t)) for t in around)
        kernel = left_kernel(rows)
        if len(kernel) != 1 or any(abs(x) != 1 for x in kernel[0]):
            raise ComplexError(f"dual polyhedron of {edge} has no closed boundary")
        signs = kernel[0] if kernel[0][0] > 0 else [-x for x in kernel[0]]
        cx.add(edge + "*", 3, pi.labels[edge], list(zip(around, signs)))
    return cx.validate()


def _edge_vector(cx, two_cell) -> list:
    v = [0] * len(SPINE_GENERATORS)
    for f, x in cx.chain(two_cell).items():
        v[_GEN[f] - 1] += x
    return v


def presentation_from_spine() -> GroupPresentation:
    """30 edge generators, tree edges killed by length-1 relators, 35 cell relators."""
    words = derived_two_cell_words()
    rels = tree_relators() + [words[t] for t in sorted(words)]
    return GroupPresentation(list(SPINE_GENERATORS), rels)


def listed_spine_presentation() -> GroupPresentation:
    return GroupPresentation(list(SPINE_GENERATORS), tree_relators() + listed_two_cell_words())


# ---------------------------------------------------------------------------
# the 12-generator presentation
# ---------------------------------------------------------------------------

AB_GENERATORS = [f"a{i}" for i in range(1, 7)] + [f"b{i}" for i in range(1, 7)]


def a_(i):
    return (i - 1) % 6 + 1


def b_(i):
    return (i - 1) % 6 + 7


def twelve_generator_presentation() -> GroupPresentation:
    rels = []
    for i in range(1, 7):
        rels.append((a_(i), a_(i + 1), -a_(i + 2)))
    for i in range(1, 7):
        rels.append((b_(i), b_(i + 1), -b_(i + 2)))
    for i in range(1, 7):
        lhs = (-a_(i), b_(i + 1), a_(i + 2))
        rhs = (-b_(i), a_(i + 1), b_(i + 2))
        rels.append(free_reduce(lhs + inverse(rhs)))
    return GroupPresentation(list(AB_GENERATORS), rels)


def ab_in_spine_generators() -> dict:
    """The elements a_i, b_i written in the pyramid edges ``h_a^2``, ``h_a^3``."""
    return {
        a_(1): (-h(1, 2),), a_(2): (h(1, 2), -h(3, 2)),
        a_(3): (-h(3, 2),), a_(4): (h(3, 2), -h(2, 2)),
        a_(5): (-h(2, 2),), a_(6): (h(2, 2), -h(1, 2)),
        b_(1): (h(2, 3), -h(1, 3)), b_(2): (-h(1, 3),),
        b_(3): (h(1, 3), -h(3, 3)), b_(4): (-h(3, 3),),
        b_(5): (h(3, 3), -h(2, 3)), b_(6): (-h(2, 3),),
    }


def _table(images: dict) -> dict:
    p = twelve_generator_presentation()
    return {p.word(k)[0]: p.word(v) for k, v in images.items()}


PHI_STAR = {
    "a1": "a3 b5 a4^-1 b3^-1 a1^-1", "a2": "a3 b3^-1 a1^-1",
    "a3": "a1 b3 a2^-1 b1^-1 a5^-1", "a4": "a1 b1^-1 a5^-1",
    "a5": "a5 b1 a6^-1 b5^-1 a3^-1", "a6": "a5 b5^-1 a3^-1",
    "b1": "a3^-1", "b2": "a3 a1^-1", "b3": "a1^-1",
    "b4": "a1 a5^-1", "b5": "a5^-1", "b6": "a5 a3^-1",
}
TAU_STAR = {
    "a1": "a3 b3^-1 a1^-1", "a2": "a1 b3 a2^-1 b1^-1 a5^-1",
    "a3": "a1 b1^-1 a5^-1", "a4": "a5 b1 a6^-1 b5^-1 a3^-1",
    "a5": "a5 b5^-1 a3^-1", "a6": "a3 b5 a4^-1 b3^-1 a1^-1",
    "b1": "a3 a1^-1", "b2": "a1^-1", "b3": "a1 a5^-1",
    "b4": "a5^-1", "b5": "a5 a3^-1", "b6": "a3^-1",
}
RHO_STAR = {
    "a1": "a5 b2 a3", "a2": "b3^-1 a2^-1 b1 b4",
    "a3": "a3^-1 b4", "a4": "b4^-1 a3 b6 a5^-1",
    "a5": "b6 a5^-1", "a6": "a5 b6^-1 a5 b2 a3",
    "b1": "a3^-1 b1^-1 a1 b3", "b2": "a3^-1 b3",
    "b3": "b3^-1 a3 b5 a5^-1", "b4": "b5 a5^-1",
    "b5": "a5 b5^-1 a5 b1 a3", "b6": "a5 b1 a3",
}


def psi_star() -> dict:
    out = {}
    for i in range(1, 7):
        out[a_(i)] = (a_(i - 1),)
        out[b_(i)] = (b_(i - 1),)
    return out


def automorphism_images(images: dict) -> dict:
    return _table(images)


def phi_star_abelian_check(images: dict = None) -> list:
    """Relators survive the stated automorphisms (abelianized for the table maps)."""
    p = twelve_generator_presentation()
    certs = []
    tables = {"phi": images or _table(PHI_STAR), "tau": _table(TAU_STAR), "rho": _table(RHO_STAR)}
    if images is not None:
        tables = {"phi": images}
    for name, imgs in tables.items():
        first_bad = None
        for k, r in enumerate(p.relators):
            if not p.trivial_in_abelianization(substitute(r, imgs)):
                first_bad = {"relator": p.show(r), "image": p.show(substitute(r, imgs))}
                break
        onto = p.induced_surjective(imgs, p)
        certs.append(check(f"pi1.{name}_star_abelian", first_bad is None and onto,
                           "action on the fundamental group, abelianized",
                           first_failing_relator=first_bad, onto_h1=onto,
                           h1_matrix=[list(abelianize(imgs[g], 12)) for g in range(1, 13)]))
    if images is not None:
        return certs
    shifted = {substitute(r, psi_star()) for r in p.relators}
    certs.append(check("pi1.psi_star_words", shifted == set(p.relators),
                       "psi acts by shifting indices",
                       relators=len(p.relators), images_outside=len(shifted - set(p.relators))))
    phi = _table(PHI_STAR)
    composed = {g: substitute(psi_star()[g], _table(TAU_STAR)) for g in range(1, 13)}
    bad = [AB_GENERATORS[g - 1] for g in range(1, 13) if composed[g] != phi[g]]
    certs.append(check("pi1.phi_is_tau_psi", not bad, "monodromy = tau after psi, on words",
                       mismatched_generators=bad))
    return certs


def spine_certificates() -> list:
    cx = build_spine()
    certs = [check("spine.census", cx.census() == (6, 30, 35, 10) and cx.euler() == 1,
                   "dual spine cells", census=list(cx.census()), euler=cx.euler())]
    counts = {g: sum(1 for t in cx.cells(2) if g in cx.faces(t)) for g in cx.cells(1)}
    certs.append(check("spine.edge_incidence", min(counts.values()) >= 2,
                       "every spine edge bounds at least two 2-cells",
                       min_incidence=min(counts.values()), max_incidence=max(counts.values())))
    derived = {cyclic_normal_form(w) for w in derived_two_cell_words().values()}
    listed = {cyclic_normal_form(w) for w in listed_two_cell_words()}
    certs.append(check("spine.attaching_words", derived == listed and len(listed) == 35,
                       "2-cell attaching words", derived=len(derived), listed=len(listed),
                       only_derived=sorted(derived - listed)[:5], only_listed=sorted(listed - derived)[:5]))
    pres = presentation_from_spine()
    ab30 = pres.abelianization()
    p12 = twelve_generator_presentation()
    ab12 = p12.abelianization()
    certs.append(check("pi1.abelianization",
                       len(pres.generators) == 30 and len(pres.relators) == 41
                       and ab30 == (0, [4, 4, 4, 4]) and ab12 == ab30 and len(p12.relators) == 18,
                       "H_1 = (Z/4)^4 from both presentations",
                       spine_presentation=[len(pres.generators), len(pres.relators)],
                       spine_h1=ab30, twelve_generator_h1=ab12))
    subst = ab_in_spine_generators()
    bad = [p12.show(r) for r in p12.relators if not pres.trivial_in_abelianization(substitute(r, subst))]
    onto = p12.induced_surjective(subst, pres)
    certs.append(check("pi1.generator_change", not bad and onto,
                       "a_i, b_i in the spine generators induce an isomorphism on H_1",
                       relators_not_killed=bad, onto=onto))
    hom = cx.homology()
    certs.append(check("spine.homology",
                       hom[:4] == [(1, []), (0, [4, 4, 4, 4]), (4, []), (4, [])],
                       "homology of the fiber from its spine", homology=hom))
    return certs
