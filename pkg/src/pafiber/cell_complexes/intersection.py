"""Intersection form on H_2 of the fiber and the action of the symmetries on it.

Basis of H_2: the genus two surfaces Sigma_1^1, Sigma_2^1, Sigma_1^2, Sigma_2^2.
Matrices act on column vectors; the image of the k-th basis vector is column k.
"""
from __future__ import annotations

from functools import lru_cache

from ..certificates import check
from ..exact_algebra import (as_matrix, char_poly, det, identity, matmul, matneg, matpow,
                             rank, solve_integer_rows, transpose)
from .polytopes import build_pi_complex
from .spine import left_kernel, build_spine, dual_edge, edge_ends
from .symmetries import PHI_DECK, RHO, SIGMA, TAU, pi_action

Q = as_matrix([[2, -1, -1, 1], [-1, 2, 0, -1], [-1, 0, -2, 1], [1, -1, 1, -2]])
A = as_matrix([[-1, -1, -1, 1], [-2, 1, 0, 1], [-1, 1, 0, 1], [0, 1, 1, 0]])
DECK_STAR = as_matrix([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]])
TAU_STAR = as_matrix([[0, 0, -1, 1], [0, 0, 0, 1], [1, -1, 0, 0], [0, -1, 0, 0]])
PSI_STAR = as_matrix([[-1, 0, -1, 1], [0, -1, -1, 0], [-1, 2, 1, 0], [-2, 1, 0, 1]])
RHO_STAR = identity(4)
SIGMA_STAR = matneg(identity(4))

SURFACE_TRIPLES = {1: ("123", "234", "345", "145", "125"), 2: ("124", "235", "134", "245", "135")}
SIX_SURFACES = [(a, i) for i in (1, 2) for a in (1, 2, 3)]
BASIS = [(1, 1), (2, 1), (1, 2), (2, 2)]


def congruent(m, form):
    return matmul(transpose(m), form, m)


def descartes_signature(form) -> int:
    """Signature from sign changes of the characteristic polynomial.

    A symmetric matrix has only real eigenvalues, so Descartes' count of
    positive roots is exact.
    """
    p = list(char_poly(form))
    n = len(p) - 1

    def changes(cs):
        s = [c for c in cs if c]
        return sum(1 for x, y in zip(s, s[1:]) if (x > 0) != (y > 0))

    pos = changes(p)
    neg = changes([c * (-1) ** (n - k) for k, c in enumerate(p)])
    return pos - neg


def is_even(form) -> bool:
    return all(float(x).is_integer() for r in form for x in r) and all(form[i][i] % 2 == 0 for i in range(len(form)))


def surface_pairing_table() -> tuple:
    """6x6 pairings of Sigma_a^i from the stated local values (order as SIX_SURFACES)."""
    def dot(x, y):
        (a, i), (b, j) = x, y
        d = (b - a) % 3
        if i == j:
            if d == 0:
                return 2 if i == 1 else -2
            return (-1 if i == 1 else 1)
        if i == 2:
            return dot(y, x)
        return {0: -1, 1: 1, 2: 0}[d]
    return as_matrix([[dot(x, y) for y in SIX_SURFACES] for x in SIX_SURFACES])


def pants_pairing(a, i, b, k) -> int:
    """Sigma_a^i . P_{b,-}^{jkl}; ``k = 1`` for consecutive labels, 2 otherwise."""
    if i != k:
        return 0
    d = (b - a) % 3
    return {0: 0, 1: 1, 2: -1}[d]


def dual_basis_matrix() -> tuple:
    """Pairing of the basis surfaces with P_2^123, -P_1^123, P_2^124, -P_1^124."""
    pants = [(1, 2, 1), (-1, 1, 1), (1, 2, 2), (-1, 1, 2)]
    return as_matrix([[s * pants_pairing(a, i, b, k) for s, b, k in pants] for a, i in BASIS])


# ---------------------------------------------------------------------------
# H_2 from the spine
# ---------------------------------------------------------------------------

def _spine_maps(g):
    """Chain maps of g on spine edges and 2-cells, as ``cell -> (image, sign)``."""
    act = pi_action(g)
    cx = build_spine()
    pi, _ = build_pi_complex(3)
    edges = {}
    for c3 in pi.cells(3):
        img = act.cells[c3]
        gen, gimg = dual_edge(c3), dual_edge(img)
        tail, head = edge_ends(gen)
        ends = (act.cells[tail], act.cells[head])
        if ends == edge_ends(gimg):
            edges[gen] = (gimg, 1)
        elif ends[::-1] == edge_ends(gimg):
            edges[gen] = (gimg, -1)
        else:
            raise ValueError(f"{g} does not map edge {gen} to an edge")
    faces = {}
    for t in cx.cells(2):
        img = act.cells[t[:-1]] + "*"
        moved = {}
        for f, x in cx.chain(t).items():
            fi, s = edges[f]
            moved[fi] = moved.get(fi, 0) + s * x
        target = cx.chain(img)
        if moved == target:
            faces[t] = (img, 1)
        elif moved == {f: -x for f, x in target.items()}:
            faces[t] = (img, -1)
        else:
            raise ValueError(f"{g} does not map 2-cell {t} to a 2-cell")
    return edges, faces


def push(chain: dict, faces: dict) -> dict:
    out = {}
    for c, x in chain.items():
        ci, s = faces[c]
        out[ci] = out.get(ci, 0) + s * x
    return out


def _is_cycle(chain) -> bool:
    cx = build_spine()
    total = {}
    for c, x in chain.items():
        for f, y in cx.chain(c).items():
            total[f] = total.get(f, 0) + x * y
    return not any(total.values())


@lru_cache(maxsize=None)
def surface_cycles() -> dict:
    """Oriented 2-cycles for Sigma_a^i.

    Sigma_1^1 gets the orientation making it a cycle with ``T1^123*`` positive;
    Sigma_{a+1}^i is the deck image of Sigma_a^i, and Sigma_1^2 is the image of
    Sigma_1^1 under tau.
    """
    cx = build_spine()
    names = [f"T1^{t}*" for t in SURFACE_TRIPLES[1]]
    first = None
    for bits in range(16):
        signs = [1] + [(-1) ** ((bits >> k) & 1) for k in range(4)]
        chain = dict(zip(names, signs))
        if _is_cycle(chain):
            first = chain
            break
    if first is None:
        raise ValueError("Sigma_1^1 cannot be oriented")
    _, deck = _spine_maps(PHI_DECK)
    _, tau = _spine_maps(TAU)
    out = {(1, 1): first}
    out[(1, 2)] = push(first, tau)
    for i in (1, 2):
        for a in (2, 3):
            out[(a, i)] = push(out[(a - 1, i)], deck)
    for (a, i), ch in out.items():
        expect = {f"T{a}^{t}*" for t in SURFACE_TRIPLES[i]}
        if set(ch) != expect or not _is_cycle(ch):
            raise ValueError(f"image surface ({a},{i}) is not the expected cycle")
    return out


@lru_cache(maxsize=None)
def _h2_rows() -> tuple:
    cx = build_spine()
    two = cx.cells(2)
    bnd = [[cx.chain(p).get(t, 0) for t in two] for p in cx.cells(3)]
    basis = [[surface_cycles()[b].get(t, 0) for t in two] for b in BASIS]
    return tuple(two), as_matrix(basis + bnd)


def h2_coordinates(chain: dict):
    """Coordinates of a spine 2-cycle in the surface basis (None if not in the span)."""
    two, rows = _h2_rows()
    x = solve_integer_rows(rows, [chain.get(t, 0) for t in two])
    return None if x is None else tuple(x[:4])


def h2_action(g) -> tuple:
    """Matrix of g on H_2 read off from the spine."""
    _, faces = _spine_maps(g)
    cols = [h2_coordinates(push(surface_cycles()[b], faces)) for b in BASIS]
    return transpose(as_matrix(cols))


def h2_certificates() -> list:
    cyc = surface_cycles()
    two, rows = _h2_rows()
    cx = build_spine()
    rels = []
    for i in (1, 2):
        total = {}
        for a in (1, 2, 3):
            for t, x in cyc[(a, i)].items():
                total[t] = total.get(t, 0) + x
        rels.append(total)
    rel_ok = all(h2_coordinates(r) == (0, 0, 0, 0) for r in rels)
    z2 = cx.homology()[2]
    bnd_rank = rank(rows[4:])
    cycles = left_kernel(cx.boundary_matrix(2))
    unreached = sum(1 for z in cycles if h2_coordinates(dict(zip(two, z))) is None)
    span_ok = rank(rows) == 4 + bnd_rank and z2 == (4, []) and unreached == 0
    certs = [check("h2.surfaces", rel_ok and span_ok,
                   "six genus-two cycles with two relations generate H_2",
                   relations_vanish=rel_ok, h2=z2, cycles_outside_span=unreached)]
    derived = {"deck": h2_action(PHI_DECK), "tau": h2_action(TAU),
               "rho": h2_action(RHO), "sigma": h2_action(SIGMA)}
    listed = {"deck": DECK_STAR, "tau": TAU_STAR, "rho": RHO_STAR, "sigma": SIGMA_STAR}
    bad = {k: [list(r) for r in derived[k]] for k in derived if derived[k] != listed[k]}
    certs.append(check("h2.spine_actions", not bad,
                       "action matrices recomputed from the spine", mismatches=bad))
    return certs


def intersection_suite(form=Q) -> list:
    certs = []
    d = det(form)
    sig = descartes_signature(form)
    even = is_even(form)
    certs.append(check("intersection.form", d == 16 and even and sig == 0 and form == transpose(form),
                       "det 16, even, signature 0", det=d, even=even, signature=sig))
    ok_a = congruent(A, form) == form and det(A) == 1 and char_poly(A) == (1, 0, -6, 0, 1)
    certs.append(check("intersection.monodromy", ok_a, "A preserves Q, det 1, x^4-6x^2+1",
                       det_a=det(A), char_poly=list(char_poly(A))))
    ident = {
        "rho=I": RHO_STAR == identity(4),
        "sigma=-I": SIGMA_STAR == matneg(identity(4)),
        "tau^2=-I": matpow(TAU_STAR, 2) == matneg(identity(4)),
        "psi^2=deck": matpow(PSI_STAR, 2) == DECK_STAR,
        "A=tau.psi": matmul(TAU_STAR, PSI_STAR) == A,
    }
    certs.append(check("intersection.relations", all(ident.values()), "relations among the actions",
                       **ident, psi_tau_equals_A=matmul(PSI_STAR, TAU_STAR) == A))
    signs = {}
    for name, m in (("rho", RHO_STAR), ("sigma", SIGMA_STAR), ("deck", DECK_STAR), ("A", A),
                    ("tau", TAU_STAR), ("psi", PSI_STAR)):
        c = congruent(m, form)
        signs[name] = 1 if c == form else (-1 if c == matneg(form) else 0)
    want = {"rho": 1, "sigma": 1, "deck": 1, "A": 1, "tau": -1, "psi": -1}
    certs.append(check("intersection.orientation", signs == want,
                       "orientation preserving maps fix Q, reversing ones negate it", signs=signs))
    table = surface_pairing_table()
    restricted = as_matrix([[table[SIX_SURFACES.index(x)][SIX_SURFACES.index(y)] for y in BASIS] for x in BASIS])
    kernel_ok = all(sum(table[r][c] for c in cols) == 0 for r in range(6) for cols in ((0, 1, 2), (3, 4, 5)))
    certs.append(check("intersection.surface_table",
                       rank(table) == 4 and kernel_ok and restricted == form,
                       "6x6 surface pairing: rank 4, kernel from the two relations, restricts to Q",
                       rank=rank(table), kernel_ok=kernel_ok))
    certs.append(check("intersection.dual_basis", dual_basis_matrix() == identity(4),
                       "pants basis is dual to the surface basis"))
    return certs
