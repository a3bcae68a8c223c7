"""Symmetries of the tessellation and of the two triangulations of the fiber.

An element of ``S_3 x S_5`` moves sheet ``a`` to ``alpha1(a)`` and sends
``e_i`` to ``e_{alpha2(i)}``; this is the coordinate map
``x -> (x_{alpha2^-1(1)}, ..., x_{alpha2^-1(5)})``.  The order-6 map psi is
not of this form and is given by its action on simplices.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ..certificates import check
from .complex import ComplexError
from .delta import geometric_pairing, geometric_simplices, parse_sname, simplex_names, sname
from .polytopes import build_pi_complex, label, m3, m5, transport_sign


def perm_from_cycles(n: int, *cycles) -> tuple:
    """Images of 1..n (as a tuple indexed from 0)."""
    img = list(range(1, n + 1))
    for cyc in cycles:
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            img[x - 1] = y
    return tuple(img)


def compose(p: tuple, q: tuple) -> tuple:
    """``p o q`` on 1..n."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def perm_cycles(p: tuple) -> str:
    seen, out = set(), []
    for s in range(1, len(p) + 1):
        if s in seen or p[s - 1] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x - 1]
        out.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(out) or "id"


@dataclass(frozen=True)
class SheetLabel:
    """An element of ``S_3 x S_5``."""

    sheets: tuple
    labels: tuple

    def __mul__(self, other: "SheetLabel") -> "SheetLabel":
        return SheetLabel(compose(self.sheets, other.sheets), compose(self.labels, other.labels))

    def __pow__(self, n: int) -> "SheetLabel":
        out = SheetLabel((1, 2, 3), (1, 2, 3, 4, 5))
        for _ in range(n):
            out = out * self
        return out

    def vertex(self, v) -> tuple:
        w = [0] * 5
        for i, x in enumerate(v):
            w[self.labels[i] - 1] = x
        return tuple(w)

    def __str__(self):
        return f"({perm_cycles(self.sheets)}, {perm_cycles(self.labels)})"


PHI_DECK = SheetLabel(perm_from_cycles(3, (1, 2, 3)), perm_from_cycles(5))
RHO = SheetLabel(perm_from_cycles(3), perm_from_cycles(5, (1, 2, 3, 4, 5)))
SIGMA = SheetLabel(perm_from_cycles(3), perm_from_cycles(5, (3, 4), (5, 2)))
TAU = SheetLabel(perm_from_cycles(3, (2, 3)), perm_from_cycles(5, (2, 4, 5, 3)))
TAU_LABELS = perm_from_cycles(5, (2, 4, 5, 3))
TAU_LABELS_ALT = perm_from_cycles(5, (2, 4, 3, 5))


def closure(gens, mul=lambda x, y: x * y) -> set:
    out = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


def perm_order(mapping: dict) -> int:
    n, cur = 1, dict(mapping)
    while any(k != v for k, v in cur.items()):
        cur = {k: mapping[v] for k, v in cur.items()}
        n += 1
    return n


# ---------------------------------------------------------------------------
# action on the tessellation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pi_index(sheets: int):
    cx, members = build_pi_complex(sheets)
    where = {loc: (name, p) for name, ls in members.items() for loc, p in ls}
    return cx, members, where


@dataclass
class SymmetryAction:
    name: str
    cells: dict
    labels: tuple
    signs: dict = None

    def __call__(self, cell):
        return self.cells[cell]


@lru_cache(maxsize=None)
def pi_action(g: SheetLabel, sheets: int = 3) -> SymmetryAction:
    """Cell permutation and orientation signs of g on the tessellation."""
    cx, members, where = _pi_index(sheets)
    cells, signs = {}, {}
    for name, ls in members.items():
        images = set()
        eps = set()
        for ((kind, a), vs), p in ls:
            vmap = {v: g.vertex(v) for v in vs}
            img = ((kind, g.sheets[a - 1] if sheets == 3 else a), frozenset(vmap.values()))
            if img not in where:
                raise ComplexError(f"{g} sends a piece of {name} to a non-cell")
            target, q = where[img]
            images.add(target)
            eps.add(p * q * transport_sign(vs, vmap))
        if len(images) != 1 or len(eps) != 1:
            raise ComplexError(f"{g} is not well defined on {name}")
        cells[name] = images.pop()
        signs[name] = eps.pop()
    if sorted(cells.values()) != sorted(cells):
        raise ComplexError(f"{g} is not a bijection on cells")
    return SymmetryAction(str(g), cells, g.labels, signs)


def commutes_with_boundary(action: SymmetryAction, sheets: int = 3) -> list:
    """Cells where ``g(boundary c) != +-boundary(g c)``; empty when cellular."""
    cx = _pi_index(sheets)[0]
    bad = []
    for c in cx.dims:
        moved = Counter()
        for f, x in cx.chain(c).items():
            moved[action.cells[f]] += x * action.signs[f]
        target = {f: action.signs[c] * x for f, x in cx.chain(action.cells[c]).items()}
        if {f: x for f, x in moved.items() if x} != target:
            bad.append(c)
        elif Counter({action.cells[f]: m for f, m in cx.faces(c).items()}) != cx.faces(action.cells[c]):
            bad.append(c)
    return bad


# ---------------------------------------------------------------------------
# action on the triangulations
# ---------------------------------------------------------------------------

def delta_action(g: SheetLabel, primed: bool = False, sheets: int = 3) -> SymmetryAction:
    """Simplex map induced by a coordinate symmetry, into either triangulation."""
    targets = {}
    for pr in (False, True):
        for name, (piece, vs) in geometric_simplices(sheets, pr).items():
            targets.setdefault((piece, vs), name)
    out = {}
    for name, ((kind, a), vs) in geometric_simplices(sheets, primed).items():
        img = ((kind, g.sheets[a - 1] if sheets == 3 else a), frozenset(g.vertex(v) for v in vs))
        for v in vs:
            if label(g.vertex(v)) != g.labels[label(v) - 1]:
                raise ComplexError(f"{g} does not act on labels through its S_5 part")
        cands = [n for n in (targets.get(img),) if n]
        for pr in (False, True):
            for n2, key in geometric_simplices(sheets, pr).items():
                if key == img and n2 not in cands:
                    cands.append(n2)
        if not cands:
            raise ComplexError(f"{g} sends {name} to a non-simplex")
        out[name] = cands
    return SymmetryAction(str(g), out, g.labels)


def psi_rule(name: str, sheets: int = 3) -> str:
    a, sign, i, _ = parse_sname(name)
    return sname(a, "+", i) if sign == "-" else sname(m3(a + 1, sheets), "-", i)


def deck_rule(name: str, sheets: int = 3) -> str:
    a, sign, i, pr = parse_sname(name)
    return sname(m3(a + 1, sheets), sign, i, pr)


def label_rule(perm: tuple):
    def rule(name):
        a, sign, i, pr = parse_sname(name)
        return sname(a, sign, None if i is None else perm[i - 1], pr)
    return rule


def tau_rule(name: str, labels: tuple = TAU_LABELS) -> str:
    a, sign, i, pr = parse_sname(name)
    return sname(m3(2 - a), sign, None if i is None else labels[i - 1], not pr)


def monodromy_rule(name: str, labels: tuple = TAU_LABELS) -> str:
    """The displayed action of the monodromy from the first triangulation to the second."""
    a, sign, i, _ = parse_sname(name)
    b, s = (m3(2 - a), "+") if sign == "-" else (m3(1 - a), "-")
    return sname(b, s, None if i is None else labels[i - 1], True)


def respects_pairing(rule, labels: tuple, src: dict, dst: dict) -> list:
    """Facets where ``rule`` fails to carry the source pairing to the target one."""
    bad = []
    for (x, j), y in src.items():
        if dst.get((rule(x), labels[j - 1])) != rule(y):
            bad.append((x, j))
    return bad


def _matches_rule(action: SymmetryAction, rule) -> list:
    return [n for n, cands in action.cells.items() if rule(n) not in cands]


def delta_group(sheets: int = 3) -> set:
    """The group generated by psi, rho and sigma acting on the first triangulation."""
    names = simplex_names(sheets)
    ident = tuple(range(1, 6))

    def element(rule, labels):
        return (tuple(rule(n) for n in names), labels)

    index = {n: k for k, n in enumerate(names)}

    def mul(x, y):
        # x o y
        return (tuple(x[0][index[y[0][k]]] for k in range(len(names))), compose(x[1], y[1]))

    gens = [element(psi_rule, ident), element(label_rule(RHO.labels), RHO.labels),
            element(label_rule(SIGMA.labels), SIGMA.labels)]
    return closure(gens, mul)


def verify_symmetries(tau_power: int = 2) -> list:
    """Orders, relations, group sizes and the monodromy rule.

    ``tau_power`` is the exponent in the relation ``tau^k = sigma`` (2 holds).
    """
    certs = []
    gens = {"phi_deck": PHI_DECK, "rho": RHO, "sigma": SIGMA, "tau": TAU}
    actions = {k: pi_action(g) for k, g in gens.items()}
    g_group = closure(list(gens.values()))
    cell_perms = {tuple(sorted(pi_action(g).cells.items())) for g in g_group}
    broken = {str(g): commutes_with_boundary(pi_action(g)) for g in g_group}
    broken = {k: v for k, v in broken.items() if v}
    certs.append(check("symmetries.pi_cellular", not broken,
                       "symmetry group of the tessellation",
                       elements=len(g_group), non_cellular=broken))

    pairing = geometric_pairing(3)
    pairing_p = geometric_pairing(3, True)
    names = simplex_names(3)
    psi_map = {n: psi_rule(n) for n in names}
    orders = {k: perm_order(a.cells) for k, a in actions.items()}
    orders["psi"] = perm_order(psi_map)
    certs.append(check("symmetries.orders", [orders[k] for k in ("phi_deck", "rho", "sigma", "tau", "psi")]
                       == [3, 5, 2, 4, 6], "orders of phi, rho, sigma, tau, psi", orders=orders))

    tau_k = TAU ** tau_power
    rel_tau = pi_action(tau_k).cells == actions["sigma"].cells and tau_k == SIGMA
    psi_sq = {n: psi_map[psi_map[n]] for n in names}
    rel_psi = psi_sq == {n: deck_rule(n) for n in names}
    certs.append(check("symmetries.relations", rel_tau and rel_psi,
                       "tau^2 = sigma and psi^2 = phi",
                       tau_power=tau_power, tau_relation=rel_tau, psi_square_is_deck=rel_psi,
                       tau_power_element=str(tau_k)))

    g_prime = delta_group()
    certs.append(check("symmetries.group_orders", len(g_group) == 60 and len(cell_perms) == 60
                       and len(g_prime) == 60, "two symmetry groups of order 60",
                       G=len(g_group), G_cell_permutations=len(cell_perms), G_prime=len(g_prime)))

    ident = tuple(range(1, 6))
    rules = {
        "phi_deck": (delta_action(PHI_DECK), deck_rule, ident),
        "rho": (delta_action(RHO), label_rule(RHO.labels), RHO.labels),
        "sigma": (delta_action(SIGMA), label_rule(SIGMA.labels), SIGMA.labels),
    }
    rule_bad = {k: _matches_rule(act, rule) for k, (act, rule, _) in rules.items()}
    pair_bad = {k: respects_pairing(rule, lab, pairing, pairing) for k, (_, rule, lab) in rules.items()}
    pair_bad["psi"] = respects_pairing(psi_rule, ident, pairing, pairing)
    tau_act = delta_action(TAU)
    tau_bad = _matches_rule(tau_act, tau_rule)
    tau_alt_bad = _matches_rule(tau_act, lambda n: tau_rule(n, TAU_LABELS_ALT))
    tau_pair_bad = respects_pairing(tau_rule, TAU_LABELS, pairing, pairing_p)
    ok = (not any(rule_bad.values()) and not any(pair_bad.values()) and not tau_bad
          and not tau_pair_bad)
    certs.append(check("symmetries.delta_actions", ok, "action on the triangulations",
                       rule_mismatches=rule_bad, pairing_failures=pair_bad,
                       tau_mismatches=tau_bad, tau_pairing_failures=tau_pair_bad,
                       tau_label_permutation=perm_cycles(TAU_LABELS),
                       mismatches_with_2435=len(tau_alt_bad)))

    composed = {n: tau_act.cells[psi_map[n]] for n in names}
    mono_bad = [n for n in names if monodromy_rule(n) not in composed[n]]
    mono_pair = respects_pairing(monodromy_rule, TAU_LABELS, pairing, pairing_p)
    certs.append(check("symmetries.monodromy", not mono_bad and not mono_pair,
                       "monodromy from the first triangulation to the second",
                       rule_mismatches=mono_bad, pairing_failures=mono_pair,
                       vertex_permutation=perm_cycles(TAU_LABELS),
                       sample={n: monodromy_rule(n) for n in ("S1-", "S1+", "S2-^1", "S2+^3")}))
    return certs
