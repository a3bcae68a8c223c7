"""Exhaustive search for short closed admissible strings.

A string starts at the reference edge e0 and is a sequence of catalog ids.
The current edge is described by a frame (an element of G taking e0 to it),
kept as an index into the 48 point parts plus a translation.  Junction
conditions only involve data in the frame of the shared edge, so they are
precomputed as 42 x 42 tables.  Lengths are integers in tenths of pi.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache

from ..flat.lines import IDENTITY, Isometry3, signed_permutation_matrices, stabilizer
from .catalog import E0_SECTORS, SECTOR_INDEX, orbit_representatives, template_catalog
from .strings import bonus, closed_string_reason, world_chords

MAX_BUDGET = 19
MIN_CHORD = 2
MAX_NORM_SQ = 19   # largest squared displacement, original units


@dataclass
class SearchCertificate:
    budget: int
    nodes_explored: int = 0
    closed_admissible_strings: list = field(default_factory=list)   # (ids, k, base, bonus, total)
    violations: list = field(default_factory=list)
    max_depth: int = 0
    prune: str = "table"

    @property
    def certified(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "budget": self.budget,
            "nodes_explored": self.nodes_explored,
            "closed_admissible": len(self.closed_admissible_strings),
            "violations": [list(v[0]) for v in self.violations],
            "max_depth": self.max_depth,
            "prune": self.prune,
        }


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def _apply(m, v):
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


@dataclass(frozen=True)
class Tables:
    linears: tuple
    mult: tuple          # mult[a][b] = index of linears[a] @ linears[b]
    moved: tuple         # moved[l][c] = linears[l] @ displacement of entry c
    entry_linear: tuple  # point part index of the transfer of entry c
    lengths: tuple
    is_b: tuple
    compat: tuple        # compat[p][n]: junction p -> n allowed in a common frame
    opposite: tuple      # opposite[p][n]: opposite directions at the junction
    stab_sector: dict    # point part index (stabilizer) -> permutation of sector indices
    stab_sign: dict      # point part index (stabilizer) -> orientation sign


@lru_cache(maxsize=None)
def tables() -> Tables:
    cat = template_catalog()
    lins = tuple(signed_permutation_matrices())
    index = {m: i for i, m in enumerate(lins)}
    mult = tuple(tuple(index[_matmul(a, b)] for b in lins) for a in lins)
    moved = tuple(tuple(_apply(m, c.displacement) for c in cat) for m in lins)
    entry_linear = tuple(index[c.transfer.linear] for c in cat)
    n = len(cat)
    compat, opposite = [], []
    for p in cat:
        row_c, row_o = [], []
        for q in cat:
            gap = (p.end_sector - q.start_sector) % 6
            opp = p.end_orientation == -q.start_orientation
            ok = gap not in (0, 1, 5) and (p.is_type("b") or q.is_type("b") or opp)
            row_c.append(ok)
            row_o.append(opp)
        compat.append(tuple(row_c))
        opposite.append(tuple(row_o))
    stab_sector, stab_sign = {}, {}
    for s in stabilizer():
        li = index[s.linear]
        stab_sector[li] = tuple(SECTOR_INDEX[s.vector(v)] for v in E0_SECTORS)
        stab_sign[li] = 1 if s.vector((1, 1, 1)) == (1, 1, 1) else -1
    return Tables(lins, mult, moved, entry_linear, tuple(c.base_length for c in cat),
                  tuple(c.is_type("b") for c in cat), tuple(compat), tuple(opposite),
                  stab_sector, stab_sign)


@lru_cache(maxsize=None)
def return_length_table(budget: int = MAX_BUDGET) -> dict:
    """Least total length of moves summing to a displacement, up to ``budget``.

    A move is any point-group image of a catalog displacement with that
    entry's length.  Every continuation of a string uses such moves, so the
    table is a lower bound on the length still needed to return.
    """
    t = tables()
    moves = {}
    for row in t.moved:
        for c, v in enumerate(row):
            L = t.lengths[c]
            if moves.get(v, 99) > L:
                moves[v] = L
    moves = sorted(moves.items())
    dist = {(0, 0, 0): 0}
    heap = [(0, (0, 0, 0))]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for m, L in moves:
            nd = d + L
            if nd > budget:
                continue
            w = (v[0] + m[0], v[1] + m[1], v[2] + m[2])
            if nd < dist.get(w, budget + 1):
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist


def norm_return_bound(d) -> int:
    """Two units per chord, and at least ceil(|d| / sqrt 19) chords."""
    n2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2]     # doubled units
    k = math.isqrt(n2 // (4 * MAX_NORM_SQ))
    while 4 * MAX_NORM_SQ * k * k < n2:
        k += 1
    return MIN_CHORD * k


# ---------------------------------------------------------------------------
# depth-first search
# ---------------------------------------------------------------------------

def _closure_ok(t: Tables, ids, lin) -> bool:
    """Cyclic conditions at e0 once the string is back at its start."""
    first, last = ids[0], ids[-1]
    cat = template_catalog()
    perm, sign = t.stab_sector[lin], t.stab_sign[lin]
    end_sector = perm[cat[last].end_sector]
    gap = (end_sector - cat[first].start_sector) % 6
    if gap in (0, 1, 5):
        return False
    opp_wrap = sign * cat[last].end_orientation == -cat[first].start_orientation
    if not (t.is_b[first] or t.is_b[last] or opp_wrap):
        return False
    k = len(ids)
    opp = [t.opposite[ids[i]][ids[i + 1]] for i in range(k - 1)] + [opp_wrap]
    # b-sandwich around the wrap: middle chords k-1 and 0
    for mid in (k - 1, 0):
        if t.is_b[ids[mid]] and not t.is_b[ids[mid - 1]] and not t.is_b[ids[(mid + 1) % k]]:
            if not (opp[mid - 1] or opp[mid]):
                return False
    return True


def _search_from(first_ids, budget, prune, order, cert):
    t = tables()
    table = return_length_table(budget) if prune == "table" else None
    mult, moved, entry_linear = t.mult, t.moved, t.entry_linear
    lengths, is_b, compat, opposite = t.lengths, t.is_b, t.compat, t.opposite
    ids_all = list(range(len(lengths)))
    if order == "reverse":
        ids_all.reverse()

    def remaining_ok(length, pos):
        if prune == "off":
            return True
        if prune == "table":
            need = table.get(pos)
            return need is not None and length + need <= budget
        return length + norm_return_bound(pos) <= budget

    ids = []

    def visit(lin, pos, length):
        cert.nodes_explored += 1
        k = len(ids)
        if k > cert.max_depth:
            cert.max_depth = k
        if pos == (0, 0, 0) and k >= 2 and _closure_ok(t, ids, lin):
            _record(ids, cert)
        last = ids[-1]
        for c in ids_all:
            L = length + lengths[c]
            if L > budget or not compat[last][c]:
                continue
            # b-sandwich with the last chord in the middle
            if k >= 2 and is_b[last] and not is_b[ids[-2]] and not is_b[c]:
                if not (opposite[ids[-2]][last] or opposite[last][c]):
                    continue
            v = moved[lin][c]
            npos = (pos[0] + v[0], pos[1] + v[1], pos[2] + v[2])
            if not remaining_ok(L, npos):
                continue
            ids.append(c)
            visit(mult[lin][entry_linear[c]], npos, L)
            ids.pop()

    ident = t.linears.index(IDENTITY)
    for c in first_ids:
        L = lengths[c]
        pos = moved[ident][c]
        if L > budget or not remaining_ok(L, pos):
            continue
        ids.append(c)
        visit(entry_linear[c], pos, L)
        ids.pop()


def _record(ids, cert):
    chords = world_chords(ids)
    reason = closed_string_reason(chords)
    if reason:
        raise AssertionError(f"table search and world check disagree on {ids}: {reason}")
    base = sum(c.base_length for c in chords)
    b = bonus(chords)
    entry = (tuple(ids), len(ids), base, b, base + b)
    cert.closed_admissible_strings.append(entry)
    if base + b < 20:
        cert.violations.append(entry)


def search(budget: int = MAX_BUDGET, prune: str = "table", symmetry: bool = True,
           order: str = "forward", workers: int = 1) -> SearchCertificate:
    """Enumerate closed admissible strings of base length <= budget.

    ``symmetry`` restricts the first chord to one representative per orbit
    of the stabilizer of e0.  ``prune`` is "table", "norm" or "off".
    """
    budget = int(budget)
    if budget > MAX_BUDGET:
        raise ValueError("budget must be at most 19 (strict inequality with 2 pi)")
    if prune not in ("table", "norm", "off"):
        raise ValueError(f"unknown pruning mode {prune!r}")
    firsts = orbit_representatives() if symmetry else list(range(len(template_catalog())))
    if order == "reverse":
        firsts = list(reversed(firsts))
    cert = SearchCertificate(budget, prune=prune)
    if workers > 1:
        _parallel(firsts, budget, prune, order, workers, cert)
    else:
        _search_from(firsts, budget, prune, order, cert)
    if cert.max_depth > budget // MIN_CHORD:
        raise AssertionError("string deeper than the length budget allows")
    cert.closed_admissible_strings.sort()
    cert.violations.sort()
    return cert


def _one_branch(args):
    c, budget, prune, order = args
    cert = SearchCertificate(budget, prune=prune)
    _search_from([c], budget, prune, order, cert)
    return cert


def _parallel(firsts, budget, prune, order, workers, cert):
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_one_branch, [(c, budget, prune, order) for c in firsts]))
    for p in parts:
        cert.nodes_explored += p.nodes_explored
        cert.max_depth = max(cert.max_depth, p.max_depth)
        cert.closed_admissible_strings.extend(p.closed_admissible_strings)
        cert.violations.extend(p.violations)
