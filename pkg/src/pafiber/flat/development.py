"""Developing the spherical cone structure of the triangulated R^3 into S^3.

In S^3 the two great circles ``S^1 x 0`` and ``0 x S^1`` are cut into ten arcs
each by the points ``r_j = (eta^j, 0)`` and ``g_k = (0, eta^k)`` with
``eta = exp(i pi/5)``.  The tetrahedra ``{r_j, r_j+1, g_k, g_k+1}`` tile S^3.
The cross edge ``r_a g_b`` is blue when ``b = 2a (mod 5)`` and black
otherwise; arcs of the two circles are red and green.

A *chart* is a labelling of the four vertices of an R^3 tetrahedron by S^3
vertices that respects edge kinds.  Charts propagate across faces, and
geodesics of R^3 lift from great arcs of S^3 by following those moves.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Optional

import numpy as np

from .triangulation import BLACK, BLUE, GREEN, RED, edge_kind, other_tetrahedron, vertex_colour

STEP = math.pi / 5


def s3_position(label) -> np.ndarray:
    kind, j = label
    c, s = math.cos(j * STEP), math.sin(j * STEP)
    return np.array([c, s, 0.0, 0.0]) if kind == "r" else np.array([0.0, 0.0, c, s])


def s3_edge_kind(x, y):
    if x[0] == y[0]:
        if (x[1] - y[1]) % 10 in (1, 9):
            return RED if x[0] == "r" else GREEN
        return None
    r, g = (x, y) if x[0] == "r" else (y, x)
    return BLUE if (g[1] - 2 * r[1]) % 5 == 0 else BLACK


def s3_cell_labels(cell) -> frozenset:
    j, k = cell
    return frozenset({("r", j), ("r", (j + 1) % 10), ("g", k), ("g", (k + 1) % 10)})


def s3_cell_of(x) -> tuple:
    """The tetrahedron (j, k) of S^3 containing the point x (generic position)."""
    a = math.atan2(x[1], x[0])
    b = math.atan2(x[3], x[2])
    return int(math.floor(a / STEP)) % 10, int(math.floor(b / STEP)) % 10


def _det3(t):
    a, b, c, d = t
    u = [b[i] - a[i] for i in range(3)]
    v = [c[i] - a[i] for i in range(3)]
    w = [d[i] - a[i] for i in range(3)]
    return (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def _chart_ok(tet, labels) -> bool:
    for x, y in itertools.combinations(tet, 2):
        if edge_kind(x, y) != s3_edge_kind(labels[x], labels[y]):
            return False
    return True


def chart_orientation(tet, labels) -> int:
    """Product of the orientation signs of tet in R^3 and of its image in S^3."""
    t = tuple(sorted(tet))
    d3 = _det3(t)
    d4 = float(np.linalg.det(np.array([s3_position(labels[v]) for v in t])))
    return (1 if d3 > 0 else -1) * (1 if d4 > 0 else -1)


# Charts obtained by developing from one another all have this orientation
# product; the mirror charts fail to extend across faces.
CHART_ORIENTATION = -1


@lru_cache(maxsize=None)
def _initial_chart(tet) -> tuple:
    reds = [v for v in tet if vertex_colour(v) == RED]
    greens = [v for v in tet if vertex_colour(v) == GREEN]
    for j in range(10):
        for k in range(10):
            for pr in itertools.permutations(reds):
                for pg in itertools.permutations(greens):
                    labels = {pr[0]: ("r", j), pr[1]: ("r", (j + 1) % 10),
                              pg[0]: ("g", k), pg[1]: ("g", (k + 1) % 10)}
                    if _chart_ok(tet, labels) and chart_orientation(tet, labels) == CHART_ORIENTATION:
                        return tuple(sorted(labels.items()))
    raise AssertionError(f"no chart for {tet}")


def initial_chart(tet) -> dict:
    """A deterministic orientation-compatible chart of a tetrahedron."""
    return dict(_initial_chart(tuple(sorted(tet))))


def step(tet, labels, face):
    """Cross ``face`` into the neighbouring tetrahedron and extend the chart."""
    face = tuple(face)
    new_tet = other_tetrahedron(tet, face)
    (old,) = [v for v in tet if v not in face]
    (new,) = [v for v in new_tet if v not in face]
    lo = labels[old]
    (same,) = [labels[v] for v in face if labels[v][0] == lo[0]]
    cands = [(lo[0], (same[1] + 1) % 10), (lo[0], (same[1] - 1) % 10)]
    (ln,) = [c for c in cands if c != lo]
    out = {v: labels[v] for v in face}
    out[new] = ln
    if not _chart_ok(new_tet, out):
        raise AssertionError(f"chart does not extend from {tet} to {new_tet}")
    return new_tet, out


def holonomy_around_edge(a, b, tet=None):
    """Develop once around the edge ab; return (steps, chart returns to itself)."""
    from .triangulation import tetrahedra_at_edge

    start = tet or tetrahedra_at_edge(a, b)[0]
    labels0 = initial_chart(start)
    cur, labels = start, labels0
    prev = None
    n = 0
    while True:
        others = [v for v in cur if v not in (a, b)]
        for o in others:
            face = (a, b, o)
            nxt = other_tetrahedron(cur, face)
            if nxt != prev:
                break
        prev = cur
        cur, labels = step(cur, labels, face)
        n += 1
        if cur == start:
            return n, all(labels[v] == labels0[v] for v in cur)


# ---------------------------------------------------------------------------
# lifting great arcs
# ---------------------------------------------------------------------------

def _crossing_times(p, u, d, i0, i1):
    """Times t in (0, d) where x(t) = cos t p + sin t u crosses a ray boundary
    of the angular sectors in the (i0, i1) coordinate plane."""
    out = []
    for m in range(5):
        al = m * STEP
        a = -math.sin(al) * p[i0] + math.cos(al) * p[i1]
        b = -math.sin(al) * u[i0] + math.cos(al) * u[i1]
        if a == 0 and b == 0:
            return None
        t = math.atan2(-a, b)
        for cand in (t - math.pi, t, t + math.pi, t + 2 * math.pi):
            if 0 < cand < d:
                out.append(cand)
    return out


def lift_great_arc(tet, labels, p, q, tol: float = 1e-9):
    """Follow the great arc from p to q starting in the charted tetrahedron.

    Returns ``(tet, labels)`` at the far end, or None when the arc does not
    start inside the image of ``tet`` or passes too close to an edge.
    """
    c = float(np.clip(p @ q, -1.0, 1.0))
    d = math.acos(c)
    if d <= tol or d >= math.pi - tol:
        return None
    u = q - c * p
    u /= np.linalg.norm(u)
    times = []
    for i0, i1 in ((0, 1), (2, 3)):
        ts = _crossing_times(p, u, d, i0, i1)
        if ts is None:
            return None
        times.extend(ts)
    times.sort()
    for t0, t1 in zip(times, times[1:]):
        if t1 - t0 < tol:
            return None
    if times and (times[0] < tol or d - times[-1] < tol):
        return None
    marks = [0.0] + times + [d]
    cells = [s3_cell_of(math.cos((s + e) / 2) * p + math.sin((s + e) / 2) * u)
             for s, e in zip(marks, marks[1:])]
    if s3_cell_labels(cells[0]) != frozenset(labels[v] for v in tet):
        return None
    cur, lab = tet, dict(labels)
    for prev, nxt in zip(cells, cells[1:]):
        common = s3_cell_labels(prev) & s3_cell_labels(nxt)
        if len(common) != 3:
            return None
        inv = {lab[v]: v for v in cur}
        face = tuple(inv[x] for x in sorted(common))
        cur, lab = step(cur, lab, face)
    return cur, lab
