"""The periodic triangulation of R^3 whose vertices lie on the blue lines.

Vertices are the odd points of the blue lines.  Edges come in four kinds:
``blue`` (consecutive vertices on a blue line, length sqrt 3), ``red`` and
``green`` (shortest segments between two blue lines, length sqrt 2) and
``black`` (length sqrt 5).  The tetrahedra are the 4-cliques of this graph.

Everything is computed locally on demand, so the structure is infinite and
queries near any point cost the same.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from functools import lru_cache

from .lines import cross, dot, line_through, sub

RED, GREEN, BLUE, BLACK = "red", "green", "blue", "black"

# doubled offsets with squared norms 8, 12 and 20
_OFFSETS_8 = tuple(sorted({p for a in (2, -2) for b in (2, -2) for p in itertools.permutations((a, b, 0))}))
_OFFSETS_12 = tuple(itertools.product((2, -2), repeat=3))
_OFFSETS_20 = tuple(sorted({p for a in (4, -4) for b in (2, -2) for p in itertools.permutations((a, b, 0))}))


def is_vertex(p) -> bool:
    return all(x % 2 for x in p) and line_through(tuple(p)) is not None


def vertex_colour(v) -> str:
    """Red and green vertices alternate along each blue line."""
    return RED if sum(v) % 4 == 3 else GREEN


@lru_cache(maxsize=None)
def neighbours(v) -> dict:
    """Map each neighbour of the vertex v to the kind of the joining edge."""
    line = line_through(v)
    out = {}
    for off in _OFFSETS_12:
        w = (v[0] + off[0], v[1] + off[1], v[2] + off[2])
        if line.contains(w):
            out[w] = BLUE
    for off in _OFFSETS_8:
        w = (v[0] + off[0], v[1] + off[1], v[2] + off[2])
        other = line_through(w)
        if other is not None and dot(off, line.direction) == 0 and dot(off, other.direction) == 0:
            out[w] = vertex_colour(v)
    for off in _OFFSETS_20:
        w = (v[0] + off[0], v[1] + off[1], v[2] + off[2])
        if line_through(w) is not None:
            out[w] = BLACK
    return out


def edge_kind(a, b):
    return neighbours(a).get(b)


def _key(t):
    return tuple(sorted(t))


@lru_cache(maxsize=None)
def tetrahedra_at_edge(a, b) -> tuple:
    """Tetrahedra (sorted vertex 4-tuples) containing the edge ab."""
    na, nb = neighbours(a), neighbours(b)
    if b not in na:
        raise ValueError(f"{a} and {b} are not adjacent")
    common = sorted(set(na) & set(nb))
    out = []
    for c, d in itertools.combinations(common, 2):
        if d in neighbours(c):
            out.append(_key((a, b, c, d)))
    return tuple(sorted(out))


def other_tetrahedron(tet, face):
    """The tetrahedron sharing ``face`` (three vertices) with ``tet``."""
    face = tuple(face)
    (old,) = [v for v in tet if v not in face]
    x, y, z = face
    cands = set(neighbours(x)) & set(neighbours(y)) & set(neighbours(z))
    cands.discard(old)
    if len(cands) != 1:
        raise AssertionError(f"face {face} has {len(cands) + 1} cofaces")
    (new,) = cands
    return _key(face + (new,))


def tetrahedra_near(vertices) -> set:
    out = set()
    for v in vertices:
        for w in neighbours(v):
            out.update(tetrahedra_at_edge(v, w))
    return out


def vertices_in_box(lo: int, hi: int) -> list:
    """Vertices with every doubled coordinate in [lo, hi)."""
    odd = [x for x in range(lo, hi) if x % 2]
    return [p for p in itertools.product(odd, repeat=3) if line_through(p) is not None]


def six_volume(t) -> int:
    """Six times the volume, in doubled units."""
    a, b, c, d = t
    return abs(dot(sub(b, a), cross(sub(c, a), sub(d, a))))


def tetrahedron_signature(t) -> tuple:
    """Sorted multiset of edge kinds."""
    return tuple(sorted(edge_kind(x, y) for x, y in itertools.combinations(t, 2)))


# ---------------------------------------------------------------------------
# blue edges and their dihedral sectors
# ---------------------------------------------------------------------------

def blue_edge_at(midpoint):
    """Endpoints (red first) of the blue edge with the given even midpoint."""
    line = line_through(tuple(midpoint))
    if line is None or any(x % 2 for x in midpoint):
        raise ValueError(f"{midpoint} is not a blue-edge midpoint")
    d = line.direction
    a = tuple(m + x for m, x in zip(midpoint, d))
    b = tuple(m - x for m, x in zip(midpoint, d))
    if not (is_vertex(a) and is_vertex(b)):
        raise ValueError(f"{midpoint} is not a blue-edge midpoint")
    return (a, b) if vertex_colour(a) == RED else (b, a)


def sector_vector(edge, tet) -> tuple:
    """Smallest integer vector pointing from the edge midpoint into ``tet``.

    It is the component, orthogonal to the edge, of the vector from the
    midpoint to the midpoint of the opposite edge.
    """
    a, b = edge
    c, d = [v for v in tet if v not in edge]
    s = tuple(c[i] + d[i] - a[i] - b[i] for i in range(3))
    u = sub(b, a)
    uu = dot(u, u)
    proj = tuple(uu * s[i] - dot(s, u) * u[i] for i in range(3))
    g = math.gcd(*proj)
    return tuple(x // g for x in proj)


def sectors_around(edge) -> list:
    """Tetrahedra at a blue edge in cyclic order (each sharing a face with the next)."""
    a, b = edge
    tets = list(tetrahedra_at_edge(a, b))
    order = [tets[0]]
    while len(order) < len(tets):
        cur = order[-1]
        for t in tets:
            if t not in order and len(set(t) & set(cur)) == 3:
                if len(order) == 1 or t != order[-2]:
                    order.append(t)
                    break
        else:
            raise AssertionError("tetrahedra around the edge do not form a cycle")
    return order


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------

class Triangulation:
    """Convenience wrapper bundling the local queries and global censuses."""

    neighbours = staticmethod(neighbours)
    edge_kind = staticmethod(edge_kind)
    tetrahedra_at_edge = staticmethod(tetrahedra_at_edge)
    other_tetrahedron = staticmethod(other_tetrahedron)
    colour = staticmethod(vertex_colour)

    @staticmethod
    def neighbour_offsets(v) -> dict:
        """Offsets (original units times two) grouped by edge kind."""
        out = {}
        for w, kind in neighbours(v).items():
            out.setdefault(kind, []).append(sub(w, v))
        return {k: sorted(vs) for k, vs in out.items()}

    @staticmethod
    def edge_valences(box: int = 8) -> Counter:
        """Counter of (edge kind, number of tetrahedra) over edges near the origin."""
        out = Counter()
        for v in vertices_in_box(-box, box):
            for w, kind in neighbours(v).items():
                if v < w:
                    out[(kind, len(tetrahedra_at_edge(v, w)))] += 1
        return out

    @staticmethod
    def tetrahedra_in_domain() -> Counter:
        """Tetrahedra with 4*centroid in [0,32)^3, i.e. two copies of R^3/H.

        Keyed by (edge-kind signature, six times the doubled volume).
        """
        verts = vertices_in_box(-6, 14)
        out = Counter()
        for t in tetrahedra_near(verts):
            c = [sum(v[i] for v in t) for i in range(3)]
            if all(0 <= x < 32 for x in c):
                out[(tetrahedron_signature(t), six_volume(t))] += 1
        return out


def network_girth(colour: str = RED, radius: int = 12, roots: int = 4) -> int:
    """Length of the shortest cycle in the red (or green) graph.

    Breadth-first search from a few vertices of the given colour, restricted
    to the ball of the given radius (original units).  Raises if the ball is
    too small to certify the answer.
    """
    r2 = (2 * radius) ** 2
    starts = [v for v in vertices_in_box(-3, 4) if vertex_colour(v) == colour][:roots]
    best = None
    for root in starts:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        girth = None
        hit_boundary = None
        while queue:
            u = queue.popleft()
            if girth is not None and 2 * dist[u] + 1 > girth:
                break
            for w, kind in neighbours(u).items():
                if kind != colour:
                    continue
                if dot(w, w) > r2:
                    hit_boundary = dist[u] if hit_boundary is None else min(hit_boundary, dist[u])
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    girth = cyc if girth is None else min(girth, cyc)
        if girth is None:
            raise ValueError("no cycle found inside the ball; enlarge the radius")
        if hit_boundary is not None and 2 * hit_boundary + 1 < girth:
            raise ValueError("ball too small to certify the girth")
        best = girth if best is None else min(best, girth)
    return best
