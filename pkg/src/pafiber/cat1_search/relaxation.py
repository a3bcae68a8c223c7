"""Continuous lower bound for the length of a realized string.

A chord of a given type, with endpoints at arclength ``t`` and ``u`` from the
red ends of its (reference) edges, develops to the S^3 points
``cos t r0 + sin t g0`` and ``cos u r1 + sin u g1``; its length is at least
their spherical distance.  Consecutive chords share the point on the common
edge, so a closed string gives a function of one parameter per junction whose
minimum bounds the length of every closed multichord realizing it.
"""
from __future__ import annotations

import math

import numpy as np

from ..chord_geometry import REFERENCE_CHORDS, develop_chord
from ..flat.lines import Isometry3
from ..flat.triangulation import blue_edge_at
from .catalog import template_catalog

HALF_PI = math.pi / 2


def _vertex_params(ids):
    """Per chord: (A, B, start vertex at parameter 0, end vertex at parameter 0)."""
    cat = template_catalog()
    frame = Isometry3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    out = []
    for i in ids:
        c = cat[i]
        ref_tag = c.reference
        A, B = develop_chord(ref_tag).coefficients
        ref = REFERENCE_CHORDS[ref_tag]
        red0 = blue_edge_at((0, 0, 0))[0]
        red1 = blue_edge_at(tuple(2 * x for x in ref.displacement))[0]
        g = frame @ c.symmetry
        out.append((A, B, g(red0), g(red1)))
        frame = frame @ c.transfer
    return out


def string_length_bound(ids, grid_n: int = 24, iterations: int = 60) -> float:
    """Minimum over junction positions of the summed developed chord lengths.

    Returned in units of pi/10.  Grid search over the junction parameters is
    replaced by coordinate descent from a coarse start, which is adequate
    for the smooth, low-dimensional cases this is used on.
    """
    data = _vertex_params(ids)
    k = len(data)
    # junction j is the start of chord j; record which end its parameter is measured from
    anchors = [data[j][2] for j in range(k)]

    def param_at(j, x, vertex):
        # x is measured from anchors[j]; convert to a parameter from ``vertex``
        return x[j] if vertex == anchors[j] else HALF_PI - x[j]

    def total(x):
        s = 0.0
        for j, (A, B, v0, v1) in enumerate(data):
            t = param_at(j, x, v0)
            u = param_at((j + 1) % k, x, v1)
            c = A * math.cos(t) * math.cos(u) + B * math.sin(t) * math.sin(u)
            s += math.acos(max(-1.0, min(1.0, c)))
        return s

    grid = (np.arange(grid_n) + 0.5) * HALF_PI / grid_n
    rng = np.random.default_rng(0)
    best_x, best = None, math.inf
    for _ in range(200):
        x = rng.choice(grid, size=k)
        v = total(x)
        if v < best:
            best, best_x = v, x.copy()
    for corner in range(min(2 ** k, 512)):
        x = np.array([0.0 if (corner >> j) & 1 else HALF_PI for j in range(k)])
        v = total(x)
        if v < best:
            best, best_x = v, x
    step = HALF_PI / 4
    x = best_x.copy()
    for _ in range(iterations):
        improved = False
        for j in range(k):
            for d in (step, -step):
                y = x.copy()
                y[j] = min(HALF_PI, max(0.0, y[j] + d))
                v = total(y)
                if v < best - 1e-12:
                    best, x, improved = v, y, True
        if not improved:
            step /= 2
    return best / (math.pi / 10)
