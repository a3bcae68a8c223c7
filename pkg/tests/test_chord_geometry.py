import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pafiber.chord_geometry import (CHORD_COEFFICIENTS, CHORD_MINIMA, LEMMA_BOUNDS, SIGN_CLAIMS, TAGS,
                                    ConstrainedObjective, SphericalPoint, chord_length, chord_objective,
                                    lemma_minimum, minimize, point_line_distance, sign_check, sphere_distance)

TENTH = math.pi / 10
angles = st.floats(0, math.pi / 2)
phases = st.floats(-math.pi, math.pi)
points = st.builds(SphericalPoint, phases, phases, angles)


@given(points)
def test_points_are_unit(p):
    assert np.linalg.norm(p.vector()) == pytest.approx(1.0)


@given(points, points, points)
def test_triangle_inequality(p, q, r):
    assert sphere_distance(p, r) <= sphere_distance(p, q) + sphere_distance(q, r) + 1e-9


@pytest.mark.parametrize("tag", TAGS)
@given(theta=angles, phi=angles)
def test_chord_length_is_distance_between_arc_points(tag, theta, phi):
    a, b = CHORD_COEFFICIENTS[tag]
    kz, kw = (round(math.acos(x) * 5 / math.pi) for x in (a, b))
    p = SphericalPoint.on_arc(0, 0, theta)
    q = SphericalPoint.on_arc(kz, kw, phi)
    assert float(chord_length(tag, theta, phi, check=False)) == pytest.approx(sphere_distance(p, q), abs=1e-9)


@given(points)
def test_distance_to_circle_through_point_is_zero(p):
    if 1e-3 < p.theta < math.pi / 2 - 1e-3:
        z0 = complex(math.cos(p.alpha), math.sin(p.alpha))
        w0 = complex(math.cos(p.beta), math.sin(p.beta))
        assert point_line_distance(p, z0, w0) == pytest.approx(0.0, abs=1e-6)


def test_unknown_chord_type():
    with pytest.raises(ValueError):
        chord_length("z", 0.1, 0.1)


@pytest.mark.parametrize("tag", TAGS)
def test_chord_minima(tag):
    val, _ = minimize(chord_objective(tag), 64)
    assert val == pytest.approx(CHORD_MINIMA[tag] * TENTH, abs=1e-6)


@pytest.mark.parametrize("name", sorted(LEMMA_BOUNDS))
def test_lemma_bounds(name):
    assert lemma_minimum(name, 48) == pytest.approx(LEMMA_BOUNDS[name] * TENTH, abs=1e-6)


def test_minimize_quadratic():
    obj = ConstrainedObjective("q", lambda x, y: (x - 0.3) ** 2 + (y - 1.1) ** 2, 2)
    val, x = minimize(obj, 16)
    assert val < 1e-12 and x == pytest.approx((0.3, 1.1), abs=1e-6)


def test_minimize_respects_constraints():
    obj = ConstrainedObjective("c", lambda x, y: x + y, 2, [lambda x, y: (x - 0.5,)])
    val, x = minimize(obj, 32)
    assert x[0] >= 0.5 - 1e-9 and val == pytest.approx(0.5, abs=1e-6)


@pytest.mark.parametrize("claim", sorted(SIGN_CLAIMS))
def test_derivative_signs(claim):
    assert sign_check(claim, 128).passed


def test_wrong_sign_is_caught():
    tag, wrt, sign = SIGN_CLAIMS["c.dtheta"]
    assert not sign_check("c.dtheta", 64, expected=-sign).passed
