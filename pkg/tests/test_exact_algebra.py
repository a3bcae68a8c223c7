import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pafiber.exact_algebra import (AngleTenth, CyclotomicInt, GoldenNumber, algebra_certificates, as_matrix,
                                   cayley_menger_sq_volume, char_poly, cos_tenth_pi, det, identity,
                                   invariant_factors, matmul, poly_eval_matrix, rank, smith_normal_form,
                                   solve_integer_rows)

small = st.integers(-6, 6)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
goldens = st.builds(GoldenNumber, fracs, fracs)
cyclos = st.builds(lambda *c: CyclotomicInt(c), small, small, small, small)
ZETA = cmath.exp(2j * math.pi / 5)


def matrices(n, m=None):
    return st.lists(st.lists(small, min_size=m or n, max_size=m or n), min_size=n, max_size=n).map(as_matrix)


def test_golden_ratio_identity():
    g = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
    assert g * g == g + 1
    assert (g * g.conjugate()) == -1


@pytest.mark.parametrize("k", range(10))
def test_cos_tenth_pi_matches_float(k):
    assert float(cos_tenth_pi(k)) == pytest.approx(math.cos(k * math.pi / 5), abs=1e-12)


@given(goldens, goldens)
def test_golden_arithmetic_matches_float(x, y):
    assert float(x + y) == pytest.approx(float(x) + float(y), abs=1e-9)
    assert float(x * y) == pytest.approx(float(x) * float(y), abs=1e-9)
    assert (x < y) == (float(x) < float(y)) or abs(float(x) - float(y)) < 1e-12


@given(goldens.filter(bool))
def test_golden_inverse(x):
    assert x * x.inverse() == 1


@given(cyclos, cyclos)
def test_cyclotomic_product_matches_complex(x, y):
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9


def test_cyclotomic_relation():
    assert CyclotomicInt.from_powers([1, 1, 1, 1, 1]) == CyclotomicInt()
    assert abs(CyclotomicInt.zeta_power(3).to_complex() - ZETA ** 3) < 1e-12


@given(cyclos, st.sampled_from([1, 2, 3, 4]))
def test_galois_is_ring_map(x, k):
    assert (x * x).galois(k) == x.galois(k) * x.galois(k)


@given(matrices(3, 4))
def test_smith_form_is_a_factorization(m):
    d, u, v = smith_normal_form(m)
    assert matmul(u, m, v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(3)]
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == rank(m)


@given(matrices(3))
def test_determinant_matches_numpy(m):
    assert det(m) == round(np.linalg.det(np.array(m, dtype=float)))


@given(matrices(3))
def test_cayley_hamilton(m):
    assert poly_eval_matrix(char_poly(m), m) == as_matrix([[0] * 3] * 3)


@given(matrices(3, 4), st.lists(small, min_size=3, max_size=3))
def test_solve_integer_rows_finds_combinations(m, x):
    v = [sum(x[i] * m[i][j] for i in range(3)) for j in range(4)]
    sol = solve_integer_rows(m, v)
    assert sol is not None
    assert [sum(sol[i] * m[i][j] for i in range(3)) for j in range(4)] == v


def test_solve_integer_rows_rejects_fractional():
    assert solve_integer_rows(as_matrix([[2, 0], [0, 2]]), [1, 0]) is None


def test_invariant_factors_known():
    assert invariant_factors(((2, 4), (6, 8))) == [2, 4]
    assert invariant_factors(identity(3)) == [1, 1, 1]


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=4, max_size=4))
def test_cayley_menger_matches_triple_product(pts):
    p = np.array(pts, dtype=float)
    vol = abs(np.linalg.det(p[1:] - p[0])) / 6
    assert float(cayley_menger_sq_volume(pts)) == pytest.approx(vol * vol, abs=1e-6)


def test_angle_tenths():
    assert AngleTenth(4) + AngleTenth(16) == AngleTenth(20)
    assert AngleTenth(5).radians() == pytest.approx(math.pi / 2)


def test_algebra_certificates_pass():
    assert all(c.ok for c in algebra_certificates())
