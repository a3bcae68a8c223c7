from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pafiber.exact_algebra import CyclotomicInt, char_poly, det, matmul
from pafiber.lattice_torus import (A4_BASIS, EXPECTED_GRAM, EXPECTED_GRAM_T, EXPECTED_GRAM_T_PRIME, EXPECTED_P_T,
                                   GRAM, PHI, LISTED_MONODROMY, PSI, R, RHO, S, SIGMA, T_BASIS, T_PRIME_BASIS,
                                   TAU, TorusIsometry, Z, a4_census, cycle_notation, eigenvector_residuals,
                                   fixed_points, gram_matrix, lattice_certificates, lattice_pairing,
                                   orbifold_order, point_permutation, r_fixed_points_formula, reduce_point,
                                   restriction_to_t, t_coordinates, verify_d10)

cyclos = st.builds(lambda *c: CyclotomicInt(c), *[st.integers(-4, 4)] * 4)


def test_gram_matrices():
    assert GRAM == EXPECTED_GRAM
    assert gram_matrix(T_BASIS) == EXPECTED_GRAM_T
    assert gram_matrix(T_PRIME_BASIS) == EXPECTED_GRAM_T_PRIME


def test_unit_pairing():
    assert lattice_pairing(Z(0), Z(0)) == 2


@given(cyclos, cyclos)
def test_pairing_is_symmetric_and_real_part_of_product(x, y):
    assert lattice_pairing(x, y) == lattice_pairing(y, x)
    direct = sum((x.galois(k) * y.galois(k).conjugate()).to_complex().real for k in (1, 2))
    assert float(lattice_pairing(x, y)) == pytest.approx(direct, abs=1e-9)


@given(cyclos)
def test_rotation_preserves_pairing(x):
    assert lattice_pairing(x * Z(1), x * Z(1)) == lattice_pairing(x, x)


def test_d10_relations():
    assert verify_d10().ok
    assert (R ** 5).is_identity() and (S ** 2).is_identity()
    assert (S @ R @ S @ R).is_identity()


def test_d10_detects_wrong_generator():
    assert not verify_d10(R, R).ok


def test_fixed_points_of_r():
    pts = fixed_points(R)
    assert len(pts) == 5
    assert sorted(t_coordinates(p) for p in pts) == sorted(EXPECTED_P_T)
    assert pts == set(r_fixed_points_formula())


def test_phi_permutes_fixed_points():
    perm = point_permutation(PHI, r_fixed_points_formula())
    assert cycle_notation(perm) == "(2453)"


def test_monodromy_matrix():
    assert PHI.linear == LISTED_MONODROMY
    assert char_poly(PHI.linear) == (1, -2, -1, 2, 1)          # (x^2 - x - 1)^2
    assert restriction_to_t(PHI) == ((1, 1), (1, 0))
    assert all(not any(r) for r in eigenvector_residuals(PHI.linear))
    assert det(PHI.linear) == 1


def test_symmetry_orders():
    assert [orbifold_order(g) for g in (RHO, SIGMA, TAU, PSI)] == [5, 2, 4, 2]
    assert orbifold_order(PHI) is None


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=10), min_size=4, max_size=4))
def test_isometries_commute_with_reduction(p):
    for g in (R, S, PHI):
        assert g(reduce_point(p)) == g(p)


def test_composition_is_function_composition():
    p = (Fraction(1, 3), Fraction(2, 5), 0, Fraction(1, 7))
    assert (R @ S)(p) == R(S(p))
    assert TorusIsometry(matmul(R.linear, R.linear))(p) == R(R(p))


def test_a4_census():
    assert a4_census(A4_BASIS) == (2, 2)
    assert a4_census() == (10, 10)


def test_a4_census_offset_invariance():
    assert a4_census(offset=(1, 0, 0, 0, -1)) == (10, 10)


def test_lattice_suite():
    certs = lattice_certificates()
    assert all(c.ok for c in certs), [c.claim_id for c in certs if not c.ok]
