import pytest
from hypothesis import given, strategies as st

from pafiber.cell_complexes import A, Q, intersection_suite
from pafiber.cell_complexes.intersection import (DECK_STAR, PSI_STAR, RHO_STAR, SIGMA_STAR, TAU_STAR,
                                                 congruent, descartes_signature, dual_basis_matrix,
                                                 h2_action, h2_certificates, is_even, surface_cycles)
from pafiber.cell_complexes.symmetries import PHI_DECK, RHO, SIGMA, TAU
from pafiber.exact_algebra import as_matrix, char_poly, det, identity, matmul, matneg, matpow, transpose

import numpy as np


def test_form_invariants():
    assert det(Q) == 16 and is_even(Q) and descartes_signature(Q) == 0


def test_monodromy_preserves_form():
    assert congruent(A, Q) == Q
    assert det(A) == 1
    assert char_poly(A) == (1, 0, -6, 0, 1)


def test_relations():
    assert RHO_STAR == identity(4) and SIGMA_STAR == matneg(identity(4))
    assert matpow(TAU_STAR, 2) == matneg(identity(4))
    assert matpow(PSI_STAR, 2) == DECK_STAR
    assert matmul(TAU_STAR, PSI_STAR) == A
    assert matpow(TAU_STAR, 3) != matneg(identity(4))


@pytest.mark.parametrize("m, sign", [(DECK_STAR, 1), (A, 1), (TAU_STAR, -1), (PSI_STAR, -1)])
def test_orientation_signs(m, sign):
    assert congruent(m, Q) == (Q if sign > 0 else matneg(Q))


sym = st.lists(st.integers(-4, 4), min_size=10, max_size=10).map(
    lambda x: as_matrix([[x[0], x[1], x[2], x[3]], [x[1], x[4], x[5], x[6]],
                         [x[2], x[5], x[7], x[8]], [x[3], x[6], x[8], x[9]]]))


@given(sym)
def test_descartes_signature_matches_numpy(m):
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    if np.min(np.abs(ev)) > 1e-6:
        assert descartes_signature(m) == int(np.sum(ev > 0) - np.sum(ev < 0))


def test_suite_passes():
    assert all(c.ok for c in intersection_suite())


def test_flipped_form_fails():
    bad = [list(r) for r in Q]
    bad[0][3] = bad[3][0] = -Q[0][3]                 # flip one symmetric pair
    certs = {c.claim_id: c for c in intersection_suite(as_matrix(bad))}
    assert certs["intersection.monodromy"].status == "FAIL"
    assert certs["intersection.surface_table"].status == "FAIL"


def test_negated_form_still_gives_signature_zero_but_breaks_table():
    certs = {c.claim_id: c for c in intersection_suite(matneg(Q))}
    assert certs["intersection.surface_table"].status == "FAIL"


def test_pants_basis_is_dual():
    assert dual_basis_matrix() == identity(4)


def test_h2_from_spine():
    assert len(surface_cycles()) == 6
    assert h2_action(PHI_DECK) == DECK_STAR
    assert h2_action(TAU) == TAU_STAR
    assert h2_action(RHO) == RHO_STAR
    assert h2_action(SIGMA) == SIGMA_STAR
    assert all(c.ok for c in h2_certificates())
