import itertools

import pytest
from hypothesis import given, strategies as st

from pafiber.cell_complexes import (CellComplex, ComplexError, build_delta, build_pi, build_pi_complex,
                                    complexes_certificates, delta_homology, parse_incidence, verify_symmetries)
from pafiber.cell_complexes.delta import geometric_pairing, geometric_simplices, normalized_volume
from pafiber.cell_complexes.suite import delta_certificates, homology_certificates, pi_boundary_formulas
from pafiber.cell_complexes.symmetries import PHI_DECK, RHO, SIGMA, TAU, perm_order, pi_action


def torus():
    cx = CellComplex("torus")
    cx.add("v", 0)
    cx.add("a", 1, chain=[("v", 1), ("v", -1)])
    cx.add("b", 1, chain=[("v", 1), ("v", -1)])
    cx.add("T", 2, chain=[("a", 1), ("b", 1), ("a", -1), ("b", -1)])
    return cx.validate()


def projective_plane():
    cx = CellComplex("rp2")
    cx.add("v", 0)
    cx.add("a", 1, chain=[("v", 1), ("v", -1)])
    cx.add("D", 2, chain=[("a", 1), ("a", 1)])
    return cx.validate()


def test_small_complexes():
    assert torus().homology() == [(1, []), (2, []), (1, [])]
    assert projective_plane().homology() == [(1, []), (0, [2]), (0, [])]


def test_bad_boundary_is_rejected():
    cx = CellComplex("bad")
    cx.add("v", 0)
    cx.add("w", 0)
    cx.add("e", 1, chain=[("v", 1)])
    cx.add("f", 1, chain=[("v", 1), ("w", -1)])
    cx.add("D", 2, chain=[("e", 1), ("f", 1)])
    with pytest.raises(ComplexError):
        cx.validate()


def test_duplicate_cell_rejected():
    cx = CellComplex("dup")
    cx.add("v", 0)
    with pytest.raises(ComplexError):
        cx.add("v", 0)


def simplicial(facets):
    cx = CellComplex("random")
    faces = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(itertools.combinations(sorted(f), k))
    for s in sorted(faces, key=lambda s: (len(s), s)):
        chain = [(s[:i] + s[i + 1:], (-1) ** i) for i in range(len(s))] if len(s) > 1 else []
        cx.add(s, len(s) - 1, chain=chain)
    return cx


@given(st.lists(st.sets(st.integers(0, 5), min_size=1, max_size=4), min_size=1, max_size=6))
def test_random_simplicial_complex_euler(facets):
    cx = simplicial(facets).validate()
    h = cx.homology()
    assert sum((-1) ** d * r for d, (r, _) in enumerate(h)) == cx.euler()
    assert all(not t for _, t in h[:1])


@given(st.integers(2, 5))
def test_simplex_boundary_is_sphere(n):
    cx = simplicial([set(range(n + 1))])
    top = [c for c in cx.dims if cx.dims[c] == n]
    for c in top:
        del cx.dims[c], cx.boundary[c], cx.labels[c]
    h = cx.homology()
    assert [r for r, _ in h] == [1] + [0] * (n - 2) + [1]


def test_export_round_trip():
    cx = build_pi("fiber")
    parsed = parse_incidence(cx.export_incidence())
    assert len(parsed) == sum(cx.census())
    assert all(parsed[c][0] == cx.dims[c] and parsed[c][1] == [tuple(x) for x in cx.boundary[c]] for c in cx.dims)


def test_pi_census_and_euler():
    cx = build_pi("fiber")
    assert cx.census() == (5, 10, 35, 30, 6)
    assert cx.euler(skip_vertices=True) == 1
    assert build_pi("orbifold").census()[4] == 2


def test_pi_boundaries_match_closed_formulas():
    cx, _ = build_pi_complex(3)
    want = pi_boundary_formulas()
    assert all(set(cx.faces(n)) == want[n] for n in want)


@pytest.mark.parametrize("variant", ["delta", "delta'"])
def test_delta_census(variant):
    cx = build_delta("fiber", variant)
    assert cx.census() == (5, 15, 70, 90, 36)
    assert cx.euler(skip_vertices=True) == 1
    assert len(build_delta("orbifold", variant).cells(4)) == 12


@pytest.mark.parametrize("primed", [False, True])
def test_r_subdivision_has_unit_volumes(primed):
    r = [vs for piece, vs in geometric_simplices(1, primed).values() if piece[0] == "R"]
    assert sorted(normalized_volume(vs) for vs in r) == [1] * 11


@pytest.mark.parametrize("primed", [False, True])
def test_pairing_is_involution(primed):
    pairing = geometric_pairing(3, primed)
    assert all(pairing[(pairing[(x, j)], j)] == x for x, j in pairing)


def test_fiber_homology():
    want = [(1, []), (0, [4, 4, 4, 4]), (4, []), (4, []), (0, [])]
    assert delta_homology("fiber", closed=False) == want
    assert build_pi("fiber").relative_cohomology_as_homology(4) == want


def test_symmetry_orders():
    assert [perm_order(pi_action(g).cells) for g in (PHI_DECK, RHO, SIGMA, TAU)] == [3, 5, 2, 4]


def test_symmetry_suite_passes():
    assert all(c.ok for c in verify_symmetries())


def test_tau_cubed_is_not_sigma():
    rel = next(c for c in verify_symmetries(tau_power=3) if c.claim_id == "symmetries.relations")
    assert rel.status == "FAIL"
    assert rel.witness["tau_relation"] is False


def test_group_certificates_pass():
    for c in delta_certificates() + homology_certificates():
        assert c.ok, c.claim_id


def test_claim_ids_unique():
    ids = [c.claim_id for c in complexes_certificates()]
    assert len(ids) == len(set(ids))
