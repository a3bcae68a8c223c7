import itertools

import pytest
from hypothesis import given, strategies as st

from pafiber.hyperbolic_gluing import (ALL_FACES, ALL_FACETS, CycleReport, Facet, GluingError, PairingRow,
                                       ThreeFace, angle_certificate, cycle_decomposition, embed_triangulations,
                                       gluing_certificates, induced_face_map, load_table,
                                       mapping_torus_cross_check, parse_table, tau_instead_certificate)
from pafiber.hyperbolic_gluing.crosspolytope import (Cycle, display_check, holonomy_on_face, perm_from_text,
                                                     perm_inverse, perm_text)
from pafiber.hyperbolic_gluing.embedding import (DISPLAYED_OVERLAP, DISPLAYED_VERTEX_MAP, canonical_rows,
                                                 conjugate, display_comparison, displayed_derivation,
                                                 embedded_facets, geometric_derivation, vertex_image)
from pafiber.cell_complexes.polytopes import R_VERTICES

TABLE1 = load_table("table1")
TABLE4 = load_table("table4")
perms = st.permutations([1, 2, 3, 4, 5]).map(tuple)


def F(*s):
    return ThreeFace(s) if 0 in s else Facet(s)


def test_counts():
    assert len(ALL_FACETS) == 32 and len(ALL_FACES) == 80
    assert all(sum(f.lies_on(x) for x in ALL_FACETS) == 2 for f in ALL_FACES)
    assert all(len(x.faces()) == 5 for x in ALL_FACETS)


def test_permutation_text():
    assert perm_from_text("(2453)") == (1, 4, 2, 5, 3)
    assert perm_text(perm_from_text("(34)(25)")) == "(25)(34)"
    assert perm_inverse(perm_from_text("(2453)")) == perm_from_text("(3542)")


def test_face_map_examples():
    row = TABLE1[0]
    assert induced_face_map(row, F(0, 1, 1, 1, 1)) == F(0, -1, -1, -1, -1)
    fixed = next(r for r in TABLE1 if r.source == F(1, 1, 1, -1, -1))
    assert induced_face_map(fixed, F(1, 0, 1, -1, -1)) == F(1, 0, 1, -1, -1)


def test_face_map_identity_row_transports_signs():
    row = PairingRow(F(1, 1, 1, 1, 1), (1, 2, 3, 4, 5), F(-1, 1, -1, 1, 1))
    assert induced_face_map(row, F(1, 0, 1, 1, 1)) == F(-1, 0, -1, 1, 1)


def test_face_map_rejects_foreign_face():
    with pytest.raises(ValueError):
        induced_face_map(TABLE1[0], F(0, -1, 1, 1, 1))


@given(st.sampled_from(TABLE4), st.integers(0, 4))
def test_face_map_lands_on_target_and_inverts(row, k):
    f = row.source.faces()[k]
    g = induced_face_map(row, f)
    assert g.lies_on(row.target)
    assert induced_face_map(row.inverse(), g) == f


def test_vertex_map_is_bijection():
    for row in TABLE4:
        vm = row.vertex_map()
        assert set(vm) == row.source.vertices and set(vm.values()) == row.target.vertices


def test_orbifold_cycles():
    rep = cycle_decomposition(TABLE1)
    assert rep.lengths == {3: 25, 1: 5}
    cone = {f for _, f in rep.cone_faces()}
    assert cone == {ThreeFace(tuple((1, 0, 1, -1, -1)[(i - k) % 5] for i in range(5))) for k in range(5)}
    assert sum(c.length for c in rep.cycles) == 80


def test_cone_faces_share_each_vertex_twice():
    cone = [f for _, f in cycle_decomposition(TABLE1).cone_faces()]
    verts = [v for f in cone for v in f.vertices]
    assert len(set(verts)) == 10 and all(verts.count(v) == 2 for v in set(verts))


def test_manifold_cycles():
    rep = cycle_decomposition(TABLE4)
    assert rep.lengths == {3: 80} and rep.copies == 3
    assert sum(c.length for c in rep.cycles) == 240


def test_every_face_in_one_cycle():
    rep = cycle_decomposition(TABLE4)
    members = [m for c in rep.cycles for m in c.faces]
    assert len(members) == len(set(members)) == 240


def test_holonomy_is_trivial():
    for rep in (cycle_decomposition(TABLE1), cycle_decomposition(TABLE4)):
        assert all(all(i == j for i, j in holonomy_on_face(c).items()) for c in rep.cycles)


def test_listed_cycle_arrows_are_realized():
    assert display_check(TABLE1) == []


def test_missing_row_is_structural_error():
    with pytest.raises(GluingError):
        cycle_decomposition(TABLE1[1:])


def test_double_pairing_is_structural_error():
    with pytest.raises(GluingError):
        cycle_decomposition(TABLE1 + [TABLE1[0]])


def test_angle_certificates():
    orb = angle_certificate(cycle_decomposition(TABLE1))
    man = angle_certificate(cycle_decomposition(TABLE4))
    assert orb.status == man.status == "PASS"
    assert len(orb.witness["cone_faces"]) == 5 and man.witness["cone_faces"] == []
    assert orb.witness["cone_angle_in_pi"] == "2/3"


def test_length_two_cycle_fails():
    f = F(0, 1, 1, 1, 1)
    fake = CycleReport([Cycle([(1, f), (1, f)], [TABLE1[0], TABLE1[0]], (1, 2, 3, 4, 5))], 1)
    assert angle_certificate(fake).status == "FAIL"


@given(perms)
def test_relabelling_preserves_cycle_structure(p):
    assert cycle_decomposition(conjugate(TABLE4, p)).lengths == {3: 80}


def test_table_parser():
    rows = parse_table("+++++ (34)(25) ----- a-1\n# comment\n")
    assert [(r.source_copy, r.target_copy) for r in rows] == [(1, 3), (2, 1), (3, 2)]
    rows = parse_table("+-++- (2453) +---- 1-a")
    assert [(r.source_copy, r.target_copy) for r in rows] == [(1, 3), (2, 2), (3, 1)]
    with pytest.raises(ValueError):
        parse_table("+++++ id")


def test_listed_vertex_map():
    assert all(vertex_image(v) == DISPLAYED_VERTEX_MAP[v] for v in R_VERTICES)
    assert vertex_image((1, 1, 0, 0, 0)) == (4, -1)


def test_embeddings():
    cert = embed_triangulations()
    assert cert.status == "PASS"
    assert cert.witness["facet_partition"] == [11, 11, 10]
    assert embedded_facets(False)["S-"] == F(1, 1, 1, 1, 1)
    assert embedded_facets(True)["S-"] == F(-1, -1, -1, -1, -1)


def test_overlap_of_embeddings_is_cone_locus():
    cone = {f for _, f in cycle_decomposition(TABLE1).cone_faces()}
    assert set(embed_triangulations().witness["overlap"]) == {str(f) for f in cone}
    assert {ThreeFace(tuple(-x for x in f.signs)) for f in cone} == DISPLAYED_OVERLAP


def test_display_comparison():
    cmp = display_comparison()
    assert all(cmp["negated_exchanged"].values())
    lit = cmp["as_listed"]
    assert lit["top:S-"] and lit["top:S-^i"] and lit["bottom:S-"] and lit["bottom:S-^i"]
    assert not lit["top:S+^i"] and not lit["vertical"]


def test_mapping_torus():
    assert canonical_rows(displayed_derivation()) == canonical_rows(TABLE4)
    cert = mapping_torus_cross_check()
    assert cert.status == "PASS"
    assert cert.witness["top_facet_rule"] == "F+++++^1 -(25)(34)-> F-----^3"


def test_vertical_row_reproduced():
    row = PairingRow(F(1, 1, 1, -1, -1), (1, 2, 3, 4, 5), F(1, -1, 1, -1, -1), 2, 1)
    assert row.canonical() in canonical_rows(displayed_derivation())


def test_geometric_derivation_is_isometric_not_equal():
    geo = geometric_derivation()
    assert canonical_rows(geo) != canonical_rows(TABLE4)
    assert canonical_rows(conjugate(geo, perm_from_text("(2453)"))) == canonical_rows(TABLE4)


def test_tau_in_place_of_monodromy_fails():
    assert tau_instead_certificate().status == "PASS"
    assert tau_instead_certificate().witness["first_mismatch"] is not None


def test_suite_fast_and_green():
    certs = gluing_certificates()
    assert all(c.ok for c in certs)
    assert [c.claim_id for c in gluing_certificates(only_table4=True)] == ["table4.cycles", "table4.angles"]
