"""Face pairings of the ideal hyperbolic cross-polytope: cycles, angles, and
the mapping torus assembled from three copies."""
from ..certificates import check, timed
from .crosspolytope import (ALL_FACES, ALL_FACETS, CycleReport, Facet, GluingError, PairingRow, ThreeFace,
                            angle_certificate, cycle_decomposition, display_check, induced_face_map,
                            load_table, pairing_map, parse_table)
from .embedding import (display_certificate, embed_triangulations, mapping_torus_cross_check,
                        tau_instead_certificate)


def table1_certificates() -> list:
    rows = load_table("table1")
    rep = cycle_decomposition(rows)
    cone = {f for _, f in rep.cone_faces()}
    vertices = [v for f in cone for v in f.vertices]
    each_twice = all(vertices.count(v) == 2 for v in set(vertices)) and len(set(vertices)) == 10
    missing = display_check(rows)
    return [
        check("table1.cycles", rep.lengths == {3: 25, 1: 5} and not missing,
              "80 three-faces in 25 cycles of length 3 and 5 fixed faces", lengths=rep.lengths,
              listed_arrows_not_realized=missing, cone_faces=sorted(str(f) for f in cone),
              cone_vertices_each_on_two_faces=each_twice),
        angle_certificate(rep, "table1.angles"),
    ]


def table4_certificates() -> list:
    rep = cycle_decomposition(load_table("table4"))
    return [
        check("table4.cycles", rep.lengths == {3: 80} and rep.copies == 3,
              "three copies: every cycle of 3-faces has length 3", lengths=rep.lengths),
        angle_certificate(rep, "table4.angles"),
    ]


def gluing_certificates(only_table4: bool = False) -> list:
    groups = [table4_certificates] if only_table4 else [
        table1_certificates, table4_certificates, embed_triangulations, display_certificate,
        mapping_torus_cross_check, tau_instead_certificate]
    out = []
    for g in groups:
        with timed() as t:
            res = g()
        res = res if isinstance(res, list) else [res]
        out.extend(t.stamp(res))
    return out


__all__ = [
    "ALL_FACES", "ALL_FACETS", "CycleReport", "Facet", "GluingError", "PairingRow", "ThreeFace",
    "angle_certificate", "cycle_decomposition", "display_certificate", "embed_triangulations",
    "gluing_certificates", "induced_face_map", "load_table", "mapping_torus_cross_check", "pairing_map",
    "parse_table", "table1_certificates", "table4_certificates", "tau_instead_certificate",
]
