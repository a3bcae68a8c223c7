"""Certificates for the cell complexes, grouped by topic."""
from __future__ import annotations

from ..certificates import check, timed
from .complex import CellComplex
from .delta import (build_delta, cutting_hyperplanes, display_pairing, geometric_pairing,
                    geometric_simplices, normalized_volume, straddling, unusable_primed_plus)
from .intersection import h2_certificates, intersection_suite
from .polytopes import build_pi_complex, m3, m5
from .spine import phi_star_abelian_check, spine_certificates
from .symmetries import verify_symmetries


def build_pi(space: str = "fiber") -> CellComplex:
    return build_pi_complex({"fiber": 3, "orbifold": 1}[space])[0]


def delta_homology(space: str = "fiber", closed: bool = True) -> list:
    """Homology of the closed identification space, or of the compact manifold
    (ideal vertices removed) via duality."""
    cx = build_delta(space)
    return cx.homology() if closed else cx.relative_cohomology_as_homology(4)


def _t(a, *labels):
    return f"T{m3(a)}^{''.join(map(str, sorted(m5(x) for x in labels)))}"


def _e(i, j):
    return "e" + "".join(map(str, sorted((m5(i), m5(j)))))


def pi_boundary_formulas() -> dict:
    """Faces of every stratum as listed in closed form."""
    out = {}
    for i in range(1, 6):
        for j in range(i + 1, 6):
            out[_e(i, j)] = {f"P{i}", f"P{j}"}
        out[f"Q{i}"] = {_e(i + 1, i + 2), _e(i + 2, i + 4), _e(i + 4, i + 3), _e(i + 3, i + 1)}
    trip = [(i, j, k) for i in range(1, 6) for j in range(i + 1, 6) for k in range(j + 1, 6)]
    for a in range(1, 4):
        for i, j, k in trip:
            out[_t(a, i, j, k)] = {_e(i, j), _e(j, k), _e(k, i)}
        for m in range(1, 6):
            i, j, k, l = (x for x in range(1, 6) if x != m)
            out[_t(a, i, j, k, l)] = {_t(a, i, j, k), _t(a, j, k, l), _t(a, k, l, i), _t(a, l, i, j)}
        for i in range(1, 6):
            out[f"Pyr{a}^{i}"] = {f"Q{i}", _t(a + 1, i, i + 1, i + 2), _t(a - 1, i, i + 2, i + 4),
                                  _t(a + 1, i, i + 4, i + 3), _t(a - 1, i, i + 3, i + 1)}
        tets = {_t(a, *(x for x in range(1, 6) if x != m)) for m in range(1, 6)}
        out[f"S{a}"] = set(tets)
        out[f"R{a}"] = tets | {f"Pyr{m3(b)}^{i}" for b in (a + 1, a - 1) for i in range(1, 6)}
    return out


def pi_certificates() -> list:
    cx, _ = build_pi_complex(3)
    orb, _ = build_pi_complex(1)
    certs = [check("pi.census", cx.census() == (5, 10, 35, 30, 6) and cx.euler(skip_vertices=True) == 1
                   and cx.euler() == 6, "strata of the tessellation of the fiber",
                   census=list(cx.census()), chi_open=cx.euler(skip_vertices=True), chi_closed=cx.euler(),
                   orbifold_census=list(orb.census()))]
    want = pi_boundary_formulas()
    bad = sorted(n for n in cx.dims if cx.dims[n] > 0 and set(cx.faces(n)) != want.get(n))
    certs.append(check("pi.boundaries", not bad and len(want) == sum(cx.census()) - 5,
                       "boundary of every stratum", mismatched=bad[:10]))
    return certs


def delta_certificates() -> list:
    certs = []
    for variant in ("delta", "delta'"):
        fib = build_delta("fiber", variant)
        orb = build_delta("orbifold", variant)
        certs.append(check(f"{variant}.census",
                           fib.census() == (5, 15, 70, 90, 36) and fib.euler(skip_vertices=True) == 1
                           and len(orb.cells(4)) == 12,
                           "ideal triangulation of the fiber", census=list(fib.census()),
                           chi_open=fib.euler(skip_vertices=True), orbifold_census=list(orb.census())))
        primed = variant != "delta"
        simp = geometric_simplices(1, primed)
        r_pieces = [vs for piece, vs in simp.values() if piece[0] == "R"]
        vols = sorted(normalized_volume(vs) for vs in r_pieces)
        cut = {n: straddling(vs, cutting_hyperplanes(primed)) for n, (_, vs) in simp.items()}
        cut = {n: v for n, v in cut.items() if v}
        certs.append(check(f"{variant}.subdivision", vols == [1] * 11 and not cut,
                           "eleven unit simplices tile R without crossing the cutting hyperplanes",
                           volumes=vols, straddling=cut))
    geo = geometric_pairing(3)
    far = display_pairing(3, shift_on_far=True)
    near = display_pairing(3)
    diff = sum(1 for k in geo if near[k] != geo[k])
    certs.append(check("delta.pairing", geo == far, "facet pairing read from coordinates",
                       matches_closed_formula=geo == far, facets_differing_if_shift_on_near=diff))
    bad_list = {i: straddling(unusable_primed_plus(i), cutting_hyperplanes(True)) for i in range(1, 6)}
    certs.append(check("delta'.alternative_list",
                       all(bad_list.values()), "a side-simplex list that crosses the cuts is rejected",
                       straddled=bad_list))
    return certs


def homology_certificates() -> list:
    closed = delta_homology("fiber", True)
    open_ = delta_homology("fiber", False)
    pi_h = build_pi("fiber").relative_cohomology_as_homology(4)
    want = [(1, []), (0, [4, 4, 4, 4]), (4, []), (4, []), (0, [])]
    return [check("homology.fiber", open_ == want and pi_h == want,
                  "H_* of the fiber from two complexes", from_delta=open_, from_tessellation=pi_h,
                  closed=closed)]


def complexes_certificates() -> list:
    groups = [pi_certificates, delta_certificates, homology_certificates, verify_symmetries,
              spine_certificates, phi_star_abelian_check, intersection_suite, h2_certificates]
    out = []
    for g in groups:
        with timed() as t:
            certs = g()
        out.extend(t.stamp(certs))
    return out
