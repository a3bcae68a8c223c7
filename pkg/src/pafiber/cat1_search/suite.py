"""Certificates for the catalog and the exhaustive string search."""
from __future__ import annotations

from collections import Counter

from ..certificates import INFO, Certificate, check
from ..chord_geometry import REFERENCE_CHORDS
from ..flat.lines import blue_lines_in_ball, stabilizer
from .catalog import orbit_representatives, template_catalog
from .relaxation import string_length_bound
from .search import MAX_BUDGET, return_length_table, search


def catalog_certificates() -> list:
    cat = template_catalog()
    stab = stabilizer()
    norms = {tag: sum(x * x for x in ch.displacement) for tag, ch in REFERENCE_CHORDS.items()}
    norm_ok = all(sum(x * x for x in c.displacement) == 4 * norms[c.reference] for c in cat)
    c_ref = REFERENCE_CHORDS["c"]
    lines = blue_lines_in_ball(4)
    dmin = min(a.distance_sq(b) for i, a in enumerate(lines) for b in lines[i + 1:])
    return [
        check("catalog.stabilizer", len(stab) == 6, "symmetries fixing the reference edge",
              order=len(stab)),
        check("catalog.size", len(cat) == 42 and len(orbit_representatives()) == 7,
              "stabilizer orbits of the eight chord types",
              entries=len(cat), orbits=len(orbit_representatives()),
              merged=sorted("".join(sorted(c.tags)) for c in cat if len(c.tags) > 1)),
        check("catalog.reference_c", c_ref.displacement == (2, 0, 0)
              and c_ref.start_sector == (2, -1, -1) and c_ref.end_sector == (-2, 1, -1),
              "reference (c) chord data", displacement=c_ref.displacement),
        check("catalog.norms", norm_ok, "displacements keep the reference squared norms",
              squared_norms=norms),
        check("lines.min_distance", dmin == 2, "distinct blue lines are at least sqrt 2 apart",
              min_distance_sq=str(dmin), lines_checked=len(lines)),
    ]


def search_certificates(budget: int = MAX_BUDGET, workers: int = 1, bound_grid: int = 24,
                        prune: str = "table", result=None) -> list:
    """Certificates for one search run; ``result`` reuses a finished run."""
    cert = result if result is not None else search(budget, prune=prune, workers=workers)
    summary = cert.summary()
    summary.pop("violations")
    summary["return_table_size"] = len(return_length_table(budget))
    summary["total_distribution"] = dict(sorted(Counter(s[4] for s in cert.closed_admissible_strings).items()))
    out = [Certificate("search.enumeration", INFO, "exhaustive enumeration of closed admissible strings",
                       summary)]
    if cert.certified:
        out.append(check("search.no_short_string", True,
                         "no admissible string is shorter than 2 pi", budget=budget,
                         closed=len(cert.closed_admissible_strings)))
        return out
    cat = template_catalog()
    shapes = Counter((k, base, b) for _, k, base, b, _ in cert.violations)
    bounds = [string_length_bound(ids, grid_n=bound_grid) for ids, *_ in cert.violations]
    examples = [{"ids": list(ids), "types": "".join(cat[i].tag for i in ids), "base": base,
                 "bonus": b, "continuous_bound_tenths": round(bd, 6)}
                for (ids, k, base, b, _), bd in list(zip(cert.violations, bounds))[:5]]
    out.append(check("search.no_short_string", False,
                     "no admissible string is shorter than 2 pi",
                     budget=budget, violations=len(cert.violations),
                     by_length_base_bonus={f"{k},{base},{b}": n for (k, base, b), n in sorted(shapes.items())},
                     min_total=min(v[4] for v in cert.violations),
                     min_continuous_bound_tenths=round(min(bounds), 6),
                     examples=examples))
    return out
