"""Self-consistency checks for the string search."""
from __future__ import annotations

from ..certificates import check
from ..flat.lines import Isometry3, build_group, lattice_vectors, stabilizer
from .catalog import E0_SECTORS, template_catalog
from .search import search
from .strings import evaluate, reverse_string, world_chords


def catalog_ids(chords):
    """Recover catalog ids from world chords starting at e0, or None."""
    cat = template_catalog()
    index = {(c.displacement, E0_SECTORS[c.start_sector], c.world_end_sector,
              c.world_end_orientation): c.id for c in cat}
    frame = Isometry3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    if chords[0].start != (0, 0, 0):
        return None
    out = []
    for ch in chords:
        inv = frame.inverse()
        key = (inv(ch.end), inv.vector(ch.start_sector), inv.vector(ch.end_sector), inv.vector(ch.end_orientation))
        cid = index.get(key)
        if cid is None:
            return None
        out.append(cid)
        frame = frame @ cat[cid].transfer
    return tuple(out)


def prune_agreement(budget: int = 13) -> dict:
    runs = {mode: search(budget, prune=mode, symmetry=False) for mode in ("table", "norm", "off")}
    sets = {mode: {s[0] for s in c.closed_admissible_strings} for mode, c in runs.items()}
    return {"counts": {m: len(s) for m, s in sets.items()},
            "nodes": {m: c.nodes_explored for m, c in runs.items()},
            "agree": sets["table"] == sets["norm"] == sets["off"]}


def equivariance(budget: int = 13, translations: int = 2) -> dict:
    """Move every closed string by group elements and re-evaluate."""
    cert = search(budget, symmetry=False)
    found = {s[0] for s in cert.closed_admissible_strings}
    group = build_group().representatives
    hs = [h for h in lattice_vectors(4 * translations)]
    mismatches, stab_missing, checked = [], [], 0
    for ids, k, base, b, total in cert.closed_admissible_strings:
        chords = world_chords(ids)
        ref = evaluate(chords)
        for rep in group:
            for h in hs:
                g = Isometry3(rep.linear, tuple(x + y for x, y in zip(rep.translation, h)))
                moved = [c.moved(g) for c in chords]
                checked += 1
                if evaluate(moved) != ref:
                    mismatches.append((ids, str(g)))
        for s in stabilizer():
            back = catalog_ids([c.moved(s) for c in chords])
            if back is None or back not in found:
                stab_missing.append((ids, str(s)))
    return {"strings": len(found), "images_checked": checked,
            "mismatches": mismatches[:5], "stabilizer_images_missing": stab_missing[:5],
            "ok": not mismatches and not stab_missing}


def reversal(budget: int = 13) -> dict:
    cert = search(budget, symmetry=False)
    bad = []
    for ids, k, base, b, total in cert.closed_admissible_strings:
        rev = reverse_string(world_chords(ids))
        ok, rbase, rb = evaluate(rev)
        if not ok or rbase + rb != total:
            bad.append({"ids": list(ids), "reversed": [ok, rbase, rb], "total": total})
    return {"strings": len(cert.closed_admissible_strings), "failures": bad[:5], "ok": not bad}


def determinism(budget: int = 15) -> dict:
    a = search(budget, order="forward")
    b = search(budget, order="reverse")
    c = search(budget, workers=2)
    same = (a.closed_admissible_strings == b.closed_admissible_strings == c.closed_admissible_strings
            and a.violations == b.violations == c.violations)
    return {"ok": same, "strings": len(a.closed_admissible_strings)}


def consistency_certificates(budget: int = 13) -> list:
    pa = prune_agreement(budget)
    eq = equivariance(budget)
    rv = reversal(budget)
    dt = determinism()
    return [
        check("search.prune_agreement", pa["agree"], "pruned and unpruned searches agree", **pa),
        check("search.g_equivariance", eq["ok"], "strings are defined up to isometries of G", **eq),
        check("search.reversal", rv["ok"], "reversing a string preserves its length", **rv),
        check("search.determinism", dt["ok"], "traversal order and worker count do not matter", **dt),
    ]
