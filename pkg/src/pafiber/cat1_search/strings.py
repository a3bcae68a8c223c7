"""Strings of chords in world coordinates: admissibility and bonus length.

This module works with explicit vectors (midpoints, sector vectors and
orientation vectors, all in doubled coordinates) and never uses frames, so it
is independent of the table-driven search and serves as its cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from ..flat.lines import Isometry3, is_parallel, line_through, neg, on_same_blue_line
from .catalog import E0_SECTORS, REVERSED_TYPE, sector_relation, template_catalog


@dataclass(frozen=True)
class WorldChord:
    tags: frozenset
    base_length: int
    start: tuple          # midpoint of the edge where the chord leaves
    end: tuple            # midpoint of the edge where it arrives
    start_sector: tuple
    end_sector: tuple
    start_orientation: tuple   # shortening direction along the edge (a diagonal vector)
    end_orientation: tuple

    def is_type(self, letter):
        return letter in self.tags

    def moved(self, g: Isometry3) -> "WorldChord":
        return WorldChord(self.tags, self.base_length, g(self.start), g(self.end),
                          g.vector(self.start_sector), g.vector(self.end_sector),
                          g.vector(self.start_orientation), g.vector(self.end_orientation))

    def reversed(self) -> "WorldChord":
        return WorldChord(frozenset(REVERSED_TYPE[t] for t in self.tags), self.base_length,
                          self.end, self.start, self.end_sector, self.start_sector,
                          self.end_orientation, self.start_orientation)


def _toward_green():
    return (-1, -1, -1)   # e0 runs from red (1,1,1) to green (-1,-1,-1)


def world_chords(ids, frame: Isometry3 | None = None) -> list:
    """Place the catalog entries ``ids`` one after the other starting at e0."""
    cat = template_catalog()
    frame = frame or Isometry3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    out = []
    g = _toward_green()
    for i in ids:
        c = cat[i]
        nxt = frame @ c.transfer
        so = c.start_orientation
        out.append(WorldChord(
            c.tags, c.base_length, frame((0, 0, 0)), nxt((0, 0, 0)),
            frame.vector(E0_SECTORS[c.start_sector]), frame.vector(c.world_end_sector),
            frame.vector(g if so > 0 else neg(g)), frame.vector(c.world_end_orientation),
        ))
        frame = nxt
    return out


# ---------------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------------

def opposite_at(prev: WorldChord, nxt: WorldChord) -> bool:
    """Whether the two chords induce opposite directions on their shared edge."""
    return prev.end_orientation == neg(nxt.start_orientation)


def junction_reason(prev: WorldChord, nxt: WorldChord):
    """Reason code for a forbidden junction, or None."""
    if prev.end != nxt.start:
        return "not joined"
    rel = sector_relation(prev.end_sector, nxt.start_sector)
    if rel == "same":
        return "sector coincident"
    if rel == "adjacent":
        return "sector adjacent"
    if not prev.is_type("b") and not nxt.is_type("b") and not opposite_at(prev, nxt):
        return "orientation"
    return None


def sandwich_reason(before: WorldChord, mid: WorldChord, after: WorldChord):
    """A (b) chord between two non-(b) chords needs an opposite junction."""
    if mid.is_type("b") and not before.is_type("b") and not after.is_type("b"):
        if not (opposite_at(before, mid) or opposite_at(mid, after)):
            return "b-sandwich"
    return None


def closed_string_reason(chords) -> str | None:
    """None when the cyclic string is closed and admissible."""
    k = len(chords)
    if k < 2:
        return "too short"
    if chords[-1].end != chords[0].start:
        return "not closed"
    for i in range(k):
        r = junction_reason(chords[i], chords[(i + 1) % k])
        if r:
            return f"{r} at {i + 1}"
    for i in range(k):
        r = sandwich_reason(chords[i - 1], chords[i], chords[(i + 1) % k])
        if r:
            return f"{r} at {i}"
    return None


# ---------------------------------------------------------------------------
# bonus
# ---------------------------------------------------------------------------

TRIPLE_BBC = 4
TRIPLE_BFB = 2
PAIRS_ON_LINE = {("h", "c"): 4, ("c", "a"): 4, ("g", "b"): 3, ("b", "d"): 3, ("h", "d"): 1, ("g", "a"): 1}
PAIRS_OPPOSITE = (("b", "d"), ("g", "b"), ("c", "d"), ("g", "c"))


def _matches(chords, idx, pattern):
    return all(chords[i].is_type(p) for i, p in zip(idx, pattern))


def bonus(chords, trace: list | None = None) -> int:
    """Bonus length (tenths of pi) of a closed admissible string.

    Chord i runs from midpoint m_i to m_{i+1}; "opposite at i" refers to the
    edge m_{i+1} shared by chords i and i+1.  Rules are applied in order, each
    scanning the starting index cyclically from 0; a chord contributes to at
    most one bonus.
    """
    k = len(chords)
    if k < 2 or chords[-1].end != chords[0].start:
        raise ValueError("bonus is defined for closed strings")
    mids = [c.start for c in chords]
    opp = [opposite_at(chords[i], chords[(i + 1) % k]) for i in range(k)]
    used = [False] * k
    total = 0

    def take(idx, value, rule):
        nonlocal total
        for i in idx:
            used[i] = True
        total += value
        if trace is not None:
            trace.append((rule, tuple(idx), value))

    def free(idx):
        return len(set(idx)) == len(idx) and not any(used[i] for i in idx)

    if k >= 3:
        for i in range(k):
            idx = (i, (i + 1) % k, (i + 2) % k)
            if free(idx) and (_matches(chords, idx, "bbc") or _matches(chords, idx, "cbb")):
                if on_same_blue_line(mids[i], mids[(i + 3) % k]):
                    take(idx, TRIPLE_BBC, 1)
        for i in range(k):
            idx = (i, (i + 1) % k, (i + 2) % k)
            if free(idx) and _matches(chords, idx, "bfb") and opp[i] and opp[(i + 1) % k]:
                take(idx, TRIPLE_BFB, 2)
    pairs = [(i, (i + 1) % k) for i in range(k)]
    for i, j in pairs:
        if not free((i, j)):
            continue
        outer = on_same_blue_line(mids[i], mids[(j + 1) % k])
        for pat, value in PAIRS_ON_LINE.items():
            if _matches(chords, (i, j), pat) and outer:
                take((i, j), value, 3)
                break
    for i, j in pairs:
        if free((i, j)) and (_matches(chords, (i, j), "bc") or _matches(chords, (i, j), "cb")) and opp[i]:
            la, lb = line_through(mids[i]), line_through(mids[(j + 1) % k])
            if not is_parallel(la.direction, lb.direction):
                take((i, j), 1, 4)
    for i, j in pairs:
        if free((i, j)) and opp[i] and any(_matches(chords, (i, j), p) for p in PAIRS_OPPOSITE):
            take((i, j), 1, 5)
    return total


def evaluate(chords):
    """(admissible, base length, bonus) of a cyclic string."""
    reason = closed_string_reason(chords)
    base = sum(c.base_length for c in chords)
    if reason:
        return False, base, 0
    return True, base, bonus(chords)


def reverse_string(chords) -> list:
    return [c.reversed() for c in reversed(chords)]
