"""The catalog of chord templates leaving the reference blue edge.

Every chord of an admissible string is the image under some element of G of
one of the eight reference chords based at the edge ``e0`` (midpoint 0, axis
(1,1,1)).  The catalog lists the images under the stabilizer of ``e0``; each
entry also carries a *transfer*, a fixed element of G taking ``e0`` to the
far edge, so the data at the far end can be read in the frame of ``e0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..chord_geometry import oriented_reference_chords
from ..flat.lines import (
    Isometry3, build_group, dot, in_translation_lattice, line_through, neg, scale, stabilizer, sub,
)
from ..flat.triangulation import blue_edge_at

E0_AXIS = (1, 1, 1)

# Sector vectors at e0 in cyclic order; neighbours in this list are adjacent.
E0_SECTORS = ((-1, -1, 2), (1, -2, 1), (2, -1, -1), (1, 1, -2), (-1, 2, -1), (-2, 1, 1))
SECTOR_INDEX = {s: i for i, s in enumerate(E0_SECTORS)}

# Reversing a chord swaps its ends; the type of the reverse.
REVERSED_TYPE = {"a": "h", "b": "b", "c": "c", "d": "g", "e": "f", "f": "e", "g": "d", "h": "a"}


def sector_relation(s, t) -> str:
    """'same', 'adjacent' or 'apart' for two sector vectors at one blue edge.

    The six sector vectors at an edge are 60 degrees apart in R^3, each of
    squared norm 6, so neighbours have inner product 3.
    """
    if tuple(s) == tuple(t):
        return "same"
    return "adjacent" if dot(s, t) == 3 else "apart"


@dataclass(frozen=True)
class ChordTemplate:
    """A chord leaving e0, with all vectors in doubled coordinates.

    ``start_orientation`` and ``end_orientation`` are +1 when the induced
    direction on the edge points to its green end, in the frame of e0; the
    end data is pulled back through ``transfer``.
    """

    id: int
    tags: frozenset
    base_length: int
    displacement: tuple
    start_sector: int
    end_sector: int
    start_orientation: int
    end_orientation: int
    transfer: Isometry3
    world_end_sector: tuple
    world_end_orientation: tuple
    reference: str = ""
    symmetry: Isometry3 | None = None   # stabilizer element producing it from the reference

    @property
    def tag(self) -> str:
        return "".join(sorted(self.tags))

    def is_type(self, letter: str) -> bool:
        return letter in self.tags

    @property
    def end_midpoint(self):
        return self.displacement


def _orientation_sign(edge_midpoint, vec) -> int:
    """+1 if the diagonal vector points from the red end to the green end."""
    red, green = blue_edge_at(edge_midpoint)
    towards_green = tuple((g - r) // 2 for g, r in zip(green, red))
    if tuple(vec) == towards_green:
        return 1
    if tuple(vec) == neg(towards_green):
        return -1
    raise AssertionError(f"{vec} is not along the edge at {edge_midpoint}")


@lru_cache(maxsize=None)
def edge_frame(midpoint) -> Isometry3:
    """The element of G taking e0 to the blue edge with this midpoint.

    Among the coset representatives (in their fixed order) the first whose
    point part sends the axis of e0 to the axis of the target edge is used,
    corrected by the unique element of H fixing the midpoint.  The orientation
    of the edge may be reversed; that is harmless as the red/green labels of
    the endpoints are not used in the frame convention.
    """
    line = line_through(tuple(midpoint))
    if line is None:
        raise ValueError(f"{midpoint} is not on a blue line")
    for rep in build_group().representatives:
        img = rep.vector(E0_AXIS)
        if img != line.direction and img != neg(line.direction):
            continue
        h = sub(midpoint, rep.translation)
        if in_translation_lattice(h):
            return Isometry3(rep.linear, tuple(midpoint))
    raise AssertionError(f"no frame for the edge at {midpoint}")


def _raw_entries():
    out = []
    refs = oriented_reference_chords()
    for tag in "abcdefgh":
        ref = refs[tag]
        for s in stabilizer():
            disp = s.vector(scale(2, ref.displacement))
            start = s.vector(ref.start_sector)
            end = s.vector(ref.end_sector)
            so = s.vector(ref.start_orientation)
            eo = s.vector(ref.end_orientation)
            out.append((tag, ref.base_length.value, disp, start, end, so, eo, s))
    return out


@lru_cache(maxsize=None)
def template_catalog() -> tuple:
    """Stabilizer orbit of the eight oriented reference chords, deduplicated.

    Entries that agree in displacement, sectors and orientations are merged
    and carry all their type letters.
    """
    merged = {}
    origin = {}
    order = []
    for tag, length, disp, start, end, so, eo, sym in _raw_entries():
        try:
            blue_edge_at(disp)
        except ValueError:
            raise AssertionError(f"({tag}) image ends at {disp}, not a blue-edge midpoint")
        key = (disp, start, end)
        val = (length, _orientation_sign((0, 0, 0), so), eo)
        if key in merged:
            old_len, old_so, old_eo, tags = merged[key]
            if (old_len, old_so, old_eo) != val:
                raise AssertionError(f"conflicting chord data at {key}: {tags} vs ({tag})")
            tags.add(tag)
        else:
            merged[key] = (*val, {tag})
            origin[key] = (tag, sym)
            order.append(key)
    out = []
    for i, key in enumerate(order):
        disp, start, end = key
        length, so, eo, tags = merged[key]
        frame = edge_frame(disp)
        inv = frame.inverse()
        local_end = inv.vector(end)
        local_eo = inv.vector(eo)
        out.append(ChordTemplate(
            id=i, tags=frozenset(tags), base_length=length, displacement=disp,
            start_sector=SECTOR_INDEX[start], end_sector=SECTOR_INDEX[local_end],
            start_orientation=so, end_orientation=_orientation_sign((0, 0, 0), local_eo),
            transfer=frame, world_end_sector=end, world_end_orientation=eo,
            reference=origin[key][0], symmetry=origin[key][1],
        ))
    return tuple(out)


def orbit_representatives() -> list:
    """One catalog id per stabilizer orbit (the first in catalog order)."""
    cat = template_catalog()
    index = {(c.displacement, E0_SECTORS[c.start_sector], c.world_end_sector): c.id for c in cat}
    seen, reps = set(), []
    for c in cat:
        if c.id in seen:
            continue
        reps.append(c.id)
        for s in stabilizer():
            key = (s.vector(c.displacement), s.vector(E0_SECTORS[c.start_sector]),
                   s.vector(c.world_end_sector))
            seen.add(index[key])
    return reps
