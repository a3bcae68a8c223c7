"""Exhaustive search for short closed strings of chords between blue edges.

The blue-line geometry itself (lines, the group G, the triangulation) lives
in :mod:`pafiber.flat`; this package builds the chord catalog on top of it,
checks admissibility and bonus lengths, and runs the enumeration.
"""
from ..flat.lines import Isometry3, blue_lines_in_ball, build_group, stabilizer
from ..flat.triangulation import network_girth
from .catalog import ChordTemplate, orbit_representatives, sector_relation, template_catalog
from .search import MAX_BUDGET, SearchCertificate, search
from .strings import (
    WorldChord,
    bonus,
    closed_string_reason,
    evaluate,
    junction_reason,
    reverse_string,
    world_chords,
)

__all__ = [
    "ChordTemplate",
    "Isometry3",
    "MAX_BUDGET",
    "SearchCertificate",
    "WorldChord",
    "blue_lines_in_ball",
    "bonus",
    "build_group",
    "closed_string_reason",
    "evaluate",
    "junction_reason",
    "network_girth",
    "orbit_representatives",
    "reverse_string",
    "search",
    "sector_relation",
    "stabilizer",
    "template_catalog",
    "world_chords",
]
