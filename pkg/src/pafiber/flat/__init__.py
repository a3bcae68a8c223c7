"""Periodic blue-line geometry in R^3, in doubled integer coordinates.

All points are stored as integer triples equal to twice the Euclidean
coordinates, so vertices of the triangulation are odd triples and blue-edge
midpoints are even triples.
"""
from .lines import (
    BASE_LINES,
    BlueLine,
    Isometry3,
    blue_lines_in_ball,
    build_group,
    in_translation_lattice,
    line_through,
    on_same_blue_line,
    signed_permutation_matrices,
    stabilizer,
)
from .triangulation import Triangulation

__all__ = [
    "BASE_LINES",
    "BlueLine",
    "Isometry3",
    "Triangulation",
    "blue_lines_in_ball",
    "build_group",
    "in_translation_lattice",
    "line_through",
    "on_same_blue_line",
    "signed_permutation_matrices",
    "stabilizer",
]
