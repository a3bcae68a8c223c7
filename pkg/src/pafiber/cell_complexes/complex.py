"""Identification cell complexes with integer boundary maps."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..exact_algebra import invariant_factors, rank


class ComplexError(ValueError):
    """Internal inconsistency of a cell complex; the message names the cell."""


@dataclass
class CellComplex:
    """Cells keyed by id with a dimension, a vertex-label tuple and a boundary.

    ``boundary[c]`` lists ``(face, multiplicity, sign)``; a face may appear
    with both signs.  Cells are ordered deterministically by (dim, id).
    """

    name: str
    dims: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)
    boundary: dict = field(default_factory=dict)

    def add(self, cell, dim: int, label=(), chain=None):
        if cell in self.dims:
            raise ComplexError(f"duplicate cell {cell}")
        self.dims[cell] = dim
        self.labels[cell] = tuple(label)
        counts = Counter()
        for face, sign in chain or ():
            counts[(face, sign)] += 1
        self.boundary[cell] = sorted((f, m, s) for (f, s), m in counts.items())

    def cells(self, dim: int) -> list:
        return sorted(c for c, d in self.dims.items() if d == dim)

    @property
    def dimension(self) -> int:
        return max(self.dims.values())

    def census(self) -> tuple:
        return tuple(len(self.cells(d)) for d in range(self.dimension + 1))

    def euler(self, skip_vertices: bool = False) -> int:
        c = self.census()
        return sum((-1) ** d * n for d, n in enumerate(c) if d or not skip_vertices)

    def chain(self, cell) -> dict:
        out = Counter()
        for face, mult, sign in self.boundary[cell]:
            out[face] += mult * sign
        return {f: x for f, x in out.items() if x}

    def faces(self, cell) -> Counter:
        """Boundary faces as a multiset, signs ignored."""
        out = Counter()
        for face, mult, _ in self.boundary[cell]:
            out[face] += mult
        return out

    def cofaces(self, cell) -> list:
        return sorted(c for c in self.dims if cell in self.faces(c))

    def validate(self):
        """Dimensions drop by one along the boundary and the boundary squares to zero."""
        for c, d in self.dims.items():
            for f, _, _ in self.boundary[c]:
                if f not in self.dims:
                    raise ComplexError(f"{self.name}: boundary of {c} mentions unknown cell {f}")
                if self.dims[f] != d - 1:
                    raise ComplexError(f"{self.name}: face {f} of {c} has the wrong dimension")
            total = Counter()
            for f, x in self.chain(c).items():
                for g, y in self.chain(f).items():
                    total[g] += x * y
            bad = {g: x for g, x in total.items() if x}
            if bad:
                raise ComplexError(f"{self.name}: boundary of boundary of {c} is {bad}")
        return self

    def boundary_matrix(self, dim: int) -> tuple:
        """Rows are ``dim``-cells, columns ``dim-1``-cells (row-vector convention)."""
        rows, cols = self.cells(dim), self.cells(dim - 1)
        index = {c: j for j, c in enumerate(cols)}
        out = []
        for r in rows:
            row = [0] * len(cols)
            for f, x in self.chain(r).items():
                row[index[f]] += x
            out.append(tuple(row))
        return tuple(out)

    def homology(self) -> list:
        """``[(free_rank, torsion), ...]`` for each degree."""
        mats = {d: self.boundary_matrix(d) for d in range(1, self.dimension + 1)}
        return homology_from_matrices(self.census(), mats)

    def relative_cohomology_as_homology(self, top: int) -> list:
        """Homology of the manifold whose ideal vertices are the 0-cells.

        For an orientable ``top``-manifold F with ``F-bar = F / (boundary
        components collapsed)``, ``H_k(F) = H^{top-k}(F-bar, vertices)``.  The
        relative cochain complex is the transpose of the chain complex with the
        0-cells removed.
        """
        census = self.census()
        n = {d: (census[d] if d else 0) for d in range(top + 1)}
        mats = {d: self.boundary_matrix(d) for d in range(2, top + 1)}
        out = []
        for k in range(top + 1):
            nk = n[top - k]
            out_map = mats.get(top - k + 1)  # cochains in degree top-k map to degree top-k+1
            in_map = mats.get(top - k)
            r_out = rank(out_map) if out_map and out_map[0] else 0
            r_in = rank(in_map) if in_map and in_map[0] else 0
            tors = [x for x in invariant_factors(in_map)] if in_map and in_map[0] else []
            out.append((nk - r_out - r_in, sorted(x for x in tors if x != 1)))
        return out

    def export_incidence(self) -> str:
        """One line per cell: ``id<TAB>dim<TAB>face:mult:sign,...``."""
        lines = [f"# complex {self.name}", "# id\tdim\tboundary (face:multiplicity:sign)"]
        for d in range(self.dimension + 1):
            for c in self.cells(d):
                bd = ",".join(f"{f}:{m}:{'+' if s > 0 else '-'}" for f, m, s in self.boundary[c])
                lines.append(f"{c}\t{d}\t{bd}")
        return "\n".join(lines) + "\n"


def homology_from_matrices(census, mats) -> list:
    """Homology ranks and torsion from row-convention boundary matrices."""
    top = len(census) - 1

    def rk(d):
        m = mats.get(d)
        return rank(m) if m and m[0] else 0

    out = []
    for k in range(top + 1):
        m = mats.get(k + 1)
        tors = [x for x in invariant_factors(m) if x != 1] if m and m[0] else []
        out.append((census[k] - rk(k) - rk(k + 1), sorted(tors)))
    return out


def parse_incidence(text: str) -> dict:
    """Inverse of :meth:`CellComplex.export_incidence` (returns id -> (dim, boundary))."""
    out = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        cell, dim, bd = line.split("\t")
        faces = []
        for item in filter(None, bd.split(",")):
            f, m, s = item.rsplit(":", 2)
            faces.append((f, int(m), 1 if s == "+" else -1))
        out[cell] = (int(dim), faces)
    return out
