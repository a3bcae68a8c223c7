"""Finitely presented groups: words, free reduction, abelianization."""
from __future__ import annotations

from dataclasses import dataclass

from ..exact_algebra import abelian_group_from_relations, invariant_factors, solve_integer_rows


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word) -> tuple:
    return tuple(-x for x in reversed(word))


def cyclic_reduce(word) -> tuple:
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def cyclic_normal_form(word) -> tuple:
    """Smallest rotation of the cyclically reduced word or of its inverse."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    cands = []
    for v in (w, inverse(w)):
        cands.extend(v[k:] + v[:k] for k in range(len(v)))
    return min(cands)


def substitute(word, images: dict) -> tuple:
    """Apply a homomorphism given by generator images (1-based keys)."""
    out = []
    for x in word:
        img = images[abs(x)]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


def abelianize(word, n: int) -> tuple:
    v = [0] * n
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def in_row_lattice(v, rows) -> bool:
    """Is the integer vector v an integer combination of the rows?"""
    if not rows:
        return not any(v)
    return solve_integer_rows(rows, v) is not None


@dataclass
class GroupPresentation:
    generators: list
    relators: list

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")

    def word(self, text: str) -> tuple:
        """Parse ``"a1 b2^-1 a3"`` into signed generator indices."""
        index = {g: k + 1 for k, g in enumerate(self.generators)}
        out = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            e = int(exp) if exp else 1
            out.extend([index[base] if e > 0 else -index[base]] * abs(e))
        return tuple(out)

    def show(self, word) -> str:
        return " ".join(self.generators[abs(x) - 1] + ("" if x > 0 else "^-1") for x in word)

    def relation_matrix(self) -> tuple:
        return tuple(abelianize(r, len(self.generators)) for r in self.relators)

    def abelianization(self) -> tuple:
        """``(free_rank, torsion invariant factors)``."""
        return abelian_group_from_relations(self.relation_matrix(), len(self.generators))

    def trivial_in_abelianization(self, word) -> bool:
        return in_row_lattice(abelianize(word, len(self.generators)), self.relation_matrix())

    def induced_surjective(self, images: dict, target: "GroupPresentation") -> bool:
        """Does the abelianized map hit all of the target abelianization?"""
        n = len(target.generators)
        rows = list(target.relation_matrix())
        rows += [abelianize(images[k + 1], n) for k in range(len(self.generators))]
        facs = invariant_factors(tuple(rows))
        return len(facs) == n and all(f == 1 for f in facs)
