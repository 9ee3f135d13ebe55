"""Integral cellular homology of Squier complexes.

These are homology groups of the finite cube complex itself.  Whether they
agree with the group homology of the diagram group in every degree depends on
the complex being aspherical, which is not checked here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionOutOfRange
from .snf import IntegerMatrix, SNFResult, smith_normal_form
from .squier import GroupPresentation, SquierComplex, face


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = (["Z^%d" % self.betti] if self.betti > 1 else ["Z"] * self.betti)
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def boundary_matrix(K: SquierComplex, k: int) -> IntegerMatrix:
    """Matrix of the cellular boundary from k-cubes to (k-1)-cubes.

    A cube with cells c_1 < ... < c_k maps to
    sum_i (-1)^(i-1) (front face_i - back face_i), where the front face is
    the face through the corner reached by applying c_i.
    """
    if not 1 <= k <= K.dimension:
        raise DimensionOutOfRange(f"boundary in dimension {k}; complex has dimension {K.dimension}")
    p = K.presentation
    faces_index = K.cube_index[k - 1]
    entries: dict = {}
    for col, cube in enumerate(K.cubes[k]):
        for i in range(k):
            sign = 1 if i % 2 == 0 else -1
            for front, s in ((True, sign), (False, -sign)):
                row = faces_index[face(p, cube, i, front)]
                v = entries.get((row, col), 0) + s
                if v:
                    entries[row, col] = v
                else:
                    entries.pop((row, col), None)
    return IntegerMatrix(len(K.cubes[k - 1]), len(K.cubes[k]), entries)


def boundary_snf(K: SquierComplex, k: int) -> SNFResult:
    """Smith normal form of the k-th boundary, cached on the complex."""
    key = ("snf", k)
    if key not in K.cache:
        K.cache[key] = smith_normal_form(boundary_matrix(K, k))
    return K.cache[key]


def _rank(K: SquierComplex, k: int) -> int:
    if k < 1 or k > K.dimension:
        return 0
    return boundary_snf(K, k).rank


def homology(K: SquierComplex, k: int) -> HomologyGroup:
    if k < 0:
        raise DimensionOutOfRange("homology dimension must be non-negative")
    if k > K.dimension:
        return HomologyGroup(0)
    betti = len(K.cubes[k]) - _rank(K, k) - _rank(K, k + 1)
    torsion = ()
    if k + 1 <= K.dimension:
        torsion = tuple(d for d in boundary_snf(K, k + 1).divisors if d > 1)
    return HomologyGroup(betti, torsion)


def homology_report(K: SquierComplex, k: int | None = None) -> list[dict] | dict:
    def entry(j):
        h = homology(K, j)
        return {"dimension": j, "betti": h.betti, "torsion": list(h.torsion)}

    if k is not None:
        return entry(k)
    return [entry(j) for j in range(K.dimension + 1)]


def relator_matrix(gp: GroupPresentation) -> IntegerMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    entries: dict = {}
    for i, rel in enumerate(gp.relators):
        for x in rel:
            key = (i, abs(x) - 1)
            v = entries.get(key, 0) + (1 if x > 0 else -1)
            if v:
                entries[key] = v
            else:
                entries.pop(key, None)
    return IntegerMatrix(len(gp.relators), gp.generator_count, entries)


def abelianization(gp: GroupPresentation) -> HomologyGroup:
    snf = smith_normal_form(relator_matrix(gp))
    return HomologyGroup(gp.generator_count - snf.rank, tuple(d for d in snf.divisors if d > 1))
