"""The Squier cube complex of a presentation and base word.

Vertices are the words reachable from the base word by single relation
applications.  A k-cube is a word together with k pairwise disjoint relation
occurrences, each applicable in the forward direction there; that word is the
cube's canonical corner, so every geometric cube is recorded exactly once.

The fundamental group of the complex (taken at the base word) is the diagram
group, so a spanning tree of the 1-skeleton and the square boundaries give a
presentation of it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import VertexBudgetExceeded
from .presentation import (
    FORWARD,
    Presentation,
    Word,
    applicable_cells,
    apply_relation,
    format_word,
    word_to_json,
)

DEFAULT_MAX_VERTICES = 10**6


class SquierCube(NamedTuple):
    base: Word
    cells: tuple[tuple[int, int], ...]  # (offset, relation index), sorted by offset

    @property
    def dimension(self) -> int:
        return len(self.cells)


@dataclass
class SquierComplex:
    presentation: Presentation
    base_word: Word
    vertices: list[Word]
    vertex_index: dict[Word, int]
    cubes: list[list[SquierCube]]  # cubes[k] = k-cubes in canonical order
    cube_index: list[dict[SquierCube, int]]
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.cubes) - 1

    @property
    def edges(self) -> list[SquierCube]:
        return self.cubes[1] if len(self.cubes) > 1 else []

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        """(source, target) vertex ids of edge ``e``, oriented in the forward direction."""
        edge = self.cubes[1][e]
        (offset, rel), = edge.cells
        target = apply_relation(self.presentation, edge.base, rel, FORWARD, offset)
        return self.vertex_index[edge.base], self.vertex_index[target]


@dataclass(frozen=True)
class GroupPresentation:
    """Generators are numbered from 1; a relator letter ``-g`` is the inverse of ``g``."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for rel in self.relators:
            for g in rel:
                if g == 0 or abs(g) > self.generator_count:
                    raise ValueError(f"relator letter {g} out of range")


def _forward_cells(p: Presentation, word: Word) -> list[tuple[int, int, int]]:
    return [
        (offset, rel, len(p.relations[rel].lhs))
        for offset, rel, direction in applicable_cells(word, p)
        if direction == FORWARD
    ]


def _disjoint_families(cells, k: int, start: int = 0, free_from: int = 0):
    """k-subsets of ``cells`` (sorted by offset) with pairwise disjoint intervals."""
    if k == 0:
        yield ()
        return
    for idx in range(start, len(cells)):
        offset, rel, width = cells[idx]
        if offset < free_from:
            continue
        for rest in _disjoint_families(cells, k - 1, idx + 1, offset + width):
            yield ((offset, rel),) + rest


def build_squier(p: Presentation, w: Word, max_vertices: int = DEFAULT_MAX_VERTICES) -> SquierComplex:
    if max_vertices < 1:
        raise ValueError("max_vertices must be at least 1")
    w = tuple(w)
    vertices = [w]
    vertex_index = {w: 0}
    queue = deque([w])
    while queue:
        word = queue.popleft()
        for offset, rel, direction in applicable_cells(word, p):
            nxt = apply_relation(p, word, rel, direction, offset)
            if nxt not in vertex_index:
                vertex_index[nxt] = len(vertices)
                vertices.append(nxt)
                if len(vertices) > max_vertices:
                    raise VertexBudgetExceeded(
                        f"more than {max_vertices} vertices reachable from {format_word(w, p)}"
                    )
                queue.append(nxt)

    cubes: list[list[SquierCube]] = [[SquierCube(v, ()) for v in vertices]]
    forward = [_forward_cells(p, v) for v in vertices]
    k = 1
    while True:
        layer = [
            SquierCube(v, family)
            for v, cells in zip(vertices, forward)
            for family in _disjoint_families(cells, k)
        ]
        if not layer:
            break
        cubes.append(layer)
        k += 1
    cube_index = [{c: i for i, c in enumerate(layer)} for layer in cubes]
    return SquierComplex(p, w, vertices, vertex_index, cubes, cube_index)


def face(p: Presentation, cube: SquierCube, i: int, front: bool) -> SquierCube:
    """The face of ``cube`` dropping its ``i``-th cell, at the back or front corner."""
    offset, rel = cube.cells[i]
    rest = cube.cells[:i] + cube.cells[i + 1:]
    if not front:
        return SquierCube(cube.base, rest)
    lhs, rhs = p.relations[rel].lhs, p.relations[rel].rhs
    base = apply_relation(p, cube.base, rel, FORWARD, offset)
    shift = len(rhs) - len(lhs)
    return SquierCube(base, tuple((o + shift if o > offset else o, r) for o, r in rest))


def missing_faces(K: SquierComplex) -> list[tuple[SquierCube, SquierCube]]:
    """(cube, face) pairs where the face is not a recorded cube; empty for a well-formed complex."""
    missing = []
    for k in range(1, len(K.cubes)):
        for cube in K.cubes[k]:
            for i in range(k):
                for front in (False, True):
                    f = face(K.presentation, cube, i, front)
                    if f not in K.cube_index[k - 1]:
                        missing.append((cube, f))
    return missing


def cube_counts(K: SquierComplex) -> list[int]:
    return [len(layer) for layer in K.cubes]


def euler_characteristic(K: SquierComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(cube_counts(K)))


def spanning_tree(K: SquierComplex) -> frozenset[int]:
    """Edge ids of a BFS spanning tree rooted at the base word."""
    if "tree" in K.cache:
        return K.cache["tree"]
    incident: list[list[tuple[int, int]]] = [[] for _ in K.vertices]
    for e in range(len(K.edges)):
        a, b = K.edge_endpoints(e)
        incident[a].append((e, b))
        incident[b].append((e, a))
    seen = [False] * len(K.vertices)
    seen[0] = True
    tree = []
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for e, u in incident[v]:
            if not seen[u]:
                seen[u] = True
                tree.append(e)
                queue.append(u)
    K.cache["tree"] = frozenset(tree)
    return K.cache["tree"]


def free_reduce(word) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cyclic_reduce(word) -> tuple[int, ...]:
    word = free_reduce(word)
    lo, hi = 0, len(word)
    while hi - lo >= 2 and word[lo] == -word[hi - 1]:
        lo += 1
        hi -= 1
    return word[lo:hi]


def fundamental_presentation(K: SquierComplex, tree: frozenset[int] | None = None) -> GroupPresentation:
    """One generator per non-tree edge, one relator per square."""
    if tree is None:
        tree = spanning_tree(K)
    generator = {}
    for e in range(len(K.edges)):
        if e not in tree:
            generator[e] = len(generator) + 1

    def letter(edge: SquierCube, sign: int) -> tuple[int, ...]:
        e = K.cube_index[1][edge]
        return (sign * generator[e],) if e in generator else ()

    p = K.presentation
    relators = []
    for square in (K.cubes[2] if len(K.cubes) > 2 else []):
        # w --a--> w1 --b--> w12 <--c-- w2 <--d-- w
        a = face(p, square, 1, False)
        b = face(p, square, 0, True)
        c = face(p, square, 1, True)
        d = face(p, square, 0, False)
        word = letter(a, 1) + letter(b, 1) + letter(c, -1) + letter(d, -1)
        relators.append(free_reduce(word))
    return GroupPresentation(len(generator), tuple(relators))


def _substitute(relator, g: int, replacement: tuple[int, ...]):
    inverse = tuple(-x for x in reversed(replacement))
    out = []
    for x in relator:
        if x == g:
            out.extend(replacement)
        elif x == -g:
            out.extend(inverse)
        else:
            out.append(x)
    return out


def simplify_presentation(gp: GroupPresentation) -> GroupPresentation:
    """Tietze cleanup to a fixed point.

    Relators are cyclically reduced and empty ones dropped.  A generator that
    occurs exactly once in some relator is solved for from that relator,
    substituted everywhere else, and removed together with the relator; the
    shortest such relator is used first.
    """
    gens = list(range(1, gp.generator_count + 1))
    relators = [cyclic_reduce(r) for r in gp.relators]
    while True:
        relators = [r for r in dict.fromkeys(relators) if r]
        choice = None
        for idx, r in enumerate(relators):
            if choice is not None and len(r) >= len(relators[choice[0]]):
                continue
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, c in counts.items() if c == 1]
            if once:
                choice = (idx, min(once))
        if choice is None:
            break
        idx, g = choice
        r = relators.pop(idx)
        pos = next(k for k, x in enumerate(r) if abs(x) == g)
        before, after = r[:pos], r[pos + 1:]
        # r = before g^e after = 1
        if r[pos] == g:
            replacement = tuple(-x for x in reversed(after + before))
        else:
            replacement = tuple(after + before)
        relators = [cyclic_reduce(_substitute(rel, g, replacement)) for rel in relators]
        gens.remove(g)
    renumber = {g: k + 1 for k, g in enumerate(gens)}
    relators = [tuple((1 if x > 0 else -1) * renumber[abs(x)] for x in r) for r in relators]
    return GroupPresentation(len(gens), tuple(relators))


# exports

def format_group_presentation(gp: GroupPresentation) -> str:
    gens = ",".join(f"g{i}" for i in range(1, gp.generator_count + 1))
    rels = ", ".join(" ".join(f"g{x}" if x > 0 else f"G{-x}" for x in r) for r in gp.relators)
    return f"<{gens} | {rels}>"


def group_presentation_to_json(gp: GroupPresentation) -> dict:
    return {"generators": gp.generator_count, "relators": [list(r) for r in gp.relators]}


def complex_to_json(K: SquierComplex) -> dict:
    return {
        "base_word": word_to_json(K.base_word),
        "cube_counts": cube_counts(K),
        "euler_characteristic": euler_characteristic(K),
        "cubes": [
            [{"base": word_to_json(c.base), "cells": [list(cell) for cell in c.cells]} for c in layer]
            for layer in K.cubes
        ],
    }


def complex_summary(K: SquierComplex) -> str:
    p = K.presentation
    lines = [f"base word: {format_word(K.base_word, p)}"]
    lines += [f"dimension {k}: {c}" for k, c in enumerate(cube_counts(K))]
    lines.append(f"euler characteristic: {euler_characteristic(K)}")
    lines.append(f"spanning tree: {len(spanning_tree(K))} of {len(K.edges)} edges")
    return "\n".join(lines)


def to_dot(K: SquierComplex) -> str:
    p = K.presentation
    lines = ["graph squier {"]
    for i, v in enumerate(K.vertices):
        lines.append(f'  v{i} [label="{format_word(v, p)}"];')
    for e, edge in enumerate(K.edges):
        a, b = K.edge_endpoints(e)
        (offset, rel), = edge.cells
        lines.append(f'  v{a} -- v{b} [label="({offset},{rel})"];')
    lines.append("}")
    return "\n".join(lines)

