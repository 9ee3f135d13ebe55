"""Semigroup diagrams as cell sequences.

A diagram is its top word together with the transistors read top to bottom.
Each transistor is a :class:`Cell` ``(offset, relation, direction)`` acting on
the running word.  Wires and the frame are implicit.  Two cell sequences
describe isotopic pictures exactly when one can be turned into the other by
swapping adjacent cells that touch disjoint sets of wires; :func:`normalize`
picks the lexicographically least sequence in that class.

Dipole deletion plus normalization gives a canonical form, so equality in the
diagram group is decided by comparing reduced cell sequences.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import BoundaryMismatch, ChainBreak, DiagramKitError, ParseError, PresentationMismatch
from .presentation import (
    Direction,
    Presentation,
    Word,
    applicable_cells,
    apply_relation,
    check_word,
    format_word,
    presentation_from_json,
    presentation_to_json,
    word_from_json,
    word_to_json,
)


class Cell(NamedTuple):
    offset: int
    relation: int
    direction: Direction

    def flipped(self) -> "Cell":
        return Cell(self.offset, self.relation, self.direction.opposite)


@dataclass(frozen=True)
class Diagram:
    presentation: Presentation
    top: Word
    cells: tuple[Cell, ...]

    @cached_property
    def bottom(self) -> Word:
        word = self.top
        for cell in self.cells:
            word = apply_relation(self.presentation, word, *_args(cell))
        return word

    def __len__(self) -> int:
        return len(self.cells)


def _args(cell: Cell) -> tuple[int, Direction, int]:
    return cell.relation, cell.direction, cell.offset


def _lengths(p: Presentation, cell: Cell) -> tuple[int, int]:
    """(|source|, |target|) of a cell."""
    rel = p.relations[cell.relation]
    if cell.direction == Direction.FORWARD:
        return len(rel.lhs), len(rel.rhs)
    return len(rel.rhs), len(rel.lhs)


def _chain(p: Presentation, word: Word, cells: Sequence[Cell], start: int = 0) -> Word:
    for k, cell in enumerate(cells):
        try:
            word = apply_relation(p, word, *_args(cell))
        except DiagramKitError as exc:
            raise ChainBreak(start + k, word, exc.name) from None
    return word


def make_diagram(p: Presentation, top: Sequence[int], cells: Sequence) -> Diagram:
    top = check_word(top, p.alphabet_size)
    cells = tuple(Cell(int(o), int(r), Direction(d)) for o, r, d in cells)
    _chain(p, top, cells)
    return Diagram(p, top, cells)


def identity(p: Presentation, u: Sequence[int]) -> Diagram:
    return Diagram(p, check_word(u, p.alphabet_size), ())


def bottom_word(d: Diagram) -> Word:
    return d.bottom


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """Stack ``d1`` on top of ``d2``; no reduction."""
    if d1.presentation != d2.presentation:
        raise PresentationMismatch("cannot compose diagrams over different presentations")
    if d1.bottom != d2.top:
        raise BoundaryMismatch(
            f"bottom word {list(d1.bottom)} does not match top word {list(d2.top)}"
        )
    return Diagram(d1.presentation, d1.top, d1.cells + d2.cells)


def invert(d: Diagram) -> Diagram:
    # a reversed cell reads its original target at the same offset
    return Diagram(d.presentation, d.bottom, tuple(c.flipped() for c in reversed(d.cells)))


def insert_dipole(
    d: Diagram, position: int, relation_index: int, direction: Direction, offset: int
) -> Diagram:
    if not 0 <= position <= len(d.cells):
        raise ChainBreak(position, d.top, "insertion position out of range")
    word = _chain(d.presentation, d.top, d.cells[:position])
    pair = (Cell(offset, relation_index, Direction(direction)),
            Cell(offset, relation_index, Direction(direction).opposite))
    _chain(d.presentation, word, pair, start=position)
    return Diagram(d.presentation, d.top, d.cells[:position] + pair + d.cells[position:])


# dipoles

def _dipoles(p: Presentation, cells: Sequence[Cell]):
    """Yield every dipole as ``(i, j, right)``.

    ``right`` lists the cells strictly between ``i`` and ``j`` that lie to the
    right of the wires joining the pair; their offsets move when it is deleted.
    """
    for i, ci in enumerate(cells):
        pos, width = ci.offset, _lengths(p, ci)[1]
        right = []
        for j in range(i + 1, len(cells)):
            cj = cells[j]
            if cj.relation == ci.relation and cj.direction != ci.direction and cj.offset == pos:
                yield i, j, right
                break
            src, tgt = _lengths(p, cj)
            if cj.offset + src <= pos:
                pos += tgt - src
            elif cj.offset >= pos + width:
                right.append(j)
            else:
                break


def _delete(p: Presentation, cells: list[Cell], i: int, j: int, right: list[int]) -> list[Cell]:
    src, tgt = _lengths(p, cells[i])
    out = list(cells)
    for k in right:
        out[k] = out[k]._replace(offset=out[k].offset + src - tgt)
    del out[j]
    del out[i]
    return out


def _cancel_incrementally(p: Presentation, cells: Sequence[Cell]) -> list[Cell]:
    """Dipole-free sequence equivalent to ``cells``, built one cell at a time.

    The output prefix is kept dipole-free; a new cell either cancels against
    the last cell touching its wires or is appended.
    """
    out: list[Cell] = []
    for c in cells:
        src = _lengths(p, c)[0]
        pos = c.offset
        right = []
        partner = None
        for k in range(len(out) - 1, -1, -1):
            ck = out[k]
            if ck.relation == c.relation and ck.direction != c.direction and ck.offset == pos:
                partner = k
                break
            ksrc, ktgt = _lengths(p, ck)
            if pos + src <= ck.offset:
                right.append(k)
            elif pos >= ck.offset + ktgt:
                pos += ksrc - ktgt
            else:
                break
        if partner is None:
            out.append(c)
        else:
            out = _delete(p, out + [c], partner, len(out), right)
    return out


def is_reduced(d: Diagram) -> bool:
    return next(_dipoles(d.presentation, d.cells), None) is None


# commutation normal form

def _normalize_rigid(p: Presentation, cells: Sequence[Cell]) -> list[Cell]:
    # length-preserving relations: offsets never move, so the dependency
    # graph is fixed and the normal form is its least topological order
    last: dict[int, int] = {}
    succ: list[list[int]] = [[] for _ in cells]
    indeg = [0] * len(cells)
    for idx, c in enumerate(cells):
        preds = set()
        for pos in range(c.offset, c.offset + _lengths(p, c)[0]):
            if pos in last:
                preds.add(last[pos])
            last[pos] = idx
        indeg[idx] = len(preds)
        for q in preds:
            succ[q].append(idx)
    heap = [(c, idx) for idx, c in enumerate(cells) if indeg[idx] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        c, idx = heapq.heappop(heap)
        out.append(c)
        for nxt in succ[idx]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(heap, (cells[nxt], nxt))
    return out


def _pull_to_front(p: Presentation, cells: list[Cell], k: int):
    """Commute ``cells[k]`` to the front; return (moved cell, rest) or None if blocked."""
    c = cells[k]
    src, tgt = _lengths(p, c)
    pos = c.offset
    rest = list(cells)
    for j in range(k - 1, -1, -1):
        cj = rest[j]
        jsrc, jtgt = _lengths(p, cj)
        if pos + src <= cj.offset:
            rest[j] = cj._replace(offset=cj.offset + tgt - src)
        elif pos >= cj.offset + jtgt:
            pos += jsrc - jtgt
        else:
            return None
    del rest[k]
    return c._replace(offset=pos), rest


def _normalize_general(p: Presentation, cells: Sequence[Cell]) -> list[Cell]:
    rest = list(cells)
    out = []
    while rest:
        best = None
        for k in range(len(rest)):
            moved = _pull_to_front(p, rest, k)
            if moved is not None and (best is None or moved[0] < best[0]):
                best = moved
        out.append(best[0])
        rest = best[1]
    return out


def _normal_cells(p: Presentation, cells: Sequence[Cell]) -> list[Cell]:
    if p.length_preserving:
        return _normalize_rigid(p, cells)
    return _normalize_general(p, cells)


def normalize(d: Diagram) -> Diagram:
    """Leftmost-first representative of ``d`` under commutation of independent cells."""
    return Diagram(d.presentation, d.top, tuple(_normal_cells(d.presentation, d.cells)))


def reduce(d: Diagram, rng: random.Random | None = None) -> Diagram:
    """Delete dipoles until none remain, then normalize.

    With ``rng`` the dipole to delete is chosen at random at every step;
    the result does not depend on that choice.
    """
    p = d.presentation
    if rng is None:
        cells = _cancel_incrementally(p, d.cells)
    else:
        cells = list(d.cells)
        while True:
            found = list(_dipoles(p, cells))
            if not found:
                break
            cells = _delete(p, cells, *rng.choice(found))
    return Diagram(p, d.top, tuple(_normal_cells(p, cells)))


def equal(d1: Diagram, d2: Diagram) -> bool:
    if d1.presentation != d2.presentation:
        raise PresentationMismatch("diagrams over different presentations")
    return d1.top == d2.top and reduce(d1).cells == reduce(d2).cells


def random_diagram(p: Presentation, top: Word, length: int, rng: random.Random) -> Diagram:
    """Random walk of ``length`` relation applications starting at ``top``."""
    word = top
    cells = []
    for _ in range(length):
        options = applicable_cells(word, p)
        if not options:
            break
        offset, rel, direction = rng.choice(options)
        cells.append(Cell(offset, rel, direction))
        word = apply_relation(p, word, rel, direction, offset)
    return Diagram(p, top, tuple(cells))


# JSON

def diagram_to_json(d: Diagram) -> dict:
    return {
        "presentation": presentation_to_json(d.presentation),
        "top": word_to_json(d.top),
        "cells": [{"offset": c.offset, "rel": c.relation, "dir": c.direction.code} for c in d.cells],
    }


def diagram_from_json(data) -> Diagram:
    try:
        p = presentation_from_json(data["presentation"])
        top = word_from_json(data["top"])
        cells = [(c["offset"], c["rel"], Direction.from_code(c["dir"])) for c in data["cells"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed diagram JSON: {exc}") from None
    return make_diagram(p, top, cells)


def format_diagram(d: Diagram) -> str:
    cells = " ".join(f"({c.offset},r{c.relation},{c.direction.code})" for c in d.cells)
    head = f"{format_word(d.top, d.presentation)} -> {format_word(d.bottom, d.presentation)}"
    return f"{head} : {cells}" if cells else head
