"""Planar pure braids and their diagrams.

A braid on ``n`` strands is a sequence of 1-based slots read top to bottom;
slot ``s`` is a transverse crossing of the strands at positions ``s`` and
``s + 1``.  A crossing where strand ``x_a`` (on the left) passes over to the
right of ``x_b`` becomes an ``(x_a x_b, x_b x_a)``-transistor at offset
``s - 1``; for pure braids this gives a spherical diagram over the
commutation presentation at the base word ``x1 ... xn``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from .diagram import Cell, Diagram, equal, reduce
from .errors import (
    NotPure,
    ParseError,
    PresentationMismatch,
    SlotOutOfRange,
    StrandCountMismatch,
    WrongBaseWord,
)
from .presentation import BACKWARD, FORWARD, base_word, planar_presentation, planar_relation_index


@dataclass(frozen=True)
class BraidWord:
    n: int
    slots: tuple[int, ...]

    def __str__(self) -> str:
        return format_braid(self)


def make_braid(n: int, slots: Sequence[int]) -> BraidWord:
    if n < 1:
        raise StrandCountMismatch("a braid needs at least one strand")
    slots = tuple(int(s) for s in slots)
    for s in slots:
        if not 1 <= s <= n - 1:
            raise SlotOutOfRange(f"slot {s} not in [1, {n - 1}]")
    return BraidWord(n, slots)


def identity_braid(n: int) -> BraidWord:
    return make_braid(n, ())


def permutation(b: BraidWord) -> tuple[int, ...]:
    """``perm[i]`` is the end position of the strand starting at position ``i`` (0-based)."""
    at = list(range(b.n))  # at[pos] = strand currently at pos
    for s in b.slots:
        at[s - 1], at[s] = at[s], at[s - 1]
    perm = [0] * b.n
    for pos, strand in enumerate(at):
        perm[strand] = pos
    return tuple(perm)


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == tuple(range(b.n))


def _require_pure(*braids: BraidWord) -> None:
    for b in braids:
        if not is_pure(b):
            raise NotPure(f"braid {format_braid(b)} is not pure")


def _same_n(b1: BraidWord, b2: BraidWord) -> None:
    if b1.n != b2.n:
        raise StrandCountMismatch(f"{b1.n} strands vs {b2.n} strands")


def braid_to_diagram(b: BraidWord) -> Diagram:
    _require_pure(b)
    return _crossing_diagram(b)


def _crossing_diagram(b: BraidWord) -> Diagram:
    # defined for any braid; the bottom word is the permuted base word
    word = list(base_word(b.n))
    cells = []
    for s in b.slots:
        a, c = word[s - 1], word[s]
        lo, hi = min(a, c), max(a, c)
        cells.append(Cell(s - 1, planar_relation_index(b.n, lo, hi), FORWARD if a < c else BACKWARD))
        word[s - 1], word[s] = c, a
    return Diagram(planar_presentation(b.n), base_word(b.n), tuple(cells))


def diagram_to_braid(d: Diagram) -> BraidWord:
    n = d.presentation.alphabet_size
    if d.presentation != planar_presentation(n):
        raise PresentationMismatch("diagram is not over the commutation presentation")
    if d.top != base_word(n) or d.bottom != base_word(n):
        raise WrongBaseWord("diagram must have top and bottom word x1...xn")
    return BraidWord(n, tuple(c.offset + 1 for c in d.cells))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality of planar braids, pure or not, via their crossing diagrams."""
    _same_n(b1, b2)
    d1, d2 = _crossing_diagram(b1), _crossing_diagram(b2)
    return d1.bottom == d2.bottom and equal(d1, d2)


def braid_mul(b1: BraidWord, b2: BraidWord) -> BraidWord:
    _same_n(b1, b2)
    _require_pure(b1, b2)
    return BraidWord(b1.n, b1.slots + b2.slots)


def braid_inv(b: BraidWord) -> BraidWord:
    # reversal is meaningful for any braid word and keeps pure braids pure
    return BraidWord(b.n, b.slots[::-1])


def reduce_braid(b: BraidWord) -> BraidWord:
    """Braid word read off the reduced diagram of ``b``."""
    return diagram_to_braid(reduce(braid_to_diagram(b)))


def sorting_slots(perm: Sequence[int]) -> list[int]:
    """Slots of an adjacent-swap bubble sort returning a strand arrangement to the identity."""
    at = [0] * len(perm)
    for strand, pos in enumerate(perm):
        at[pos] = strand
    slots = []
    for top in range(len(at) - 1, 0, -1):
        for i in range(top):
            if at[i] > at[i + 1]:
                at[i], at[i + 1] = at[i + 1], at[i]
                slots.append(i + 1)
    return slots


def random_pure_braid(n: int, length: int, rng: random.Random) -> BraidWord:
    """Uniform random slots followed by the bubble sort that makes the braid pure."""
    if n < 2:
        return identity_braid(n)
    head = make_braid(n, [rng.randint(1, n - 1) for _ in range(length)])
    return BraidWord(n, head.slots + tuple(sorting_slots(permutation(head))))


def palindromic_pure_braid(n: int, length: int, rng: random.Random) -> BraidWord:
    """``w`` followed by its reversal: always pure (and trivial in the group)."""
    if n < 2:
        return identity_braid(n)
    head = [rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(head + head[::-1]))


# text and JSON

_HEADER = re.compile(r"n=(\d+)$")
_SLOT = re.compile(r"s(\d+)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``n=<N> s<k> s<k> ...``."""
    tokens = text.split()
    if not tokens or not _HEADER.match(tokens[0]):
        raise ParseError(f"braid text must start with n=<N>: {text!r}")
    n = int(_HEADER.match(tokens[0]).group(1))
    slots = []
    for tok in tokens[1:]:
        m = _SLOT.match(tok)
        if m is None:
            raise ParseError(f"bad braid token {tok!r}")
        slots.append(int(m.group(1)))
    return make_braid(n, slots)


def format_braid(b: BraidWord) -> str:
    return " ".join([f"n={b.n}"] + [f"s{s}" for s in b.slots])


def braid_to_json(b: BraidWord) -> dict:
    return {"n": b.n, "slots": list(b.slots)}


def braid_from_json(data) -> BraidWord:
    try:
        return make_braid(data["n"], data["slots"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed braid JSON: {exc}") from None
