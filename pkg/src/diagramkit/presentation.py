"""Semigroup presentations, positive words and single-step rewriting.

Letters are 0-based integers internally and print 1-based as ``x1, x2, ...``.
A word is a plain tuple of letters.  A relation ``lhs = rhs`` is stored once,
in the orientation it was given; applying it ``FORWARD`` replaces an occurrence
of ``lhs`` by ``rhs`` and ``BACKWARD`` does the opposite.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateRelation,
    EmptyAlphabet,
    EmptyWord,
    LetterOutOfRange,
    OffsetOutOfRange,
    ParseError,
    RelationOutOfRange,
    SubwordMismatch,
    TrivialRelation,
)

Word = tuple[int, ...]


class Direction(enum.IntEnum):
    FORWARD = 0
    BACKWARD = 1

    @property
    def opposite(self) -> "Direction":
        return Direction(1 - self)

    @property
    def code(self) -> str:
        return "F" if self is Direction.FORWARD else "B"

    @classmethod
    def from_code(cls, code: str) -> "Direction":
        try:
            return {"F": cls.FORWARD, "B": cls.BACKWARD}[code]
        except KeyError:
            raise ParseError(f"direction must be 'F' or 'B', got {code!r}") from None


FORWARD = Direction.FORWARD
BACKWARD = Direction.BACKWARD


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    index: int

    def source(self, direction: Direction) -> Word:
        return self.lhs if direction == FORWARD else self.rhs

    def target(self, direction: Direction) -> Word:
        return self.rhs if direction == FORWARD else self.lhs


@dataclass(frozen=True)
class Presentation:
    alphabet_size: int
    relations: tuple[Relation, ...]
    letter_names: tuple[str, ...] | None = None
    # side word -> [(relation index, direction)] for which it is the source
    _sources: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        sources: dict[Word, list[tuple[int, Direction]]] = {}
        for rel in self.relations:
            sources.setdefault(rel.lhs, []).append((rel.index, FORWARD))
            sources.setdefault(rel.rhs, []).append((rel.index, BACKWARD))
        object.__setattr__(self, "_sources", sources)

    @property
    def length_preserving(self) -> bool:
        return all(len(r.lhs) == len(r.rhs) for r in self.relations)

    def relation(self, index: int) -> Relation:
        if not 0 <= index < len(self.relations):
            raise RelationOutOfRange(f"relation index {index} not in [0, {len(self.relations)})")
        return self.relations[index]

    def letter_name(self, letter: int) -> str:
        if self.letter_names is not None:
            return self.letter_names[letter]
        return f"x{letter + 1}"


def check_word(word: Sequence[int], alphabet_size: int) -> Word:
    word = tuple(word)
    if not word:
        raise EmptyWord("words must be nonempty")
    for letter in word:
        if not 0 <= letter < alphabet_size:
            raise LetterOutOfRange(f"letter index {letter} not in [0, {alphabet_size})")
    return word


def make_presentation(
    alphabet_size: int,
    relations: Iterable[tuple[Sequence[int], Sequence[int]]],
    letter_names: Sequence[str] | None = None,
) -> Presentation:
    """Validate and build a presentation; relations keep their input order and orientation."""
    if alphabet_size < 1:
        raise EmptyAlphabet("alphabet_size must be at least 1")
    if letter_names is not None:
        letter_names = tuple(letter_names)
        if len(letter_names) != alphabet_size:
            raise ParseError("letter_names must have one entry per letter")
    seen: set[frozenset] = set()
    rels = []
    for lhs, rhs in relations:
        lhs = check_word(lhs, alphabet_size)
        rhs = check_word(rhs, alphabet_size)
        if lhs == rhs:
            raise TrivialRelation(f"relation {list(lhs)} = {list(rhs)} is trivial")
        key = frozenset((lhs, rhs))
        if key in seen:
            raise DuplicateRelation(f"relation {list(lhs)} = {list(rhs)} occurs twice")
        seen.add(key)
        rels.append(Relation(lhs, rhs, len(rels)))
    return Presentation(alphabet_size, tuple(rels), letter_names)


@functools.lru_cache(maxsize=None)
def planar_presentation(n: int) -> Presentation:
    """The commutation presentation ``<x1..xn | xi xj = xj xi, i < j>``."""
    if n < 1:
        raise EmptyAlphabet("n must be at least 1")
    pairs = [((i, j), (j, i)) for i in range(n) for j in range(i + 1, n)]
    return make_presentation(n, pairs)


def planar_relation_index(n: int, a: int, b: int) -> int:
    """Index of the relation ``x_a x_b = x_b x_a`` (a < b, 0-based) in ``planar_presentation(n)``."""
    # pairs (i, j) are listed lexicographically
    return a * n - a * (a + 1) // 2 + (b - a - 1)


def base_word(n: int) -> Word:
    return tuple(range(n))


def apply_relation(
    p: Presentation, word: Word, relation_index: int, direction: Direction, offset: int
) -> Word:
    rel = p.relation(relation_index)
    source = rel.source(direction)
    if offset < 0 or offset + len(source) > len(word):
        raise OffsetOutOfRange(
            f"offset {offset} with source length {len(source)} exceeds word length {len(word)}"
        )
    if word[offset:offset + len(source)] != source:
        raise SubwordMismatch(
            f"subword at {offset} is {list(word[offset:offset + len(source)])}, expected {list(source)}"
        )
    return word[:offset] + rel.target(direction) + word[offset + len(source):]


def applicable_cells(word: Word, p: Presentation) -> list[tuple[int, int, Direction]]:
    """All (offset, relation_index, direction) at which a relation applies, sorted."""
    lengths = sorted({len(side) for side in p._sources})
    found = []
    for offset in range(len(word)):
        for length in lengths:
            if offset + length > len(word):
                break
            for rel_index, direction in p._sources.get(word[offset:offset + length], ()):
                found.append((offset, rel_index, direction))
    found.sort()
    return found


# text and JSON formats

_LETTER = re.compile(r"x(\d+)")


def parse_word(text: str, alphabet_size: int | None = None) -> Word:
    """Parse ``x1x2x3`` or ``x1.x2.x3`` (1-based) into a 0-based word."""
    text = text.strip()
    pos = 0
    letters = []
    while pos < len(text):
        if text[pos] == "." and letters:
            pos += 1
        m = _LETTER.match(text, pos)
        if m is None:
            raise ParseError(f"cannot parse word {text!r} at position {pos}")
        k = int(m.group(1))
        if k < 1:
            raise LetterOutOfRange(f"letter x{k}: letters are numbered from 1")
        letters.append(k - 1)
        pos = m.end()
    if alphabet_size is not None:
        return check_word(letters, alphabet_size)
    if not letters:
        raise EmptyWord("words must be nonempty")
    return tuple(letters)


def format_word(word: Word, p: Presentation | None = None) -> str:
    if p is None:
        return "".join(f"x{a + 1}" for a in word)
    return "".join(p.letter_name(a) for a in word)


def word_to_json(word: Word) -> list[int]:
    return [a + 1 for a in word]


def word_from_json(data) -> Word:
    if not isinstance(data, list) or not all(isinstance(a, int) for a in data):
        raise ParseError("a word must be a list of 1-based letter numbers")
    return tuple(a - 1 for a in data)


def presentation_to_json(p: Presentation) -> dict:
    return {
        "alphabet_size": p.alphabet_size,
        "relations": [[word_to_json(r.lhs), word_to_json(r.rhs)] for r in p.relations],
    }


def presentation_from_json(data) -> Presentation:
    try:
        size = data["alphabet_size"]
        pairs = [(word_from_json(lhs), word_from_json(rhs)) for lhs, rhs in data["relations"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed presentation JSON: {exc}") from None
    return make_presentation(size, pairs)
