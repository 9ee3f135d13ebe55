"""Exception hierarchy.

Every domain failure raises a subclass of :class:`DiagramKitError`; the CLI
prints the class name on stderr and exits with status 1.
"""

from __future__ import annotations


class DiagramKitError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(DiagramKitError):
    pass


# presentations and words

class EmptyAlphabet(DiagramKitError):
    pass


class EmptyWord(DiagramKitError):
    pass


class LetterOutOfRange(DiagramKitError):
    pass


class DuplicateRelation(DiagramKitError):
    pass


class TrivialRelation(DiagramKitError):
    pass


class RelationOutOfRange(DiagramKitError):
    pass


class OffsetOutOfRange(DiagramKitError):
    pass


class SubwordMismatch(DiagramKitError):
    pass


# diagrams

class ChainBreak(DiagramKitError):
    """A cell in a diagram's chain does not apply to the running word."""

    def __init__(self, index: int, word: tuple[int, ...], reason: str = ""):
        self.index = index
        self.word = tuple(word)
        text = "".join(f"x{a + 1}" for a in self.word) or "(empty)"
        msg = f"cell {index} does not apply to running word {text}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class BoundaryMismatch(DiagramKitError):
    pass


class PresentationMismatch(DiagramKitError):
    pass


# braids

class SlotOutOfRange(DiagramKitError):
    pass


class NotPure(DiagramKitError):
    pass


class StrandCountMismatch(DiagramKitError):
    pass


class WrongBaseWord(DiagramKitError):
    pass


# complexes

class VertexBudgetExceeded(DiagramKitError):
    pass


class DimensionOutOfRange(DiagramKitError):
    pass
