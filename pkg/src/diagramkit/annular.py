"""A combinatorial model of annular planar pure braids.

An element is ``C * rho^r``: a sequence ``C`` of crossings at cyclic slots
followed by ``r`` rigid rotations.  Cyclic slot ``s`` (0-based) crosses the
strands at positions ``s`` and ``s + 1 mod n``; slot ``n - 1`` is the one
that wraps past the basepoint ray.  One unit of rotation moves every strand
one position forward, so that ``rho * s = (s - 1) * rho``.

Purity is a condition on the crossings alone: the positions permuted by
``C`` must come back to themselves.

Crossings that share a strand position do not commute; two crossings at the
same slot with nothing touching that slot in between cancel, exactly as a
dipole does in a linear diagram.  The reduced form is the least
lexicographic ordering of the remaining crossings.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import NotPure, ParseError, SlotOutOfRange, StrandCountMismatch


@dataclass(frozen=True)
class AnnularElement:
    n: int
    rotation: int
    slots: tuple[int, ...]

    def __str__(self) -> str:
        return format_annular(self)


def _positions(n: int, s: int) -> frozenset[int]:
    return frozenset((s, (s + 1) % n))


def _touch(n: int, s: int, t: int) -> bool:
    return bool(_positions(n, s) & _positions(n, t))


def crossing_permutation(n: int, slots: Sequence[int]) -> tuple[int, ...]:
    """``perm[i]``: final position of the strand starting at position ``i``, ignoring rotation."""
    at = list(range(n))
    for s in slots:
        t = (s + 1) % n
        at[s], at[t] = at[t], at[s]
    perm = [0] * n
    for pos, strand in enumerate(at):
        perm[strand] = pos
    return tuple(perm)


def a_make(n: int, rotation: int, slots: Sequence[int], require_pure: bool = True) -> AnnularElement:
    if n < 1:
        raise StrandCountMismatch("an annular braid needs at least one strand")
    slots = tuple(int(s) for s in slots)
    for s in slots:
        if n < 2 or not 0 <= s <= n - 1:
            raise SlotOutOfRange(f"cyclic slot {s} not valid for {n} strands")
    if require_pure and crossing_permutation(n, slots) != tuple(range(n)):
        raise NotPure(f"crossings {list(slots)} do not return the strands to their positions")
    return AnnularElement(n, int(rotation), slots)


def a_identity(n: int) -> AnnularElement:
    return AnnularElement(n, 0, ())


def _shift(slots: Sequence[int], by: int, n: int) -> tuple[int, ...]:
    return tuple((s - by) % n for s in slots)


def _same_n(e1: AnnularElement, e2: AnnularElement) -> None:
    if e1.n != e2.n:
        raise StrandCountMismatch(f"{e1.n} strands vs {e2.n} strands")


def a_compose(e1: AnnularElement, e2: AnnularElement) -> AnnularElement:
    """``e1`` stacked on top of ``e2``; crossings of ``e2`` move past ``e1``'s rotation."""
    _same_n(e1, e2)
    return AnnularElement(e1.n, e1.rotation + e2.rotation,
                          e1.slots + _shift(e2.slots, e1.rotation, e1.n))


def a_invert(e: AnnularElement) -> AnnularElement:
    return AnnularElement(e.n, -e.rotation, _shift(e.slots[::-1], -e.rotation, e.n))


def _cancel(n: int, slots: Sequence[int]) -> list[int]:
    out: list[int] = []
    for s in slots:
        for k in range(len(out) - 1, -1, -1):
            if out[k] == s:
                del out[k]
                break
            if _touch(n, out[k], s):
                out.append(s)
                break
        else:
            out.append(s)
    return out


def _least_order(n: int, slots: Sequence[int]) -> list[int]:
    succ: list[list[int]] = [[] for _ in slots]
    indeg = [0] * len(slots)
    last: dict[int, int] = {}
    for idx, s in enumerate(slots):
        preds = {last[pos] for pos in _positions(n, s) if pos in last}
        for pos in _positions(n, s):
            last[pos] = idx
        indeg[idx] = len(preds)
        for q in preds:
            succ[q].append(idx)
    heap = [(s, idx) for idx, s in enumerate(slots) if indeg[idx] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        s, idx = heapq.heappop(heap)
        out.append(s)
        for nxt in succ[idx]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(heap, (slots[nxt], nxt))
    return out


def a_reduce(e: AnnularElement) -> AnnularElement:
    return AnnularElement(e.n, e.rotation, tuple(_least_order(e.n, _cancel(e.n, e.slots))))


def a_equal(e1: AnnularElement, e2: AnnularElement) -> bool:
    _same_n(e1, e2)
    return a_reduce(e1) == a_reduce(e2)


def endpoint_data(e: AnnularElement) -> tuple[int, ...]:
    """Net displacement of each strand, in positions, lifted to the integers.

    Crossings move one strand forward and one back by a position; each unit
    of rotation moves every strand forward by one.  The end position of strand
    ``i`` is ``(i + d[i]) mod n`` and ``d[i] // n`` counts its full turns.
    """
    n = e.n
    at = list(range(n))
    disp = [0] * n
    for s in e.slots:
        t = (s + 1) % n
        a, b = at[s], at[t]
        disp[a] += 1
        disp[b] -= 1
        at[s], at[t] = b, a
    return tuple(d + e.rotation for d in disp)


def track_composite(e1: AnnularElement, e2: AnnularElement) -> tuple[int, ...]:
    """Endpoint data of ``e1`` followed by ``e2``, by following each strand through both."""
    _same_n(e1, e2)
    n = e1.n
    d1 = endpoint_data(e1)
    d2 = endpoint_data(e2)
    out = []
    for i in range(n):
        mid = (i + d1[i]) % n
        out.append(d1[i] + d2[mid])
    return tuple(out)


def random_element(n: int, length: int, rng: random.Random, max_rotation: int = 2) -> AnnularElement:
    """Random pure element: random cyclic crossings, then an adjacent-swap sort back to purity."""
    if n < 2:
        return AnnularElement(n, rng.randint(-max_rotation, max_rotation), ())
    head = [rng.randrange(n) for _ in range(length)]
    perm = crossing_permutation(n, head)
    at = [0] * n
    for strand, pos in enumerate(perm):
        at[pos] = strand
    tail = []
    for top in range(n - 1, 0, -1):
        for i in range(top):
            if at[i] > at[i + 1]:
                at[i], at[i + 1] = at[i + 1], at[i]
                tail.append(i)
    return AnnularElement(n, rng.randint(-max_rotation, max_rotation), tuple(head + tail))


# text and JSON

def parse_annular(text: str, require_pure: bool = True) -> AnnularElement:
    """Parse ``n=<N> r=<k> c<s> ...`` with 0-based cyclic slots."""
    tokens = text.split()
    n = rotation = None
    slots = []
    for tok in tokens:
        if (m := re.fullmatch(r"n=(\d+)", tok)) and n is None:
            n = int(m.group(1))
        elif (m := re.fullmatch(r"r=(-?\d+)", tok)) and rotation is None:
            rotation = int(m.group(1))
        elif m := re.fullmatch(r"c(\d+)", tok):
            slots.append(int(m.group(1)))
        else:
            raise ParseError(f"bad annular token {tok!r}")
    if n is None:
        raise ParseError(f"annular text must contain n=<N>: {text!r}")
    return a_make(n, rotation or 0, slots, require_pure=require_pure)


def format_annular(e: AnnularElement) -> str:
    return " ".join([f"n={e.n}", f"r={e.rotation}"] + [f"c{s}" for s in e.slots])


def annular_to_json(e: AnnularElement) -> dict:
    return {"n": e.n, "rotation": e.rotation, "slots": list(e.slots)}


def annular_from_json(data, require_pure: bool = True) -> AnnularElement:
    try:
        return a_make(data["n"], data["rotation"], data["slots"], require_pure=require_pure)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed annular JSON: {exc}") from None
