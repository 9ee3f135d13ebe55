"""Exact Smith normal form over the integers.

Everything here uses Python ints, so there is no overflow to guard against.
Two routes are provided: a dense algorithm that can also return the unimodular
transforms ``U``, ``V`` with ``U @ M @ V == S``, and a sparse route for large
boundary matrices that first eliminates unit pivots and then hands the
(usually tiny) remainder to the dense algorithm.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse integer matrix; ``entries`` holds only nonzero values."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
            if v == 0:
                raise ValueError("entries must be nonzero")

    __hash__ = None

    @classmethod
    def from_dense(cls, rows: list[list[int]], ncols: int | None = None) -> "IntegerMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {(i, j): int(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(len(rows), ncols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row = defaultdict(list)
        for (k, j), v in other.entries.items():
            by_row[k].append((j, v))
        acc: dict = defaultdict(int)
        for (i, k), v in self.entries.items():
            for j, w in by_row.get(k, ()):
                acc[i, j] += v * w
        return IntegerMatrix(self.rows, other.cols, {key: v for key, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    def to_triplets(self) -> str:
        """Sparse text export: a ``rows cols`` header then one ``row col value`` line per entry."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{i} {j} {v}" for (i, j), v in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text: str) -> "IntegerMatrix":
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        rows, cols = map(int, lines[0])
        return cls(rows, cols, {(int(i), int(j)): int(v) for i, j, v in lines[1:]})


@dataclass(frozen=True)
class SNFResult:
    divisors: tuple[int, ...]
    rank: int
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None

    __hash__ = None


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] if Bt else [0] * n for row in A]


def _dense_snf(A: list[list[int]], U=None, V=None) -> list[int]:
    """Diagonalize ``A`` in place; ``U``/``V`` (if given) accumulate row/column operations."""
    m = len(A)
    n = len(A[0]) if m else 0

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row dst += q * row src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        for row in A:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    divisors = []
    for t in range(min(m, n)):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
            if pivot is not None and pivot[0] == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[1])
        swap_cols(t, pivot[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            # remainders left behind are smaller than the pivot; bring the smallest up
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), "row", i)
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), "col", j)
            if best is not None:
                if best[1] == "row":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
        divisors.append(A[t][t])
    return divisors


def _eliminate_units(M: IntegerMatrix) -> tuple[int, list[list[int]]]:
    """Pivot on ±1 entries until none are left.

    Returns the number of pivots and the remaining block as a dense matrix.
    Each unit pivot contributes a divisor 1 and leaves the other divisors alone.
    """
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    cols: dict[int, set[int]] = defaultdict(set)
    for (i, j), v in M.entries.items():
        rows[i][j] = v
        cols[j].add(i)
    pivots = 0
    while True:
        choice = None
        for i, row in rows.items():
            if choice is not None and len(row) >= choice[0]:
                continue
            for j, v in row.items():
                if v in (1, -1) and (choice is None or (len(row), len(cols[j])) < choice[:2]):
                    choice = (len(row), len(cols[j]), i, j)
        if choice is None:
            break
        _, _, r, c = choice
        prow = rows.pop(r)
        u = prow[c]
        for i in list(cols[c]):
            if i == r:
                continue
            row = rows[i]
            q = row[c] * u
            for j, v in prow.items():
                w = row.get(j, 0) - q * v
                if w:
                    if j not in row:
                        cols[j].add(i)
                    row[j] = w
                elif j in row:
                    del row[j]
                    cols[j].discard(i)
            if not row:
                del rows[i]
        for j in prow:
            cols[j].discard(r)
        del cols[c]
        pivots += 1
    live_cols = sorted({j for row in rows.values() for j in row})
    index = {j: k for k, j in enumerate(live_cols)}
    dense = []
    for i in sorted(rows):
        line = [0] * len(live_cols)
        for j, v in rows[i].items():
            line[index[j]] = v
        dense.append(line)
    return pivots, dense


def smith_normal_form(M: IntegerMatrix, transforms: bool = False) -> SNFResult:
    """Nonzero invariant factors of ``M`` (a divisibility chain) and its rank.

    With ``transforms=True`` the unimodular ``U`` and ``V`` are returned as
    dense lists and ``U @ M @ V`` is checked against the diagonal form.
    """
    if not transforms:
        units, rest = _eliminate_units(M)
        tail = _dense_snf(rest) if rest else []
        divisors = (1,) * units + tuple(tail)
        return SNFResult(divisors, len(divisors))
    A = M.to_dense()
    U = _identity(M.rows)
    V = _identity(M.cols)
    divisors = _dense_snf(A, U, V)
    S = [[0] * M.cols for _ in range(M.rows)]
    for k, d in enumerate(divisors):
        S[k][k] = d
    if _matmul(_matmul(U, M.to_dense()), V) != S:
        raise ArithmeticError("Smith normal form transform check failed")
    return SNFResult(tuple(divisors), len(divisors), U, V)
