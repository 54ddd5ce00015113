"""Integer partitions and standard Young tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional

Partition = tuple


def check_partition(lam) -> tuple[int, ...]:
    """Validate and normalize a partition (weakly decreasing positive parts)."""
    parts = tuple(int(c) for c in lam)
    if any(c <= 0 for c in parts):
        raise ValueError(f"partition parts must be positive: {lam!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")
    return parts


def transpose(lam) -> tuple[int, ...]:
    """Conjugate partition.

    >>> transpose((4, 3, 1))
    (3, 2, 2, 1)
    """
    parts = check_partition(lam)
    if not parts:
        return ()
    return tuple(sum(1 for r in parts if r > c) for c in range(parts[0]))


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau, stored as rows of entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        check_partition(tuple(len(r) for r in rows))
        n = sum(len(r) for r in rows)
        seen = sorted(x for r in rows for x in r)
        if seen != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError("rows must increase left to right")
        for i in range(len(rows) - 1):
            for c in range(len(rows[i + 1])):
                if rows[i][c] >= rows[i + 1][c]:
                    raise ValueError("columns must increase top to bottom")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def _positions(self) -> dict:
        return {
            value: (i, j)
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
        }

    def position(self, value: int) -> tuple[int, int]:
        """(row, column) of an entry, 0-indexed."""
        return self._positions[value]

    def entry_below(self, value: int) -> Optional[int]:
        """The entry directly below ``value`` in its column, if any."""
        i, j = self.position(value)
        if i + 1 < len(self.rows) and j < len(self.rows[i + 1]):
            return self.rows[i + 1][j]
        return None

    def column_of(self, value: int) -> int:
        return self.position(value)[1]

    def __str__(self) -> str:
        return "/".join("{" + ",".join(map(str, r)) + "}" for r in self.rows)


@lru_cache(maxsize=None)
def _syt_rows(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for i, length in enumerate(shape):
        # n sits in a removable corner
        if i == len(shape) - 1 or length > shape[i + 1]:
            sub = list(shape)
            sub[i] -= 1
            while sub and sub[-1] == 0:
                sub.pop()
            for rows in _syt_rows(tuple(sub)):
                grown = [list(r) for r in rows]
                while len(grown) <= i:
                    grown.append([])
                grown[i].append(n)
                out.append(tuple(tuple(r) for r in grown))
    return tuple(sorted(out))


def standard_tableaux(shape) -> tuple[StandardTableau, ...]:
    """All standard Young tableaux of the given shape.

    >>> len(standard_tableaux((2, 1)))
    2
    """
    return tuple(StandardTableau(rows) for rows in _syt_rows(check_partition(shape)))


def row_reading_tableau(shape) -> StandardTableau:
    """The tableau filling 1..n row by row, left to right."""
    parts = check_partition(shape)
    rows, start = [], 1
    for length in parts:
        rows.append(tuple(range(start, start + length)))
        start += length
    return StandardTableau(tuple(rows))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
