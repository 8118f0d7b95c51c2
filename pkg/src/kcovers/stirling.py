"""Stirling numbers of the second kind and integrated Stirling numbers.

Both triangles are generated by their three-term recurrences over Python
integers, so every value is exact.  Rows are memoized and shared by all
callers.

The integrated Stirling number ``isn(n, l)`` counts ordered ``l``-partitions
of all subsets of an ``n``-set, divided by ``l!``; equivalently
``sum(comb(n, i) * stirling(i, l) for i in 1..n)``.
"""

from __future__ import annotations

import csv
import io
import math
import threading
from dataclasses import dataclass
from typing import Literal, TextIO

from .errors import ArgumentError, ResourceCapError

Kind = Literal["stirling", "isn"]

DEFAULT_MAX_N = 10_000

_lock = threading.Lock()
# _rows[kind][n - 1] is the tuple (values(n, 1), ..., values(n, n)).
_rows: dict[str, list[tuple[int, ...]]] = {"stirling": [(1,)], "isn": [(1,)]}


def _extend(kind: str, n: int) -> None:
    rows = _rows[kind]
    if len(rows) >= n:
        return
    with _lock:
        # ``l + 1`` multiplier for ISNs, ``l`` for ordinary Stirling numbers.
        shift = 1 if kind == "isn" else 0
        while len(rows) < n:
            m = len(rows)  # previous row index n - 1 == m
            prev = rows[-1]
            first = (1 << (m + 1)) - 1 if kind == "isn" else 1
            row = [first]
            for ell in range(2, m + 1):
                row.append((ell + shift) * prev[ell - 1] + prev[ell - 2])
            row.append(1)
            rows.append(tuple(row))


def _check(n: int, ell: int) -> None:
    if n < 1 or ell < 1:
        raise ArgumentError(f"n and ell must be positive, got n={n}, ell={ell}")


def stirling(n: int, ell: int) -> int:
    """Return the Stirling number of the second kind ``s(n, ell)``.

    ``s(n, ell)`` is zero when ``n < ell``.

    >>> stirling(6, 3)
    90
    """
    _check(n, ell)
    if ell > n:
        return 0
    _extend("stirling", n)
    return _rows["stirling"][n - 1][ell - 1]


def isn(n: int, ell: int) -> int:
    """Return the integrated Stirling number ``s~(n, ell)``.

    >>> isn(10, 2)
    28501
    """
    _check(n, ell)
    if ell > n:
        return 0
    _extend("isn", n)
    return _rows["isn"][n - 1][ell - 1]


def ordered_partition_count(n: int, ell: int) -> int:
    """Number of ordered ``ell``-partitions of an ``n``-set, ``ell! * s(n, ell)``."""
    return math.factorial(ell) * stirling(n, ell)


@dataclass(frozen=True)
class CountTable:
    """Lower-triangular table of ``values(n, l)`` for ``1 <= l <= n <= max_n``."""

    kind: Kind
    max_n: int
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, ell = key
        if not (1 <= n <= self.max_n) or ell < 1:
            raise IndexError(key)
        if ell > n:
            return 0
        return self.values[n - 1][ell - 1]

    def row(self, n: int) -> tuple[int, ...]:
        return self.values[n - 1]

    def cells(self):
        """Yield ``(n, l, value)`` in row-major order."""
        for n, row in enumerate(self.values, start=1):
            for ell, value in enumerate(row, start=1):
                yield n, ell, value

    def write_csv(self, stream: TextIO, *, header: bool = True) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        if header:
            writer.writerow(["n", "l", "value"])
        for n, ell, value in self.cells():
            writer.writerow([n, ell, str(value)])

    def to_csv(self, *, header: bool = True) -> str:
        buf = io.StringIO()
        self.write_csv(buf, header=header)
        return buf.getvalue()


def build_table(kind: Kind, max_n: int, *, cap: int = DEFAULT_MAX_N) -> CountTable:
    """Materialize the full triangle of ``kind`` up to row ``max_n``.

    Raises
    ------
    ArgumentError
        If ``kind`` is unknown or ``max_n < 1``.
    ResourceCapError
        If ``max_n`` exceeds ``cap``.
    """
    if kind not in _rows:
        raise ArgumentError(f"unknown table kind {kind!r}")
    if max_n < 1:
        raise ArgumentError(f"max_n must be positive, got {max_n}")
    if max_n > cap:
        raise ResourceCapError(f"max_n={max_n} exceeds the cap of {cap}")
    _extend(kind, max_n)
    return CountTable(kind, max_n, tuple(_rows[kind][:max_n]))
