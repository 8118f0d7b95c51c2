"""Index vectors over {e, c}^k and the Venn regions they address.

An index vector ``t`` is stored as a k-bit mask: bit ``i - 1`` set means
``t_i = c`` (the region lies inside ``A_i``), clear means ``t_i = e``.
Subsets of ``{1, ..., n}`` are n-bit masks with element ``p`` at bit ``p - 1``.

The canonical order of ``T(k)`` (all vectors except all-e and all-c) sorts by
number of c-coordinates, then by mask value.  For k = 3 this yields
``cee, ece, eec, cce, cec, ecc``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, NamedTuple, Sequence

from .errors import ArgumentError, InvalidCoverError

MAX_K = 16

Complement = Literal["identity", "swap"]


class IndexVector(NamedTuple):
    k: int
    mask: int

    @classmethod
    def from_string(cls, text: str) -> "IndexVector":
        """Parse a string such as ``"ceec"``; the first character is coordinate 1."""
        text = text.strip()
        if not text or set(text) - {"e", "c"}:
            raise ArgumentError(f"index vector must be a nonempty string over 'e'/'c': {text!r}")
        mask = sum(1 << i for i, ch in enumerate(text) if ch == "c")
        return cls(len(text), mask)

    def __str__(self) -> str:
        return "".join("c" if self.mask >> i & 1 else "e" for i in range(self.k))

    def coord(self, i: int) -> str:
        """Return ``'c'`` or ``'e'`` for the 1-based coordinate ``i``."""
        return "c" if self.mask >> (i - 1) & 1 else "e"

    @property
    def weight(self) -> int:
        """Number of c-coordinates."""
        return bin(self.mask).count("1")


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ArgumentError(f"k must lie in 1..{MAX_K}, got {k}")


@lru_cache(maxsize=None)
def canonical_masks(k: int) -> tuple[int, ...]:
    """Masks of ``T(k)`` in canonical order."""
    _check_k(k)
    full = (1 << k) - 1
    return tuple(sorted(range(1, full), key=lambda m: (bin(m).count("1"), m)))


@lru_cache(maxsize=None)
def position_of(k: int) -> dict[int, int]:
    """Map from mask to its position in the canonical order of ``T(k)``."""
    return {m: pos for pos, m in enumerate(canonical_masks(k))}


def full_index_space(k: int) -> tuple[IndexVector, ...]:
    """All ``2**k - 2`` vectors of ``T(k)`` in canonical order."""
    return tuple(IndexVector(k, m) for m in canonical_masks(k))


def _check_permutation(pi: Sequence[int], k: int) -> None:
    if len(pi) != k or sorted(pi) != list(range(1, k + 1)):
        raise ArgumentError(f"{list(pi)} is not a permutation of 1..{k}")


def permute_mask(mask: int, pi: Sequence[int]) -> int:
    """``(t o pi)_i = t_{pi(i)}`` on raw masks; ``pi`` is 1-based, unchecked."""
    out = 0
    for i, target in enumerate(pi):
        if mask >> (target - 1) & 1:
            out |= 1 << i
    return out


def apply_permutation(t: IndexVector, pi: Sequence[int]) -> IndexVector:
    """Relabel coordinates: the result has ``t_{pi(i)}`` in coordinate ``i``.

    ``pi`` is given in one-line notation ``(pi(1), ..., pi(k))``.
    """
    _check_permutation(pi, t.k)
    return IndexVector(t.k, permute_mask(t.mask, pi))


def apply_complement(alpha: Complement, t: IndexVector) -> IndexVector:
    """Apply ``identity`` or ``swap`` (exchange e and c in every coordinate)."""
    if alpha == "identity":
        return t
    if alpha == "swap":
        return IndexVector(t.k, t.mask ^ ((1 << t.k) - 1))
    raise ArgumentError(f"unknown complement map {alpha!r}")


def compose(pi: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """One-line notation of ``pi o sigma``, i.e. ``i -> pi(sigma(i))``."""
    return tuple(pi[s - 1] for s in sigma)


def subset_mask(elements: Iterable[int], n: int) -> int:
    mask = 0
    for p in elements:
        if not 1 <= p <= n:
            raise ArgumentError(f"element {p} outside 1..{n}")
        mask |= 1 << (p - 1)
    return mask


def mask_elements(mask: int) -> list[int]:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


@dataclass(frozen=True)
class Cover:
    """An ordered sequence of ``k`` subsets of ``{1, ..., n}`` stored as bit masks."""

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"n must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if any(s & ~full for s in self.sets):
            raise ArgumentError("set contains an element outside 1..n")

    @classmethod
    def from_lists(cls, n: int, sets: Iterable[Iterable[int]]) -> "Cover":
        return cls(n, tuple(subset_mask(s, n) for s in sets))

    @property
    def k(self) -> int:
        return len(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [mask_elements(s) for s in self.sets]

    def to_json(self) -> str:
        return json.dumps(self.as_lists())

    @classmethod
    def from_json(cls, n: int, text: str) -> "Cover":
        return cls.from_lists(n, json.loads(text))

    def is_constructive(self) -> bool:
        full = (1 << self.n) - 1
        union = 0
        for s in self.sets:
            union |= s
        if union != full:
            return False
        return all(a & ~b for i, a in enumerate(self.sets)
                   for j, b in enumerate(self.sets) if i != j)

    def validate(self) -> None:
        """Raise :class:`InvalidCoverError` unless the cover is constructive."""
        if not 1 <= self.k <= self.n:
            raise InvalidCoverError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if not self.is_constructive():
            raise InvalidCoverError(f"not a constructive cover: {self.as_lists()}")


def region_mask(cover: Cover, t_mask: int) -> int:
    full = (1 << cover.n) - 1
    region = full
    for i, s in enumerate(cover.sets):
        region &= s if t_mask >> i & 1 else full & ~s
    return region


def region_of(cover: Cover, t: IndexVector) -> frozenset[int]:
    """The elements lying in exactly the sets ``A_i`` with ``t_i = c``."""
    if cover.k != t.k:
        raise ArgumentError(f"cover has k={cover.k} but index vector has k={t.k}")
    return frozenset(mask_elements(region_mask(cover, t.mask)))
