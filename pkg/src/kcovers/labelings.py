"""Labelings of the proper Venn regions of a k-cover.

A labeling marks each index vector of ``T(k)`` as non-empty (1) or empty (0).
It is stored as an integer whose bit ``pos`` belongs to the vector at
position ``pos`` of the canonical order (see :mod:`kcovers.index_space`).

A labeling is *feasible* (a member of ``G(k)``) when every ordered pair
``i != j`` has at least one marked vector with ``t_i = c`` and ``t_j = e``,
i.e. ``A_i \\ A_j`` is non-empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArgumentError, InvalidCoverError
from .index_space import (
    MAX_K,
    Cover,
    IndexVector,
    canonical_masks,
    position_of,
    region_mask,
)


@dataclass(frozen=True)
class Labeling:
    k: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ArgumentError(f"labeling bits do not fit T({self.k})")

    @property
    def length(self) -> int:
        return (1 << self.k) - 2

    @classmethod
    def from_string(cls, k: int, text: str) -> "Labeling":
        """Parse a 0/1 string in canonical ``T(k)`` order."""
        if len(text) != (1 << k) - 2 or set(text) - {"0", "1"}:
            raise ArgumentError(f"expected a 0/1 string of length {(1 << k) - 2}: {text!r}")
        return cls(k, sum(1 << pos for pos, ch in enumerate(text) if ch == "1"))

    @classmethod
    def from_vectors(cls, k: int, vectors: Iterable[IndexVector | str]) -> "Labeling":
        """Labeling marking exactly the given index vectors."""
        pos = position_of(k)
        bits = 0
        for t in vectors:
            if isinstance(t, str):
                t = IndexVector.from_string(t)
            if t.k != k or t.mask not in pos:
                raise ArgumentError(f"{t} is not in T({k})")
            bits |= 1 << pos[t.mask]
        return cls(k, bits)

    @classmethod
    def all_ones(cls, k: int) -> "Labeling":
        return cls(k, (1 << ((1 << k) - 2)) - 1)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> p & 1 else "0" for p in range(self.length))

    def marked(self) -> list[IndexVector]:
        """Marked index vectors in canonical order."""
        masks = canonical_masks(self.k)
        return [IndexVector(self.k, masks[p]) for p in range(self.length) if self.bits >> p & 1]

    def __iter__(self):
        return (self.bits >> p & 1 for p in range(self.length))


@lru_cache(maxsize=None)
def pair_supports(k: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """For each ordered pair ``(i, j)``, the positions of ``T(k)`` with
    ``t_i = c`` and ``t_j = e``, as a bit mask.  Pairs are 1-based and sorted."""
    masks = canonical_masks(k)
    out = []
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            support = 0
            for pos, m in enumerate(masks):
                if m >> i & 1 and not m >> j & 1:
                    support |= 1 << pos
            out.append(((i + 1, j + 1), support))
    return tuple(out)


def is_feasible_bits(k: int, bits: int) -> bool:
    return all(bits & support for _, support in pair_supports(k))


def satisfies_cover_constraints(x: Labeling) -> bool:
    """True iff ``x`` lies in ``G(k)``: every ordered pair is witnessed."""
    return is_feasible_bits(x.k, x.bits)


def weight(x: Labeling) -> int:
    return bin(x.bits).count("1")


@lru_cache(maxsize=None)
def _ell0_search(k: int) -> tuple[int, tuple[int, ...]]:
    masks = canonical_masks(k)
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    cover = []
    for m in masks:
        c = 0
        for bit, (i, j) in enumerate(pairs):
            if m >> i & 1 and not m >> j & 1:
                c |= 1 << bit
        cover.append(c)
    goal = (1 << len(pairs)) - 1
    best = max(bin(c).count("1") for c in cover)
    lower = -(-len(pairs) // best)
    count = len(masks)

    def search(start: int, covered: int, left: int, chosen: list[int]) -> bool:
        if covered == goal:
            return True
        if left == 0:
            return False
        missing = len(pairs) - bin(covered).count("1")
        if missing > left * best:
            return False
        for pos in range(start, count - left + 1):
            chosen.append(pos)
            if search(pos + 1, covered | cover[pos], left - 1, chosen):
                return True
            chosen.pop()
        return False

    for size in range(lower, k + 1):
        chosen: list[int] = []
        if search(0, 0, size, chosen):
            return size, tuple(chosen)
    raise AssertionError("the k singleton vectors always witness every pair")


def ell0(k: int) -> int:
    """Smallest number of marked regions any feasible labeling can have.

    Exact iterative-deepening search over subset size of ``T(k)``, from a
    pair-counting lower bound up to ``k``.  Practical for ``k <= 6``.
    """
    if not 2 <= k <= MAX_K:
        raise ArgumentError(f"ell0 is defined here for 2 <= k <= {MAX_K}, got {k}")
    return _ell0_search(k)[0]


def ell0_witness(k: int) -> Labeling:
    """The first minimum-size feasible labeling in canonical lexicographic order."""
    ell0(k)
    return Labeling(k, sum(1 << p for p in _ell0_search(k)[1]))


def labeling_of_cover(cover: Cover) -> Labeling:
    """Mark every index vector whose region of ``cover`` is non-empty."""
    cover.validate()
    k = cover.k
    bits = 0
    for pos, m in enumerate(canonical_masks(k)):
        if region_mask(cover, m):
            bits |= 1 << pos
    return Labeling(k, bits)


class ReconstructionError(ArgumentError):
    """Inputs to :func:`reconstruct_cover` violate a precondition.

    ``reason`` is one of ``"infeasible"``, ``"weight"``, ``"empty"``,
    ``"overlap"`` or ``"range"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def reconstruct_cover(n: int, blocks: Sequence[Iterable[int]], x: Labeling) -> Cover:
    """Build the unique cover whose marked regions are ``blocks``.

    ``blocks`` are assigned to the marked vectors of ``x`` in canonical
    order; elements outside every block form the all-c region (contained in
    every set).
    """
    if not satisfies_cover_constraints(x):
        raise ReconstructionError("infeasible", f"labeling {x} is not feasible")
    if len(blocks) != weight(x):
        raise ReconstructionError(
            "weight", f"{len(blocks)} blocks given for a labeling of weight {weight(x)}")
    full = (1 << n) - 1
    block_masks = []
    seen = 0
    for block in blocks:
        mask = 0
        for p in block:
            if not 1 <= p <= n:
                raise ReconstructionError("range", f"element {p} outside 1..{n}")
            mask |= 1 << (p - 1)
        if not mask:
            raise ReconstructionError("empty", "blocks must be non-empty")
        if mask & seen:
            raise ReconstructionError("overlap", "blocks must be pairwise disjoint")
        seen |= mask
        block_masks.append(mask)
    common = full & ~seen
    sets = [common] * x.k
    for t, mask in zip(x.marked(), block_masks):
        for i in range(x.k):
            if t.mask >> i & 1:
                sets[i] |= mask
    result = Cover(n, tuple(sets))
    if not result.is_constructive():
        raise InvalidCoverError("reconstruction produced a non-constructive cover")
    return result
