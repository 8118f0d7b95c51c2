"""Enumerate and count labelings that agree with a fixed branching assignment.

For a branching assignment ``y`` over ``T``, ``F_y(k, l)`` is the set of
feasible labelings of weight ``l`` whose coordinates on ``T`` equal ``y``.

Two enumeration modes produce the same set:

``backtracking``
    One depth-first search over the free coordinates (canonical order,
    value 1 tried before 0), pruning with unit propagation on the pair
    constraints and a cardinality window.

``no_good_cuts``
    Repeated feasibility solves.  After each solution ``x*`` the cut
    ``sum_{x*_t = 1} (1 - x_t) + sum_{x*_t = 0} x_t >= 1`` is added, and the
    search restarts from scratch until it proves infeasibility.

Counting (:func:`count_fixed`, :func:`count_profile`) uses the same search
but never materializes solutions: once every pair constraint is met, the
remaining free coordinates contribute a binomial row, and subproblems are
memoized on (depth, unmet constraints).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Literal

from .errors import ArgumentError, ResourceCapError
from .labelings import Labeling, pair_supports
from .symmetry import BranchingAssignment, BranchingSet

Mode = Literal["no_good_cuts", "backtracking"]

DEFAULT_SOLUTION_CAP = 10**8


class _Problem:
    """Constraint data for ``F_y(k, .)`` with ``y`` fixed on its branching set."""

    def __init__(self, y: BranchingAssignment):
        T = y.branching
        k = T.k
        self.k = k
        self.length = (1 << k) - 2
        self.fixed_ones = y.labeling_bits()
        self.fixed_weight = y.weight
        fixed = set(T.positions)
        self.free = [p for p in range(self.length) if p not in fixed]
        # suffix[i]: mask of free positions free[i:]
        self.suffix = [0] * (len(self.free) + 1)
        for i in range(len(self.free) - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | (1 << self.free[i])
        free_mask = self.suffix[0]
        self.open = tuple(sorted(
            s & free_mask for _, s in pair_supports(k) if not s & self.fixed_ones))

    @property
    def dead(self) -> bool:
        return any(s == 0 for s in self.open)

    def solutions(self, ell: int, cuts: list[int] | None = None) -> Iterator[int]:
        """Yield labelings (as bits) of weight ``ell`` in search order.

        Labelings matching any pattern in ``cuts`` are skipped; a cut stays
        live only while the partial assignment agrees with it.
        """
        need = ell - self.fixed_weight
        if need < 0 or self.dead:
            return
        yield from self._search(0, self.fixed_ones, need, self.open, cuts or [])

    def _search(self, i: int, x: int, need: int, unmet: tuple[int, ...],
                cuts: list[int]) -> Iterator[int]:
        free = self.free
        remaining = self.suffix[i]
        if need < 0 or need > len(free) - i:
            return
        forced = 0
        for s in unmet:
            avail = s & remaining
            if not avail:
                return
            if avail & (avail - 1) == 0:
                forced |= avail
        if bin(forced).count("1") > need:
            return
        if i == len(free):
            if need == 0 and not cuts:
                yield x
            return
        bit = 1 << free[i]
        branches = []
        if need > 0:
            branches.append(1)
        if not forced & bit:
            branches.append(0)
        for value in branches:
            if value:
                nx = x | bit
                n_unmet = tuple(s for s in unmet if not s & bit)
                n_cuts = [c for c in cuts if c & bit]
                yield from self._search(i + 1, nx, need - 1, n_unmet, n_cuts)
            else:
                n_cuts = [c for c in cuts if not c & bit]
                yield from self._search(i + 1, x, need, unmet, n_cuts)

    def profile(self) -> list[int]:
        """``counts[j]`` = number of feasible completions with ``j`` free ones."""
        if self.dead:
            return [0] * (len(self.free) + 1)
        free = self.free
        suffix = self.suffix
        n_free = len(free)

        @lru_cache(maxsize=None)
        def go(i: int, unmet: tuple[int, ...]) -> tuple[int, ...]:
            r = n_free - i
            if not unmet:
                return tuple(math.comb(r, j) for j in range(r + 1))
            remaining = suffix[i]
            if any(not s & remaining for s in unmet):
                return (0,) * (r + 1)
            bit = 1 << free[i]
            take = go(i + 1, tuple(s for s in unmet if not s & bit))
            skip = go(i + 1, unmet)
            out = [0] * (r + 1)
            for j, v in enumerate(skip):
                out[j] += v
            for j, v in enumerate(take):
                out[j + 1] += v
            return tuple(out)

        return list(go(0, self.open))


def _check(k: int, ell: int, T: BranchingSet, y: BranchingAssignment) -> None:
    if y.branching != T:
        raise ArgumentError("assignment is over a different branching set")
    if T.k != k:
        raise ArgumentError(f"branching set has k={T.k}, expected {k}")
    if not 0 <= ell <= (1 << k) - 2:
        raise ArgumentError(f"ell must lie in 0..{(1 << k) - 2}, got {ell}")


def enumerate_fixed(k: int, ell: int, T: BranchingSet, y: BranchingAssignment,
                    mode: Mode = "backtracking", *,
                    cap: int = DEFAULT_SOLUTION_CAP) -> list[Labeling]:
    """All of ``F_y(k, ell)``, in the order the chosen mode discovers them.

    Raises
    ------
    ResourceCapError
        If more than ``cap`` solutions exist.
    """
    _check(k, ell, T, y)
    if ell < y.weight:
        return []
    problem = _Problem(y)
    found: list[int] = []
    if mode == "backtracking":
        for x in problem.solutions(ell):
            found.append(x)
            if len(found) > cap:
                raise ResourceCapError(f"more than {cap} solutions")
    elif mode == "no_good_cuts":
        while True:
            x = next(problem.solutions(ell, found), None)
            if x is None:
                break
            found.append(x)
            if len(found) > cap:
                raise ResourceCapError(f"more than {cap} solutions")
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    return [Labeling(k, x) for x in found]


def count_profile(T: BranchingSet, y: BranchingAssignment) -> dict[int, int]:
    """``{l: |F_y(k, l)|}`` for every ``l`` in ``0..2**k - 2``."""
    if y.branching != T:
        raise ArgumentError("assignment is over a different branching set")
    problem = _Problem(y)
    counts = dict.fromkeys(range(problem.length + 1), 0)
    for j, v in enumerate(problem.profile()):
        counts[y.weight + j] = v
    return counts


def count_fixed(k: int, ell: int, T: BranchingSet, y: BranchingAssignment) -> int:
    """``|F_y(k, ell)|`` without materializing the solutions."""
    _check(k, ell, T, y)
    if ell < y.weight:
        return 0
    return count_profile(T, y)[ell]


def solution_upper_bound(k: int, ell: int, y: BranchingAssignment | int) -> int:
    """``comb(2**k - 2 - w, ell - w)`` with ``w`` the weight of ``y``; 0 if ``ell < w``."""
    w = y if isinstance(y, int) else y.weight
    if ell < w:
        return 0
    return math.comb((1 << k) - 2 - w, ell - w)


def dump_solutions(labelings: list[Labeling]) -> str:
    """Newline-delimited 0/1 strings in canonical ``T(k)`` order."""
    return "".join(f"{x}\n" for x in labelings)
