"""Labeling counts from equivalence classes, and counts of constructive covers.

``|F(k, l)|`` is assembled from one count profile per equivalence class: an
assignment at weight offset ``w`` from its class representative has the
representative's counts shifted right by ``w``.  Only representatives are
enumerated.

The number of constructive ordered k-covers of an n-set is

    sum over l of  l! * isn(n, l) * |F(k, l)|,   ell0(k) <= l <= min(2**k - 2, n),

and dividing by ``k!`` gives the unordered count.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .enumerator import count_profile
from .errors import ArgumentError, ConsistencyError
from .labelings import ell0
from .stirling import isn
from .symmetry import BranchingSet, EquivalenceClass, partition_classes


@dataclass(frozen=True)
class ClassCounts:
    """Equivalence classes of a branching set with the representatives' count profiles."""

    k: int
    branching: BranchingSet
    classes: tuple[EquivalenceClass, ...]
    profiles: tuple[dict[int, int], ...]

    @property
    def contributing(self) -> tuple[EquivalenceClass, ...]:
        """Classes whose representative extends to at least one labeling."""
        return tuple(c for c, p in zip(self.classes, self.profiles) if any(p.values()))

    def totals(self) -> dict[int, int]:
        k = self.k
        top = (1 << k) - 2
        lo = ell0(k)
        totals = dict.fromkeys(range(1, top + 1), 0)
        for cls, prof in zip(self.classes, self.profiles):
            if any(v for ell, v in prof.items() if ell < lo):
                raise ConsistencyError(f"class {cls.index} has labelings below ell0={lo}")
            for w, group in cls.offsets.items():
                for ell in range(lo + w, top + 1):
                    totals[ell] += prof[ell - w] * group.multiplicity
        return totals

    def to_dict(self) -> dict:
        return {
            "branching": self.branching.strings(),
            "classes": [
                {**c.to_dict(), "counts": {str(l): str(v) for l, v in sorted(p.items()) if v}}
                for c, p in zip(self.classes, self.profiles)
            ],
        }


def _profile_task(args):
    T, y = args
    return count_profile(T, y)


def default_branching(k: int) -> BranchingSet:
    return BranchingSet.low_weight(k)


def class_counts(k: int, T: BranchingSet | None = None, *, workers: int = 1) -> ClassCounts:
    """Partition assignments over ``T`` and count each representative's labelings.

    With ``workers > 1`` representatives are counted in separate processes;
    results are collected in class order, so output does not depend on the
    worker count.
    """
    if k < 2:
        raise ArgumentError(f"labeling counts need k >= 2, got {k}")
    if T is None:
        T = default_branching(k)
    if T.k != k:
        raise ArgumentError(f"branching set has k={T.k}, expected {k}")
    classes = partition_classes(T)
    tasks = [(T, c.representative) for c in classes]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            profiles = list(pool.map(_profile_task, tasks))
    else:
        profiles = [_profile_task(t) for t in tasks]
    return ClassCounts(k, T, tuple(classes), tuple(profiles))


def count_labelings(k: int, T: BranchingSet | None = None, *, workers: int = 1) -> dict[int, int]:
    """``{l: |F(k, l)|}`` for ``l = 1 .. 2**k - 2`` (zero below ``ell0(k)``)."""
    if T is None:
        return dict(_default_counts(k))
    return class_counts(k, T, workers=workers).totals()


@lru_cache(maxsize=None)
def _default_counts(k: int) -> tuple[tuple[int, int], ...]:
    return tuple(class_counts(k).totals().items())


def count_ordered_covers(n: int, k: int) -> int:
    """Number of constructive ordered k-covers of an n-set."""
    if not 1 <= k <= n:
        raise ArgumentError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == 1:
        return 1
    F = count_labelings(k)
    top = min((1 << k) - 2, n)
    return sum(math.factorial(ell) * isn(n, ell) * F[ell] for ell in range(ell0(k), top + 1))


def count_unordered_covers(n: int, k: int) -> int:
    """Number of constructive unordered k-covers of an n-set."""
    ordered = count_ordered_covers(n, k)
    q, r = divmod(ordered, math.factorial(k))
    if r:
        raise ConsistencyError(f"{ordered} ordered covers is not divisible by {k}!")
    return q


def counts_to_json(k: int, F: dict[int, int], n: int | None = None) -> str:
    """JSON report with every big integer written as a decimal string."""
    lo = ell0(k) if k >= 2 else 0
    doc: dict = {"k": k, "l0": lo, "F": {str(l): str(v) for l, v in sorted(F.items()) if l >= lo}}
    if n is not None:
        doc["n"] = n
        doc["C_ordered"] = str(count_ordered_covers(n, k))
        doc["C_unordered"] = str(count_unordered_covers(n, k))
    return json.dumps(doc)
