"""Naive reference implementations used to cross-check the pipeline.

Nothing here imports the optimized modules: index spaces, constraints and
covers are rebuilt from their definitions, and every search is a plain scan.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .errors import ResourceCapError

MAX_LABELING_K = 5
MAX_COVER_LOG2 = 24
MAX_HITTING_N = 15
CHUNK = 1 << 22


def _pair_masks(k: int) -> list[int]:
    # proper index vectors, any fixed order; counts do not depend on it
    vectors = [t for t in itertools.product("ec", repeat=k) if "c" in t and "e" in t]
    masks = []
    for i in range(k):
        for j in range(k):
            if i != j:
                masks.append(sum(1 << pos for pos, t in enumerate(vectors)
                                 if t[i] == "c" and t[j] == "e"))
    return masks


def _labeling_chunk(args) -> np.ndarray:
    k, start, stop = args
    length = (1 << k) - 2
    x = np.arange(start, stop, dtype=np.uint64)
    ok = np.ones(x.shape, dtype=bool)
    for m in _pair_masks(k):
        ok &= (x & np.uint64(m)) != 0
    w = np.bitwise_count(x[ok])
    return np.bincount(w, minlength=length + 1)


def brute_force_labelings(k: int, *, workers: int = 1) -> dict[int, int]:
    """Scan all ``2**(2**k - 2)`` 0/1 vectors and tally feasible ones by weight.

    Only weights with a non-zero tally appear in the result.
    """
    if not 1 <= k <= MAX_LABELING_K:
        raise ResourceCapError(f"brute-force labeling scan supports 1 <= k <= {MAX_LABELING_K}, got {k}")
    total = 1 << ((1 << k) - 2)
    tasks = [(k, a, min(a + CHUNK, total)) for a in range(0, total, CHUNK)]
    tally = np.zeros((1 << k) - 1, dtype=np.int64)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_labeling_chunk, tasks):
                tally += part
    else:
        for t in tasks:
            tally += _labeling_chunk(t)
    return {ell: int(v) for ell, v in enumerate(tally) if v}


def brute_force_covers(n: int, k: int) -> int:
    """Count ordered k-tuples of subsets of ``{1..n}`` with full union and
    every pairwise difference non-empty."""
    if n < 1 or k < 1:
        raise ResourceCapError(f"need n, k >= 1, got n={n}, k={k}")
    if n * k > MAX_COVER_LOG2:
        raise ResourceCapError(f"(2^{n})^{k} subsets tuples exceed the 2^{MAX_COVER_LOG2} cap")
    full = (1 << n) - 1
    count = 0
    for sets in itertools.product(range(1 << n), repeat=k):
        union = 0
        for a in sets:
            union |= a
        if union != full:
            continue
        if all(a & ~b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j):
            count += 1
    return count


def brute_force_hitting_sets(family, n: int) -> frozenset[frozenset[int]]:
    """All inclusion-minimal subsets of ``{1..n}`` meeting every member of ``family``."""
    if not 1 <= n <= MAX_HITTING_N:
        raise ResourceCapError(f"hitting-set scan supports 1 <= n <= {MAX_HITTING_N}, got {n}")
    members = [sum(1 << (p - 1) for p in s) for s in family]
    hitting = [m for m in range(1 << n) if all(m & f for f in members)]
    minimal = [m for m in hitting
               if not any(h != m and h & m == h for h in hitting)]
    return frozenset(frozenset(p + 1 for p in range(n) if m >> p & 1) for m in minimal)


def brute_force_intersectors(family) -> frozenset[frozenset[int]]:
    """Minimal sets of the form ``{f(P) : P in family}`` over all choice functions ``f``."""
    family = [sorted(s) for s in family]
    images = {frozenset(choice) for choice in itertools.product(*family)}
    return frozenset(s for s in images if not any(o < s for o in images))


def labeling_weight_histogram(vectors) -> dict[int, int]:
    """Tally 0/1 strings by number of ones."""
    return dict(Counter(v.count("1") for v in vectors))
