"""Multi-state coherent systems given by minimal path sets or minimal cut sets.

Components are ``1..n`` and take states in ``{0, ..., s}``.  The system state
is the best path's weakest component (max-min over path sets), or dually the
weakest cut's best component (min-max over cut sets).  Minimal cut sets are
the minimal hitting sets of the path-set family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .counting import count_unordered_covers
from .errors import ArgumentError, InvalidCoverError, ResourceCapError

DEFAULT_CUT_CAP = 100_000

SetFamily = Iterable[Iterable[int]]


def _masks(sets: SetFamily, n: int) -> list[int]:
    out = []
    for s in sets:
        m = 0
        for p in s:
            if not 1 <= p <= n:
                raise ArgumentError(f"component {p} outside 1..{n}")
            m |= 1 << (p - 1)
        out.append(m)
    return out


def _unmask(m: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(m.bit_length()) if m >> i & 1)


def _sorted_family(masks: Iterable[int]) -> list[frozenset[int]]:
    sets = [_unmask(m) for m in masks]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def is_constructive_cover(sets: SetFamily, n: int) -> bool:
    """Union is ``{1..n}`` and ``A \\ B`` is non-empty for every ordered pair of members."""
    try:
        masks = _masks(sets, n)
    except ArgumentError:
        return False
    union = 0
    for m in masks:
        union |= m
    if union != (1 << n) - 1:
        return False
    return all(a & ~b for i, a in enumerate(masks) for j, b in enumerate(masks) if i != j)


def _state_vector(z: Sequence[int], sets: list[list[int]]) -> None:
    if not sets or any(not s for s in sets):
        raise ArgumentError("need a non-empty family of non-empty sets")
    n = len(z)
    for s in sets:
        for p in s:
            if not 1 <= p <= n:
                raise ArgumentError(f"state vector has length {n} but a set mentions component {p}")


def phi_from_paths(z: Sequence[int], path_sets: SetFamily) -> int:
    """System state: max over path sets of the min component state inside it."""
    paths = [list(p) for p in path_sets]
    _state_vector(z, paths)
    return max(min(z[p - 1] for p in P) for P in paths)


def phi_from_cuts(z: Sequence[int], cut_sets: SetFamily) -> int:
    """System state: min over cut sets of the max component state inside it."""
    cuts = [list(c) for c in cut_sets]
    _state_vector(z, cuts)
    return min(max(z[p - 1] for p in C) for C in cuts)


def _minimize(masks: Iterable[int]) -> list[int]:
    """Drop every set that properly contains another (and duplicates)."""
    uniq = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_cut_sets(path_sets: SetFamily, n: int, *,
                     cap: int = DEFAULT_CUT_CAP) -> list[frozenset[int]]:
    """All minimal sets meeting every path set, sorted by size then elements.

    Path sets are folded in one at a time: transversals of the first ``i``
    paths that miss path ``i + 1`` are extended by each of its components,
    and non-minimal candidates are discarded after every step.

    Raises
    ------
    ResourceCapError
        If more than ``cap`` partial transversals are alive at once.
    """
    paths = _masks(path_sets, n)
    if not paths or any(p == 0 for p in paths):
        raise ArgumentError("path sets must be a non-empty family of non-empty sets")
    transversals = [0]
    for P in _minimize(paths):
        grown = []
        for t in transversals:
            if t & P:
                grown.append(t)
                continue
            rest = P
            while rest:
                low = rest & -rest
                grown.append(t | low)
                rest ^= low
        transversals = _minimize(grown)
        if len(transversals) > cap:
            raise ResourceCapError(f"more than {cap} partial transversals")
    return _sorted_family(transversals)


@dataclass(frozen=True)
class CoherentSystem:
    n: int
    s: int
    path_sets: tuple[frozenset[int], ...]
    cut_sets: tuple[frozenset[int], ...] | None = None

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise ArgumentError(f"need n >= 1 and s >= 1, got n={self.n}, s={self.s}")
        if not is_constructive_cover(self.path_sets, self.n):
            raise InvalidCoverError("path sets are not a constructive cover of the components")
        if self.cut_sets is not None:
            if not is_constructive_cover(self.cut_sets, self.n):
                raise InvalidCoverError("cut sets are not a constructive cover of the components")
            for C in self.cut_sets:
                if any(not C & P for P in self.path_sets):
                    raise InvalidCoverError(f"cut set {sorted(C)} misses a path set")

    @classmethod
    def from_paths(cls, n: int, s: int, paths: SetFamily, *, with_cuts: bool = False) -> "CoherentSystem":
        path_sets = tuple(frozenset(p) for p in paths)
        cuts = tuple(minimal_cut_sets(path_sets, n)) if with_cuts else None
        return cls(n, s, path_sets, cuts)

    def with_cuts(self) -> "CoherentSystem":
        return CoherentSystem(self.n, self.s, self.path_sets,
                              tuple(minimal_cut_sets(self.path_sets, self.n)))

    def _check_state(self, z: Sequence[int]) -> None:
        if len(z) != self.n:
            raise ArgumentError(f"state vector has length {len(z)}, expected {self.n}")
        if any(not 0 <= v <= self.s for v in z):
            raise ArgumentError(f"component states must lie in 0..{self.s}")

    def phi_paths(self, z: Sequence[int]) -> int:
        self._check_state(z)
        return phi_from_paths(z, self.path_sets)

    def phi_cuts(self, z: Sequence[int]) -> int:
        self._check_state(z)
        cuts = self.cut_sets if self.cut_sets is not None else minimal_cut_sets(self.path_sets, self.n)
        return phi_from_cuts(z, cuts)

    def to_dict(self) -> dict:
        doc = {"n": self.n, "s": self.s, "paths": [sorted(p) for p in self.path_sets]}
        if self.cut_sets is not None:
            doc["cuts"] = [sorted(c) for c in self.cut_sets]
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "CoherentSystem":
        try:
            n, s, paths = int(doc["n"]), int(doc.get("s", 1)), doc["paths"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ArgumentError(f"malformed system description: {exc}") from None
        cuts = doc.get("cuts")
        return cls(n, s, tuple(frozenset(p) for p in paths),
                   None if cuts is None else tuple(frozenset(c) for c in cuts))

    @classmethod
    def from_json(cls, text: str) -> "CoherentSystem":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ArgumentError("system description must be a JSON object")
        return cls.from_dict(doc)


def count_coherent_designs(n: int, k: int) -> int:
    """Coherent systems on ``n`` components with ``k`` minimal path sets."""
    return count_unordered_covers(n, k)
