"""Branching sets, impact sets and the equivalence classes of branching assignments.

A branching set ``T`` is a subset of ``T(k)`` whose labeling coordinates are
fixed in advance.  A branching assignment ``y`` gives those fixed 0/1 values.
Two assignments are equivalent when some symmetry ``(pi, alpha)`` of ``T``
carries the impact set of one onto the impact set of the other; equivalent
assignments have the same labeling counts up to a shift by their weight
difference.

Symmetries are pairs of a coordinate permutation ``pi`` and a complement map
``alpha`` with ``{alpha(t o pi) : t in T} == T``.  This joint group contains
``S_k^T x A^T`` and may be strictly larger, e.g. for the ``prefix`` set at
k = 4 where neither the swap of coordinates 1, 2 nor the e/c flip preserves
``T`` alone but their composite does.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, ResourceCapError
from .index_space import (
    MAX_K,
    Complement,
    IndexVector,
    canonical_masks,
    permute_mask,
    position_of,
)

PERMUTATION_SCAN_CAP = 8
ASSIGNMENT_CAP = 24


@dataclass(frozen=True)
class BranchingSet:
    """Non-empty subset of ``T(k)``, members kept in canonical order (as masks)."""

    k: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ArgumentError(f"k must lie in 1..{MAX_K}, got {self.k}")
        if not self.masks:
            raise ArgumentError("branching set must be non-empty")
        pos = position_of(self.k)
        if any(m not in pos for m in self.masks):
            raise ArgumentError(f"branching set contains vectors outside T({self.k})")
        if len(set(self.masks)) != len(self.masks):
            raise ArgumentError("branching set contains duplicates")
        ordered = tuple(sorted(self.masks, key=pos.__getitem__))
        object.__setattr__(self, "masks", ordered)

    @classmethod
    def from_strings(cls, vectors: Iterable[str | IndexVector]) -> "BranchingSet":
        vs = [IndexVector.from_string(v) if isinstance(v, str) else v for v in vectors]
        if not vs:
            raise ArgumentError("branching set must be non-empty")
        ks = {v.k for v in vs}
        if len(ks) != 1:
            raise ArgumentError("index vectors of different lengths")
        return cls(ks.pop(), tuple(v.mask for v in vs))

    @classmethod
    def from_file(cls, path: str | Path) -> "BranchingSet":
        """Read one {e,c}-string per line; blank lines and ``#`` comments are skipped."""
        lines = Path(path).read_text().splitlines()
        return cls.from_strings(
            s for s in (line.split("#", 1)[0].strip() for line in lines) if s)

    @classmethod
    def prefix(cls, k: int) -> "BranchingSet":
        """All ``t`` with ``t_1 = c`` and ``t_2 = e``."""
        if k < 2:
            raise ArgumentError("the prefix branching set needs k >= 2")
        return cls(k, tuple(m for m in canonical_masks(k) if m & 1 and not m & 2))

    @classmethod
    def low_weight(cls, k: int) -> "BranchingSet":
        """All ``t`` with one or two c-coordinates."""
        if k < 2:
            raise ArgumentError("the low-weight branching set needs k >= 2")
        return cls(k, tuple(m for m in canonical_masks(k) if bin(m).count("1") <= 2))

    @classmethod
    def preset(cls, name: str, k: int) -> "BranchingSet":
        presets = {"prefix": cls.prefix, "low-weight": cls.low_weight}
        if name not in presets:
            raise ArgumentError(f"unknown branching preset {name!r}")
        return presets[name](k)

    def __len__(self) -> int:
        return len(self.masks)

    def vectors(self) -> list[IndexVector]:
        return [IndexVector(self.k, m) for m in self.masks]

    def strings(self) -> list[str]:
        return [str(v) for v in self.vectors()]

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """Positions of the members within the canonical order of ``T(k)``."""
        pos = position_of(self.k)
        return tuple(pos[m] for m in self.masks)

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: q for q, m in enumerate(self.masks)}


@dataclass(frozen=True)
class BranchingAssignment:
    """0/1 values over a branching set; bit ``q`` belongs to ``branching.masks[q]``."""

    branching: BranchingSet
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> len(self.branching):
            raise ArgumentError("assignment does not fit its branching set")

    @classmethod
    def from_string(cls, branching: BranchingSet, text: str) -> "BranchingAssignment":
        if len(text) != len(branching) or set(text) - {"0", "1"}:
            raise ArgumentError(f"expected a 0/1 string of length {len(branching)}: {text!r}")
        return cls(branching, sum(1 << q for q, ch in enumerate(text) if ch == "1"))

    @classmethod
    def marking(cls, branching: BranchingSet,
                vectors: Iterable[str | IndexVector]) -> "BranchingAssignment":
        """Assignment with 1 exactly on the given members of the branching set."""
        bits = 0
        for v in vectors:
            if isinstance(v, str):
                v = IndexVector.from_string(v)
            if v.k != branching.k or v.mask not in branching.index:
                raise ArgumentError(f"{v} is not a member of the branching set")
            bits |= 1 << branching.index[v.mask]
        return cls(branching, bits)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> q & 1 else "0" for q in range(len(self.branching)))

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    def labeling_bits(self) -> int:
        """The fixed ones, placed at their positions in the canonical ``T(k)`` order."""
        out = 0
        for q, p in enumerate(self.branching.positions):
            if self.bits >> q & 1:
                out |= 1 << p
        return out


def _pairs(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j]


def _pair_bits(k: int) -> dict[tuple[int, int], int]:
    return {p: b for b, p in enumerate(_pairs(k))}


def _impact_of_mask(t_mask: int, k: int, bit_of: dict[tuple[int, int], int]) -> int:
    out = 0
    for i in range(k):
        if t_mask >> i & 1:
            for j in range(k):
                if not t_mask >> j & 1:
                    out |= 1 << bit_of[(i + 1, j + 1)]
    return out


def _impact_mask(y: BranchingAssignment) -> int:
    T = y.branching
    bit_of = _pair_bits(T.k)
    out = 0
    for q, m in enumerate(T.masks):
        if y.bits >> q & 1:
            out |= _impact_of_mask(m, T.k, bit_of)
    return out


def _mask_to_pairs(mask: int, k: int) -> frozenset[tuple[int, int]]:
    pairs = _pairs(k)
    return frozenset(pairs[b] for b in range(len(pairs)) if mask >> b & 1)


def impact_set(T: BranchingSet, y: BranchingAssignment) -> frozenset[tuple[int, int]]:
    """Ordered pairs ``(i, j)`` already witnessed by a marked ``t`` in ``T``."""
    if y.branching != T:
        raise ArgumentError("assignment is over a different branching set")
    return _mask_to_pairs(_impact_mask(y), T.k)


def _complement_mask(alpha: Complement, mask: int, k: int) -> int:
    return mask ^ ((1 << k) - 1) if alpha == "swap" else mask


def _act_on_set(T: BranchingSet, pi: Sequence[int], alpha: Complement) -> frozenset[int]:
    return frozenset(_complement_mask(alpha, permute_mask(m, pi), T.k) for m in T.masks)


def _all_permutations(k: int) -> Iterator[tuple[int, ...]]:
    if k > PERMUTATION_SCAN_CAP:
        raise ArgumentError(f"permutation scan is capped at k={PERMUTATION_SCAN_CAP}, got {k}")
    return itertools.permutations(range(1, k + 1))


def stabilizer_permutations(T: BranchingSet) -> list[tuple[int, ...]]:
    """Permutations ``pi`` (one-line, 1-based) with ``T o pi == T``; identity first."""
    target = frozenset(T.masks)
    return [pi for pi in _all_permutations(T.k) if _act_on_set(T, pi, "identity") == target]


def stabilizer_complements(T: BranchingSet) -> list[Complement]:
    """``["identity"]``, plus ``"swap"`` when ``T`` is closed under the e/c flip."""
    out: list[Complement] = ["identity"]
    identity = tuple(range(1, T.k + 1))
    if _act_on_set(T, identity, "swap") == frozenset(T.masks):
        out.append("swap")
    return out


def symmetry_group(T: BranchingSet) -> list[tuple[tuple[int, ...], Complement]]:
    """All pairs ``(pi, alpha)`` whose combined action maps ``T`` onto itself."""
    target = frozenset(T.masks)
    return [(pi, alpha) for pi in _all_permutations(T.k) for alpha in ("identity", "swap")
            if _act_on_set(T, pi, alpha) == target]


def act(y: BranchingAssignment, pi: Sequence[int], alpha: Complement) -> BranchingAssignment:
    """``(alpha y pi)_t = y_{alpha(t o pi)}``; ``(pi, alpha)`` must preserve ``T``."""
    T = y.branching
    bits = 0
    for q, m in enumerate(T.masks):
        src = _complement_mask(alpha, permute_mask(m, pi), T.k)
        if src not in T.index:
            raise ArgumentError("symmetry does not preserve the branching set")
        if y.bits >> T.index[src] & 1:
            bits |= 1 << q
    return BranchingAssignment(T, bits)


def are_equivalent(y: BranchingAssignment, z: BranchingAssignment, T: BranchingSet,
                   group: Sequence[tuple[tuple[int, ...], Complement]] | None = None) -> bool:
    """True iff some symmetry of ``T`` maps the impact set of ``y`` onto that of ``z``.

    Evaluated literally: every group element is applied to ``y`` and the
    impact sets are compared.
    """
    if y.branching != T or z.branching != T:
        raise ArgumentError("assignments must be over the given branching set")
    if group is None:
        group = symmetry_group(T)
    target = _impact_mask(z)
    return any(_impact_mask(act(y, pi, alpha)) == target for pi, alpha in group)


@dataclass(frozen=True)
class OffsetGroup:
    representative: BranchingAssignment
    multiplicity: int


@dataclass(frozen=True)
class EquivalenceClass:
    """One class of branching assignments.

    ``offsets`` maps each weight offset ``w`` (relative to the minimum-weight
    ``representative``) to a representative of that offset and the number of
    class members having it.  ``feasible`` is False when no member extends to
    any feasible labeling; such a class contributes nothing to any count.
    """

    index: int
    representative: BranchingAssignment
    offsets: dict[int, OffsetGroup]
    members: frozenset[int] = field(repr=False)
    feasible: bool = True

    @property
    def size(self) -> int:
        return sum(g.multiplicity for g in self.offsets.values())

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "representative": str(self.representative),
            "feasible": self.feasible,
            "offsets": [
                {"w": w, "representative": str(g.representative), "multiplicity": g.multiplicity}
                for w, g in sorted(self.offsets.items())
            ],
        }


def weight_offset(y: BranchingAssignment, cls: EquivalenceClass) -> int:
    """``weight(y) - weight(representative)`` for a member ``y`` of ``cls``."""
    if y.branching != cls.representative.branching or y.bits not in cls.members:
        raise ArgumentError(f"assignment {y} is not a member of class {cls.index}")
    return y.weight - cls.representative.weight


def _pair_images(k: int, group) -> list[list[int]]:
    """For each group element, where each pair bit is sent on impact sets."""
    pairs = _pairs(k)
    bit_of = _pair_bits(k)
    images = []
    for pi, alpha in group:
        row = []
        for a, b in pairs:
            i, j = (pi[a - 1], pi[b - 1]) if alpha == "identity" else (pi[b - 1], pi[a - 1])
            row.append(bit_of[(i, j)])
        images.append(row)
    return images


def _relabel(mask: int, image: list[int]) -> int:
    out = 0
    b = 0
    while mask:
        if mask & 1:
            out |= 1 << image[b]
        mask >>= 1
        b += 1
    return out


def _all_impacts(T: BranchingSet) -> list[int]:
    bit_of = _pair_bits(T.k)
    per_member = [_impact_of_mask(m, T.k, bit_of) for m in T.masks]
    impacts = [0] * (1 << len(T))
    for y in range(1, 1 << len(T)):
        low = y & -y
        impacts[y] = impacts[y ^ low] | per_member[low.bit_length() - 1]
    return impacts


def _free_pairs(T: BranchingSet) -> int:
    """Pairs witnessed by some vector outside ``T``."""
    bit_of = _pair_bits(T.k)
    inside = set(T.masks)
    out = 0
    for m in canonical_masks(T.k):
        if m not in inside:
            out |= _impact_of_mask(m, T.k, bit_of)
    return out


def _vector_key(bits: int, size: int) -> str:
    return "".join("1" if bits >> q & 1 else "0" for q in range(size))


def _build_classes(T: BranchingSet, groups: list[list[int]], impacts: list[int]) -> list[EquivalenceClass]:
    size = len(T)
    all_pairs = (1 << (T.k * (T.k - 1))) - 1
    free = _free_pairs(T)

    def rank(bits: int):
        return (bin(bits).count("1"), _vector_key(bits, size))

    classes = []
    for members in groups:
        rep = min(members, key=rank)
        rep_w = bin(rep).count("1")
        by_offset: dict[int, list[int]] = {}
        for y in members:
            by_offset.setdefault(bin(y).count("1") - rep_w, []).append(y)
        offsets = {
            w: OffsetGroup(BranchingAssignment(T, min(ys, key=rank)), len(ys))
            for w, ys in sorted(by_offset.items())
        }
        classes.append((rank(rep), rep, offsets, frozenset(members),
                        (impacts[rep] | free) == all_pairs))
    classes.sort(key=lambda c: c[0])
    return [EquivalenceClass(a, BranchingAssignment(T, rep), offsets, members, feasible)
            for a, (_, rep, offsets, members, feasible) in enumerate(classes, start=1)]


def partition_classes(T: BranchingSet, *, method: str = "canonical",
                      cap: int = ASSIGNMENT_CAP) -> list[EquivalenceClass]:
    """Partition all ``2**|T|`` assignments over ``T`` into equivalence classes.

    Classes are numbered from 1 in order of their representatives (weight,
    then 0/1 string).  ``method="canonical"`` keys each assignment by the
    lexicographically least image of its impact set under the symmetry group;
    ``method="literal"`` scans assignments in order and tests each against
    the first member of every class found so far with :func:`are_equivalent`.
    Both produce the same partition.
    """
    if len(T) > cap:
        raise ResourceCapError(f"|T|={len(T)} exceeds the assignment cap of {cap}")
    group = symmetry_group(T)
    impacts = _all_impacts(T)
    groups: list[list[int]]
    if method == "canonical":
        images = _pair_images(T.k, group)
        canon: dict[int, int] = {}
        buckets: dict[int, list[int]] = {}
        for y, d in enumerate(impacts):
            key = canon.get(d)
            if key is None:
                key = min(_relabel(d, img) for img in images)
                canon[d] = key
            buckets.setdefault(key, []).append(y)
        groups = list(buckets.values())
    elif method == "literal":
        firsts: list[BranchingAssignment] = []
        groups = []
        for y in range(1 << len(T)):
            ya = BranchingAssignment(T, y)
            for a, z in enumerate(firsts):
                if are_equivalent(ya, z, T, group):
                    groups[a].append(y)
                    break
            else:
                firsts.append(ya)
                groups.append([y])
    else:
        raise ArgumentError(f"unknown partition method {method!r}")
    return _build_classes(T, groups, impacts)


def classes_to_json(T: BranchingSet, classes: Sequence[EquivalenceClass]) -> str:
    group = symmetry_group(T)
    doc = {
        "k": T.k,
        "branching": T.strings(),
        "stabilizer_permutations": len(stabilizer_permutations(T)),
        "stabilizer_complements": len(stabilizer_complements(T)),
        "symmetry_group": len(group),
        "classes": [c.to_dict() for c in classes],
    }
    return json.dumps(doc, indent=2)
