"""Counting constructive k-covers, from the k=3 listing up to k=5.

A k-cover A_1..A_k of {1..n} is constructive when the sets cover everything
and no A_i is inside another A_j.  Each cover is a labeling (which of the
2^k - 2 proper Venn regions are non-empty) plus an ordered partition of the
elements that fall in those regions.
"""
import math
import time

from kcovers import (
    BranchingSet,
    Cover,
    count_labelings,
    count_ordered_covers,
    count_unordered_covers,
    ell0,
    isn,
    labeling_of_cover,
    partition_classes,
    reconstruct_cover,
)
from kcovers.counting import class_counts
from kcovers.index_space import full_index_space
from kcovers.labelings import Labeling, is_feasible_bits

# --- k = 3 by hand --------------------------------------------------------
print("T(3) in canonical order:", [str(t) for t in full_index_space(3)])

cover = Cover.from_lists(4, [[1, 2], [2, 3], [1, 3, 4]])
x = labeling_of_cover(cover)
print("labeling of", cover.as_lists(), "->", x, [str(t) for t in x.marked()])

# put the regions back together in a different order: a different cover
other = reconstruct_cover(4, [{1}, {2}, {3}, {4}], x)
print("same labeling, blocks 1|2|3|4 ->", other.as_lists())

by_weight = {}
for bits in range(2**6):
    if is_feasible_bits(3, bits):
        by_weight.setdefault(bin(bits).count("1"), []).append(str(Labeling(3, bits)))
for w, xs in sorted(by_weight.items()):
    print(f"F(3,{w}): {len(xs)}", xs if len(xs) < 4 else "")

# --- k = 4: branching on four regions ------------------------------------
T = BranchingSet.prefix(4)
classes = partition_classes(T)
print("\nbranching set", T.strings(), "->", len(classes), "classes")
result = class_counts(4, T)
for cls, prof in zip(result.classes, result.profiles):
    row = [prof[l] for l in range(4, 15)]
    sizes = {w: g.multiplicity for w, g in cls.offsets.items()}
    print(f"  rep {cls.representative}  offsets {sizes}  {row}")
F4 = result.totals()
print("  total", [F4[l] for l in range(4, 15)])

# --- k = 5 ----------------------------------------------------------------
t0 = time.perf_counter()
F5 = count_labelings(5)
print(f"\nk=5: l0 = {ell0(5)}, sum over l = {sum(F5.values())}, {time.perf_counter() - t0:.2f} s")
print("  F(5, 9) =", F5[9], " F(5, 15) =", F5[15])

# --- putting it together --------------------------------------------------
n, k = 7, 4
terms = {l: math.factorial(l) * isn(n, l) * F4[l] for l in range(ell0(k), min(2**k - 2, n) + 1)}
print(f"\nordered {k}-covers of a {n}-set, term by term:", terms)
print("total", count_ordered_covers(n, k), "unordered", count_unordered_covers(n, k))
for n in range(5, 11):
    print(f"  n={n:2d}  k=5 unordered: {count_unordered_covers(n, 5)}")
