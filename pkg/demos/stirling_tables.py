"""Stirling numbers and their integrated version, side by side.

The integrated number isn(n, l) counts ordered l-partitions of every subset
of an n-set (divided by l!).  It shows up as the number of ways to fill the
l non-empty Venn regions of a cover.
"""
import math

from kcovers import build_table, isn, stirling

N = 10

s = build_table("stirling", N)
t = build_table("isn", N)

print("s(n, l)")
for n in range(1, N + 1):
    print(f"{n:3d} ", " ".join(f"{v:7d}" for v in s.row(n)))

print("\nisn(n, l)")
for n in range(1, N + 1):
    print(f"{n:3d} ", " ".join(f"{v:7d}" for v in t.row(n)))

# isn(n, l) is s(n + 1, l + 1): add a phantom element for "left out"
assert all(isn(n, l) == stirling(n + 1, l + 1) for n in range(1, 30) for l in range(1, n + 1))

# ... and summing over the size of the covered subset gives the same thing
n, l = 12, 4
print(f"\nisn({n},{l}) =", isn(n, l),
      "=", sum(math.comb(n, i) * stirling(i, l) for i in range(l, n + 1)))

# exact integers, no overflow
print("s(200, 100) has", len(str(stirling(200, 100))), "digits")
