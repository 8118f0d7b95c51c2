"""Coherent systems: structure functions from path sets and from cut sets.

A system works at level s-bar or better when some minimal path set has all
its components at that level.  Dually, it fails below a level when some
minimal cut set is entirely below it.  The cut sets are the minimal sets
that meet every path set.
"""
import itertools

from kcovers import (
    CoherentSystem,
    count_coherent_designs,
    minimal_cut_sets,
    phi_from_cuts,
    phi_from_paths,
)

# 2-out-of-3: self dual
paths = [{1, 2}, {1, 3}, {2, 3}]
print("2-out-of-3 cuts:", [sorted(c) for c in minimal_cut_sets(paths, 3)])

# the bridge network, components 1..5
bridge = [{1, 4}, {2, 5}, {1, 3, 5}, {2, 3, 4}]
cuts = minimal_cut_sets(bridge, 5)
print("bridge cuts:", [sorted(c) for c in cuts])

# three-state components: compare both formulas on every state vector
s = 2
disagree = sum(phi_from_paths(z, bridge) != phi_from_cuts(z, cuts)
               for z in itertools.product(range(s + 1), repeat=5))
print("state vectors where the two formulas disagree:", disagree)

system = CoherentSystem.from_paths(5, s, bridge, with_cuts=True)
print(system.to_json())
print("phi(2,0,1,2,1) =", system.phi_paths((2, 0, 1, 2, 1)))

# how many designs are there?
for n, k in [(3, 2), (3, 3), (7, 4), (9, 5)]:
    print(f"designs with {n} components and {k} minimal path sets: {count_coherent_designs(n, k)}")
