"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line PASS/FAIL verdict with its wall time; the lines
are printed in the pytest terminal summary.  Running this file directly
executes every criterion and prints the same lines.
"""

import io
import itertools
import random
import sys
import time

import pytest

from frozen import DESIGNS_7_4, DESIGNS_9_5, F3, F4_TOTAL, F5_TOTAL, ISN_ROWS, STIRLING_ROWS
from kcovers.cli import run
from kcovers.counting import count_labelings, count_ordered_covers
from kcovers.enumerator import count_profile, enumerate_fixed
from kcovers.index_space import Cover, canonical_masks, region_mask
from kcovers.labelings import ell0, labeling_of_cover, reconstruct_cover
from kcovers.oracle import brute_force_covers, brute_force_hitting_sets, brute_force_labelings
from kcovers.reliability import (
    count_coherent_designs,
    is_constructive_cover,
    minimal_cut_sets,
    phi_from_cuts,
    phi_from_paths,
)
from kcovers.symmetry import (
    BranchingAssignment,
    BranchingSet,
    act,
    impact_set,
    partition_classes,
    stabilizer_complements,
    stabilizer_permutations,
    symmetry_group,
)

RESULTS = []


def verdict(number, title, ok, seconds, limit=None, detail=""):
    timed_ok = limit is None or seconds < limit
    passed = bool(ok) and timed_ok
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {title}: {seconds:.3f} s{budget}"
    if detail:
        line += f"; {detail}"
    RESULTS.append(line)
    assert ok, line
    assert timed_ok, line


def word(s):
    return s.replace("c", "1").replace("e", "0")


def test_criterion_01_tables():
    t0 = time.perf_counter()
    cells = {}
    for kind in ("stirling", "isn"):
        out = io.StringIO()
        assert run(["table", "--kind", kind, "--max-n", "10"], out=out) == 0
        cells[kind] = {(int(n), int(l)): int(v) for n, l, v in
                       (line.split(",") for line in out.getvalue().splitlines())}
    elapsed = time.perf_counter() - t0
    ok = all(
        len(cells[kind]) == 55 and all(cells[kind][n, l] == rows[n - 1][l - 1]
                                       for n in range(1, 11) for l in range(1, n + 1))
        for kind, rows in (("stirling", STIRLING_ROWS), ("isn", ISN_ROWS)))
    verdict(1, "Stirling and ISN tables, 2 x 55 cells", ok, elapsed, 0.1)


# F(3, l) as listed in the source, coordinates in canonical order
F33 = {"(c,c,c,e,e,e)", "(e,e,e,c,c,c)"}
F34 = {"(c,e,e,c,c,c)", "(e,c,e,c,c,c)", "(e,e,c,c,c,c)", "(c,c,c,c,e,e)", "(c,c,c,e,c,e)",
       "(c,c,c,e,e,c)", "(c,c,e,e,c,c)", "(c,e,c,c,e,c)", "(e,c,c,c,c,e)"}
# one entry appears twice in the source listing, so only five distinct vectors
F35 = {"(c,c,c,c,c,e)", "(c,c,c,c,e,c)", "(c,c,c,e,c,c)", "(c,c,e,c,c,c)", "(e,c,c,c,c,c)"}


def test_criterion_02_k3():
    t0 = time.perf_counter()
    F = count_labelings(3)
    T = BranchingSet(3, canonical_masks(3)[:1])
    members = {}
    for ell in (3, 4, 5):
        found = set()
        for b in (0, 1):
            found |= {str(x) for x in enumerate_fixed(3, ell, T, BranchingAssignment(T, b))}
        members[ell] = found
    elapsed = time.perf_counter() - t0
    as_bits = lambda listing: {word(s.strip("()").replace(",", "")) for s in listing}
    ok = ({l: v for l, v in F.items() if v} == F3
          and members[3] == as_bits(F33) and members[4] == as_bits(F34)
          and as_bits(F35) < members[5] and len(members[5]) == 6)
    verdict(2, "k=3 counts and explicit member sets", ok, elapsed, 0.1)


def test_criterion_03_k4():
    t0 = time.perf_counter()
    T = BranchingSet.prefix(4)
    classes = partition_classes(T)
    feasible = [c for c in classes if c.feasible]
    F = count_labelings(4, T)
    brute = brute_force_labelings(4)
    elapsed = time.perf_counter() - t0
    row = [F[l] for l in range(4, 15)]
    ok = (len(feasible) == 6 and row == F4_TOTAL
          and brute == {l: v for l, v in F.items() if v} and sum(brute.values()) == 9510)
    verdict(3, "k=4 prefix branching set, classes and Total row", ok, elapsed, 1.0,
            f"{len(feasible)} feasible classes (+{len(classes) - len(feasible)} with no extension)")


def test_criterion_04_k5():
    t0 = time.perf_counter()
    T = BranchingSet.low_weight(5)
    classes = partition_classes(T)
    F = count_labelings(5, T)
    elapsed = time.perf_counter() - t0
    row = [F[l] for l in range(4, 31)]
    ok = (len(classes) == 28 and row == F5_TOTAL
          and F[9] == 7_286_000 and F[15] == 151_755_930 and F[30] == 1)
    verdict(4, "k=5 low-weight branching set, 28 classes and Total row", ok, elapsed, 300.0)


@pytest.mark.long
def test_criterion_04_k5_brute_force():
    t0 = time.perf_counter()
    brute = brute_force_labelings(5)
    elapsed = time.perf_counter() - t0
    ok = [brute.get(l, 0) for l in range(4, 31)] == F5_TOTAL
    verdict(4, "k=5 brute-force scan of 2^30 labelings", ok, elapsed)


def test_criterion_05_designs():
    t0 = time.perf_counter()
    a, b = count_coherent_designs(7, 4), count_coherent_designs(9, 5)
    elapsed = time.perf_counter() - t0
    verdict(5, "coherent design counts (7,4) and (9,5)", a == DESIGNS_7_4 and b == DESIGNS_9_5,
            elapsed, detail=f"{a}, {b}")


def test_criterion_06_oracle_covers():
    t0 = time.perf_counter()
    mismatches = []
    seen = {}
    for n in range(1, 6):
        for k in range(1, min(n, 4) + 1):
            got, want = count_ordered_covers(n, k), brute_force_covers(n, k)
            seen[n, k] = got
            if got != want:
                mismatches.append((n, k, got, want))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and seen[3, 2] == 12 and seen[3, 3] == 12 and seen[4, 3] == 336
    verdict(6, "ordered cover counts equal brute force for k <= 4, n <= 5", ok, elapsed, 30.0,
            f"(3,2)={seen[3, 2]} (3,3)={seen[3, 3]} (4,3)={seen[4, 3]}")


def test_criterion_07_symmetry_identities():
    t0 = time.perf_counter()
    T = BranchingSet.prefix(4)
    k, top, lo = 4, 14, ell0(4)
    ys = [BranchingAssignment(T, b) for b in range(2**len(T))]
    prof = {y.bits: count_profile(T, y) for y in ys}
    F = lambda y, l: prof[y.bits].get(l, 0)
    checks = 0
    ok = True
    identity = tuple(range(1, k + 1))
    for y in ys:
        for pi in stabilizer_permutations(T):
            ok &= prof[act(y, pi, "identity").bits] == prof[y.bits]
            checks += 1
        for alpha in stabilizer_complements(T):
            ok &= prof[act(y, identity, alpha).bits] == prof[y.bits]
            checks += 1
        for pi, alpha in symmetry_group(T):
            ok &= prof[act(y, pi, alpha).bits] == prof[y.bits]
            checks += 1
    for y, z in itertools.product(ys, ys):
        w = y.weight - z.weight
        if w < 0 or impact_set(T, y) != impact_set(T, z):
            continue
        for ell in range(0, top + 1):
            if lo <= ell and ell + w <= top:
                ok &= F(y, ell + w) == F(z, ell)
            if ell < lo <= ell + w:
                ok &= F(y, ell + w) == 0
            if ell <= top < ell + w:
                ok &= F(z, ell) == 0
            checks += 1
    elapsed = time.perf_counter() - t0
    verdict(7, "stabilizer invariance and shift identities, k=4 prefix", ok, elapsed,
            detail=f"{checks} exact checks")


def test_criterion_08_roundtrip():
    rng = random.Random(20240601)
    t0 = time.perf_counter()
    done = failures = 0
    while done < 10_000:
        n = rng.randint(2, 8)
        k = rng.randint(2, min(n, 4))
        cover = Cover(n, tuple(rng.getrandbits(n) for _ in range(k)))
        if not cover.is_constructive():
            continue
        x = labeling_of_cover(cover)
        blocks = [[p + 1 for p in range(n) if r >> p & 1]
                  for r in (region_mask(cover, m) for m in canonical_masks(k)) if r]
        failures += reconstruct_cover(n, blocks, x) != cover
        done += 1
    elapsed = time.perf_counter() - t0
    verdict(8, "labeling -> reconstruction round trip on 10000 covers", failures == 0, elapsed,
            detail=f"{failures} failures")


def test_criterion_09_duality():
    rng = random.Random(99)
    t0 = time.perf_counter()
    systems = states = bad = 0
    while systems < 1000:
        n = rng.randint(1, 7)
        k = rng.randint(1, min(n, 5))
        paths = [frozenset(p for p in range(1, n + 1) if rng.random() < 0.45) for _ in range(k)]
        if not is_constructive_cover(paths, n):
            continue
        s = rng.randint(1, 2)
        cuts = minimal_cut_sets(paths, n)
        bad += set(cuts) != brute_force_hitting_sets(paths, n)
        for z in itertools.product(range(s + 1), repeat=n):
            bad += phi_from_paths(z, paths) != phi_from_cuts(z, cuts)
            states += 1
        systems += 1
    elapsed = time.perf_counter() - t0
    verdict(9, "path/cut duality and minimal cut sets on 1000 systems", bad == 0, elapsed,
            detail=f"{states} state vectors")


def test_criterion_10_branching_independence():
    rng = random.Random(10)
    t0 = time.perf_counter()
    reference = count_labelings(4, BranchingSet.prefix(4))
    sets = [BranchingSet.low_weight(4)]
    masks = canonical_masks(4)
    while len(sets) < 21:
        T = BranchingSet(4, tuple(rng.sample(masks, rng.randint(1, len(masks)))))
        if T not in sets:
            sets.append(T)
    ok = all(count_labelings(4, T) == reference for T in sets)
    elapsed = time.perf_counter() - t0
    verdict(10, "k=4 counts identical under prefix, low-weight and 20 random sets", ok, elapsed)


if __name__ == "__main__":
    tests = [v for name, v in sorted(globals().items()) if name.startswith("test_criterion")]
    if "--long" not in sys.argv:
        tests = [t for t in tests if not t.__name__.endswith("brute_force")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
