"""Exit criteria for the package, one test per criterion (or sub-claim).

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import itertools
import random
import statistics
import time

import pytest

from qsrgraphs.canon import canonical_form, is_isomorphic
from qsrgraphs.catalog import NAMES, build_g1, build_g2, build_h8, build_named
from qsrgraphs.enumeration import EnumSpec, brute_force_enumerate, enumerate_graphs
from qsrgraphs.graphcore import cut_size, independence_number, maximum_independent_sets, neighbours, mask_of
from qsrgraphs.qsr import check_counting_identities, matches, sqsr_bounds, t_profile

from conftest import random_graph, random_relabel

RESULTS: list[str] = []


@pytest.fixture
def record(request):
    """Call ``record(ok, detail)``; the line is logged even when the assert fails."""
    name = request.node.name

    def _record(ok: bool, detail: str):
        RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        return ok

    return _record



SQSR4 = (3, 2, 1)


def _median_seconds(fn, reps=25):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


# 1 -----------------------------------------------------------------------------

@pytest.mark.parametrize("build, n", [(build_g1, 11), (build_g2, 12)])
def test_ac1_witness_verification(record, build, n):
    G = build()
    ok = matches(G, n, 4, 0, SQSR4, True)
    t = _median_seconds(lambda: matches(G, n, 4, 0, SQSR4, True))
    assert record(ok and t < 1e-3, f"matches(n={n}) = {ok}, median {t * 1e6:.0f} us (< 1000 us)")


# 2 -----------------------------------------------------------------------------

@pytest.mark.parametrize("build, n", [(build_g1, 11), (build_g2, 12)])
def test_ac2_uniqueness(record, build, n):
    rep = enumerate_graphs(EnumSpec(n, 4, 0, SQSR4, True, True))
    iso = len(rep.classes) == 1 and is_isomorphic(rep.graphs()[0], build())
    assert record(iso and rep.elapsed < 300,
                  f"n={n}: {len(rep.classes)} class(es), isomorphic to witness: {iso}, {rep.elapsed:.2f}s (< 300s)")


# 3 -----------------------------------------------------------------------------

def test_ac3_bounds_reproduction(record):
    total = 0.0
    counts = {}
    for n in (9, 10, 13):
        assert n * 4 % 2 == 0
        rep = enumerate_graphs(EnumSpec(n, 4, 0, SQSR4, True, True))
        counts[n] = len(rep.classes)
        total += rep.elapsed
    ok = all(c == 0 for c in counts.values()) and total < 600
    assert record(ok, f"class counts {counts}, {total:.2f}s total (< 600s)")


# 4 -----------------------------------------------------------------------------

@pytest.mark.parametrize("build, n", [(build_g1, 11), (build_g2, 12)])
def test_ac4_identities_pass_everywhere(record, build, n):
    rep = check_counting_identities(build(), SQSR4)
    ok = rep.ok and len(rep.vertices) == n
    assert record(ok, f"n={n}: {sum(v.ok for v in rep.vertices)}/{n} vertices pass all identities")


@pytest.mark.parametrize("build, eq1", [(build_g1, 6), (build_g2, 7)])
def test_ac4_eq1_and_eq2_sums(record, build, eq1):
    rep = check_counting_identities(build(), SQSR4)
    s1 = {v.eq1 for v in rep.vertices}
    s2 = {v.eq2 for v in rep.vertices}
    assert record(s1 == {eq1} and s2 == {12}, f"eq1 sums {sorted(s1)} (want {eq1}), eq2 sums {sorted(s2)} (want 12)")


@pytest.mark.parametrize("build", [build_g1, build_g2])
def test_ac4_eq3_sums_are_8(record, build):
    rep = check_counting_identities(build(), SQSR4)
    s3 = {v.eq3 for v in rep.vertices}
    assert record(s3 == {8}, f"n={rep.n}: t1 + 2 t2 + 3 t3 sums {sorted(s3)} (criterion requires 8)")


# 5 -----------------------------------------------------------------------------

def test_ac5_t_profile_variance(record):
    g2 = build_g2()
    profiles = [t_profile(g2, u, SQSR4).t for u in range(g2.n)]
    distinct = set(profiles)
    ok = len(distinct) >= 2 and profiles[0] == (1, 3, 3) and profiles[9] == (0, 5, 2)
    assert record(ok, f"distinct profiles {sorted(distinct)}; vertex 0 {profiles[0]}, vertex 9 {profiles[9]}")


# 6 -----------------------------------------------------------------------------

@pytest.mark.parametrize("build", [build_g1, build_g2])
def test_ac6_cut_size(record, build):
    G = build()
    cuts = set()
    for u in range(G.n):
        U = neighbours(G, u)
        cuts.add(cut_size(G, U, G.vertex_mask & ~U & ~(1 << u)))
    assert record(cuts == {12}, f"n={G.n}: cut sizes {sorted(cuts)} (want 12 = k(k-1))")


# 7 -----------------------------------------------------------------------------

def test_ac7_h8_unique_maximum_independent_set(record):
    h8 = build_h8()
    alpha = independence_number(h8)
    sets = maximum_independent_sets(h8)
    ok = alpha == 5 and len(sets) == 1 and sets[0] == mask_of([1, 2, 3, 5, 6])
    assert record(ok, f"alpha = {alpha}, {len(sets)} maximum set(s) by subset scan")


# 8 -----------------------------------------------------------------------------

def _oracle_grid():
    for k in (2, 3):
        for n in range(k + 1, 9):
            if n * k % 2:
                continue
            for r in range(1, k + 2):
                for c in itertools.combinations(range(k + 1), r):
                    for proper, strict in itertools.product((True, False), repeat=2):
                        yield EnumSpec(n, k, 0, c, proper, strict)


def test_ac8_oracle_equivalence(record):
    t0 = time.perf_counter()
    specs = list(_oracle_grid())
    mismatched = [s for s in specs
                  if enumerate_graphs(s).classes != brute_force_enumerate(s).classes]
    elapsed = time.perf_counter() - t0
    ok = not mismatched and elapsed < 600
    assert record(ok, f"{len(specs)} specs, {len(mismatched)} mismatches, {elapsed:.1f}s (< 600s)")


# 9 -----------------------------------------------------------------------------

def test_ac9_canonical_form_invariance(record):
    rng = random.Random(9)
    corpus = [build_named(name) for name in NAMES]
    corpus += [random_graph(rng, rng.randint(2, 16), rng.choice([0.1, 0.2, 0.3, 0.5, 0.7])) for _ in range(50)]
    bad = 0
    for G in corpus:
        form = canonical_form(G)
        bad += sum(canonical_form(random_relabel(rng, G)) != form for _ in range(1000))
    assert record(bad == 0, f"{len(corpus)} graphs x 1000 relabelings, {bad} mismatches")


def _brute_isomorphic(G, H):
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    return any(G.relabel(p) == H for p in itertools.permutations(range(G.n)))


def test_ac9_isomorphism_vs_brute_force(record):
    rng = random.Random(99)
    corpus = [random_graph(rng, rng.randint(1, 7), rng.random()) for _ in range(150)]
    corpus += [random_relabel(rng, rng.choice(corpus)) for _ in range(50)]
    pairs = disagree = positives = 0
    for G, H in itertools.combinations(corpus, 2):
        want = _brute_isomorphic(G, H)
        positives += want
        disagree += is_isomorphic(G, H) != want
        pairs += 1
    assert record(disagree == 0, f"{pairs} pairs ({positives} isomorphic), {disagree} disagreements")


# 10 ----------------------------------------------------------------------------

def test_ac10_bounds_formulas(record):
    got = {k: (sqsr_bounds(k).lower, sqsr_bounds(k).upper) for k in range(4, 13)}
    want = {4: (11, 12), **{k: (2 * k + 4, k * k - 5) for k in range(5, 13)}}
    assert record(got == want, f"k=4 -> {got[4]}, k=5..12 closed forms {'match' if got == want else 'differ'}")
