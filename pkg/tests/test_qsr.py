import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qsrgraphs.catalog import G2_EDGES, build_g1, build_g2, complete, complete_bipartite, cycle, path
from qsrgraphs.graphcore import Graph, cut_size, make_graph, neighbours
from qsrgraphs.qsr import (
    AdjacentCountNotConstant,
    CompleteGraph,
    DegreeTooSmall,
    EdgelessGraph,
    NotRegular,
    ParameterMismatch,
    UnrealizedCount,
    analyze,
    check_counting_identities,
    matches,
    mismatch_reason,
    sqsr_bounds,
    t_profile,
)

from conftest import random_regular

C5 = cycle(5)
K44 = complete_bipartite(4, 4)


def _profile_by_sets(edges, n, u, c_list):
    nbr = {v: set() for v in range(n)}
    for a, b in edges:
        nbr[a].add(b)
        nbr[b].add(a)
    counts = {c: 0 for c in c_list}
    for v in range(n):
        if v != u and v not in nbr[u]:
            counts[len(nbr[u] & nbr[v])] += 1
    return tuple(counts[c] for c in c_list)


def test_analyze_examples():
    s = analyze(C5)
    assert (s.n, s.k, s.a, s.c_values, s.grade, s.strict) == (5, 2, 0, (1,), 1, True)
    s = analyze(K44)
    assert (s.n, s.k, s.a, s.c_values, s.grade) == (8, 4, 0, (4,), 1)
    s = analyze(build_g2())
    assert (s.n, s.k, s.a, s.c_values, s.grade, s.strict) == (12, 4, 0, (3, 2, 1), 3, True)


def test_analyze_declared_properness():
    assert analyze(K44, declared=[4]).proper is True
    assert analyze(K44, declared=[4, 3]).proper is False


@pytest.mark.parametrize("G, exc", [
    (path(3), NotRegular),
    (complete(4), CompleteGraph),
    (make_graph(4, []), EdgelessGraph),
])
def test_analyze_errors(G, exc):
    with pytest.raises(exc):
        analyze(G)


def test_analyze_adjacent_count_not_constant():
    # prism: triangle edges share 1, rungs share 0
    prism = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    with pytest.raises(AdjacentCountNotConstant):
        analyze(prism)


def test_matches_examples():
    assert matches(build_g1(), 11, 4, 0, [3, 2, 1], True)
    assert matches(C5, 5, 2, 0, [1], True)
    assert not matches(K44, 8, 4, 0, [4, 3], True)
    assert "not proper" in mismatch_reason(K44, 8, 4, 0, [4, 3])
    assert mismatch_reason(C5, 5, 3, 0, [1]) == "not 3-regular"
    assert not matches(path(3), 3, 1, 0, [1])


def test_matches_strictness():
    # 6-cycle: a = 0; distance-2 pairs share 1, antipodal pairs share 0
    c6 = cycle(6)
    assert not matches(c6, 6, 2, 0, [2, 1, 0], False)  # 2 never realized
    assert matches(c6, 6, 2, 0, [1, 0], False)
    assert not matches(c6, 6, 2, 0, [1, 0], True)


def test_t_profile_examples():
    g2 = build_g2()
    assert _profile_by_sets(G2_EDGES, 12, 0, (3, 2, 1)) == (1, 3, 3)
    assert _profile_by_sets(G2_EDGES, 12, 9, (3, 2, 1)) == (0, 5, 2)
    assert t_profile(g2, 0, [3, 2, 1]).t == (1, 3, 3)
    assert t_profile(g2, 9, [3, 2, 1]).t == (0, 5, 2)
    assert t_profile(C5, 0, [1]).t == (2,)
    for u in range(12):
        assert t_profile(g2, u, [3, 2, 1]).t == _profile_by_sets(G2_EDGES, 12, u, (3, 2, 1))


def test_t_profile_unrealized():
    with pytest.raises(UnrealizedCount):
        t_profile(K44, 0, [3])


def test_counting_identities_g2():
    rep = check_counting_identities(build_g2(), [3, 2, 1])
    assert rep.ok and len(rep.vertices) == 12
    assert {v.eq1 for v in rep.vertices} == {7}
    assert {v.eq2 for v in rep.vertices} == {12}
    # t1 + 2 t2 + 3 t3 from the brute-force profiles (1,3,3) and (0,5,2)
    assert {v.eq3 for v in rep.vertices} == {16} == {rep.eq3_target}


def test_counting_identities_g1():
    rep = check_counting_identities(build_g1(), [3, 2, 1])
    assert rep.ok and len(rep.vertices) == 11
    assert {v.eq1 for v in rep.vertices} == {6}
    assert {v.eq3 for v in rep.vertices} == {12}


def test_counting_identities_broken_graph():
    g2 = build_g2()
    u, v = g2.edges()[0]
    rows = list(g2.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    broken = Graph(12, tuple(rows))
    rep = check_counting_identities(broken, [3, 2, 1])
    assert not rep.ok
    assert not rep.vertices[u].ok and not rep.vertices[v].ok
    with pytest.raises(ParameterMismatch):
        check_counting_identities(g2, [3, 1])


def test_eq3_equals_2k_when_n_is_2k_plus_2():
    # the general target k(n - 2k) reduces to 2k at n = 2k + 2
    for k in range(4, 10):
        assert k * ((2 * k + 2) - 2 * k) == 2 * k


def test_sqsr_bounds():
    b = sqsr_bounds(4)
    assert (b.lower, b.upper) == (11, 12)
    b = sqsr_bounds(5)
    assert (b.lower, b.upper) == (14, 20)
    with pytest.raises(DegreeTooSmall):
        sqsr_bounds(3)
    for k in range(4, 40):
        b = sqsr_bounds(k)
        assert b.lower <= b.upper


QSR_GRAPHS = [C5, K44, build_g1(), build_g2(), cycle(7),
              make_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                         + [(i, i + 5) for i in range(5)])]  # Petersen


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(QSR_GRAPHS), st.randoms(use_true_random=False))
def test_analyze_isomorphism_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert analyze(G.relabel(perm)) == analyze(G)


@pytest.mark.parametrize("G", [build_g1(), build_g2()])
def test_sqsr_properties(G):
    k = 4
    rep = check_counting_identities(G, [3, 2, 1])
    assert rep.ok
    for u in range(G.n):
        U = neighbours(G, u)
        rest = G.vertex_mask & ~U & ~(1 << u)
        assert cut_size(G, U, rest) == k * (k - 1)
    # minimum c positive: diameter 2
    for u, v in itertools.combinations(range(G.n), 2):
        assert G.has_edge(u, v) or G.adj[u] & G.adj[v]


def test_generalized_eq2_on_random_qsr(rng):
    # sum c t = k(k - a - 1) for any QSR graph, any a
    hits = 0
    for _ in range(200):
        G = random_regular(rng, rng.choice([8, 10, 12]), rng.choice([3, 4]))
        try:
            s = analyze(G)
        except Exception:
            continue
        hits += 1
        for u in range(G.n):
            prof = t_profile(G, u, s.c_values)
            assert sum(prof.t) == s.n - s.k - 1
            assert sum(c * t for c, t in prof.counts) == s.k * (s.k - s.a - 1)
    assert hits > 10


def test_grade_one_is_strongly_regular(rng):
    seen = 0
    for G in QSR_GRAPHS + [random_regular(rng, 10, 3) for _ in range(100)]:
        try:
            s = analyze(G)
        except Exception:
            continue
        if s.grade != 1:
            continue
        seen += 1
        lam = s.c_values[0]
        for u, v in itertools.combinations(range(G.n), 2):
            c = (G.adj[u] & G.adj[v]).bit_count()
            assert c == (s.a if G.has_edge(u, v) else lam)
    assert seen >= 3
