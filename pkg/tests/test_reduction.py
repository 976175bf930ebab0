"""Colex ranking, the two oracles, and both directions of the reduction."""

from itertools import combinations
from math import comb

import numpy as np
import pytest

import ramsat as rs
from ramsat.errors import BudgetError
from ramsat.reduction import iter_subsets_colex

from conftest import all_graphs, petersen


# -- colex ----------------------------------------------------------------


def test_colex_roundtrip():
    for n, k in [(6, 3), (8, 4), (10, 2), (7, 7), (5, 1)]:
        for rank in range(comb(n, k)):
            sub = rs.subset_unrank(rank, k)
            assert rs.subset_rank(sub) == rank
            assert len(sub) == k and all(0 <= c < n for c in sub)


def test_colex_order_matches_sorted_combinations():
    subs = sorted(combinations(range(7), 3), key=lambda c: tuple(reversed(c)))
    assert list(iter_subsets_colex(7, 3)) == subs


def test_pair_rank_consistent():
    for u in range(8):
        for v in range(u + 1, 8):
            assert rs.pair_rank(u, v) == rs.subset_rank((u, v))


# -- ksubset colorings -------------------------------------------------------


def test_ksubset_coloring_basics():
    chi = rs.KSubsetColoring.all_blue(5, 3)
    assert chi.color_of((0, 1, 2)) == 1
    chi = rs.KSubsetColoring.all_red(5, 3)
    assert chi.color_of((2, 3, 4)) == 0
    a = rs.KSubsetColoring.random(6, 3, 17)
    assert a == rs.KSubsetColoring.random(6, 3, 17)
    assert a != rs.KSubsetColoring.random(6, 3, 18)


def test_ksubset_coloring_caps():
    with pytest.raises(ValueError):
        rs.KSubsetColoring(64, 20, 0)  # C(64,20) over the bit cap
    with pytest.raises(ValueError):
        rs.KSubsetColoring(4, 2, 1 << 10)  # bits past C(4,2)


# -- unbalanced sets ----------------------------------------------------------


def test_has_unbalanced_set_examples():
    got = rs.has_unbalanced_set(rs.SimpleGraph.complete(5), 3, 2, 2)
    assert got is not None and len(got) == 3  # any triple lacks I_2
    assert rs.has_unbalanced_set(rs.SimpleGraph.cycle(5), 5, 2, 2) is None
    got = rs.has_unbalanced_set(petersen(), 4, 3, 3)
    assert got is not None  # triangle-free graph: every 4-set lacks K_3


def test_has_unbalanced_set_range_errors():
    with pytest.raises(ValueError):
        rs.has_unbalanced_set(rs.SimpleGraph.complete(4), 5, 2, 2)


# -- g oracle ----------------------------------------------------------------


def test_g_oracle_tiny_values():
    assert rs.g_oracle(2, 2, 2, 6).value == 2
    assert rs.g_oracle(3, 2, 3, 6).value == 3


def test_g_oracle_ramsey_number_with_c5_witness():
    res = rs.g_oracle(3, 2, 2, 6)
    assert res.value == 6
    w = res.witness
    assert res.witness_n == 5 and w.n == 5
    # the only graph on 5 vertices in which every triple has an edge and a
    # non-edge is the 5-cycle: 2-regular and connected
    assert all(w.degree(v) == 2 for v in range(5))
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in range(5):
            if w.has_edge(u, v) and u not in seen:
                seen.add(u)
                frontier.append(u)
    assert seen == set(range(5))


def test_g_oracle_monotone_in_n():
    vals = {}
    for n in (2, 3):
        vals[n] = rs.g_oracle(n, 2, 2, 6).value
    assert vals[2] <= vals[3]
    assert rs.g_oracle(3, 2, 3, 7).value <= rs.g_oracle(4, 2, 3, 7).value


def test_g_oracle_budget():
    with pytest.raises(BudgetError):
        rs.g_oracle(3, 2, 2, 8)


# -- good sets and the f oracle ------------------------------------------------


def test_good_set_witness_monochromatic():
    params = rs.RamseyParams(4, 2, 3)
    chi = rs.KSubsetColoring.all_blue(5, 3)
    assert rs.good_set_witness(chi, params).members == (0, 1, 2, 3)
    chi = rs.KSubsetColoring.all_red(5, 3)
    assert rs.good_set_witness(chi, params).members == (0, 1, 2, 3)


def _naive_good_set(chi: rs.KSubsetColoring, n, s, t):
    """Definition-level re-implementation with itertools only."""
    N, k = chi.N, chi.k
    for U in sorted(combinations(range(N), n), key=lambda c: tuple(reversed(c))):
        cond_a = all(
            any(
                chi.color_of(K) == 0
                for K in combinations(range(N), k)
                if set(S) <= set(K)
            )
            for S in combinations(U, s)
        )
        if cond_a:
            return U
        cond_b = all(
            any(
                chi.color_of(K) == 1
                for K in combinations(range(N), k)
                if set(T) <= set(K)
            )
            for T in combinations(U, t)
        )
        if cond_b:
            return U
    return None


def test_good_set_witness_matches_naive_on_seeded_colorings():
    params = rs.RamseyParams(4, 2, 3)
    for seed in range(50):
        chi = rs.KSubsetColoring.random(5, 3, seed)
        got = rs.good_set_witness(chi, params)
        want = _naive_good_set(chi, 4, 2, 3)
        assert (None if got is None else got.members) == want


def test_f_oracle_exact_formula_cases():
    # k = s+t-1 has the closed form 2n - s - t + 1
    assert rs.f_oracle(rs.RamseyParams(3, 2, 2, k=3), 6).value == 3
    assert rs.f_oracle(rs.RamseyParams(4, 2, 2, k=3), 6).value == 5


def test_f_oracle_is_ramsey_number_at_k2():
    res = rs.f_oracle(rs.RamseyParams(3, 2, 2, k=2), 6)
    assert res.value == 6
    assert res.witness is not None  # a 2-coloring of K_5 pairs, no mono triangle


def test_f_oracle_budget():
    with pytest.raises(BudgetError):
        rs.f_oracle(rs.RamseyParams(4, 2, 3), 7)


# -- transforms ---------------------------------------------------------------


def test_coloring_to_graph_k2_is_blue_graph():
    # with s = t = 2 the only 2-superset of a pair is itself, so the forced
    # conditions read the pair's own color and the graph is the blue graph
    for seed in range(20):
        chi = rs.KSubsetColoring.random(6, 2, seed)
        g = rs.coloring_to_graph(chi, 2, 2)
        for u in range(6):
            for v in range(u + 1, 6):
                assert g.has_edge(u, v) == (chi.color_of((u, v)) == 1)


def test_coloring_to_graph_single_blue_triple():
    chi = rs.KSubsetColoring.all_blue(3, 3)
    g = rs.coloring_to_graph(chi, 2, 3)
    assert g == rs.SimpleGraph.complete(3)


def test_coloring_to_graph_forced_sets_disjoint_seeded():
    # recompute both forcing conditions independently and confirm the
    # transform saw no conflict and honored them under both tie breaks
    N, k, s, t = 5, 3, 2, 3
    for seed in range(30):
        chi = rs.KSubsetColoring.random(N, k, seed)
        g_non = rs.coloring_to_graph(chi, s, t, "nonedge")
        g_edge = rs.coloring_to_graph(chi, s, t, "edge")
        for x in range(N):
            for y in range(x + 1, N):
                forced_edge = all(
                    chi.color_of(K) == 1
                    for K in combinations(range(N), k)
                    if {x, y} <= set(K)
                )
                forced_non = any(
                    all(
                        chi.color_of(K) == 0
                        for K in combinations(range(N), k)
                        if set(T) <= set(K)
                    )
                    for T in combinations(range(N), t)
                    if {x, y} <= set(T)
                )
                assert not (forced_edge and forced_non)
                if forced_edge:
                    assert g_non.has_edge(x, y) and g_edge.has_edge(x, y)
                elif forced_non:
                    assert not g_non.has_edge(x, y) and not g_edge.has_edge(x, y)
                else:
                    assert not g_non.has_edge(x, y) and g_edge.has_edge(x, y)


def test_coloring_to_graph_exclusivity_exhaustive_vectorized():
    # all 2^C(6,3) colorings at once: for every pair, "some s-superset is
    # all-blue" and "some t-superset is all-red" never hold together.
    # s = 2 makes the s-superset the pair itself; its k-supersets form one
    # mask, all-blue == (bits & mask) == mask.  For t = 3 each t-superset's
    # k-supersets are itself, all-red == that bit being 0.
    N, k, s, t = 6, 3, 2, 3
    m = comb(N, k)
    bits = np.arange(1 << m, dtype=np.uint32)
    ranks = {K: rs.subset_rank(K) for K in combinations(range(N), k)}
    for x in range(N):
        for y in range(x + 1, N):
            sup_mask = 0
            for K in combinations(range(N), k):
                if {x, y} <= set(K):
                    sup_mask |= 1 << ranks[K]
            forced_edge = (bits & sup_mask) == sup_mask
            forced_non = np.zeros(len(bits), dtype=bool)
            for T in combinations(range(N), t):
                if {x, y} <= set(T):
                    forced_non |= (bits & np.uint32(1 << ranks[T])) == 0
            assert not bool(np.any(forced_edge & forced_non))


def test_coloring_to_graph_requires_matching_k():
    chi = rs.KSubsetColoring.all_red(5, 3)
    with pytest.raises(ValueError):
        rs.coloring_to_graph(chi, 2, 2)  # needs k = 2


def test_graph_to_coloring_monochromatic_graphs():
    chi = rs.graph_to_coloring(rs.SimpleGraph.complete(5), 2, 3)
    assert chi.bits == (1 << comb(5, 3)) - 1  # all triples blue
    chi = rs.graph_to_coloring(rs.SimpleGraph.empty(5), 2, 3)
    assert chi.bits == 0  # all triples red


def test_graph_to_coloring_c5_all_triples_blue():
    # C_5 has independence number 2, so every triple contains an edge and
    # the red rule never fires; all 10 triples come out blue
    c5 = rs.SimpleGraph.cycle(5)
    chi = rs.graph_to_coloring(c5, 2, 3)
    for K in combinations(range(5), 3):
        assert chi.color_of(K) == 1
        assert any(c5.has_edge(u, v) for u, v in combinations(K, 2))


def test_graph_to_coloring_exclusivity_structural():
    # the two conditions only read the induced k-vertex subgraph, so
    # checking every graph on exactly k vertices covers all k-subsets of
    # all larger graphs
    for s, t in [(2, 3), (3, 3)]:
        k = s + t - 2
        for g in all_graphs(k):
            rs.graph_to_coloring(g, s, t)  # internal assertion is the check


def test_graph_to_coloring_exclusivity_seeded_n8():
    for s, t in [(2, 3), (3, 3)]:
        for seed in range(60):
            g = rs.sample_gnp(rs.GnpParams(8, (seed % 10) / 10.0, seed))
            rs.graph_to_coloring(g, s, t)


def test_round_trip_law_exhaustive():
    # whenever a graph has an unbalanced n-set, the derived coloring has a
    # good n-set (for s = 2, t = 3 over every graph on up to 5 vertices)
    s, t = 2, 3
    for N in (3, 4, 5):
        for g in all_graphs(N):
            chi = rs.graph_to_coloring(g, s, t)
            for n in range(3, N + 1):
                if rs.has_unbalanced_set(g, n, s, t) is not None:
                    params = rs.RamseyParams(n, s, t, N=N)
                    assert rs.good_set_witness(chi, params) is not None


def test_round_trip_law_n6():
    s, t = 2, 3
    for g in all_graphs(6):
        chi = rs.graph_to_coloring(g, s, t)
        for n in (3, 4, 5, 6):
            if rs.has_unbalanced_set(g, n, s, t) is not None:
                params = rs.RamseyParams(n, s, t, N=6)
                assert rs.good_set_witness(chi, params) is not None
