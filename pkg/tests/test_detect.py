"""
Tests for pattern detection.

Core claims:
    - Pairwise detectors return the maximum size and a lex-min witness that verifies
    - Split detectors (snn, mstar, mstarstar) record their islands
    - The longest alternating path matches brute force and its witness is a real path
    - alt_peel removes one extreme edge per vertex per round
    - Every fast detector agrees with brute force on all graphs with n <= 6
"""

from itertools import combinations

import pytest

from construct import Family, PartitionMode, distance_class_partition, extremal_construction, mstar_construction
from core import OrderedGraph
from detect import (
    MATCHING_KINDS,
    Groups,
    PatternKind,
    PatternSpec,
    alt_peel,
    brute_force_max,
    contains_pattern,
    creates_pattern,
    is_alternating_path,
    is_split_matching,
    iter_alternating_paths,
    longest_alternating_path,
    max_pattern,
    max_pattern_matching,
    max_split_pattern,
)
from errors import BudgetExceeded, InvalidArgument, Unsupported

K = PatternKind


# -- Helpers -----------------------------------------------------------------


def _all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield OrderedGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


# -- PatternSpec ---------------------------------------------------------------


class TestPatternSpec:
    def test_parse(self):
        spec = PatternSpec.parse("nonsep:3")
        assert spec == PatternSpec(K.NONSEP, 3)
        assert str(spec) == "nonsep:3"
        assert spec.vertex_count == 6

    def test_path_vertex_count(self):
        assert PatternSpec.parse("altpath:4").vertex_count == 4

    @pytest.mark.parametrize("text", ["nonsep", "nonsep:x", "bogus:3", "sep:0", "altpath:1"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidArgument):
            PatternSpec.parse(text)


# -- Pairwise detectors ------------------------------------------------------


class TestMaxPatternMatching:
    @pytest.mark.parametrize("kind, witness", [
        (K.CROSS, ((1, 4), (2, 5), (3, 6))),
        (K.NEST, ((1, 6), (2, 5), (3, 4))),
        (K.SEP, ((1, 2), (3, 4), (5, 6))),
    ])
    def test_k6(self, k6, kind, witness):
        size, found = max_pattern_matching(k6, kind)
        assert size == 3
        assert found.edges == witness
        assert found.verify()

    def test_empty_graph(self):
        g = OrderedGraph.empty(5)
        for kind in MATCHING_KINDS:
            assert max_pattern_matching(g, kind)[0] == 0

    def test_cap(self, k6):
        size, found = max_pattern_matching(k6, K.CROSS, cap=2)
        assert size == 2
        assert found.size == 2

    def test_nonnest_witness(self, k6):
        size, found = max_pattern_matching(k6, K.NONNEST)
        assert size == 3
        assert found.verify()

    def test_non_separated_construction(self):
        g = extremal_construction(Family.NON_SEPARATED, 14, 3)
        assert max_pattern_matching(g, K.NONSEP)[0] == 2

    def test_path_is_not_a_matching_kind(self, k6):
        with pytest.raises(Unsupported):
            max_pattern_matching(k6, K.ALT_PATH)

    def test_distance_class_parts(self):
        first, second = distance_class_partition(12, 3, PartitionMode.SNN_TWO)
        for part in (first, second):
            g = OrderedGraph(12, part)
            assert max_pattern_matching(g, K.SNN)[0] == len(part)


class TestCreatesPattern:
    def test_separated_pair(self):
        spec = PatternSpec(K.SEP, 2)
        assert creates_pattern([(1, 2)], (3, 4), spec)
        assert not creates_pattern([(1, 2)], (2, 3), spec)

    def test_agrees_with_contains(self, rng):
        spec = PatternSpec(K.NONSEP, 3)
        pairs = list(combinations(range(1, 8), 2))
        for _ in range(30):
            edges = []
            for pair in rng.sample(pairs, 12):
                if not creates_pattern(edges, pair, spec):
                    edges.append(pair)
            assert not contains_pattern(edges, spec)


# -- Split detectors ---------------------------------------------------------


class TestSplitPatterns:
    def test_snn_on_k8(self):
        size, witness = max_split_pattern(OrderedGraph.complete(8), K.CROSS, Groups.ANY)
        assert size == 4
        assert witness.verify()
        assert sum(len(island) for island in witness.islands) == 4

    def test_two_nested_blocks_on_k6(self, k6):
        size, witness = max_split_pattern(k6, K.NEST, Groups.TWO)
        assert size == 3
        assert len(witness.islands) <= 2

    def test_single_edge(self):
        assert max_split_pattern(OrderedGraph(2, [(1, 2)]), K.CROSS, Groups.TWO)[0] == 1

    def test_inner_must_be_cross_or_nest(self, k6):
        with pytest.raises(InvalidArgument):
            max_split_pattern(k6, K.SEP, Groups.ANY)

    def test_is_split_matching(self):
        assert is_split_matching([(1, 3), (2, 4), (5, 6)], K.CROSS, Groups.TWO)
        assert not is_split_matching([(1, 2), (3, 4), (5, 6)], K.CROSS, Groups.TWO)
        assert is_split_matching([(1, 2), (3, 4), (5, 6)], K.CROSS, Groups.ANY)

    @pytest.mark.slow
    def test_mstar_construction_is_free(self):
        g = mstar_construction(30, 5)
        assert max_pattern(g, K.MSTAR, cap=5) < 5


# -- Alternating paths -------------------------------------------------------


class TestAlternatingPath:
    def test_k6(self, k6):
        t, witness = longest_alternating_path(k6)
        assert t == 6
        assert witness.vertices == (1, 6, 2, 5, 3, 4)
        assert witness.verify(k6)

    def test_short_edges(self):
        g = extremal_construction(Family.NESTED_ALT, 10, 2)
        assert longest_alternating_path(g)[0] == 3

    def test_trivial(self):
        assert longest_alternating_path(OrderedGraph.empty(3))[0] == 1
        assert longest_alternating_path(OrderedGraph(2, [(1, 2)]))[0] == 2

    def test_is_alternating_path(self, k4):
        assert is_alternating_path(k4, (1, 4, 2, 3))
        assert not is_alternating_path(k4, (1, 2, 3, 4))
        assert not is_alternating_path(OrderedGraph(4, [(1, 4)]), (1, 4, 2))

    def test_iter_paths_in_k4(self, k4):
        paths = list(iter_alternating_paths(4, 4))
        assert len(paths) == 2
        assert all(is_alternating_path(k4, p) for p in paths)

    def test_peel_k4(self, k4):
        g0, g1, g2 = alt_peel(k4, 2)
        assert g0 == k4
        assert g1.edges == ((2, 3), (2, 4), (3, 4))
        assert g2.edges == ((2, 3),)

    def test_peel_rejects_negative_rounds(self, k4):
        with pytest.raises(InvalidArgument):
            alt_peel(k4, -1)


# -- Brute force oracle --------------------------------------------------------


class TestBruteForce:
    def test_k4(self, k4):
        assert brute_force_max(k4, K.CROSS) == 2
        assert brute_force_max(k4, K.SEP) == 2
        assert brute_force_max(k4, K.ALT_PATH) == 4

    def test_budget(self, k6):
        with pytest.raises(BudgetExceeded) as info:
            brute_force_max(k6, K.NONNEST, budget=3)
        assert info.value.nodes > 3

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
    def test_exhaustive_agreement(self, n):
        for g in _all_graphs(n):
            for kind in MATCHING_KINDS + (K.ALT_PATH, K.MSTAR, K.MSTARSTAR):
                assert max_pattern(g, kind) == brute_force_max(g, kind, budget=None), (g, kind)


# -- Properties on random graphs ---------------------------------------------


def _random_graph(rng, n, density=0.5):
    return OrderedGraph(n, [p for p in combinations(range(1, n + 1), 2) if rng.random() < density])


class TestProperties:
    def test_reversal_invariance(self, rng):
        from core import reverse
        for _ in range(40):
            g = _random_graph(rng, rng.randint(2, 9))
            for kind in MATCHING_KINDS + (K.ALT_PATH,):
                assert max_pattern(g, kind) == max_pattern(reverse(g), kind)

    def test_monotone_under_edge_addition(self, rng):
        for _ in range(40):
            n = rng.randint(3, 9)
            g = _random_graph(rng, n, 0.4)
            missing = [p for p in combinations(range(1, n + 1), 2) if not g.has_edge(*p)]
            if not missing:
                continue
            bigger = g.with_edges([rng.choice(missing)])
            for kind in MATCHING_KINDS + (K.ALT_PATH,):
                assert max_pattern(bigger, kind) >= max_pattern(g, kind)

    def test_nonsep_witness_spans_a_common_gap(self, rng):
        for _ in range(40):
            g = _random_graph(rng, rng.randint(2, 10))
            size, witness = max_pattern_matching(g, K.NONSEP)
            if size:
                assert any(all(u <= gap < v for u, v in witness.edges) for gap in range(1, g.n))

    def test_nonnest_witness_right_ends_increase(self, rng):
        for _ in range(40):
            g = _random_graph(rng, rng.randint(2, 10))
            _, witness = max_pattern_matching(g, K.NONNEST)
            rights = [v for _, v in sorted(witness.edges)]
            assert rights == sorted(set(rights))
            assert witness.verify()

    @pytest.mark.parametrize("k", [2, 3])
    def test_peeling_ends_empty_without_long_paths(self, rng, k):
        for _ in range(60):
            g = _random_graph(rng, rng.randint(2, 11), rng.choice((0.2, 0.35)))
            if longest_alternating_path(g)[0] < 2 * k:
                assert alt_peel(g, 2 * k - 2)[-1].e == 0

    def test_peel_edge_count_chain(self, k4):
        sequence = alt_peel(k4, 3)
        for i in range(3):
            assert sequence[i + 1].e >= sequence[i].e - (k4.n - i - 1)

    def test_peel_empty(self):
        assert all(g.e == 0 for g in alt_peel(OrderedGraph.empty(5), 3))

    @pytest.mark.slow
    def test_oracle_on_seven_vertices(self, rng):
        for _ in range(3000):
            g = _random_graph(rng, 7, rng.choice((0.2, 0.4, 0.6, 0.8)))
            for kind in MATCHING_KINDS + (K.ALT_PATH, K.MSTAR, K.MSTARSTAR):
                assert max_pattern(g, kind) == brute_force_max(g, kind, budget=None), (g, kind)

    @pytest.mark.slow
    def test_oracle_on_larger_random_graphs(self, rng):
        for _ in range(500):
            g = _random_graph(rng, rng.randint(1, 11), rng.choice((0.3, 0.5)))
            for kind in MATCHING_KINDS + (K.ALT_PATH,):
                assert max_pattern(g, kind) == brute_force_max(g, kind, budget=None), (g, kind)
