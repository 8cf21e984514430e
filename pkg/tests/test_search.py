"""
Tests for the exact branch-and-bound search.

Core claims:
    - exact_turan agrees with plain enumeration of every graph on five vertices
    - Values match the closed forms where those are exact, and resolve disputed cells
    - Witnesses are pattern-free, canonical and have the reported edge count
    - Reports are identical for one worker and several
    - Budget exhaustion yields a lower bound flagged BUDGET_EXCEEDED
    - Shifting keeps the edge count and ends closure-closed
    - Dropping the closed-form cap from pruning never changes a value
    - Sample values hold over the full small-n ranges (slow)
"""

from itertools import combinations

import pytest

import formulas
import search
from construct import Family, extremal_construction, is_closure_closed
from core import OrderedGraph, canonical
from detect import PatternSpec, contains_pattern, creates_pattern
from errors import BudgetExceeded, InvalidArgument, NotApplicable, OutOfRange
from search import (
    STATUS_BUDGET,
    STATUS_EXACT,
    SearchOptions,
    enumerate_extremal,
    exact_turan,
    missing_edge_certificate,
    shift_compress,
    shift_passes,
)
from utils import dump_json


# -- Helpers -----------------------------------------------------------------


def _spec(text):
    return PatternSpec.parse(text)


def _enumerated_max(n, specs):
    pairs = list(combinations(range(1, n + 1), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) <= best:
            continue
        if not any(contains_pattern(edges, spec, n=n) for spec in specs):
            best = len(edges)
    return best


def _assert_witnesses(report):
    for g in report.witnesses:
        assert g.e == report.value
        assert canonical(g) == g
        for spec in report.forbidden:
            assert not contains_pattern(list(g.edges), spec, n=g.n)


def _random_free_graph(rng, n, spec):
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    edges = []
    for pair in pairs[:rng.randint(0, len(pairs))]:
        if not creates_pattern(edges, pair, spec):
            edges.append(pair)
    return OrderedGraph(n, edges)


# -- Exact values ------------------------------------------------------------


class TestExactTuran:
    @pytest.mark.parametrize("forbid", [
        ("sep:2",), ("cross:2",), ("nest:2",), ("noncross:2",), ("nonnest:2",),
        ("nonsep:2",), ("snn:2",), ("altpath:4",), ("cross:2", "sep:2"),
    ])
    def test_matches_enumeration_on_five_vertices(self, forbid):
        specs = [_spec(text) for text in forbid]
        report = exact_turan(5, specs)
        assert report.exact
        assert report.status == STATUS_EXACT
        assert report.value == _enumerated_max(5, specs)
        _assert_witnesses(report)

    @pytest.mark.parametrize("forbid, n, expected", [
        ("sep:2", 4, 5),
        ("sep:2", 6, 11),
        ("cross:2", 6, 9),
        ("nest:2", 6, 9),
        ("noncross:2", 6, 6),
        ("nonnest:2", 6, 6),
        ("altpath:4", 6, 9),
    ])
    def test_closed_forms(self, forbid, n, expected):
        report = exact_turan(n, _spec(forbid))
        assert report.exact
        assert report.value == expected

    def test_sep_witness(self):
        report = exact_turan(4, _spec("sep:2"))
        assert report.witnesses == (OrderedGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),)

    def test_nonnest_interval(self):
        report = exact_turan(6, _spec("nonnest:3"))
        assert report.exact
        assert 12 <= report.value <= 13
        _assert_witnesses(report)

    @pytest.mark.slow
    def test_disputed_nonsep_cell(self):
        report = exact_turan(7, _spec("nonsep:3"))
        assert report.exact
        assert report.value == 15
        _assert_witnesses(report)

    @pytest.mark.slow
    def test_shift_pruning_keeps_the_value(self):
        plain = exact_turan(7, _spec("nonsep:3"))
        shifted = exact_turan(7, _spec("nonsep:3"), SearchOptions(use_shift_pruning=True))
        assert shifted.value == plain.value
        assert shifted.witnesses
        assert all(is_closure_closed(g) for g in shifted.witnesses)

    def test_empty_and_trivial(self):
        assert exact_turan(0, _spec("sep:1")).value == 0
        assert exact_turan(3, _spec("sep:1")).value == 0

    def test_report_dict(self):
        data = exact_turan(4, _spec("sep:2")).to_dict()
        assert data["value"] == 5
        assert data["kind"] == "EXACT"
        assert data["forbidden"] == ["sep:2"]
        assert "workers" not in data["options"]


class TestSearchOptions:
    def test_above_ceiling(self):
        with pytest.raises(OutOfRange):
            exact_turan(10, _spec("sep:2"))

    def test_ceiling_is_configurable(self):
        with pytest.raises(OutOfRange):
            exact_turan(5, _spec("sep:2"), SearchOptions(ceiling=4))

    @pytest.mark.parametrize("changes", [
        {"budget": 0}, {"workers": 0}, {"max_witnesses": -1},
        {"seed_lower_bound": -2}, {"split_depth": -1},
    ])
    def test_validation(self, changes):
        with pytest.raises(InvalidArgument):
            SearchOptions(**changes)

    def test_bad_vertex_count(self):
        with pytest.raises(InvalidArgument):
            exact_turan(-1, _spec("sep:2"))

    def test_value_only_mode(self):
        report = exact_turan(6, _spec("cross:2"), SearchOptions(max_witnesses=0))
        assert report.value == 9
        assert report.witnesses
        _assert_witnesses(report)

    def test_witness_cap(self):
        report = exact_turan(6, _spec("nonnest:3"), SearchOptions(max_witnesses=1))
        assert len(report.witnesses) == 1

    def test_unreachable_hint_is_dropped(self):
        report = exact_turan(4, _spec("sep:2"), SearchOptions(seed_lower_bound=6))
        assert report.exact
        assert report.value == 5

    def test_reachable_hint(self):
        report = exact_turan(6, _spec("cross:2"), SearchOptions(seed_lower_bound=9))
        assert report.value == 9

    def test_shift_pruning_ignored_for_other_patterns(self, caplog):
        report = exact_turan(5, _spec("sep:2"), SearchOptions(use_shift_pruning=True))
        assert report.value == _enumerated_max(5, [_spec("sep:2")])
        assert "shift pruning" in caplog.text


class TestBudgetAndWorkers:
    def test_budget_exceeded(self):
        report = exact_turan(7, _spec("nonsep:3"), SearchOptions(budget=50))
        assert not report.exact
        assert report.status == STATUS_BUDGET
        assert report.kind == "LOWER_ONLY"
        assert report.value >= 15

    @pytest.mark.parametrize("workers", [4, 8])
    def test_same_report_for_any_worker_count(self, workers):
        spec = _spec("nonnest:3")
        one = exact_turan(6, spec, SearchOptions(workers=1))
        many = exact_turan(6, spec, SearchOptions(workers=workers))
        assert dump_json(one.to_dict()) == dump_json(many.to_dict())

    @pytest.mark.parametrize("workers", [4, 8])
    def test_same_cutoff_for_any_worker_count(self, workers):
        spec = _spec("nonsep:3")
        one = exact_turan(7, spec, SearchOptions(workers=1, budget=2000))
        many = exact_turan(7, spec, SearchOptions(workers=workers, budget=2000))
        assert dump_json(one.to_dict()) == dump_json(many.to_dict())

    @pytest.mark.slow
    @pytest.mark.parametrize("workers", [4, 8])
    @pytest.mark.parametrize("forbid, n", [("nonsep:3", 7), ("cross:2,sep:2", 8), ("altpath:4", 8)])
    def test_acceptance_workload_is_worker_independent(self, workers, forbid, n):
        specs = [_spec(text) for text in forbid.split(",")]
        one = exact_turan(n, specs, SearchOptions(workers=1))
        many = exact_turan(n, specs, SearchOptions(workers=workers))
        assert dump_json(one.to_dict()) == dump_json(many.to_dict())


class TestEnumerate:
    def test_only_the_empty_graph(self):
        assert enumerate_extremal(2, _spec("sep:1")) == [OrderedGraph.empty(2)]

    def test_all_optima(self):
        graphs = enumerate_extremal(4, _spec("sep:2"))
        assert [g.e for g in graphs] == [5]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_extremal(7, _spec("nonsep:3"), SearchOptions(budget=50))


# -- Shifting and certificates -------------------------------------------------


class TestShifting:
    def test_single_edge_moves_inward(self):
        passes = shift_passes(OrderedGraph(4, [(1, 4)]))
        assert [g.edges for g in passes] == [((1, 4),), ((1, 3),), ((1, 2),)]
        assert shift_compress(OrderedGraph(4, [(1, 4)])).edges == ((1, 2),)

    def test_keeps_edge_count_and_ends_closed(self, rng):
        for _ in range(25):
            n = rng.randint(3, 8)
            g = OrderedGraph(n, [p for p in combinations(range(1, n + 1), 2) if rng.random() < 0.4])
            passes = shift_passes(g)
            assert all(h.e == g.e for h in passes)
            assert is_closure_closed(passes[-1])
            lengths = [sum(v - u for u, v in h.edges) for h in passes]
            assert all(a > b for a, b in zip(lengths, lengths[1:]))

    def test_closed_graph_is_fixed(self, k4):
        assert shift_passes(k4) == [k4]

    @pytest.mark.slow
    def test_keeps_nonsep_freeness(self, rng):
        for _ in range(500):
            n = rng.randint(2, 10)
            spec = PatternSpec.parse(rng.choice(("nonsep:2", "nonsep:3")))
            g = _random_free_graph(rng, n, spec)
            shifted = shift_compress(g)
            assert shifted.e == g.e
            assert is_closure_closed(shifted)
            assert not contains_pattern(list(shifted.edges), spec, n=n), (g, spec)


class TestCertificate:
    def test_non_separated_construction(self):
        g = extremal_construction(Family.NON_SEPARATED, 8, 3)
        assert missing_edge_certificate(g, 3) == 3

    def test_complete_graph_has_none(self):
        assert missing_edge_certificate(OrderedGraph.complete(6), 3) is None

    def test_needs_2k(self):
        with pytest.raises(NotApplicable):
            missing_edge_certificate(OrderedGraph.complete(5), 3)

    @pytest.mark.parametrize("n, k", [
        (4, 2), (5, 2), (6, 2), (7, 2), (6, 3),
        pytest.param(8, 2, marks=pytest.mark.slow),
        pytest.param(7, 3, marks=pytest.mark.slow),
        pytest.param(8, 3, marks=pytest.mark.slow),
    ])
    def test_every_search_witness_has_one(self, n, k):
        report = exact_turan(n, PatternSpec.parse(f"nonsep:{k}"))
        assert report.exact and report.witnesses
        for g in report.witnesses:
            x = missing_edge_certificate(g, k)
            assert x is not None, g
            assert not g.has_edge(x, x + k)
            assert all(g.has_edge(a, b) for a, b in combinations(range(x + 1, x + k), 2))


# -- Closed-form cap -----------------------------------------------------------


class TestClosedFormCap:
    @pytest.mark.parametrize("forbid", [
        "sep:2", "nest:2", "cross:2", "noncross:2", "nonnest:2", "nonnest:3",
        "nonsep:2", "nonsep:3", "altpath:4", "cross:2,sep:2",
    ])
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_same_value_without_the_cap(self, forbid, n):
        specs = [_spec(text) for text in forbid.split(",")]
        trusted = exact_turan(n, specs, SearchOptions(max_witnesses=0))
        checked = exact_turan(n, specs, SearchOptions(max_witnesses=0, trust_formulas=False))
        assert trusted.exact and checked.exact
        assert checked.value == trusted.value

    def test_wrong_cap_is_not_used(self, monkeypatch):
        monkeypatch.setattr(formulas, "proven_upper_bound", lambda forbidden, n: 8)
        monkeypatch.setattr(search, "_seed_graph", lambda n, specs: None)
        report = exact_turan(6, _spec("nest:2"), SearchOptions(max_witnesses=0, trust_formulas=False))
        assert report.value == 9
        _assert_witnesses(report)

    def test_echoed(self):
        report = exact_turan(4, _spec("sep:2"), SearchOptions(trust_formulas=False))
        assert report.to_dict()["options"]["trust_formulas"] is False


# -- Small-n ranges --------------------------------------------------------------


@pytest.mark.slow
class TestSmallRanges:
    @pytest.mark.parametrize("n", range(4, 10))
    def test_nonnest_pairs(self, n):
        report = exact_turan(n, _spec("nonnest:2"))
        assert report.exact
        assert report.value == n

    @pytest.mark.parametrize("n", range(6, 9))
    def test_nonnest_triples(self, n):
        report = exact_turan(n, _spec("nonnest:3"))
        assert report.exact
        assert 2 * n <= report.value <= 2 * n + 1

    @pytest.mark.parametrize("n", range(4, 9))
    def test_alternating_four_paths(self, n):
        report = exact_turan(n, _spec("altpath:4"))
        assert report.exact
        assert report.value == 2 * n - 3
        assert extremal_construction(Family.NESTED_ALT, n, 2).e == report.value

    def test_cross_sep_at_eight(self):
        report = exact_turan(8, [_spec("cross:2"), _spec("sep:2")])
        assert report.exact
        assert report.value == 8
        _assert_witnesses(report)

    @pytest.mark.parametrize("n, k", [(n, 2) for n in range(4, 9)] + [(n, 3) for n in range(6, 9)])
    def test_shift_pruning_agrees(self, n, k):
        spec = _spec(f"nonsep:{k}")
        plain = exact_turan(n, spec, SearchOptions(max_witnesses=0))
        shifted = exact_turan(n, spec, SearchOptions(max_witnesses=0, use_shift_pruning=True))
        assert plain.exact and shifted.exact
        assert shifted.value == plain.value
