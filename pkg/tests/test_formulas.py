"""
Tests for the closed-form extremal values.

Core claims:
    - Single-pattern values agree with the published formulas at sample points
    - Disputed non-separated entries carry both candidate forms
    - Below 2k the non-separated value is the clique, disputed where the ceiling form differs
    - Composite sets dispatch to their own formulas and reject unknown sets
    - Length-class caps, Ramsey bounds and the residue pair cost match hand counts
"""

import pytest

from detect import PatternKind, PatternSpec
from errors import InvalidArgument, OutOfRange, UnsupportedSet
from formulas import (
    ExtremalKind,
    ExtremalValue,
    LengthBound,
    RamseyBoundKind,
    edge_length_bound,
    extremal_value,
    mstar_comparison,
    mstar_lower_bound,
    nonsep_forms,
    proven_upper_bound,
    ramsey_bound,
    residue,
    residue_pair_cost,
    turan_edges,
)

K = PatternKind


def _spec(text):
    return PatternSpec.parse(text)


class TestArithmetic:
    @pytest.mark.parametrize("N, k, expected", [(15, 3, 0), (8, 3, 2), (7, 2, 1)])
    def test_residue(self, N, k, expected):
        assert residue(N, k) == expected
        assert int(residue(N, k)) == expected

    def test_residue_bad_modulus(self):
        with pytest.raises(InvalidArgument):
            residue(5, 0)

    @pytest.mark.parametrize("n, k, expected", [(5, 2, 6), (7, 2, 12), (7, 3, 16)])
    def test_turan_edges(self, n, k, expected):
        assert turan_edges(n, k) == expected

    def test_turan_edges_range(self):
        with pytest.raises(InvalidArgument):
            turan_edges(3, 4)


class TestSingleValues:
    @pytest.mark.parametrize("spec, n, expected", [
        ("sep:2", 6, 11),
        ("sep:2", 4, 5),
        ("cross:3", 10, 30),
        ("nest:3", 10, 30),
        ("noncross:3", 10, 20),
        ("noncross:2", 6, 6),
        ("nonsep:3", 14, 37),
        ("nonsep:3", 8, 19),
        ("altpath:4", 10, 17),
        ("snn:2", 6, 6),
    ])
    def test_exact(self, spec, n, expected):
        value = extremal_value(_spec(spec), n)
        assert value.kind is ExtremalKind.EXACT
        assert value.value == expected

    def test_nonnest_interval(self):
        value = extremal_value(_spec("nonnest:3"), 10)
        assert value.kind is ExtremalKind.INTERVAL
        assert (value.lo, value.hi) == (20, 21)
        assert value.describe() == "[20,21]"

    def test_nonnest_k2_is_exact(self):
        assert extremal_value(_spec("nonnest:2"), 7).describe() == "7"

    def test_nonsep_disputed(self):
        value = extremal_value(_spec("nonsep:3"), 7)
        assert value.kind is ExtremalKind.DISPUTED
        assert value.value == 15
        assert value.candidates == {"ceiling": 12, "residue": 15}
        assert value.contains(12) and value.contains(15) and not value.contains(13)
        assert value.describe() == "ceiling-form=12;residue-form=15"

    def test_nonsep_forms(self):
        assert nonsep_forms(7, 3) == {"ceiling": 12, "residue": 15, "base_clique": 15}

    @pytest.mark.parametrize("n, k", [(2, 2), (3, 2), (5, 3), (7, 4)])
    def test_nonsep_below_2k_is_the_clique(self, n, k):
        value = extremal_value(PatternSpec(K.NONSEP, k), n)
        assert value.kind is ExtremalKind.EXACT
        assert value.value == n * (n - 1) // 2

    @pytest.mark.parametrize("n, k, ceiling", [(3, 3, 6), (4, 3, 3), (4, 4, 15)])
    def test_nonsep_below_2k_can_be_disputed(self, n, k, ceiling):
        value = extremal_value(PatternSpec(K.NONSEP, k), n)
        assert value.kind is ExtremalKind.DISPUTED
        assert value.value == n * (n - 1) // 2
        assert value.candidates["ceiling"] == ceiling

    def test_nonsep_reports_the_clique_up_to_2k(self):
        for k in range(2, 7):
            for n in range(k, 2 * k):
                assert extremal_value(PatternSpec(K.NONSEP, k), n).value == n * (n - 1) // 2, (n, k)

    def test_mstar_lower_only(self):
        value = extremal_value(_spec("mstar:5"), 30)
        assert value.kind is ExtremalKind.LOWER_ONLY
        assert value.lo == 122

    def test_below_threshold(self):
        with pytest.raises(OutOfRange):
            extremal_value(_spec("cross:3"), 5)

    def test_odd_path(self):
        with pytest.raises(UnsupportedSet):
            extremal_value(_spec("altpath:5"), 10)

    def test_exact_needs_single_value(self):
        with pytest.raises(InvalidArgument):
            ExtremalValue(1, 2, ExtremalKind.EXACT, "x")


class TestCompositeValues:
    def test_cross_sep_exact(self):
        value = extremal_value([_spec("cross:3"), _spec("sep:3")], 18)
        assert value.kind is ExtremalKind.EXACT
        assert value.value == 39

    def test_cross_sep_conditional_below_2k2(self):
        value = extremal_value([_spec("cross:3"), _spec("sep:3")], 10)
        assert value.kind is ExtremalKind.CONDITIONAL
        assert value.hi == 23

    def test_nest_sep(self):
        assert extremal_value([_spec("nest:3"), _spec("sep:3")], 10).value == 30

    def test_three_patterns(self):
        value = extremal_value([_spec("nest:3"), _spec("cross:3"), _spec("sep:3")], 10)
        assert value.kind is ExtremalKind.INTERVAL
        assert value.lo == 20

    def test_mixed_sizes(self):
        with pytest.raises(UnsupportedSet):
            extremal_value([_spec("cross:2"), _spec("sep:3")], 10)

    def test_unknown_set(self):
        with pytest.raises(UnsupportedSet):
            extremal_value([_spec("noncross:2"), _spec("sep:2")], 10)

    def test_path_with_matching(self):
        with pytest.raises(UnsupportedSet):
            extremal_value([_spec("altpath:4"), _spec("sep:4")], 10)

    def test_empty_set(self):
        with pytest.raises(InvalidArgument):
            extremal_value([], 10)


class TestProvenUpperBound:
    def test_disputed_is_skipped(self):
        assert proven_upper_bound(_spec("nonsep:3"), 7) is None

    def test_takes_the_smallest_bound(self):
        assert proven_upper_bound([_spec("cross:2"), _spec("sep:2")], 6) == 6

    def test_interval_upper_end(self):
        assert proven_upper_bound(_spec("nonnest:3"), 10) == 21


class TestLengthBounds:
    def test_long_cross(self):
        assert edge_length_bound(LengthBound.LONG_CROSS, 10, 3) == 13

    def test_short_snn(self):
        assert edge_length_bound(LengthBound.SHORT_SNN, 10, 3) == 8

    def test_short_sep(self):
        assert edge_length_bound(LengthBound.SHORT_SEP, 10, 3, ell=2) == 6

    def test_short_sep_length_range(self):
        with pytest.raises(OutOfRange):
            edge_length_bound(LengthBound.SHORT_SEP, 10, 3, ell=3)

    def test_needs_2k(self):
        with pytest.raises(OutOfRange):
            edge_length_bound(LengthBound.LONG_CROSS, 5, 3)


class TestRamseyBounds:
    @pytest.mark.parametrize("kind, param, expected", [
        (RamseyBoundKind.ALT_UPPER, 5, 18),
        (RamseyBoundKind.ALT_PREVIOUS, 4, 8),
        (RamseyBoundKind.ALT_PIGEONHOLE, 4, 8),
        (RamseyBoundKind.NONNEST_LOWER, 3, 8),
        (RamseyBoundKind.NONNEST_UPPER, 3, 6),
        (RamseyBoundKind.NONNEST_CONDITIONAL, 3, 11),
    ])
    def test_values(self, kind, param, expected):
        assert int(ramsey_bound(kind, param)) == expected

    def test_lower_bound_flag(self):
        bound = ramsey_bound(RamseyBoundKind.NONNEST_LOWER, 3)
        assert not bound.is_upper
        assert bound.flags

    def test_pigeonhole_needs_even_t(self):
        with pytest.raises(OutOfRange):
            ramsey_bound(RamseyBoundKind.ALT_PIGEONHOLE, 5)

    @pytest.mark.parametrize("n1, n2, expected", [(1, 1, 12), (0, 2, 13)])
    def test_residue_pair_cost(self, n1, n2, expected):
        assert residue_pair_cost(n1, n2, 3) == expected

    def test_residue_pair_cost_balanced_is_cheapest(self):
        for total in range(0, 11):
            costs = [residue_pair_cost(a, total - a, 3) for a in range(max(0, total - 5), min(5, total) + 1)]
            mid = total // 2
            assert residue_pair_cost(mid, total - mid, 3) == min(costs)


class TestMstarComparison:
    def test_counts(self):
        assert mstar_lower_bound(30, 5) == 122
        comparison = mstar_comparison(30, 5)
        assert comparison["linear"] == 120
        assert comparison["beats_linear"]

    def test_needs_k3(self):
        with pytest.raises(OutOfRange):
            mstar_lower_bound(10, 2)
