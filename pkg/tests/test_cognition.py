from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as strat

from src.auditor.checklist import CheckStatus
from src.cognition import (
    ball,
    check_alternate_route,
    check_compactness,
    check_limit_theorems,
    coincidence_classes,
    cog,
    detect_black_hole,
    detect_limits,
    make_matrix_metric,
    make_weight_metric,
    validate_pseudometric,
)
from src.consequence import RuleSystem
from src.errors import EmptySequenceError, InvalidThresholdError, MetricError, UnknownSentenceError
from src.models.sequence import make_sequence
from src.models.universe import make_universe

from tests.strategies import epsilons, universes, weight_metrics

X_FULL = ["x1", "x2", "x3", "x4", "x5", "x6", "x7"]


@pytest.fixture
def tiny_metric(tiny_universe):
    return make_weight_metric(tiny_universe, {"t": 0.1, "a": 0.3, "b": 0.5, "e": 0.9})


@pytest.fixture
def tiny_sequences(tiny_universe):
    full = make_sequence(tiny_universe, "full", ["t", "a", "b", "e", "e"], "e", constant_tail=True)
    truncated = make_sequence(tiny_universe, "truncated", ["t", "a", "b"], "e")
    return full, truncated


@pytest.fixture
def quadratic_sequences(quadratic_universe):
    full = make_sequence(quadratic_universe, "full", X_FULL, "x7")
    truncated = make_sequence(quadratic_universe, "truncated", X_FULL[:4], "x7")
    return full, truncated


class TestDistances:

    def test_weight_distances_are_exact(self, quadratic_metric):
        assert cog(quadratic_metric, "x1", "x2") == 0.2
        assert cog(quadratic_metric, "x5", "x6") == 0.05
        assert cog(quadratic_metric, "x7", "x7") == 0.0

    def test_ball_boundary_is_exclusive(self, quadratic_metric):
        # |0.3 - 0.1| is exactly 0.2 and therefore outside
        assert ball(quadratic_metric, "x1", 0.2).labels() == ["x1"]
        assert ball(quadratic_metric, "x7", 0.2).labels() == ["x5", "x6", "x7"]

    @pytest.mark.parametrize("epsilon", [0, 1, -0.5, 1.5])
    def test_threshold_outside_unit_interval(self, quadratic_metric, epsilon):
        with pytest.raises(InvalidThresholdError):
            ball(quadratic_metric, "x1", epsilon)

    def test_missing_weights_default_to_zero(self, tiny_universe):
        metric = make_weight_metric(tiny_universe, {"t": 0.5})
        assert cog(metric, "a", "b") == 0.0
        assert cog(metric, "t", "e") == 0.5
        assert metric.diagnostics == ("weights default to 0 for: a, b, e",)

    def test_weight_outside_range_rejected(self, tiny_universe):
        with pytest.raises(MetricError):
            make_weight_metric(tiny_universe, {"t": 1.2})

    def test_weight_for_unknown_symbol_rejected(self, tiny_universe):
        with pytest.raises(UnknownSentenceError):
            make_weight_metric(tiny_universe, {"z": 0.2})

    def test_coincidence_classes(self):
        universe = make_universe(["a", "b", "c"], ["a", "b", "c"], [])
        metric = make_weight_metric(universe, {"a": 0.5, "b": 0.5, "c": 0.25})
        assert coincidence_classes(metric) == [["a", "b"], ["c"]]


class TestValidation:

    def test_weight_metric_passes(self, quadratic_metric):
        report = validate_pseudometric(quadratic_metric)
        assert report.passed
        assert report.mode == "exhaustive"

    def test_triangle_violation_witness(self):
        universe = make_universe(["a", "b", "c"], ["a", "b", "c"], [])
        metric = make_matrix_metric(universe, [("a", "b", 0.1), ("b", "c", 0.1), ("a", "c", 0.5)])
        report = validate_pseudometric(metric)
        assert report.verdict("metric_triangle") == CheckStatus.FAIL.value
        assert report.results[3].witness == ["a", "b", "c"]
        assert report.verdict("metric_symmetry") == CheckStatus.PASS.value
        assert not metric.validated

    def test_asymmetric_matrix(self):
        universe = make_universe(["a", "b"], ["a", "b"], [])
        metric = make_matrix_metric(universe, [("a", "b", 0.1), ("b", "a", 0.3)])
        report = validate_pseudometric(metric)
        assert report.verdict("metric_symmetry") == CheckStatus.FAIL.value

    def test_congruence_violation(self):
        universe = make_universe(["a", "b", "c"], ["a", "b", "c"], [])
        metric = make_matrix_metric(
            universe, [("a", "b", 0.0), ("a", "c", 0.2), ("b", "c", 0.3)])
        report = validate_pseudometric(metric)
        assert report.verdict("metric_congruence") == CheckStatus.FAIL.value
        assert report.results[4].witness == ["a", "b", "c"]

    def test_unvalidated_matrix_metric_refused(self):
        universe = make_universe(["a", "b"], ["a", "b"], [])
        metric = make_matrix_metric(universe, [("a", "b", 0.4)])
        seq = make_sequence(universe, "s", ["a", "b"])
        with pytest.raises(MetricError):
            detect_limits(metric, seq, 0.5)
        assert validate_pseudometric(metric).passed
        assert detect_limits(metric, seq, 0.5).detected == ["a", "b"]


class TestLimits:

    def test_quadratic_onsets(self, quadratic_metric, quadratic_sequences):
        full, _ = quadratic_sequences
        report = detect_limits(quadratic_metric, full, 0.2)
        assert report.detected == ["x5", "x6", "x7"]
        assert report.onset("x5") == 4
        assert report.onset("x6") == 5
        assert report.onset("x7") == 5
        assert report.onset("x4") is None

    def test_tiny_cog_full_sequence(self, tiny_metric, tiny_sequences):
        full, truncated = tiny_sequences
        report = detect_limits(tiny_metric, full, 0.2)
        assert report.detected == ["e"]
        assert report.onset("e") == 4
        assert report.limit_point_min == 2
        assert report.limit_points == {"e": 2}

        report = detect_limits(tiny_metric, truncated, 0.2)
        assert report.detected == ["b"]
        assert report.onset("b") == 3

    def test_empty_sequence_rejected(self, tiny_metric, tiny_universe):
        with pytest.raises(EmptySequenceError):
            make_sequence(tiny_universe, "empty", [])

    def test_limit_theorems_on_full_sequence(self, tiny_cog, tiny_metric, tiny_sequences):
        full, _ = tiny_sequences
        report = detect_limits(tiny_metric, full, 0.2)
        theorems = check_limit_theorems(tiny_cog, tiny_metric, full, report, 0.2)
        for check_id in ("limits_within_2eps", "constant_tail_coincide", "limit_in_support",
                         "closure_adds_limits", "deductive_contains_limits"):
            assert theorems.verdict(check_id) == CheckStatus.PASS.value, check_id
        assert theorems.verdict("tail_coincidence") == CheckStatus.NOT_APPLICABLE.value

    def test_closure_adds_limits_discrepancy_on_truncated_prefix(self, tiny_cog, tiny_metric, tiny_sequences):
        _, truncated = tiny_sequences
        report = detect_limits(tiny_metric, truncated, 0.2)
        theorems = check_limit_theorems(tiny_cog, tiny_metric, truncated, report, 0.2)
        result = theorems.get("closure_adds_limits")
        assert result.status == CheckStatus.DISCREPANCY.value
        assert result.witness == ["e"]
        assert theorems.verdict("limit_in_support") == CheckStatus.NOT_APPLICABLE.value
        assert theorems.verdict("deductive_contains_limits") == CheckStatus.NOT_APPLICABLE.value

    def test_limit_outside_deductive_support_is_a_discrepancy(self):
        universe = make_universe(["x", "y"], ["x", "y"], [])
        metric = make_weight_metric(universe, {"x": 0.1, "y": 0.15})
        seq = make_sequence(universe, "s", ["x"])
        report = detect_limits(metric, seq, 0.2)
        assert report.detected == ["x", "y"]
        theorems = check_limit_theorems(RuleSystem(universe, ()), metric, seq, report, 0.2)
        result = theorems.get("limit_in_support")
        assert result.status == CheckStatus.DISCREPANCY.value
        assert result.witness == ["y"]

    def test_partner_without_common_tail(self, tiny_cog, tiny_metric, tiny_sequences):
        full, truncated = tiny_sequences
        report = detect_limits(tiny_metric, full, 0.2)
        theorems = check_limit_theorems(tiny_cog, tiny_metric, full, report, 0.2, partner=truncated)
        assert theorems.get("tail_coincidence").message == "sequences do not coincide at the end"

    def test_partner_with_common_tail(self, quadratic_universe, quadratic_metric):
        op = RuleSystem(quadratic_universe, ())
        first = make_sequence(quadratic_universe, "first", ["x1", "x6", "x7"])
        second = make_sequence(quadratic_universe, "second", ["x3", "x6", "x7"])
        report = detect_limits(quadratic_metric, first, 0.2)
        theorems = check_limit_theorems(op, quadratic_metric, first, report, 0.2, partner=second)
        assert theorems.verdict("tail_coincidence") == CheckStatus.PASS.value
        assert theorems.get("tail_coincidence").subject == "first~second"
        assert theorems.verdict("prefix_tail_coincidence") == CheckStatus.NOT_APPLICABLE.value


class TestBlackHoles:

    def test_truncated_quadratic_sequence(self, quadratic_universe, quadratic_metric, quadratic_sequences):
        full, truncated = quadratic_sequences
        space = quadratic_universe.subset(["x5", "x6", "x7"])
        assert detect_black_hole(quadratic_metric, truncated, "x7", 0.1, space) == 1
        assert detect_black_hole(quadratic_metric, truncated, "x7", 0.2, space) == 1
        assert detect_black_hole(quadratic_metric, full, "x7", 0.2, space) is None

    def test_ball_must_fit_in_region(self, quadratic_universe, quadratic_metric, quadratic_sequences):
        _, truncated = quadratic_sequences
        region = quadratic_universe.subset(["x7"])
        assert detect_black_hole(quadratic_metric, truncated, "x7", 0.2, region) is None

    def test_onset_follows_last_visit(self, quadratic_universe, quadratic_metric):
        seq = make_sequence(quadratic_universe, "visit", ["x6", "x7", "x1", "x2"], "x7")
        space = quadratic_universe.subset(["x5", "x6", "x7"])
        assert detect_black_hole(quadratic_metric, seq, "x7", 0.2, space) == 3

    def test_compactness_of_quadratic_space(self, quadratic_universe, quadratic_metric, quadratic_sequences):
        space = quadratic_universe.subset(["x5", "x6", "x7"])
        report = check_compactness(quadratic_metric, space, quadratic_sequences, [0.1, 0.2])
        assert not report.compact
        assert [(h.sequence, h.virtual_limit, h.epsilon, h.onset) for h in report.black_holes] == [
            ("truncated", "x7", 0.1, 1), ("truncated", "x7", 0.2, 1),
        ]
        first = report.results[0]
        assert first.check_id == "compactness"
        assert first.status == CheckStatus.INFO.value
        statuses = {(r.check_id, r.status) for r in report.results[1:]}
        assert statuses == {
            ("black_hole", CheckStatus.INFO.value),
            ("black_hole_divergence", CheckStatus.PASS.value),
            ("alternate_route", CheckStatus.PASS.value),
        }

    def test_tiny_cog_black_holes(self, tiny_universe, tiny_metric, tiny_sequences):
        report = check_compactness(tiny_metric, tiny_universe.subset(["e"]), tiny_sequences, [0.1, 0.2])
        assert [(h.sequence, h.epsilon, h.onset) for h in report.black_holes] == [
            ("truncated", 0.1, 1), ("truncated", 0.2, 1),
        ]

    def test_no_sequences_is_vacuously_compact(self, quadratic_universe, quadratic_metric):
        report = check_compactness(quadratic_metric, quadratic_universe.subset(["x7"]), [], [0.2])
        assert report.compact
        assert report.diagnostics == ["compact (vacuous): no registered sequences"]

    def test_alternate_route_not_applicable_alone(self, quadratic_universe, quadratic_metric,
                                                  quadratic_sequences):
        _, truncated = quadratic_sequences
        space = quadratic_universe.subset(["x5", "x6", "x7"])
        report = check_compactness(quadratic_metric, space, [truncated], [0.2])
        hole = report.black_holes[0]
        result = check_alternate_route(quadratic_metric, hole, [truncated])
        assert result.status == CheckStatus.NOT_APPLICABLE.value


@settings(max_examples=80, deadline=None)
@given(strat.data())
def test_black_hole_excludes_convergence(data):
    universe = data.draw(universes(min_symbols=2, max_symbols=6))
    metric = data.draw(weight_metrics(universe))
    thoughts = data.draw(strat.lists(strat.sampled_from(universe.symbols), min_size=1, max_size=8))
    x = data.draw(strat.sampled_from(universe.symbols))
    epsilon = data.draw(epsilons())
    seq = make_sequence(universe, "s", thoughts, x)
    k = detect_black_hole(metric, seq, x, epsilon, universe.omega)
    if k is not None:
        assert 1 <= k <= len(seq)
        assert x not in detect_limits(metric, seq, epsilon).detected


@settings(max_examples=60, deadline=None)
@given(strat.data())
def test_detected_limits_lie_within_two_epsilon(data):
    universe = data.draw(universes(min_symbols=2, max_symbols=6))
    metric = data.draw(weight_metrics(universe))
    thoughts = data.draw(strat.lists(strat.sampled_from(universe.symbols), min_size=1, max_size=8))
    epsilon = data.draw(epsilons())
    report = detect_limits(metric, make_sequence(universe, "s", thoughts), epsilon)
    detected = report.detected
    for x in detected:
        for y in detected:
            assert Fraction(str(cog(metric, x, y))) < 2 * epsilon


@settings(max_examples=60, deadline=None)
@given(strat.data())
def test_ball_grows_with_epsilon(data):
    universe = data.draw(universes(min_symbols=1, max_symbols=6))
    metric = data.draw(weight_metrics(universe))
    low, high = sorted(data.draw(strat.lists(epsilons(), min_size=2, max_size=2)))
    x = data.draw(strat.sampled_from(universe.symbols))
    small, large = ball(metric, x, low), ball(metric, x, high)
    assert small.mask & ~large.mask == 0
    assert x in small.labels()


@settings(max_examples=60, deadline=None)
@given(strat.data())
def test_onsets_match_a_direct_scan(data):
    universe = data.draw(universes(min_symbols=1, max_symbols=6))
    metric = data.draw(weight_metrics(universe))
    thoughts = data.draw(strat.lists(strat.sampled_from(universe.symbols), min_size=1, max_size=200))
    epsilon = data.draw(epsilons())
    close = {
        x: [Fraction(str(cog(metric, x, y))) < epsilon for y in thoughts]
        for x in universe.symbols
    }
    expected = {}
    for x, row in close.items():
        onset = next((m for m in range(1, len(row) + 1) if all(row[m - 1:])), None)
        if onset is not None:
            expected[x] = onset
    report = detect_limits(metric, make_sequence(universe, "s", thoughts), epsilon)
    assert {c.symbol: c.onset for c in report.candidates if c.detected} == expected
