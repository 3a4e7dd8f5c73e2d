import random

import pytest
from hypothesis import given, settings

from src.auditor.checklist import CheckStatus
from src.config import DEFAULT_SETTINGS
from src.consequence import (
    RuleSystem,
    close,
    is_deductive,
    make_rule,
    make_table_operator,
    naive_close,
    validate_operator,
)
from src.errors import CapExceededError, UnknownSentenceError
from src.generators import random_rule_system, random_table_operator
from src.models.universe import iter_bits, make_universe

from tests.strategies import rule_systems


def test_close_examples(tiny_cog, tiny_universe):
    u = tiny_universe
    assert close(tiny_cog, u.subset(["a"])).labels() == ["t", "a"]
    assert close(tiny_cog, u.cognitive).labels() == ["t", "a", "b", "e"]
    assert close(tiny_cog, u.empty).labels() == ["t"]


def test_identity_operator_in_plain_mode(plain_mode):
    u = plain_mode.universe
    for mask in range(1 << len(u)):
        assert plain_mode.close_mask(mask) == mask


def test_is_deductive_examples(tiny_cog, tiny_universe):
    u = tiny_universe
    assert is_deductive(tiny_cog, u.subset(["t", "a"]))
    assert not is_deductive(tiny_cog, u.subset(["a"]))
    assert not is_deductive(tiny_cog, u.empty)


def test_premise_free_rule_joins_every_closure(tiny_universe):
    op = RuleSystem(tiny_universe, (make_rule(tiny_universe, [], "b"),))
    assert close(op, tiny_universe.empty).labels() == ["t", "b"]


def test_rule_with_unknown_conclusion_rejected(tiny_universe):
    with pytest.raises(UnknownSentenceError):
        make_rule(tiny_universe, ["a"], "z")


def test_derivation_trace_names_the_firing_rule(tiny_cog, tiny_universe):
    trace = tiny_cog.derivation_trace(tiny_universe.mask(["a", "b"]))
    assert trace == {tiny_universe.index("e"): 0}


def test_tiny_cog_validates(tiny_cog):
    report = validate_operator(tiny_cog)
    assert report.mode == "exhaustive"
    assert report.subsets_checked == 16
    for check_id in ("axiom_ii", "axiom_iii", "axiom_iv", "axiom_v", "union_bound", "cond_empty", "cond_whole"):
        assert report.verdict(check_id) == CheckStatus.PASS.value, check_id
    assert report.verdict("axiom_i") == CheckStatus.PASS.value
    assert "vacuously satisfied" in report.axioms["axiom_i"].message
    assert report.verdict("axiom_vi") == CheckStatus.NOT_EVALUATED.value
    assert report.conditions["cond_empty"].witness == [["t"]]
    assert report.union_bound.message.endswith(
        "on all 256 pairs; 47 with A, B, A ∪ B deductive, equality on each")


def test_plain_mode_reports_cognitive_conditions(plain_mode):
    report = validate_operator(plain_mode)
    assert report.axioms_hold
    assert report.verdict("cond_empty") == CheckStatus.FAIL.value
    assert report.verdict("cond_whole") == CheckStatus.FAIL.value


def test_table_idempotence_failure_has_witness():
    universe = make_universe(["a", "b", "c"], ["a", "b", "c"], [])
    op = make_table_operator(universe, [(["a"], ["a", "b"]), (["a", "b"], ["a", "b", "c"])])
    report = validate_operator(op)
    result = report.axioms["axiom_iv"]
    assert result.status == CheckStatus.FAIL.value
    assert result.witness[0] == ["a"]
    assert not report.axioms_hold


def test_table_closure_is_returned_verbatim():
    universe = make_universe(["a", "b"], ["a", "b"], [])
    op = make_table_operator(universe, [(["b"], ["a"])])
    assert close(op, universe.subset(["b"])).labels() == ["a"]
    assert validate_operator(op).verdict("axiom_ii") == CheckStatus.FAIL.value


def test_table_operator_cap():
    universe = make_universe([f"s{i}" for i in range(17)], [], [])
    with pytest.raises(CapExceededError):
        make_table_operator(universe, [])


def test_deduction_axiom_with_implication_encoding():
    universe = make_universe(["x", "y", "x>y"], ["x", "y", "x>y"], [])
    u = universe
    holds = RuleSystem(u, (make_rule(u, ["x", "x>y"], "y"), make_rule(u, [], "x>y")))
    report = validate_operator(holds, {("x", "y"): "x>y"})
    assert report.verdict("axiom_vi") == CheckStatus.PASS.value

    fails = RuleSystem(u, (make_rule(u, ["x"], "y"),))
    report = validate_operator(fails, {("x", "y"): "x>y"})
    assert report.verdict("axiom_vi") == CheckStatus.FAIL.value
    assert report.axioms["axiom_vi"].witness == [[], "x", "y"]


def test_random_tables_report_instead_of_raising():
    rng = random.Random(808)
    for _ in range(20):
        op = random_table_operator(rng, rng.randint(1, 5))
        report = validate_operator(op)
        assert report.mode == "exhaustive"
        assert len(report.results) == 9
        for result in report.results:
            if result.failed:
                assert result.witness, result.check_id


def test_exhaustive_mode_refused_beyond_cap():
    rng = random.Random(1)
    op = random_rule_system(rng, 15, 10)
    with pytest.raises(CapExceededError):
        validate_operator(op, mode="exhaustive")
    assert validate_operator(op).mode == "sampled"


def test_sampled_validation_is_seeded():
    op = random_rule_system(random.Random(3), 20, 30)
    small = DEFAULT_SETTINGS.merged(sample_count=50)
    first = validate_operator(op, settings=small)
    second = validate_operator(op, settings=small)
    assert [r.to_dict() for r in first.results] == [r.to_dict() for r in second.results]
    assert first.axioms_hold


@settings(max_examples=60, deadline=None)
@given(rule_systems(max_symbols=7, max_rules=12))
def test_semi_naive_matches_naive(op):
    u = op.universe
    for mask in range(1 << len(u)):
        assert op.close_mask(mask) == op.naive_close_mask(mask)


@settings(max_examples=40, deadline=None)
@given(rule_systems(max_symbols=6, max_rules=10))
def test_closure_laws(op):
    u = op.universe
    n = len(u)
    for mask in range(1 << n):
        closed = op.close_mask(mask)
        assert mask & ~closed == 0
        assert closed & u.logic_mask == u.logic_mask
        assert op.close_mask(closed) == closed
        for x in range(n):
            assert closed & ~op.close_mask(mask | 1 << x) == 0


@settings(max_examples=40, deadline=None)
@given(rule_systems(max_symbols=6, max_rules=10))
def test_replayed_support_reproduces_each_consequence(op):
    u = op.universe
    for mask in range(1 << len(u)):
        closed = op.close_mask(mask)
        for x in iter_bits(closed & ~mask):
            support = op.support_mask(mask, x)
            assert support & ~mask == 0
            assert op.close_mask(support) >> x & 1


def test_naive_close_wrapper(tiny_cog, tiny_universe):
    a = tiny_universe.subset(["a", "b"])
    assert naive_close(tiny_cog, a) == close(tiny_cog, a)
