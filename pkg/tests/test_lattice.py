import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from src.auditor.checklist import CheckStatus
from src.config import DEFAULT_SETTINGS
from src.consequence import RuleSystem, make_rule, make_table_operator
from src.errors import CapExceededError
from src.generators import random_rule_system
from src.lattice import (
    COGNITIVE_CONDITIONS_VIOLATED,
    brute_force_deductive,
    build_cct,
    check_structure_theorems,
    cognitive_closure,
    enumerate_deductive,
)
from src.models.universe import LOGIC_OUTSIDE_COGNITIVE, make_universe

from tests.strategies import rule_systems

PASS = CheckStatus.PASS.value


def test_deductive_sets_of_tiny_cog(tiny_cog, tiny_universe):
    family = enumerate_deductive(tiny_cog, tiny_universe.omega)
    assert family.labels() == [
        ["t"], ["t", "a"], ["t", "b"], ["t", "e"], ["t", "a", "e"], ["t", "b", "e"], ["t", "a", "b", "e"],
    ]
    within_c = enumerate_deductive(tiny_cog, tiny_universe.cognitive)
    assert within_c.labels() == [["t"], ["t", "a"], ["t", "b"]]


def test_identity_operator_makes_every_subset_deductive(plain_mode):
    family = enumerate_deductive(plain_mode, plain_mode.universe.omega)
    assert list(family.members) == list(range(8))


def test_enumeration_cap(tiny_cog, tiny_universe):
    small = DEFAULT_SETTINGS.merged(enumeration_cap=3)
    with pytest.raises(CapExceededError):
        enumerate_deductive(tiny_cog, tiny_universe.omega, small)


def test_table_operators_use_the_brute_force_filter():
    universe = make_universe(["a", "b"], ["a", "b"], [])
    op = make_table_operator(universe, [(["a"], ["b"])])
    assert enumerate_deductive(op, universe.omega).members == (0, 2, 3)


def test_cognitive_closure_examples(tiny_cog, tiny_universe):
    u = tiny_universe
    assert cognitive_closure(tiny_cog, u.subset(["a"])).labels() == ["t", "a"]
    assert cognitive_closure(tiny_cog, u.empty).labels() == ["t"]
    d = u.subset(["t", "b", "e"])
    assert cognitive_closure(tiny_cog, d) == d


def test_cct_of_tiny_cog(tiny_cog):
    tau = build_cct(tiny_cog)
    assert tau.labels() == [["a"], ["b"], ["a", "b"]]
    assert tau.diagnostics == ()


def test_cct_in_plain_mode_is_the_power_set(plain_mode):
    tau = build_cct(plain_mode)
    assert len(tau) == 8
    assert 0 in tau and plain_mode.universe.cognitive_mask in tau
    assert COGNITIVE_CONDITIONS_VIOLATED in tau.diagnostics


def test_cct_empty_when_logic_base_outside_c():
    universe = make_universe(["t", "a", "b"], ["a", "b"], ["t"])
    tau = build_cct(RuleSystem(universe, ()))
    assert len(tau) == 0
    assert LOGIC_OUTSIDE_COGNITIVE in tau.diagnostics


def test_structure_theorems_on_tiny_cog(tiny_cog, tiny_universe):
    report = check_structure_theorems(tiny_cog, tiny_universe, build_cct(tiny_cog))
    for check_id in ("moore_intersection", "closure_least_deductive", "t1", "t2", "t3", "t4",
                     "t4_intersection", "t5", "closure_empty_whole", "tau_member_closure",
                     "cl_i", "cl_ii", "cl_iii", "cl_iv", "cl_v"):
        assert report.verdict(check_id) == PASS, check_id
    assert report.get("t3").witness == ["t"]
    assert report.get("t4").witness == ["a"]
    assert report.get("t4_intersection").witness == ["t"]
    assert report.get("t2").message == (
        "all 7 sub-families of τ: 4 distinct intersections, 1 vacuous (complement union not deductive)")
    assert report.get("cl_ii").message == "holds on all 256 pairs of subsets of Ω (81 nested pairs)"
    assert report.get("cl_iii").message == (
        "27 of 28 pairs of deductive subsets of Ω have A ∪ B deductive; equality holds on each")
    assert report.get("cl_v").message.startswith("28 of 28 pairs")
    assert not report.has_failures


def test_structure_theorems_in_plain_mode(plain_mode):
    report = check_structure_theorems(plain_mode, plain_mode.universe, build_cct(plain_mode))
    assert report.verdict("t3") == CheckStatus.NOT_APPLICABLE.value
    assert report.get("t3").message == "not applicable: Cn(∅)=∅"
    assert report.verdict("t5") == CheckStatus.NOT_APPLICABLE.value
    assert report.verdict("t1") == PASS
    assert any(COGNITIVE_CONDITIONS_VIOLATED in note for note in report.notes)


def test_t4_reports_failure_without_proper_deductive_subset():
    # Every subset of C closes outside C, so τ is empty
    universe = make_universe(["t", "a", "x"], ["t", "a"], ["t"])
    op = RuleSystem(universe, (make_rule(universe, ["t"], "x"),))
    tau = build_cct(op)
    assert len(tau) == 0
    report = check_structure_theorems(op, universe, tau)
    t4 = report.get("t4")
    assert t4.status == CheckStatus.DISCREPANCY.value
    assert t4.message == "fails: no proper deductive subset of C"


@settings(max_examples=40, deadline=None)
@given(rule_systems(max_symbols=7, max_rules=12))
def test_lectic_enumeration_matches_brute_force(op):
    u = op.universe
    assert enumerate_deductive(op, u.omega).members == brute_force_deductive(op, u.omega).members
    assert enumerate_deductive(op, u.cognitive).members == brute_force_deductive(op, u.cognitive).members


@settings(max_examples=30, deadline=None)
@given(rule_systems(max_symbols=6, max_rules=10))
def test_cognitive_closure_equals_close(op):
    u = op.universe
    family = enumerate_deductive(op, u.omega)
    for mask in range(1 << len(u)):
        assert cognitive_closure(op, u.from_mask(mask), family).mask == op.close_mask(mask)


@settings(max_examples=30, deadline=None)
@given(rule_systems(max_symbols=6, max_rules=10))
def test_tau_is_union_closed(op):
    tau = build_cct(op)
    for a in tau.members:
        for b in tau.members:
            assert a | b in tau


def test_structure_theorems_are_seed_stable():
    op = random_rule_system(random.Random(11), 10, 14, logic_size=1)
    tau = build_cct(op)
    first = check_structure_theorems(op, op.universe, tau)
    second = check_structure_theorems(op, op.universe, tau)
    assert [r.to_dict() for r in first.results] == [r.to_dict() for r in second.results]


def test_t2_covers_every_sub_family():
    universe = make_universe(["t", "a", "b", "c"], ["t", "a", "b", "c"], ["t"])
    op = RuleSystem(universe, ())
    tau = build_cct(op)
    assert len(tau) == 8
    report = check_structure_theorems(op, universe, tau)
    assert report.verdict("t2") == PASS
    assert report.get("t2").message.startswith("all 255 sub-families of τ: 8 distinct intersections, 0 vacuous")


@settings(max_examples=30, deadline=None)
@given(rule_systems(max_symbols=5, max_rules=8))
def test_t2_holds_for_triples(op):
    u = op.universe
    whole = u.cognitive_mask
    tau = build_cct(op)
    for a, b, c in combinations(tau.members, 3):
        meet = a & b & c
        complement = whole & ~meet
        if op.close_mask(complement) == complement:
            assert meet in tau
    assert check_structure_theorems(op, u, tau).verdict("t2") == PASS


def _chain(n: int) -> RuleSystem:
    symbols = [f"s{i}" for i in range(n)]
    universe = make_universe(symbols, symbols, [])
    return RuleSystem(universe, tuple(make_rule(universe, [x], y) for x, y in zip(symbols, symbols[1:])))


def test_closure_properties_exhaustive_up_to_the_cap():
    op = _chain(12)
    report = check_structure_theorems(op, op.universe, build_cct(op))
    assert report.get("cl_i").message == "monotone on all 4096 subsets of Ω (covering steps)"
    for check_id in ("cl_ii", "cl_iv"):
        assert report.get(check_id).message == "holds on all 16777216 pairs of subsets of Ω (531441 nested pairs)"
    assert report.get("cl_iii").message == (
        "91 of 91 pairs of deductive subsets of Ω have A ∪ B deductive; equality holds on each")
    assert report.get("cl_v").message == (
        "91 of 91 pairs of deductive subsets of Ω have A ∩ B deductive; equality holds on each")


def test_closure_properties_sampled_beyond_the_cap():
    op = _chain(13)
    report = check_structure_theorems(op, op.universe, build_cct(op))
    assert report.get("cl_i").message == "monotone on 1000 sampled subsets of Ω"
    assert report.get("cl_ii").message == "holds on 1000 sampled pairs of subsets of Ω"
    assert " of 1000 sampled pairs of subsets of Ω have A ∪ B deductive" in report.get("cl_iii").message
    for check_id in ("cl_i", "cl_ii", "cl_iii", "cl_iv", "cl_v"):
        assert report.verdict(check_id) == PASS, check_id
