import pytest

from src.auditor.checklist import CheckStatus
from src.config import DEFAULT_SETTINGS
from src.environment import (
    PROPER_OPENS_ONLY,
    CognitiveMap,
    base_closure,
    build_practical_topology,
    check_cognitive_continuity,
    check_topology,
    make_environment,
    weak_topology_clopen,
)
from src.errors import CapExceededError, PracticalWholeError, PreconditionError, UnknownSentenceError
from src.lattice import build_cct

POINTS = ["p1", "p2", "p3", "p4", "p5"]
BASE = [("B1", ["p1", "p2"], "complete"), ("B2", ["p3"], "complete"), ("B3", ["p4"], "irreducible")]
WHOLES = [["p1", "p2", "p3"], ["p3", "p4"]]


@pytest.fixture
def environment():
    return make_environment(POINTS, BASE, WHOLES)


@pytest.fixture
def topology(environment):
    return build_practical_topology(environment)


@pytest.fixture
def tiny_map(tiny_universe, environment):
    return CognitiveMap(tiny_universe, environment, {"t": "p5", "a": "p3", "b": "p4"})


def test_proper_opens_by_size_then_lectic(topology):
    assert topology.labels() == [
        [], POINTS, ["p3", "p4"], ["p1", "p2", "p3"],
    ]


def test_topology_checks(topology):
    results = {r.check_id: r for r in check_topology(topology)}
    assert results["pw_union"].status == CheckStatus.PASS.value
    assert results["base_condition"].status == CheckStatus.PASS.value
    assert results["clopen_by_designation"].status == CheckStatus.INFO.value


def test_whole_outside_base_unions():
    env = make_environment(POINTS, BASE, [["p1"]])
    with pytest.raises(PracticalWholeError) as info:
        build_practical_topology(env)
    assert info.value.witness == ("p1",)


def test_empty_whole_violates_base_condition():
    env = make_environment(POINTS, BASE, [[]])
    results = {r.check_id: r for r in check_topology(build_practical_topology(env))}
    assert results["base_condition"].status == CheckStatus.FAIL.value
    assert results["base_condition"].witness == [[]]


def test_base_object_cap(environment):
    with pytest.raises(CapExceededError):
        build_practical_topology(environment, DEFAULT_SETTINGS.merged(max_base_objects=2))


def test_environment_validation():
    with pytest.raises(PreconditionError):
        make_environment(["p1", "p1"], [], [])
    with pytest.raises(PreconditionError):
        make_environment(POINTS, [("B1", ["p1"], "partial")], [])
    with pytest.raises(UnknownSentenceError):
        make_environment(POINTS, [("B1", ["p9"], "complete")], [])


def test_base_closures(environment):
    first = base_closure(environment, "B1")
    assert environment.labels(first.whole) == ["p1", "p2", "p3"]
    assert (first.ambiguous, first.multiplicity) == (False, 1)

    second = base_closure(environment, "B2")
    assert environment.labels(second.whole) == ["p3", "p4"]
    assert (second.ambiguous, second.multiplicity) == (False, 2)

    assert environment.labels(base_closure(environment, "B3").whole) == ["p3", "p4"]


def test_ambiguous_base_closure():
    env = make_environment(POINTS, BASE, [["p1", "p2", "p3"], ["p1", "p2", "p4"]])
    closure = base_closure(env, "B1")
    assert closure.ambiguous
    assert env.labels(closure.whole) == ["p1", "p2", "p3"]


def test_base_closure_without_whole(environment):
    env = make_environment(POINTS, BASE + [("B4", ["p5"], "complete")], WHOLES)
    with pytest.raises(PreconditionError):
        base_closure(env, "B4")
    with pytest.raises(PreconditionError):
        base_closure(environment, "B9")


def test_continuity_holds_for_tiny_map(tiny_cog, tiny_map, topology):
    report = check_cognitive_continuity(tiny_map, topology, build_cct(tiny_cog))
    assert report.verdict("continuity") == CheckStatus.PASS.value
    assert report.notes == [PROPER_OPENS_ONLY]


def test_continuity_counterexample(tiny_cog, tiny_universe, environment, topology):
    cmap = CognitiveMap(tiny_universe, environment, {"t": "p3", "a": "p1", "b": "p2"})
    report = check_cognitive_continuity(cmap, topology, build_cct(tiny_cog))
    result = report.get("continuity")
    assert result.status == CheckStatus.FAIL.value
    assert result.witness == [["p3", "p4"], ["t"]]


def test_map_must_be_total_over_c(tiny_universe, environment):
    with pytest.raises(PreconditionError):
        CognitiveMap(tiny_universe, environment, {"t": "p5", "a": "p3"})


def test_map_outside_c_rejected(tiny_universe, environment):
    with pytest.raises(PreconditionError):
        CognitiveMap(tiny_universe, environment, {"t": "p5", "a": "p3", "b": "p4", "e": "p1"})


def test_preimage_family_is_not_complemented(tiny_map, topology):
    report = weak_topology_clopen(tiny_map, topology)
    assert report.family == [0, 2, 6, 7]
    assert report.complemented == [True, False, False, True]
    result = report.results[0]
    assert result.status == CheckStatus.DISCREPANCY.value
    assert result.witness == [["a"], ["t", "b"]]


def test_constant_map_gives_a_clopen_family(tiny_universe, environment, topology):
    cmap = CognitiveMap(tiny_universe, environment, {"t": "p5", "a": "p5", "b": "p5"})
    report = weak_topology_clopen(cmap, topology)
    assert report.family == [0, 7]
    assert report.results[0].status == CheckStatus.PASS.value
