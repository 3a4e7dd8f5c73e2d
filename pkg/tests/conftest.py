"""Shared fixtures: the tiny-cog system, plain Tarski mode and the quadratic weights."""

from pathlib import Path

import pytest

from src.cognition import make_weight_metric
from src.config import DEFAULT_SETTINGS
from src.consequence import RuleSystem, make_rule
from src.models.universe import make_universe
from src.scenario import build_context, scenario_settings
from src.storage import load_scenario

FIXTURES = Path(__file__).parent / "fixtures"

QUADRATIC_WEIGHTS = {"x1": 0.1, "x2": 0.3, "x3": 0.5, "x4": 0.7, "x5": 0.85, "x6": 0.9, "x7": 1}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def tiny_universe():
    return make_universe(["t", "a", "b", "e"], ["t", "a", "b"], ["t"])


@pytest.fixture
def tiny_cog(tiny_universe):
    """Ω={t,a,b,e}, C={t,a,b}, L={t}, one rule {a,b} ⊢ e."""
    return RuleSystem(tiny_universe, (make_rule(tiny_universe, ["a", "b"], "e"),))


@pytest.fixture
def plain_mode():
    """No rules and an empty logic base: Cn is the identity."""
    universe = make_universe(["p", "q", "r"], ["p", "q", "r"], [])
    return RuleSystem(universe, ())


@pytest.fixture
def quadratic_universe():
    symbols = list(QUADRATIC_WEIGHTS)
    return make_universe(symbols, symbols, [])


@pytest.fixture
def quadratic_metric(quadratic_universe):
    return make_weight_metric(quadratic_universe, QUADRATIC_WEIGHTS)


@pytest.fixture
def load_context():
    """Build the ScenarioContext of a fixture file."""
    def _load(name: str, **overrides):
        scenario = load_scenario(FIXTURES / name)
        return build_context(scenario, scenario_settings(scenario, DEFAULT_SETTINGS, **overrides))
    return _load
