"""Hypothesis strategies for universes, rule systems and weight metrics."""

from fractions import Fraction

import hypothesis.strategies as strat

from src.cognition import make_weight_metric
from src.consequence import Rule, RuleSystem
from src.generators import symbol_names
from src.models.universe import make_universe


@strat.composite
def universes(draw, min_symbols=1, max_symbols=6, logic_inside=True):
    n = draw(strat.integers(min_symbols, max_symbols))
    symbols = symbol_names(n)
    cognitive = draw(strat.lists(strat.sampled_from(symbols), unique=True, min_size=1))
    pool = cognitive if logic_inside else symbols
    logic = draw(strat.lists(strat.sampled_from(pool), unique=True, max_size=2))
    return make_universe(symbols, cognitive, logic)


@strat.composite
def rule_systems(draw, min_symbols=1, max_symbols=6, max_rules=10, logic_inside=True):
    universe = draw(universes(min_symbols, max_symbols, logic_inside))
    symbols = list(universe.symbols)
    rules = draw(strat.lists(
        strat.tuples(
            strat.lists(strat.sampled_from(symbols), unique=True, max_size=3),
            strat.sampled_from(symbols),
        ),
        max_size=max_rules,
    ))
    return RuleSystem(universe, tuple(Rule(universe.subset(p), c) for p, c in rules))


def masks(universe):
    return strat.integers(0, universe.full_mask)


@strat.composite
def weight_metrics(draw, universe, denominator=20):
    weights = {
        s: str(Fraction(draw(strat.integers(0, denominator)), denominator))
        for s in universe.symbols
    }
    return make_weight_metric(universe, weights)


def epsilons(denominator=20):
    return strat.integers(1, denominator - 1).map(lambda k: Fraction(k, denominator))
