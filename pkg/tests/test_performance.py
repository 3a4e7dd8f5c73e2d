import random
import time

import pytest

from src.cognition import detect_limits
from src.consequence import RuleSystem, make_rule
from src.generators import large_rule_system, symbol_names
from src.lattice import enumerate_deductive
from src.models.sequence import make_sequence
from src.models.universe import make_universe

pytestmark = pytest.mark.slow


def _best_of(runs, fn):
    best = float("inf")
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_close_on_a_large_rule_system():
    op = large_rule_system(random.Random(0))
    u = op.universe
    seed = u.mask(u.symbols[:50])
    closed = op.close_mask(seed)
    assert closed & seed == seed
    assert _best_of(3, lambda: op.close_mask(seed)) < 1.0


def test_enumeration_over_twenty_symbols():
    # Four independent implication chains of five symbols: 6 ** 4 closed sets
    symbols = symbol_names(20)
    universe = make_universe(symbols, symbols, [])
    rules = tuple(
        make_rule(universe, [symbols[5 * c + j]], symbols[5 * c + j + 1])
        for c in range(4) for j in range(4)
    )
    op = RuleSystem(universe, rules)
    family = None

    def enumerate_all():
        nonlocal family
        family = enumerate_deductive(op, universe.omega)

    assert _best_of(1, enumerate_all) < 5.0
    assert len(family) == 1296


def test_quadratic_limits_are_fast(quadratic_metric):
    seq = make_sequence(quadratic_metric.universe, "full", [f"x{i}" for i in range(1, 8)], "x7")
    assert _best_of(5, lambda: detect_limits(quadratic_metric, seq, 0.2)) < 0.01
