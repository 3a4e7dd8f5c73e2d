"""
Seeded generators for random universes, rule systems, metrics and sequences.

Every generator takes a random.Random so that a test or a sampled check
can be replayed from its seed.
"""

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from src.cognition import PseudoMetric, make_weight_metric
from src.consequence import Rule, RuleSystem, TableOperator, make_table_operator
from src.models.sequence import ThoughtSequence, make_sequence
from src.models.universe import Universe, make_universe

WEIGHT_DENOMINATOR = 20


def symbol_names(n: int, prefix: str = "s") -> List[str]:
    return [f"{prefix}{i}" for i in range(n)]


def random_universe(
    rng: random.Random,
    n_symbols: int,
    cognitive_size: Optional[int] = None,
    logic_size: int = 1,
) -> Universe:
    """
    Ω = s0..s{n-1}; C is the first cognitive_size symbols (default 3/4 of Ω,
    at least one); L is drawn from C.
    """
    symbols = symbol_names(n_symbols)
    if cognitive_size is None:
        cognitive_size = max(1, (3 * n_symbols) // 4)
    cognitive = symbols[:cognitive_size]
    logic = rng.sample(cognitive, min(logic_size, len(cognitive)))
    return make_universe(symbols, cognitive, logic)


def random_rules(
    rng: random.Random,
    universe: Universe,
    n_rules: int,
    max_premises: int = 3,
) -> Tuple[Rule, ...]:
    symbols = universe.symbols
    rules = []
    for _ in range(n_rules):
        k = rng.randint(0, min(max_premises, len(symbols)))
        premises = rng.sample(symbols, k)
        rules.append(Rule(universe.subset(premises), rng.choice(symbols)))
    return tuple(rules)


def random_rule_system(
    rng: random.Random,
    n_symbols: int,
    n_rules: int,
    max_premises: int = 3,
    logic_size: Optional[int] = None,
    cognitive_size: Optional[int] = None,
) -> RuleSystem:
    """A random Horn system; logic_size defaults to a random 0..2."""
    if logic_size is None:
        logic_size = rng.randint(0, 2)
    universe = random_universe(rng, n_symbols, cognitive_size, logic_size)
    return RuleSystem(universe, random_rules(rng, universe, n_rules, max_premises))


def large_rule_system(
    rng: random.Random,
    n_symbols: int = 10_000,
    n_rules: int = 100_000,
    max_premises: int = 3,
) -> RuleSystem:
    """Wide system for timing closure; premises mostly precede conclusions."""
    symbols = symbol_names(n_symbols)
    universe = make_universe(symbols, symbols[: n_symbols // 2], symbols[:1])
    rules = []
    for _ in range(n_rules):
        conclusion = rng.randrange(1, n_symbols)
        k = rng.randint(1, max_premises)
        premises = [symbols[rng.randrange(0, conclusion)] for _ in range(k)]
        rules.append(Rule(universe.subset(premises), symbols[conclusion]))
    return RuleSystem(universe, tuple(rules))


def random_table_operator(rng: random.Random, n_symbols: int) -> TableOperator:
    """A table with random entries; usually violates several axioms."""
    universe = make_universe(symbol_names(n_symbols), symbol_names(n_symbols), [])
    full = universe.full_mask
    entries = []
    for mask in range(1 << n_symbols):
        entries.append((universe.labels(mask), universe.labels(rng.randint(0, full))))
    return make_table_operator(universe, entries)


def random_weights(rng: random.Random, universe: Universe, denominator: int = WEIGHT_DENOMINATOR) -> dict:
    """Exact decimal-friendly weights k/denominator, given as strings."""
    return {s: str(Fraction(rng.randint(0, denominator), denominator)) for s in universe.symbols}


def random_weight_metric(rng: random.Random, universe: Universe,
                         denominator: int = WEIGHT_DENOMINATOR) -> PseudoMetric:
    return make_weight_metric(universe, random_weights(rng, universe, denominator))


def random_sequence(
    rng: random.Random,
    universe: Universe,
    length: int,
    name: str = "seq",
    virtual_limit: Optional[str] = None,
) -> ThoughtSequence:
    thoughts = [rng.choice(universe.symbols) for _ in range(length)]
    return make_sequence(universe, name, thoughts, virtual_limit)


def random_epsilon(rng: random.Random, denominator: int = WEIGHT_DENOMINATOR) -> Fraction:
    """A threshold k/denominator strictly inside (0, 1)."""
    return Fraction(rng.randint(1, denominator - 1), denominator)
