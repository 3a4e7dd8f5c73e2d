"""
Consequence operators.

Two realizations of Cn are provided:
- RuleSystem: Horn-style rules plus the logic base L. Cn(A) is the least
  fixpoint containing A ∪ L, computed by semi-naive evaluation (each rule
  keeps a counter of unmet premises and only rules watching a newly derived
  sentence are touched).
- TableOperator: an explicit closure table over every subset of a small
  universe, used to build operators that violate the axioms.

validate_operator() checks the Tarski axioms and the two cognitive
conditions and returns an AxiomReport.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, make_result
from src.config import DEFAULT_SETTINGS, Settings
from src.errors import CapExceededError, PreconditionError, UnknownSentenceError
from src.models.universe import SentenceSet, Universe, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    """Premises ⊢ conclusion. Empty premises make the conclusion an axiom."""
    premises: SentenceSet
    conclusion: str


def make_rule(universe: Universe, premises: Iterable[str], conclusion: str) -> Rule:
    if conclusion not in universe:
        raise UnknownSentenceError(conclusion, "symbols (rule conclusion)")
    return Rule(universe.subset(premises), conclusion)


@dataclass(frozen=True, eq=False)
class RuleSystem:
    """A universe with finitary inference rules."""
    universe: Universe
    rules: Tuple[Rule, ...] = ()
    # Compiled form, filled in __post_init__
    _counts: List[int] = field(default_factory=list, init=False, repr=False)
    _watchers: List[List[int]] = field(default_factory=list, init=False, repr=False)
    _premise_masks: List[int] = field(default_factory=list, init=False, repr=False)
    _conclusions: List[int] = field(default_factory=list, init=False, repr=False)
    _seed_mask: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        n = len(self.universe)
        watchers: List[List[int]] = [[] for _ in range(n)]
        counts: List[int] = []
        premise_masks: List[int] = []
        conclusions: List[int] = []
        seed = self.universe.logic_mask
        for r, rule in enumerate(self.rules):
            conclusion = self.universe.index(rule.conclusion)
            premises = rule.premises.mask
            premise_masks.append(premises)
            conclusions.append(conclusion)
            count = 0
            for i in iter_bits(premises):
                watchers[i].append(r)
                count += 1
            counts.append(count)
            if count == 0:
                seed |= 1 << conclusion
        object.__setattr__(self, "_counts", counts)
        object.__setattr__(self, "_watchers", watchers)
        object.__setattr__(self, "_premise_masks", premise_masks)
        object.__setattr__(self, "_conclusions", conclusions)
        object.__setattr__(self, "_seed_mask", seed)
        logger.debug("compiled %d rules over %d symbols", len(self.rules), n)

    @property
    def kind(self) -> str:
        return "rules"

    def close_mask(self, mask: int) -> int:
        """Least fixpoint containing mask ∪ L (semi-naive)."""
        return self._derive(mask)[0]

    def _derive(self, mask: int, trace: bool = False) -> Tuple[int, Dict[int, int]]:
        start = mask | self._seed_mask
        facts = bytearray(len(self.universe))
        agenda: List[int] = []
        for i in iter_bits(start):
            facts[i] = 1
            agenda.append(i)
        reasons: Dict[int, int] = {}
        if trace:
            for r, count in enumerate(self._counts):
                c = self._conclusions[r]
                if count == 0 and not mask >> c & 1 and c not in reasons:
                    reasons[c] = r
        remaining = self._counts.copy()
        watchers = self._watchers
        conclusions = self._conclusions
        result = start
        while agenda:
            i = agenda.pop()
            for r in watchers[i]:
                remaining[r] -= 1
                if remaining[r] == 0:
                    c = conclusions[r]
                    if not facts[c]:
                        facts[c] = 1
                        agenda.append(c)
                        result |= 1 << c
                        if trace:
                            reasons[c] = r
        return result, reasons

    def naive_close_mask(self, mask: int) -> int:
        """Re-scan every rule until nothing fires. Test oracle only."""
        current = mask | self.universe.logic_mask
        changed = True
        while changed:
            changed = False
            for premises, conclusion in zip(self._premise_masks, self._conclusions):
                if premises & ~current == 0 and not current >> conclusion & 1:
                    current |= 1 << conclusion
                    changed = True
        return current

    def derivation_trace(self, mask: int) -> Dict[int, int]:
        """For every derived index (not in mask ∪ L), the rule that produced it."""
        return self._derive(mask, trace=True)[1]

    def support_mask(self, mask: int, target: int, reasons: Optional[Dict[int, int]] = None) -> int:
        """
        Input sentences a derivation of target actually uses.

        Sentences of L and conclusions of premise-free rules need no input.
        """
        if reasons is None:
            reasons = self.derivation_trace(mask)
        support = 0
        seen = set()
        stack = [target]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            if i in reasons:
                stack.extend(iter_bits(self._premise_masks[reasons[i]]))
            elif mask >> i & 1 and not self.universe.logic_mask >> i & 1:
                support |= 1 << i
        return support


@dataclass(frozen=True, eq=False)
class TableOperator:
    """An explicit closure table over P(Ω), for universes of at most table_cap symbols."""
    universe: Universe
    table: Tuple[int, ...]

    @property
    def kind(self) -> str:
        return "table"

    def close_mask(self, mask: int) -> int:
        return self.table[mask]


Operator = Union[RuleSystem, TableOperator]


def make_table_operator(
    universe: Universe,
    entries: Sequence[Tuple[Iterable[str], Iterable[str]]],
    table_cap: Optional[int] = None,
) -> TableOperator:
    """
    Build a TableOperator from (input, output) label pairs.

    Subsets without an entry map to themselves, which keeps the table total.
    """
    table_cap = DEFAULT_SETTINGS.table_cap if table_cap is None else table_cap
    if len(universe) > table_cap:
        raise CapExceededError("table operator universe", len(universe), table_cap)
    table = list(range(1 << len(universe)))
    for source, target in entries:
        table[universe.mask(source)] = universe.mask(target)
    return TableOperator(universe, tuple(table))


# =============================================================================
# OPERATIONS
# =============================================================================

def close(op: Operator, a: SentenceSet) -> SentenceSet:
    """Cn(A). For table operators the table entry is returned verbatim."""
    return SentenceSet(op.universe, op.close_mask(a.mask))


def is_deductive(op: Operator, a: SentenceSet) -> bool:
    """Cn(A) = A."""
    return op.close_mask(a.mask) == a.mask


def naive_close(op: Operator, a: SentenceSet) -> SentenceSet:
    if isinstance(op, RuleSystem):
        return SentenceSet(op.universe, op.naive_close_mask(a.mask))
    return close(op, a)


@dataclass
class AxiomReport:
    """Verdicts for the Tarski axioms and the cognitive conditions."""
    operator_kind: str
    mode: str  # "exhaustive" or "sampled"
    subsets_checked: int
    axioms: Dict[str, CheckResult] = field(default_factory=dict)
    conditions: Dict[str, CheckResult] = field(default_factory=dict)
    union_bound: Optional[CheckResult] = None

    @property
    def results(self) -> List[CheckResult]:
        results = list(self.axioms.values()) + list(self.conditions.values())
        if self.union_bound is not None:
            results.append(self.union_bound)
        return results

    def verdict(self, check_id: str) -> str:
        for result in self.results:
            if result.check_id == check_id:
                return result.status
        raise KeyError(check_id)

    @property
    def axioms_hold(self) -> bool:
        return not any(r.failed for r in self.axioms.values())


class _ClosureCache:
    """Memoized closures; exhaustive mode fills it for every subset."""

    def __init__(self, op: Operator):
        self.op = op
        self.cache: Dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        try:
            return self.cache[mask]
        except KeyError:
            value = self.op.close_mask(mask)
            self.cache[mask] = value
            return value


def _resolve_mode(n: int, mode: str, settings: Settings) -> str:
    if mode == "auto":
        return "exhaustive" if n <= settings.exhaustive_axiom_cap else "sampled"
    if mode == "exhaustive" and n > settings.exhaustive_axiom_cap:
        raise CapExceededError("exhaustive axiom check", n, settings.exhaustive_axiom_cap)
    if mode not in ("exhaustive", "sampled"):
        raise PreconditionError(f"unknown validation mode: {mode}")
    return mode


def _subsets_to_check(universe: Universe, mode: str, settings: Settings, rng: random.Random) -> List[int]:
    n = len(universe)
    if mode == "exhaustive":
        return list(range(1 << n))
    subsets = {0, universe.full_mask, universe.cognitive_mask}
    while len(subsets) < settings.sample_count + 3 and len(subsets) < (1 << n):
        subsets.add(rng.getrandbits(n))
    return sorted(subsets)


def validate_operator(
    op: Operator,
    implication_map: Optional[Dict[Tuple[str, str], str]] = None,
    mode: str = "auto",
    settings: Settings = DEFAULT_SETTINGS,
) -> AxiomReport:
    """
    Check the Tarski axioms (i)-(vi) and the cognitive conditions.

    Args:
        op: Rule system or table operator
        implication_map: Optional encoding (X, Y) -> sentence "X ⇒ Y";
            without it axiom (vi) is reported as not evaluated
        mode: "auto", "exhaustive" (|Ω| ≤ exhaustive_axiom_cap) or "sampled"
        settings: Caps, sample count and seed

    Returns:
        AxiomReport. Every failing verdict carries a witness.
    """
    universe = op.universe
    n = len(universe)
    mode = _resolve_mode(n, mode, settings)
    rng = random.Random(settings.seed)
    cn = _ClosureCache(op)
    subsets = _subsets_to_check(universe, mode, settings, rng)
    labels = universe.labels
    report = AxiomReport(operator_kind=op.kind, mode=mode, subsets_checked=len(subsets))
    logger.info("validating %s operator over %d subsets (%s)", op.kind, len(subsets), mode)

    report.axioms["axiom_i"] = make_result(
        "axiom_i", CheckStatus.PASS, "vacuously satisfied (finite universe)")

    # (ii) inclusion
    witness = next((a for a in subsets if a & ~cn(a)), None)
    report.axioms["axiom_ii"] = (
        make_result("axiom_ii", CheckStatus.PASS, f"A ⊆ Cn(A) on {len(subsets)} subsets")
        if witness is None else
        make_result("axiom_ii", CheckStatus.FAIL, "A ⊄ Cn(A)", [labels(witness), labels(cn(witness))])
    )

    # (iii) monotonicity, over covering pairs A ⊂ A ∪ {x}
    mono_witness = None
    for a in subsets:
        ca = cn(a)
        extensions = range(n) if mode == "exhaustive" else rng.sample(range(n), min(n, 8))
        for x in extensions:
            if a >> x & 1:
                continue
            b = a | 1 << x
            if ca & ~cn(b):
                mono_witness = (a, b)
                break
        if mono_witness:
            break
    report.axioms["axiom_iii"] = (
        make_result("axiom_iii", CheckStatus.PASS, "Cn(A) ⊆ Cn(A ∪ {x}) for every checked A and x")
        if mono_witness is None else
        make_result("axiom_iii", CheckStatus.FAIL, "A ⊆ B but Cn(A) ⊄ Cn(B)",
                    [labels(mono_witness[0]), labels(mono_witness[1])])
    )

    # (iv) idempotence
    witness = next((a for a in subsets if cn(cn(a)) != cn(a)), None)
    report.axioms["axiom_iv"] = (
        make_result("axiom_iv", CheckStatus.PASS, "Cn(Cn(A)) = Cn(A)")
        if witness is None else
        make_result("axiom_iv", CheckStatus.FAIL, "Cn(Cn(A)) ≠ Cn(A)",
                    [labels(witness), labels(cn(witness)), labels(cn(cn(witness)))])
    )

    report.axioms["axiom_v"] = _check_finitariness(op, subsets, cn)
    report.axioms["axiom_vi"] = _check_deduction(op, subsets, cn, implication_map)
    report.union_bound = _check_union_bound(op, subsets, cn, settings, rng)

    # Cognitive conditions: diagnostics, never fatal
    empty_closure = cn(0)
    report.conditions["cond_empty"] = (
        make_result("cond_empty", CheckStatus.PASS, "Cn(∅) ≠ ∅", [labels(empty_closure)])
        if empty_closure else
        make_result("cond_empty", CheckStatus.FAIL, "Cn(∅) = ∅ (plain Tarski mode)", [[]])
    )
    whole = universe.cognitive_mask
    whole_closure = cn(whole)
    report.conditions["cond_whole"] = (
        make_result("cond_whole", CheckStatus.PASS, "Cn(C) ≠ C", [labels(whole_closure & ~whole)])
        if whole_closure != whole else
        make_result("cond_whole", CheckStatus.FAIL, "Cn(C) = C", [labels(whole)])
    )
    for result in report.conditions.values():
        if result.failed:
            logger.warning("cognitive condition violated: %s", result.message)
    return report


def _check_finitariness(op: Operator, subsets: List[int], cn) -> CheckResult:
    labels = op.universe.labels
    if not isinstance(op, RuleSystem):
        # B = A is itself finite
        return make_result("axiom_v", CheckStatus.PASS, "satisfied (finite universe: B = A)")
    for a in subsets:
        closure = cn(a)
        reasons = op.derivation_trace(a)
        for x in iter_bits(closure & ~a):
            b = op.support_mask(a, x, reasons)
            if b & ~a or not cn(b) >> x & 1:
                return make_result(
                    "axiom_v", CheckStatus.FAIL,
                    "replayed derivation does not reproduce the consequence",
                    [labels(a), op.universe.symbols[x], labels(b)],
                )
    return make_result("axiom_v", CheckStatus.PASS, "every derivation replays from a finite premise set")


def _check_deduction(op: Operator, subsets: List[int], cn, implication_map) -> CheckResult:
    universe = op.universe
    if not implication_map:
        return make_result("axiom_vi", CheckStatus.NOT_EVALUATED,
                           "not evaluated (no implication encoding supplied)")
    encoded = [
        (universe.index(x), universe.index(y), universe.index(s))
        for (x, y), s in sorted(implication_map.items())
    ]
    triples = 0
    for a in subsets:
        ca = cn(a)
        for x, y, s in encoded:
            triples += 1
            if cn(a | 1 << x) >> y & 1 and not ca >> s & 1:
                return make_result(
                    "axiom_vi", CheckStatus.FAIL,
                    "Y ∈ Cn(A ∪ {X}) but (X ⇒ Y) ∉ Cn(A)",
                    [universe.labels(a), universe.symbols[x], universe.symbols[y]],
                )
    return make_result("axiom_vi", CheckStatus.PASS, f"deduction theorem holds on {triples} triples")


def _check_union_bound(op: Operator, subsets: List[int], cn, settings: Settings, rng: random.Random) -> CheckResult:
    labels = op.universe.labels
    if len(subsets) ** 2 <= settings.sample_count:
        pairs = [(a, b) for a in subsets for b in subsets]
        scope = f"all {len(pairs)} pairs"
    else:
        pairs = [(rng.choice(subsets), rng.choice(subsets)) for _ in range(settings.sample_count)]
        scope = f"{len(pairs)} sampled pairs"
    deductive = 0
    for a, b in pairs:
        ca, cb, cab = cn(a), cn(b), cn(a | b)
        if (ca | cb) & ~cab:
            return make_result("union_bound", CheckStatus.FAIL, "Cn(A) ∪ Cn(B) ⊄ Cn(A ∪ B)",
                               [labels(a), labels(b)])
        if ca == a and cb == b and cab == a | b:
            deductive += 1
            if cab != ca | cb:
                return make_result("union_bound", CheckStatus.FAIL,
                                   "deductive A, B, A ∪ B but Cn(A ∪ B) ≠ Cn(A) ∪ Cn(B)",
                                   [labels(a), labels(b)])
    return make_result("union_bound", CheckStatus.PASS,
                       f"Cn(A) ∪ Cn(B) ⊆ Cn(A ∪ B) on {scope}; "
                       f"{deductive} with A, B, A ∪ B deductive, equality on each")
