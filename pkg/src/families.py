"""
Set families: ideals and filters over a finite domain.

Families are materialized explicitly (every member is a mask inside the
family's domain), so every axiom check is an exhaustive scan. Classic
axioms are checked over covering steps (A ∖ {x} for downward closure,
A ∪ {x} for upward closure), which is equivalent to scanning every
subset/superset.

Constructions:
- build_connection_ideal: all subsets of what f* reaches in the
  connection graph
- build_truth_ideal: the same, restricted to truth-labelled sentences
- build_fd_filter: supersets of the required sentences inside a
  deductive C_d that contain a deductive subset
- build_fhat_filter: {A ⊆ C : f ∈ Cn(A)}
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from src.auditor.checklist import CheckStatus, get_check
from src.auditor.results import CheckResult, make_result
from src.config import DEFAULT_SETTINGS, Settings
from src.consequence import Operator
from src.errors import (
    CapExceededError,
    MissingOperatorError,
    NotASubsetError,
    PreconditionError,
    UnknownSentenceError,
)
from src.models.universe import SentenceSet, Universe, iter_bits, iter_submasks, popcount

logger = logging.getLogger(__name__)

CLASSIC_IDEAL = "classic-ideal"
CLASSIC_FILTER = "classic-filter"
CONSEQUENCE_IDEAL = "consequence-ideal"
CONSEQUENCE_FILTER = "consequence-filter"
FAMILY_KINDS = (CLASSIC_IDEAL, CLASSIC_FILTER, CONSEQUENCE_IDEAL, CONSEQUENCE_FILTER)

UNDERIVABLE = "no filter (f underivable)"


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated members in lectic order, all inside domain."""
    universe: Universe
    domain: int
    members: Tuple[int, ...]
    name: str = ""
    diagnostics: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return (SentenceSet(self.universe, m) for m in self.members)

    def __contains__(self, mask: int) -> bool:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_member_set", cached)
        return mask in cached

    def labels(self) -> List[List[str]]:
        return [self.universe.labels(m) for m in self.members]


def make_family(
    universe: Universe,
    domain: int,
    members: Iterable[int],
    name: str = "",
    diagnostics: Sequence[str] = (),
) -> SetFamily:
    """
    Build a SetFamily.

    Raises:
        NotASubsetError: a member leaves the domain
    """
    unique = sorted(set(members))
    for m in unique:
        if m & ~domain:
            raise NotASubsetError(f"member {universe.labels(m)} of {name or 'family'} leaves its domain")
    return SetFamily(universe, domain, tuple(unique), name, tuple(diagnostics))


class ConnectionGraph:
    """Undirected connections between sentences."""

    def __init__(self, universe: Universe, edges: Iterable[Tuple[str, str]] = ()):
        self.universe = universe
        self.graph = nx.Graph()
        self.graph.add_nodes_from(universe.symbols)
        for x, y in edges:
            for label in (x, y):
                if label not in universe:
                    raise UnknownSentenceError(label, "symbols (connection graph)")
            self.graph.add_edge(x, y)

    def reachable(self, f_star: str, within: SentenceSet) -> SentenceSet:
        """Sentences of within connected to f_star, directly or indirectly."""
        sub = self.graph.subgraph(within.labels())
        return self.universe.subset(nx.node_connected_component(sub, f_star))


@dataclass
class FamilyReport:
    """Axiom verdicts for one family and one kind."""
    family: str
    kind: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.results)

    def verdict(self, check_id: str) -> str:
        for result in self.results:
            if result.check_id == check_id:
                return result.status
        raise KeyError(check_id)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((r for r in self.results if r.failed), None)


# =============================================================================
# AXIOM CHECKS
# =============================================================================

def _verdict(check_id: str, witness, ok_message: str, fail_message: str, subject: str) -> CheckResult:
    if witness is None:
        return make_result(check_id, CheckStatus.PASS, ok_message, [], subject)
    return make_result(check_id, CheckStatus.FAIL, fail_message, witness, subject)


def _pair_witness(family: SetFamily, combine) -> Optional[list]:
    labels = family.universe.labels
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if combine(a, b) not in family:
                return [labels(a), labels(b)]
    return None


def _consequences(op: Operator, domain: int) -> List[int]:
    """Distinct Cn(X) for X ⊆ domain that stay inside the domain."""
    seen = set()
    for x in iter_submasks(domain):
        closed = op.close_mask(x)
        if closed & ~domain == 0:
            seen.add(closed)
    return sorted(seen)


def check_family_axioms(
    family: SetFamily,
    kind: str,
    op: Optional[Operator] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> FamilyReport:
    """
    Check the ideal or filter axioms of the given kind.

    Consequence kinds quantify over K = {Cn(X) : X ⊆ domain} ∩ P(domain)
    and test Cn(∅) / Cn(domain) membership as written; strict inclusion
    is used for the "smaller/larger consequence" clauses.

    Raises:
        MissingOperatorError: a consequence kind without an operator
        CapExceededError: a consequence kind over a domain larger than family_cap
    """
    if kind not in FAMILY_KINDS:
        raise PreconditionError(f"unknown family kind: {kind}")
    if kind.startswith("consequence") and op is None:
        raise MissingOperatorError(f"{kind} checks need a consequence operator")

    u = family.universe
    labels = u.labels
    domain = family.domain
    subject = family.name
    report = FamilyReport(family.name, kind)

    if kind == CLASSIC_IDEAL:
        report.results.append(_verdict(
            "ideal_nonempty", None if 0 in family else [[]],
            "∅ ∈ I", "∅ ∉ I", subject))
        witness = None
        for a in family.members:
            for x in iter_bits(a):
                if a & ~(1 << x) not in family:
                    witness = [labels(a), labels(a & ~(1 << x))]
                    break
            if witness:
                break
        report.results.append(_verdict("ideal_downward", witness, "downward closed",
                                       "B ⊂ A ∈ I but B ∉ I", subject))
        report.results.append(_verdict("ideal_union", _pair_witness(family, lambda a, b: a | b),
                                       "closed under union", "A ∪ B ∉ I", subject))

    elif kind == CLASSIC_FILTER:
        report.results.append(_verdict(
            "filter_top", None if domain in family else [labels(domain)],
            "domain ∈ F", "domain ∉ F", subject))
        witness = None
        for a in family.members:
            for x in iter_bits(domain & ~a):
                if a | 1 << x not in family:
                    witness = [labels(a), labels(a | 1 << x)]
                    break
            if witness:
                break
        report.results.append(_verdict("filter_upward", witness, "upward closed",
                                       "A ∈ F, A ⊂ B but B ∉ F", subject))
        report.results.append(_verdict("filter_intersection", _pair_witness(family, lambda a, b: a & b),
                                       "closed under intersection", "A ∩ B ∉ F", subject))

    else:
        size = popcount(domain)
        if size > settings.family_cap:
            raise CapExceededError(f"{kind} domain of {family.name or 'family'}", size, settings.family_cap)
        consequences = _consequences(op, domain)
        inside = [k for k in consequences if k in family]
        if kind == CONSEQUENCE_IDEAL:
            anchor = op.close_mask(0)
            report.results.append(_verdict(
                "cideal_i", None if anchor in family else [labels(anchor)],
                "Cn(∅) ∈ I", "Cn(∅) ∉ I", subject))
            witness = next(([labels(k), labels(j)] for k in inside for j in consequences
                            if j != k and j & ~k == 0 and j not in family), None)
            report.results.append(_verdict("cideal_ii", witness, "closed under smaller consequences",
                                           "Cn(B) ⊂ Cn(A) ∈ I but Cn(B) ∉ I", subject))
            witness = next(([labels(a), labels(b)] for a in inside for b in inside
                            if a | b not in family), None)
            report.results.append(_verdict("cideal_iii", witness, "closed under union of consequences",
                                           "Cn(A) ∪ Cn(B) ∉ I", subject))
        else:
            anchor = op.close_mask(domain)
            report.results.append(_verdict(
                "cfilter_i", None if anchor in family else [labels(anchor)],
                "Cn(domain) ∈ F", "Cn(domain) ∉ F", subject))
            witness = next(([labels(k), labels(j)] for k in inside for j in consequences
                            if j != k and k & ~j == 0 and j not in family), None)
            report.results.append(_verdict("cfilter_ii", witness, "closed under larger consequences",
                                           "Cn(A) ⊂ Cn(B), Cn(A) ∈ F but Cn(B) ∉ F", subject))
            witness = next(([labels(a), labels(b)] for a in inside for b in inside
                            if a & b not in family), None)
            report.results.append(_verdict("cfilter_iii", witness, "closed under intersection of consequences",
                                           "Cn(A) ∩ Cn(B) ∉ F", subject))

    if not report.passed:
        logger.info("family %s fails %s axioms", family.name, kind)
    return report


def theorem_verdict(check_id: str, report: FamilyReport, subject: str = "") -> CheckResult:
    """Fold an axiom report into one verdict for a construction claim."""
    failure = report.first_failure
    if failure is None:
        return make_result(check_id, CheckStatus.PASS, f"{report.kind} axioms hold", [], subject)
    return make_result(check_id, CheckStatus.FAIL,
                       f"{failure.check_id}: {failure.message}", failure.witness, subject)


def claim_rows(report: FamilyReport, check_id: str) -> List[CheckResult]:
    """
    Axiom rows behind a construction claim.

    When the claim is report-only, a failing row is a discrepancy of the
    construction, so it is downgraded like the folded verdict.
    """
    if not get_check(check_id).report_only:
        return list(report.results)
    return [
        replace(r, status=CheckStatus.DISCREPANCY.value) if r.status == CheckStatus.FAIL.value else r
        for r in report.results
    ]


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

def build_connection_ideal(
    graph: ConnectionGraph,
    f_star: str,
    within: SentenceSet,
    settings: Settings = DEFAULT_SETTINGS,
) -> SetFamily:
    """Every subset (∅ included) of the sentences connected to f_star inside within."""
    if f_star not in within:
        raise PreconditionError(f"{f_star!r} is not in the connection domain")
    reach = graph.reachable(f_star, within)
    if len(reach) > settings.family_cap:
        raise CapExceededError("connection reachability set", len(reach), settings.family_cap)
    logger.debug("%s reaches %s", f_star, reach)
    return make_family(within.universe, within.mask, iter_submasks(reach.mask),
                       name=f"ideal({f_star})")


def build_truth_ideal(
    graph: ConnectionGraph,
    f_star: str,
    within: SentenceSet,
    truths: SentenceSet,
    settings: Settings = DEFAULT_SETTINGS,
) -> SetFamily:
    """Connection ideal of f_star restricted to the truth-labelled sentences."""
    if f_star not in within:
        raise PreconditionError(f"{f_star!r} is not in the connection domain")
    reach = graph.reachable(f_star, within) & truths
    if len(reach) > settings.family_cap:
        raise CapExceededError("truth-restricted reachability set", len(reach), settings.family_cap)
    return make_family(within.universe, within.mask, iter_submasks(reach.mask),
                       name=f"truth_ideal({f_star})")


def build_fd_filter(
    op: Operator,
    c_d: SentenceSet,
    required: Union[str, Iterable[str]],
    settings: Settings = DEFAULT_SETTINGS,
) -> SetFamily:
    """
    {A ⊆ C_d : required ⊆ A and some deductive D ⊆ A}.

    Raises:
        PreconditionError: C_d is not deductive or a required sentence is outside it
    """
    if isinstance(required, str):
        required = [required]
    required = list(required)
    u = op.universe
    domain = c_d.mask
    if op.close_mask(domain) != domain:
        raise PreconditionError(f"C_d = {c_d!r} is not deductive")
    for f in required:
        if f not in c_d:
            raise PreconditionError(f"{f!r} is not in C_d = {c_d!r}")
    if popcount(domain) > settings.family_cap:
        raise CapExceededError("C_d", popcount(domain), settings.family_cap)
    need = u.mask(required)
    deductive = [d for d in iter_submasks(domain) if op.close_mask(d) == d]
    members = [
        a for a in iter_submasks(domain)
        if need & ~a == 0 and any(d & ~a == 0 for d in deductive)
    ]
    return make_family(u, domain, members, name=f"f_d({','.join(required)})")


def build_fhat_filter(
    op: Operator,
    universe: Universe,
    f: str,
    settings: Settings = DEFAULT_SETTINGS,
) -> SetFamily:
    """{A ⊆ C : f ∈ Cn(A)}; empty with a diagnostic when f ∉ Cn(C)."""
    target = universe.index(f)
    whole = universe.cognitive_mask
    if popcount(whole) > settings.family_cap:
        raise CapExceededError("cognitive space", popcount(whole), settings.family_cap)
    members = [a for a in iter_submasks(whole) if op.close_mask(a) >> target & 1]
    diagnostics = []
    if not members:
        logger.warning("%s: %s", UNDERIVABLE, f)
        diagnostics.append(UNDERIVABLE)
    return make_family(universe, whole, members, name=f"fhat({f})",
                       diagnostics=diagnostics)
