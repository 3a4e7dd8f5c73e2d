"""
Closure lattice: deductive sets, cognitive closure and the CWO family τ.

Deductive sets inside a domain W are enumerated in lectic order with
NextClosure. The closure used for the walk is

    cl_W(X) = Cn(X)   if Cn(X) ⊆ W
              W       otherwise

whose closed sets are exactly the deductive subsets of W plus W itself, so
W is dropped at the end when it is not deductive.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, make_result
from src.config import DEFAULT_SETTINGS, Settings
from src.consequence import Operator, TableOperator
from src.errors import CapExceededError
from src.models.universe import SentenceSet, Universe, iter_bits, iter_submasks, popcount

logger = logging.getLogger(__name__)

COGNITIVE_CONDITIONS_VIOLATED = "cognitive conditions violated"


@dataclass(frozen=True)
class MooreFamily:
    """Deductive subsets of a domain, in lectic order."""
    universe: Universe
    within: int
    members: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SentenceSet]:
        return (SentenceSet(self.universe, m) for m in self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> Set[int]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = set(self.members)
            object.__setattr__(self, "_member_set", cached)
        return cached

    def labels(self) -> List[List[str]]:
        return [self.universe.labels(m) for m in self.members]


@dataclass(frozen=True)
class CctFamily:
    """τ = {A ⊆ C : Cn(C ∖ A) = C ∖ A}, members in lectic order."""
    universe: Universe
    members: Tuple[int, ...]
    deductive: MooreFamily  # the deductive subsets of C
    diagnostics: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SentenceSet]:
        return (SentenceSet(self.universe, m) for m in self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> Set[int]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = set(self.members)
            object.__setattr__(self, "_member_set", cached)
        return cached

    @property
    def union(self) -> int:
        acc = 0
        for m in self.members:
            acc |= m
        return acc

    def labels(self) -> List[List[str]]:
        return [self.universe.labels(m) for m in self.members]


@dataclass
class TheoremReport:
    """Verdicts with witnesses and applicability notes."""
    results: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, result: CheckResult):
        self.results.append(result)

    def get(self, check_id: str) -> CheckResult:
        for result in self.results:
            if result.check_id == check_id:
                return result
        raise KeyError(check_id)

    def verdict(self, check_id: str) -> str:
        return self.get(check_id).status

    @property
    def has_failures(self) -> bool:
        return any(r.failed for r in self.results)


# =============================================================================
# ENUMERATION
# =============================================================================

def _check_cap(within: int, settings: Settings):
    size = popcount(within)
    if size > settings.enumeration_cap:
        raise CapExceededError("deductive-set enumeration", size, settings.enumeration_cap)


def brute_force_deductive(op: Operator, within: SentenceSet) -> MooreFamily:
    """Filter every subset of within. Oracle for enumerate_deductive."""
    members = tuple(m for m in iter_submasks(within.mask) if op.close_mask(m) == m)
    return MooreFamily(op.universe, within.mask, members)


def enumerate_deductive(
    op: Operator,
    within: SentenceSet,
    settings: Settings = DEFAULT_SETTINGS,
) -> MooreFamily:
    """
    Every D ⊆ within with Cn(D) = D, in lectic order.

    Raises:
        CapExceededError: |within| exceeds the enumeration cap
    """
    _check_cap(within.mask, settings)
    if isinstance(op, TableOperator):
        # NextClosure needs a closure operator; tables may not be one
        return brute_force_deductive(op, within)

    domain = within.mask
    bits = list(iter_bits(domain))
    above = {m: domain & ~((1 << (m + 1)) - 1) for m in bits}

    def cl(mask: int) -> int:
        closed = op.close_mask(mask)
        return closed if closed & ~domain == 0 else domain

    members: List[int] = []
    current = cl(0)
    while True:
        members.append(current)
        if current == domain:
            break
        for m in bits:
            if current >> m & 1:
                continue
            high = above[m]
            candidate = cl((current & high) | 1 << m)
            if candidate & high == current & high:
                current = candidate
                break
        else:
            break

    if members and members[-1] == domain and op.close_mask(domain) != domain:
        members.pop()
    logger.debug("enumerated %d deductive sets within %d symbols", len(members), len(bits))
    return MooreFamily(op.universe, domain, tuple(members))


def _omega_family(op: Operator, settings: Settings) -> MooreFamily:
    return enumerate_deductive(op, op.universe.omega, settings)


def cognitive_closure(
    op: Operator,
    a: SentenceSet,
    family: Optional[MooreFamily] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> SentenceSet:
    """
    Cl□(A): the intersection of every deductive superset of A in Ω.

    Pass the deductive family of Ω to avoid re-enumerating it.
    """
    if family is None:
        family = _omega_family(op, settings)
    return SentenceSet(op.universe, _intersect_supersets(family, a.mask))


def _intersect_supersets(family: MooreFamily, mask: int) -> int:
    acc = family.universe.full_mask
    for member in family.members:
        if mask & ~member == 0:
            acc &= member
    return acc


def build_cct(op: Operator, settings: Settings = DEFAULT_SETTINGS) -> CctFamily:
    """
    Build τ from the deductive subsets of C.

    Raises:
        CapExceededError: |C| exceeds the enumeration cap
    """
    universe = op.universe
    whole = universe.cognitive_mask
    deductive = enumerate_deductive(op, universe.cognitive, settings)
    members = tuple(sorted(whole & ~d for d in deductive.members))
    diagnostics = list(universe.diagnostics)
    if 0 in members or whole in members:
        diagnostics.append(COGNITIVE_CONDITIONS_VIOLATED)
        logger.warning("%s: τ contains %s", COGNITIVE_CONDITIONS_VIOLATED,
                       "∅ and C" if 0 in members and whole in members else "∅" if 0 in members else "C")
    logger.info("τ has %d members over |C| = %d", len(members), popcount(whole))
    return CctFamily(universe, members, deductive, tuple(diagnostics))


# =============================================================================
# THEOREM CHECKS
# =============================================================================

def check_structure_theorems(
    op: Operator,
    universe: Universe,
    tau: CctFamily,
    settings: Settings = DEFAULT_SETTINGS,
    omega_family: Optional[MooreFamily] = None,
) -> TheoremReport:
    """
    Check t1-t5, their corollaries and the closure properties (i)-(v).

    Nothing here raises for a mathematical outcome; every verdict is a
    report entry.
    """
    rng = random.Random(settings.seed)
    report = TheoremReport()
    whole = universe.cognitive_mask
    labels = universe.labels
    cache: Dict[int, int] = {}

    def cn(mask: int) -> int:
        if mask not in cache:
            cache[mask] = op.close_mask(mask)
        return cache[mask]

    empty_ok = cn(0) != 0
    whole_ok = cn(whole) != whole
    conditions = empty_ok and whole_ok
    if not conditions:
        report.notes.append(f"{COGNITIVE_CONDITIONS_VIOLATED}: "
                            f"Cn(∅) {'≠' if empty_ok else '='} ∅, Cn(C) {'≠' if whole_ok else '='} C")

    if omega_family is None and len(universe) <= settings.enumeration_cap:
        omega_family = _omega_family(op, settings)

    if omega_family is not None:
        report.add(_check_moore_intersection(omega_family))
        report.add(_check_closure_least_deductive(op, omega_family, cn, settings, rng))
    else:
        for check_id in ("moore_intersection", "closure_least_deductive"):
            report.add(make_result(check_id, CheckStatus.NOT_EVALUATED,
                                   f"|Ω| = {len(universe)} exceeds the enumeration cap"))

    report.add(_check_t1(tau, settings, rng))
    report.add(_check_t2(tau, cn, settings, rng))

    # t3
    if not empty_ok:
        report.add(make_result("t3", CheckStatus.NOT_APPLICABLE, "not applicable: Cn(∅)=∅"))
    else:
        rest = whole & ~tau.union
        if rest:
            report.add(make_result("t3", CheckStatus.PASS, "C ∖ ∪τ non-empty", labels(rest)[:1]))
        elif conditions:
            report.add(make_result("t3", CheckStatus.FAIL, "every sentence of C lies in some CWO set"))
        else:
            report.add(make_result("t3", CheckStatus.NOT_APPLICABLE,
                                   "C ∖ ∪τ empty; not applicable: Cn(C)=C"))

    # t4
    if tau.union:
        report.add(make_result("t4", CheckStatus.PASS, "∪τ non-empty", labels(tau.union)[:1]))
    else:
        report.add(make_result("t4", CheckStatus.FAIL, "fails: no proper deductive subset of C"))

    # Intersection of the deductive complements
    if not tau.members:
        report.add(make_result("t4_intersection", CheckStatus.NOT_APPLICABLE, "τ is empty"))
    elif not empty_ok:
        report.add(make_result("t4_intersection", CheckStatus.NOT_APPLICABLE, "not applicable: Cn(∅)=∅"))
    else:
        acc = whole
        for member in tau.members:
            acc &= whole & ~member
        report.add(
            make_result("t4_intersection", CheckStatus.PASS, "∩{C ∖ A : A ∈ τ} non-empty", labels(acc))
            if acc else
            make_result("t4_intersection", CheckStatus.FAIL, "∩{C ∖ A : A ∈ τ} is empty")
        )

    report.add(_check_t5(tau, conditions))

    # Corollaries on Cl□ (evaluated through the Ω family when available)
    def cl(mask: int) -> int:
        return _intersect_supersets(omega_family, mask) if omega_family is not None else cn(mask)

    if conditions:
        empty_closure, whole_closure = cl(0), cl(whole)
        ok = empty_closure != 0 and whole_closure != whole
        report.add(make_result(
            "closure_empty_whole", CheckStatus.PASS if ok else CheckStatus.FAIL,
            "Cl□(∅) ≠ ∅ and Cl□(C) ≠ C" if ok else "Cl□(∅) = ∅ or Cl□(C) = C",
            [labels(empty_closure), labels(whole_closure)],
        ))
    else:
        report.add(make_result("closure_empty_whole", CheckStatus.NOT_APPLICABLE,
                               COGNITIVE_CONDITIONS_VIOLATED))

    report.add(_check_tau_members(tau, cl, conditions))
    for result in _check_closure_properties(universe, cn, settings, rng, omega_family):
        report.add(result)
    return report


def _check_moore_intersection(family: MooreFamily) -> CheckResult:
    labels = family.universe.labels
    for i, a in enumerate(family.members):
        for b in family.members[i + 1:]:
            if a & b not in family:
                return make_result("moore_intersection", CheckStatus.FAIL,
                                   "intersection of deductive sets is not deductive",
                                   [labels(a), labels(b)])
    return make_result("moore_intersection", CheckStatus.PASS,
                       f"{len(family)} deductive sets closed under intersection")


def _check_closure_least_deductive(op, family: MooreFamily, cn, settings: Settings, rng) -> CheckResult:
    universe = op.universe
    n = len(universe)
    if n <= 12:
        subsets = range(1 << n)
        mode = "all"
    else:
        subsets = [rng.getrandbits(n) for _ in range(settings.sample_count)]
        mode = "sampled"
    checked = 0
    for a in subsets:
        checked += 1
        if _intersect_supersets(family, a) != cn(a):
            return make_result("closure_least_deductive", CheckStatus.FAIL, "Cl□(A) ≠ Cn(A)",
                               [universe.labels(a), universe.labels(_intersect_supersets(family, a)),
                                universe.labels(cn(a))])
    return make_result("closure_least_deductive", CheckStatus.PASS,
                       f"Cl□(A) = Cn(A) on {checked} subsets ({mode})")


def _all_unions(members: Tuple[int, ...]) -> Set[int]:
    reach: Set[int] = set()
    for m in members:
        reach |= {u | m for u in reach}
        reach.add(m)
    return reach


def _check_t1(tau: CctFamily, settings: Settings, rng: random.Random) -> CheckResult:
    labels = tau.universe.labels
    members = tau.members
    if not members:
        return make_result("t1", CheckStatus.PASS, "τ is empty; union closure holds vacuously")
    if len(members) <= settings.union_exhaustive_limit:
        for u in sorted(_all_unions(members)):
            if u not in tau:
                return make_result("t1", CheckStatus.FAIL, "a union of CWO sets is not CWO", [labels(u)])
        return make_result("t1", CheckStatus.PASS, f"all unions of the {len(members)} members of τ")

    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a | b not in tau:
                return make_result("t1", CheckStatus.FAIL, "union of two CWO sets is not CWO",
                                   [labels(a), labels(b)])
    for _ in range(settings.sample_count):
        k = rng.randint(3, min(len(members), 8))
        acc = 0
        for m in rng.sample(members, k):
            acc |= m
        if acc not in tau:
            return make_result("t1", CheckStatus.FAIL, "sampled union of CWO sets is not CWO", [labels(acc)])
    return make_result("t1", CheckStatus.PASS,
                       f"all pairs and {settings.sample_count} sampled unions of τ members")


def _all_intersections(members: Tuple[int, ...]) -> Set[int]:
    reach: Set[int] = set()
    for m in members:
        reach |= {i & m for i in reach}
        reach.add(m)
    return reach


def _check_t2(tau: CctFamily, cn, settings: Settings, rng: random.Random) -> CheckResult:
    """
    Sub-families F of τ whose complements have a deductive union must meet in τ.

    ∪{C ∖ A : A ∈ F} = C ∖ ∩F, so each instance is decided by its
    intersection alone and distinct intersections are checked once.
    """
    whole = tau.universe.cognitive_mask
    labels = tau.universe.labels
    members = tau.members
    if not members:
        return make_result("t2", CheckStatus.PASS, "τ is empty; intersection closure holds vacuously")
    if len(members) <= settings.union_exhaustive_limit:
        meets = _all_intersections(members)
        scope = f"all {2 ** len(members) - 1} sub-families of τ"
    else:
        meets = {a & b for i, a in enumerate(members) for b in members[i:]}
        for _ in range(settings.sample_count):
            acc = whole
            for m in rng.sample(members, rng.randint(3, min(len(members), 8))):
                acc &= m
            meets.add(acc)
        scope = f"all pairs and {settings.sample_count} sampled sub-families of τ"

    vacuous = 0
    for meet in sorted(meets):
        complements = whole & ~meet
        if cn(complements) != complements:
            vacuous += 1
            continue
        if meet not in tau:
            return make_result("t2", CheckStatus.FAIL,
                               "complement union deductive but intersection not CWO", [labels(meet)])
    return make_result("t2", CheckStatus.PASS,
                       f"{scope}: {len(meets)} distinct intersections, "
                       f"{vacuous} vacuous (complement union not deductive)")


def _check_t5(tau: CctFamily, conditions: bool) -> CheckResult:
    whole = tau.universe.cognitive_mask
    labels = tau.universe.labels
    deductive = tau.deductive
    for d in deductive.members:
        if whole & ~d in deductive:
            if conditions:
                return make_result("t5", CheckStatus.FAIL, "A and C ∖ A are both deductive",
                                   [labels(d), labels(whole & ~d)])
            return make_result("t5", CheckStatus.NOT_APPLICABLE,
                               f"{COGNITIVE_CONDITIONS_VIOLATED}; A and C ∖ A both deductive",
                               [labels(d), labels(whole & ~d)])
    return make_result("t5", CheckStatus.PASS, "no A ⊆ C with A and C ∖ A both deductive")


def _check_tau_members(tau: CctFamily, cl, conditions: bool) -> CheckResult:
    whole = tau.universe.cognitive_mask
    labels = tau.universe.labels
    for a in tau.members:
        complement = whole & ~a
        if cl(complement) != complement or cl(a) == a:
            status = CheckStatus.FAIL if conditions else CheckStatus.NOT_APPLICABLE
            return make_result("tau_member_closure", status,
                               "Cl□(C ∖ A) ≠ C ∖ A or Cl□(A) = A", [labels(a)])
    return make_result("tau_member_closure", CheckStatus.PASS,
                       f"holds for all {len(tau)} members of τ")


def _check_closure_properties(
    universe: Universe,
    cn,
    settings: Settings,
    rng: random.Random,
    omega_family: Optional[MooreFamily],
) -> List[CheckResult]:
    """
    Closure properties (i)-(v) over subsets of Ω.

    Up to closure_property_cap symbols every pair is covered:
    (ii) and (iv) hold for all pairs iff they hold for nested pairs A ⊆ B
    (then A ∪ B = B and A ∩ B = A), and the premises of (iii) and (v)
    can only hold on pairs of deductive sets.
    """
    n = len(universe)
    labels = universe.labels
    exhaustive = n <= settings.closure_property_cap
    results: List[CheckResult] = []

    def random_pairs() -> List[Tuple[int, int]]:
        return [(rng.getrandbits(n), rng.getrandbits(n)) for _ in range(settings.sample_count)]

    # (i) over covering steps A ⊂ A ∪ {x}
    if exhaustive:
        subsets = range(1 << n)
        scope = f"all {1 << n} subsets of Ω (covering steps)"
    else:
        subsets = [rng.getrandbits(n) for _ in range(settings.sample_count)]
        scope = f"{settings.sample_count} sampled subsets of Ω"
    witness = None
    for a in subsets:
        ca = cn(a)
        for x in range(n):
            if not a >> x & 1 and ca & ~cn(a | 1 << x):
                witness = [labels(a), labels(a | 1 << x)]
                break
        if witness:
            break
    results.append(make_result("cl_i", CheckStatus.FAIL if witness else CheckStatus.PASS,
                               "A ⊆ B but Cl□(A) ⊄ Cl□(B)" if witness else f"monotone on {scope}",
                               witness))

    # (ii) and (iv)
    failures: Dict[str, List] = {}
    if exhaustive:
        nested = 0
        for b in range(1 << n):
            cb = cn(b)
            for a in iter_submasks(b):
                nested += 1
                if cn(a) & ~cb:
                    failures.setdefault("cl_ii", [labels(a), labels(b)])
                    failures.setdefault("cl_iv", [labels(a), labels(b)])
            if failures:
                break
        scope = f"all {4 ** n} pairs of subsets of Ω ({nested} nested pairs)"
    else:
        pairs = random_pairs()
        for a, b in pairs:
            ca, cb = cn(a), cn(b)
            if "cl_ii" not in failures and (ca | cb) & ~cn(a | b):
                failures["cl_ii"] = [labels(a), labels(b)]
            if "cl_iv" not in failures and cn(a & b) & ~(ca & cb):
                failures["cl_iv"] = [labels(a), labels(b)]
        scope = f"{len(pairs)} sampled pairs of subsets of Ω"
    for check_id in ("cl_ii", "cl_iv"):
        if check_id in failures:
            results.append(make_result(check_id, CheckStatus.FAIL, "counterexample pair", failures[check_id]))
        else:
            results.append(make_result(check_id, CheckStatus.PASS, f"holds on {scope}"))

    # (iii) and (v): count the pairs that meet the premise
    if exhaustive and omega_family is not None:
        members = omega_family.members
        pairs = [(a, b) for i, a in enumerate(members) for b in members[i:]]
        scope = "pairs of deductive subsets of Ω"
    else:
        pairs = random_pairs()
        scope = "sampled pairs of subsets of Ω"
    unions = meets = 0
    for a, b in pairs:
        ca, cb = cn(a), cn(b)
        if ca != a or cb != b:
            continue
        if cn(a | b) == a | b:
            unions += 1
            if a | b != ca | cb:
                failures.setdefault("cl_iii", [labels(a), labels(b)])
        if cn(a & b) == a & b:
            meets += 1
            if a & b != ca & cb:
                failures.setdefault("cl_v", [labels(a), labels(b)])
    for check_id, met, op_text in (("cl_iii", unions, "∪"), ("cl_v", meets, "∩")):
        if check_id in failures:
            results.append(make_result(check_id, CheckStatus.FAIL, "counterexample pair", failures[check_id]))
        else:
            results.append(make_result(
                check_id, CheckStatus.PASS,
                f"{met} of {len(pairs)} {scope} have A {op_text} B deductive; equality holds on each"))
    return results
