"""
Practical-whole topologies on an environment and cognitive maps into it.

Environment subsets are masks over the environment's own point order.
Proper opens of a PracticalTopology are ordered by cardinality, then
lectic order; every report that walks the opens uses that order.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, make_result
from src.config import DEFAULT_SETTINGS, Settings
from src.errors import CapExceededError, PracticalWholeError, PreconditionError, UnknownSentenceError
from src.lattice import CctFamily, TheoremReport
from src.models.universe import SentenceSet, Universe, iter_bits, popcount

logger = logging.getLogger(__name__)

BASE_TAGS = ("complete", "irreducible")
PROPER_OPENS_ONLY = "continuity is checked on proper opens; preimage(E) = C is never CWO"


def _size_then_lectic(mask: int) -> Tuple[int, int]:
    return popcount(mask), mask


@dataclass(frozen=True)
class BaseObject:
    name: str
    mask: int
    tag: str = "complete"


@dataclass(frozen=True)
class Environment:
    """Points of E, base objects and the designated practical wholes."""
    points: Tuple[str, ...]
    base: Tuple[BaseObject, ...]
    practical_wholes: Tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, point: str) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise UnknownSentenceError(point, "environment points") from None

    def mask(self, points: Iterable[str]) -> int:
        m = 0
        for p in points:
            m |= 1 << self.index(p)
        return m

    def labels(self, mask: int) -> List[str]:
        return [self.points[i] for i in iter_bits(mask)]

    def base_object(self, name: str) -> BaseObject:
        for obj in self.base:
            if obj.name == name:
                return obj
        raise PreconditionError(f"unknown base object: {name}")


def make_environment(
    points: Sequence[str],
    base: Sequence[Tuple[str, Iterable[str], str]],
    practical_wholes: Sequence[Iterable[str]] = (),
) -> Environment:
    """
    Build an Environment from labels.

    Raises:
        UnknownSentenceError: a base object or practical whole names an unknown point
        PreconditionError: duplicate points or an unknown base-object tag
    """
    points = tuple(points)
    if len(set(points)) != len(points):
        raise PreconditionError("environment points must be distinct")
    env = Environment(points, (), ())
    objects = []
    for name, members, tag in base:
        if tag not in BASE_TAGS:
            raise PreconditionError(f"base object {name!r} has unknown tag {tag!r}")
        objects.append(BaseObject(name, env.mask(members), tag))
    wholes = tuple(env.mask(pw) for pw in practical_wholes)
    return Environment(points, tuple(objects), wholes)


@dataclass(frozen=True)
class PracticalTopology:
    """Opens: ∅, E, then the proper opens by size and lectic order."""
    environment: Environment
    opens: Tuple[int, ...]

    @property
    def proper(self) -> Tuple[int, ...]:
        return self.opens[2:]

    def labels(self) -> List[List[str]]:
        return [self.environment.labels(o) for o in self.opens]


def _base_unions(env: Environment) -> set:
    unions = {0}
    for obj in env.base:
        unions |= {u | obj.mask for u in unions}
    return unions


def build_practical_topology(env: Environment, settings: Settings = DEFAULT_SETTINGS) -> PracticalTopology:
    """
    {∅, E} plus every listed practical whole.

    Raises:
        CapExceededError: more than max_base_objects base objects
        PracticalWholeError: a practical whole is not a union of base objects
    """
    if len(env.base) > settings.max_base_objects:
        raise CapExceededError("base objects", len(env.base), settings.max_base_objects)
    unions = _base_unions(env)
    proper = set()
    for pw in env.practical_wholes:
        if pw not in unions:
            raise PracticalWholeError(
                f"practical whole {env.labels(pw)} is not a union of base objects",
                tuple(env.labels(pw)),
            )
        if pw not in (0, env.full_mask):
            proper.add(pw)
    opens = (0, env.full_mask) + tuple(sorted(proper, key=_size_then_lectic))
    logger.debug("topology with %d proper opens", len(proper))
    return PracticalTopology(env, opens)


def check_topology(topology: PracticalTopology) -> List[CheckResult]:
    """Union/designation conditions on the opens and the base condition on practical wholes."""
    env = topology.environment
    unions = _base_unions(env)
    listed = set(env.practical_wholes)
    results = []

    bad = next((o for o in topology.proper if o not in unions or o not in listed), None)
    results.append(
        make_result("pw_union", CheckStatus.PASS,
                    f"{len(topology.proper)} proper opens, each a listed union of base objects")
        if bad is None else
        make_result("pw_union", CheckStatus.FAIL, "proper open is not a listed union of base objects",
                    [env.labels(bad)])
    )

    bare = next((pw for pw in env.practical_wholes
                 if not any(obj.mask and obj.mask & ~pw == 0 for obj in env.base)), None)
    results.append(
        make_result("base_condition", CheckStatus.PASS, "every practical whole contains a base object")
        if bare is None else
        make_result("base_condition", CheckStatus.FAIL, "practical whole contains no base object",
                    [env.labels(bare)])
    )

    results.append(make_result(
        "clopen_by_designation", CheckStatus.INFO,
        "every proper open is a practical whole and so clopen by designation",
        [env.labels(o) for o in topology.proper],
    ))
    return results


@dataclass(frozen=True)
class BaseClosure:
    base_object: str
    whole: int
    ambiguous: bool
    multiplicity: int  # practical wholes containing the base object


def base_closure(env: Environment, name: str) -> BaseClosure:
    """
    The smallest practical whole containing a base object.

    Ties go to the lectically first candidate and set the ambiguity flag.

    Raises:
        PreconditionError: unknown base object, or no practical whole contains it
    """
    obj = env.base_object(name)
    candidates = sorted({pw for pw in env.practical_wholes if obj.mask & ~pw == 0}, key=_size_then_lectic)
    if not candidates:
        raise PreconditionError(f"no practical whole contains base object {name}")
    best = candidates[0]
    ties = sum(1 for c in candidates if popcount(c) == popcount(best))
    return BaseClosure(name, best, ties > 1, len(candidates))


class CognitiveMap:
    """A total map from the cognitive space C to points of E."""

    def __init__(self, universe: Universe, environment: Environment, mapping: Mapping[str, str]):
        missing = [s for s in universe.labels(universe.cognitive_mask) if s not in mapping]
        if missing:
            raise PreconditionError(f"cognitive map is not total over C; missing: {', '.join(missing)}")
        self.universe = universe
        self.environment = environment
        self.targets: Dict[int, int] = {}
        for sentence, point in mapping.items():
            index = universe.index(sentence)
            if not universe.cognitive_mask >> index & 1:
                raise PreconditionError(f"{sentence!r} is mapped but is not in C")
            self.targets[index] = environment.index(point)

    def preimage(self, open_mask: int) -> SentenceSet:
        pre = 0
        for sentence, point in self.targets.items():
            if open_mask >> point & 1:
                pre |= 1 << sentence
        return SentenceSet(self.universe, pre)


def check_cognitive_continuity(
    cmap: CognitiveMap,
    topology: PracticalTopology,
    tau: CctFamily,
) -> TheoremReport:
    """Preimage of every proper open must be a CWO set; the first counterexample is the witness."""
    env = topology.environment
    report = TheoremReport(notes=[PROPER_OPENS_ONLY])
    u = cmap.universe
    for open_mask in topology.proper:
        pre = cmap.preimage(open_mask)
        if pre.mask not in tau:
            report.add(make_result(
                "continuity", CheckStatus.FAIL,
                f"preimage of {env.labels(open_mask)} is not CWO",
                [env.labels(open_mask), u.labels(pre.mask)]))
            return report
    report.add(make_result("continuity", CheckStatus.PASS,
                           f"preimages of all {len(topology.proper)} proper opens are CWO"))
    return report


@dataclass
class ClopenReport:
    """The preimage family and whether each member's complement in C is a member too."""
    family: List[int]
    complemented: List[bool]
    results: List[CheckResult] = field(default_factory=list)


def weak_topology_clopen(
    cmap: CognitiveMap,
    topology: PracticalTopology,
    universe: Optional[Universe] = None,
) -> ClopenReport:
    """
    Materialize {f⁻¹(U) : U open} and test closure under complement in C.

    A failure is a discrepancy with the designation reading, which is
    reported beside it.
    """
    universe = universe or cmap.universe
    whole = universe.cognitive_mask
    family = sorted({cmap.preimage(o).mask for o in topology.opens})
    members = set(family)
    complemented = [whole & ~m in members for m in family]
    report = ClopenReport(family, complemented)
    failing = next((m for m, ok in zip(family, complemented) if not ok), None)
    if failing is None:
        report.results.append(make_result(
            "preimage_clopen", CheckStatus.PASS, "preimage family is closed under complement in C"))
    else:
        report.results.append(make_result(
            "preimage_clopen", CheckStatus.FAIL,
            "complement of a preimage is not a preimage; clopen only by designation",
            [universe.labels(failing), universe.labels(whole & ~failing)]))
    return report
