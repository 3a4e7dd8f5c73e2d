"""
Cognitive similarity, thought-sequence limits and black holes.

Handles:
- PseudoMetric in two variants: weight based, Cog(x, y) = |w(x) - w(y)|,
  and an explicit distance matrix
- Cognition balls, ε-limit detection on finite prefixes and limit points
- The limit theorems, evaluated as report entries
- Black-hole detection and compactness of a solution space

Weights are exact decimals. They are held as integers over a common
denominator so that every comparison with ε is exact; matrix metrics are
float64 and compared as given.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.auditor.checklist import CheckStatus
from src.auditor.results import CheckResult, make_result
from src.config import DEFAULT_SETTINGS, Settings
from src.consequence import Operator
from src.errors import EmptySequenceError, InvalidThresholdError, MetricError, UnknownSentenceError
from src.lattice import TheoremReport
from src.models.sequence import ThoughtSequence
from src.models.universe import SentenceSet, Universe, mask_of

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]


def exact(value) -> Fraction:
    """Decimal value as a Fraction (0.2 -> 1/5, not the binary double)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


class PseudoMetric:
    """
    Cog over the symbols of a universe.

    Build with make_weight_metric() or make_matrix_metric(). Matrix metrics
    must pass validate_pseudometric() before limit or black-hole operations
    accept them.
    """

    def __init__(
        self,
        universe: Universe,
        variant: str,
        tol_eq: float = DEFAULT_SETTINGS.tol_eq,
        weights: Optional[Sequence[Fraction]] = None,
        matrix: Optional[np.ndarray] = None,
        diagnostics: Sequence[str] = (),
    ):
        self.universe = universe
        self.variant = variant
        self.tol_eq = tol_eq
        self.diagnostics = tuple(diagnostics)
        self.validated = variant == "weight"
        if variant == "weight":
            self.weights = tuple(weights)
            self.scale = math.lcm(*(w.denominator for w in self.weights)) if self.weights else 1
            self.scaled = tuple(int(w * self.scale) for w in self.weights)
            self.matrix = None
        elif variant == "matrix":
            self.weights = None
            self.scale = 1
            self.scaled = None
            self.matrix = np.asarray(matrix, dtype=np.float64)
        else:
            raise MetricError(f"unknown metric variant: {variant}")

    def __len__(self) -> int:
        return len(self.universe)

    def cog_exact(self, i: int, j: int) -> Number:
        if self.variant == "weight":
            return Fraction(abs(self.scaled[i] - self.scaled[j]), self.scale)
        return float(self.matrix[i, j])

    def threshold(self, value) -> Number:
        """A bound in the number type this metric compares with."""
        return exact(value) if self.variant == "weight" else float(value)

    def _scaled_array(self, bound_denominator: int) -> np.ndarray:
        dtype = np.int64 if self.scale * bound_denominator < 2 ** 62 else object
        return np.asarray(self.scaled, dtype=dtype)

    def inside(self, rows: Sequence[int], cols: Sequence[int], bound) -> np.ndarray:
        """Boolean matrix [rows x cols] of Cog(row, col) < bound."""
        rows = np.asarray(rows, dtype=np.intp)
        cols = np.asarray(cols, dtype=np.intp)
        if self.variant == "weight":
            bound = exact(bound)
            s = self._scaled_array(bound.denominator)
            diff = np.abs(s[rows][:, None] - s[cols][None, :])
            return diff * bound.denominator < bound.numerator * self.scale
        return self.matrix[np.ix_(rows, cols)] < float(bound)

    def dense(self) -> Tuple[np.ndarray, int, float]:
        """
        All pairwise distances with their scale and tolerance.

        Weight metrics give exact integers (distance = value / scale, zero
        tolerance); matrix metrics give floats with tol_eq.
        """
        if self.variant == "weight":
            s = self._scaled_array(1)
            return np.abs(s[:, None] - s[None, :]), self.scale, 0
        return self.matrix, 1, self.tol_eq

    def require_valid(self):
        if not self.validated:
            raise MetricError("matrix metric has not passed validate_pseudometric")


def make_weight_metric(
    universe: Universe,
    weights: Mapping[str, Union[float, str]],
    tol_eq: float = DEFAULT_SETTINGS.tol_eq,
) -> PseudoMetric:
    """
    Weight-based metric. Symbols without a weight get 0 and a diagnostic.

    Raises:
        UnknownSentenceError: a weight names an undeclared symbol
        MetricError: a weight outside [0, 1]
    """
    for label in weights:
        if label not in universe:
            raise UnknownSentenceError(label, "symbols (weights)")
    values: List[Fraction] = []
    missing = []
    for label in universe.symbols:
        if label not in weights:
            missing.append(label)
            values.append(Fraction(0))
            continue
        w = exact(weights[label])
        if not 0 <= w <= 1:
            raise MetricError(f"weight of {label!r} outside [0, 1]: {weights[label]}")
        values.append(w)
    diagnostics = []
    if missing:
        message = f"weights default to 0 for: {', '.join(missing)}"
        logger.warning(message)
        diagnostics.append(message)
    return PseudoMetric(universe, "weight", tol_eq, weights=values, diagnostics=diagnostics)


def make_matrix_metric(
    universe: Universe,
    entries: Sequence[Tuple[str, str, float]],
    tol_eq: float = DEFAULT_SETTINGS.tol_eq,
    default: float = 1.0,
) -> PseudoMetric:
    """
    Matrix metric from (x, y, distance) triples.

    An entry given for one orientation only is mirrored; unlisted
    off-diagonal pairs get ``default`` and the diagonal is 0.
    """
    n = len(universe)
    given: Dict[Tuple[int, int], float] = {}
    for x, y, d in entries:
        given[(universe.index(x), universe.index(y))] = float(d)
    matrix = np.full((n, n), float(default))
    np.fill_diagonal(matrix, 0.0)
    for (i, j), d in given.items():
        matrix[i, j] = d
        if (j, i) not in given:
            matrix[j, i] = d
    return PseudoMetric(universe, "matrix", tol_eq, matrix=matrix)


def _check_epsilon(epsilon) -> None:
    if not 0 < exact(epsilon) < 1:
        raise InvalidThresholdError(epsilon)


# =============================================================================
# DISTANCE AND BALLS
# =============================================================================

def cog(metric: PseudoMetric, x: str, y: str) -> float:
    """Cog(x, y). Weight metrics compute exactly and round once."""
    u = metric.universe
    return float(metric.cog_exact(u.index(x), u.index(y)))


@dataclass
class MetricReport:
    """Pseudometric axiom verdicts."""
    mode: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.results)

    def verdict(self, check_id: str) -> str:
        for result in self.results:
            if result.check_id == check_id:
                return result.status
        raise KeyError(check_id)


def validate_pseudometric(
    metric: PseudoMetric,
    universe: Optional[Universe] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> MetricReport:
    """
    Check range, identity, symmetry, the triangle inequality and congruence.

    Triangle witnesses are (x, y, z) with Cog(x, z) > Cog(x, y) + Cog(y, z),
    the first in index order. Passing marks a matrix metric as validated.
    """
    universe = universe or metric.universe
    n = len(universe)
    cap = 64 if metric.variant == "weight" else settings.exhaustive_metric_cap
    mode = "exhaustive" if n <= cap else "sampled"
    dist, scale, tol = metric.dense()
    symbols = universe.symbols
    report = MetricReport(mode)

    bad = np.argwhere((dist < -tol) | (dist > scale + tol))
    report.results.append(
        make_result("metric_range", CheckStatus.PASS, "all distances in [0, 1]")
        if not len(bad) else
        make_result("metric_range", CheckStatus.FAIL, "distance outside [0, 1]",
                    [symbols[bad[0][0]], symbols[bad[0][1]]])
    )

    bad = np.flatnonzero(np.abs(np.diag(dist)) > tol)
    report.results.append(
        make_result("metric_identity", CheckStatus.PASS, "Cog(x, x) = 0")
        if not len(bad) else
        make_result("metric_identity", CheckStatus.FAIL, "Cog(x, x) ≠ 0", [symbols[bad[0]]])
    )

    bad = np.argwhere(np.abs(dist - dist.T) > tol)
    report.results.append(
        make_result("metric_symmetry", CheckStatus.PASS, "Cog(x, y) = Cog(y, x)")
        if not len(bad) else
        make_result("metric_symmetry", CheckStatus.FAIL, "Cog(x, y) ≠ Cog(y, x)",
                    [symbols[bad[0][0]], symbols[bad[0][1]]])
    )

    triangle = _triangle_witness(dist, tol, mode, settings)
    report.results.append(
        make_result("metric_triangle", CheckStatus.PASS, f"triangle inequality ({mode})")
        if triangle is None else
        make_result("metric_triangle", CheckStatus.FAIL, "Cog(x, z) > Cog(x, y) + Cog(y, z)",
                    [symbols[i] for i in triangle])
    )

    congruence = _congruence_witness(dist, tol)
    report.results.append(
        make_result("metric_congruence", CheckStatus.PASS, "x ≈ y ⇒ Cog(x, z) = Cog(y, z)")
        if congruence is None else
        make_result("metric_congruence", CheckStatus.FAIL, "x ≈ y but Cog(x, z) ≠ Cog(y, z)",
                    [symbols[i] for i in congruence])
    )

    if report.passed:
        metric.validated = True
    else:
        logger.warning("pseudometric validation failed (%s)",
                       ", ".join(r.check_id for r in report.results if r.failed))
    return report


def _triangle_witness(dist: np.ndarray, tol, mode: str, settings: Settings) -> Optional[Tuple[int, int, int]]:
    n = dist.shape[0]
    if mode == "exhaustive":
        for x in range(n):
            # violation[y, z]: d(x, z) > d(x, y) + d(y, z)
            violation = dist[x][None, :] > dist[x][:, None] + dist + tol
            hits = np.argwhere(violation)
            if len(hits):
                y, z = hits[0]
                return x, int(y), int(z)
        return None
    rng = random.Random(settings.seed)
    for _ in range(settings.sample_count):
        x, y, z = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if dist[x, z] > dist[x, y] + dist[y, z] + tol:
            return x, y, z
    return None


def _congruence_witness(dist: np.ndarray, tol) -> Optional[Tuple[int, int, int]]:
    pairs = np.argwhere(np.triu(np.abs(dist) <= tol, k=1))
    for x, y in pairs:
        bad = np.flatnonzero(np.abs(dist[x] - dist[y]) > tol)
        if len(bad):
            return int(x), int(y), int(bad[0])
    return None


def ball(metric: PseudoMetric, x: str, epsilon) -> SentenceSet:
    """B(x, ε) = {y : Cog(x, y) < ε}."""
    _check_epsilon(epsilon)
    u = metric.universe
    inside = metric.inside([u.index(x)], range(len(u)), epsilon)[0]
    return SentenceSet(u, mask_of(np.flatnonzero(inside).tolist()))


# =============================================================================
# LIMITS
# =============================================================================

@dataclass(frozen=True)
class LimitCandidate:
    symbol: str
    detected: bool
    onset: Optional[int]  # 1-based; None when never settled
    in_ball: int  # sequence entries inside B(symbol, ε)


@dataclass
class LimitReport:
    """ε-limit detection for one sequence prefix."""
    sequence: str
    epsilon: float
    length: int
    candidates: List[LimitCandidate]
    limit_point_min: int
    limit_points: Dict[str, int] = field(default_factory=dict)

    @property
    def detected(self) -> List[str]:
        return [c.symbol for c in self.candidates if c.detected]

    def candidate(self, symbol: str) -> LimitCandidate:
        for c in self.candidates:
            if c.symbol == symbol:
                return c
        raise KeyError(symbol)

    def onset(self, symbol: str) -> Optional[int]:
        c = self.candidate(symbol)
        return c.onset if c.detected else None

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "epsilon": self.epsilon,
            "length": self.length,
            "detected": {c.symbol: c.onset for c in self.candidates if c.detected},
            "limit_point_min": self.limit_point_min,
            "limit_points": dict(self.limit_points),
        }


def _sequence_indices(metric: PseudoMetric, seq: ThoughtSequence) -> np.ndarray:
    if not len(seq):
        raise EmptySequenceError(f"sequence {seq.name!r} is empty")
    return np.asarray([metric.universe.index(t) for t in seq.thoughts], dtype=np.intp)


def detect_limits(
    metric: PseudoMetric,
    seq: ThoughtSequence,
    epsilon,
    limit_point_min: Optional[int] = None,
) -> LimitReport:
    """
    Scan every symbol as a candidate ε-limit of the prefix.

    The onset m is one past the last entry outside the ball; a candidate is
    detected when the final entry is inside, i.e. m ≤ len(seq).
    limit_point_min defaults to a strict majority of the tail after the
    earliest detected onset (1 when nothing is detected).
    """
    _check_epsilon(epsilon)
    metric.require_valid()
    positions = _sequence_indices(metric, seq)
    n = len(metric.universe)
    length = len(positions)
    inside = metric.inside(range(n), positions, epsilon)

    candidates: List[LimitCandidate] = []
    for i in range(n):
        row = inside[i]
        outside = np.flatnonzero(~row)
        onset = int(outside[-1]) + 2 if len(outside) else 1
        detected = onset <= length
        candidates.append(LimitCandidate(
            symbol=metric.universe.symbols[i],
            detected=detected,
            onset=onset if detected else None,
            in_ball=int(row.sum()),
        ))

    if limit_point_min is None:
        onsets = [c.onset for c in candidates if c.detected]
        limit_point_min = (length - min(onsets) + 1) // 2 + 1 if onsets else 1
    report = LimitReport(
        sequence=seq.name,
        epsilon=float(epsilon),
        length=length,
        candidates=candidates,
        limit_point_min=limit_point_min,
        limit_points={c.symbol: c.in_ball for c in candidates if c.in_ball >= limit_point_min},
    )
    logger.debug("sequence %s at ε=%s: detected %s", seq.name, epsilon, report.detected)
    return report


def coincidence_classes(metric: PseudoMetric, tol: Optional[float] = None) -> List[List[str]]:
    """Group symbols greedily by Cog ≤ tol, in universe order."""
    tol = metric.tol_eq if tol is None else tol
    dist, scale, _ = metric.dense()
    symbols = metric.universe.symbols
    close_enough = dist <= tol * scale
    assigned = np.zeros(len(symbols), dtype=bool)
    classes: List[List[str]] = []
    for i in range(len(symbols)):
        if assigned[i]:
            continue
        members = np.flatnonzero(close_enough[i] & ~assigned)
        assigned[members] = True
        classes.append([symbols[j] for j in members])
    return classes


def _common_tail(metric: PseudoMetric, first: ThoughtSequence, second: ThoughtSequence, tol: Number) -> int:
    u = metric.universe
    k = 0
    for a, b in zip(reversed(first.thoughts), reversed(second.thoughts)):
        if metric.cog_exact(u.index(a), u.index(b)) > tol:
            break
        k += 1
    return k


def _common_prefix(metric: PseudoMetric, first: ThoughtSequence, second: ThoughtSequence, tol: Number) -> int:
    u = metric.universe
    k = 0
    for a, b in zip(first.thoughts, second.thoughts):
        if metric.cog_exact(u.index(a), u.index(b)) > tol:
            break
        k += 1
    return k


def check_limit_theorems(
    op: Operator,
    metric: PseudoMetric,
    seq: ThoughtSequence,
    report: LimitReport,
    epsilon,
    partner: Optional[ThoughtSequence] = None,
) -> TheoremReport:
    """
    Evaluate the limit theorems for one sequence.

    With a partner sequence the coinciding-tail statements are checked too;
    otherwise they are reported as not applicable.
    """
    _check_epsilon(epsilon)
    u = metric.universe
    theorems = TheoremReport()
    subject = seq.name
    detected = report.detected
    idx = [u.index(x) for x in detected]
    two_eps = metric.threshold(exact(epsilon) * 2)
    tol = metric.threshold(metric.tol_eq)

    # Pairwise 2ε bound
    witness = None
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if not metric.cog_exact(idx[a], idx[b]) < two_eps:
                witness = [detected[a], detected[b]]
                break
        if witness:
            break
    if witness:
        theorems.add(make_result("limits_within_2eps", CheckStatus.FAIL,
                                 "two detected limits are 2ε or more apart", witness, subject))
    else:
        theorems.add(make_result("limits_within_2eps", CheckStatus.PASS,
                                 f"{len(detected)} detected limits pairwise within 2ε", [], subject))

    # Exact coincidence for a declared constant tail
    if seq.constant_tail:
        last = u.index(seq.thoughts[-1])
        near = [i for i in range(len(u)) if metric.cog_exact(i, last) <= tol]
        coincide = all(metric.cog_exact(i, j) <= tol for i in near for j in near)
        all_detected = all(report.candidates[i].detected for i in near)
        ok = coincide and all_detected
        theorems.add(make_result(
            "constant_tail_coincide", CheckStatus.PASS if ok else CheckStatus.FAIL,
            "limits of the constant tail coincide" if ok else "limits of the constant tail do not coincide",
            [u.symbols[i] for i in near], subject,
        ))
    else:
        theorems.add(make_result("constant_tail_coincide", CheckStatus.NOT_APPLICABLE,
                                 "no constant tail declared", [], subject))

    support = seq.support(u).mask
    closure = op.close_mask(support)
    limits = u.mask(detected)

    if closure == support:
        missing = limits & ~support
        theorems.add(
            make_result("limit_in_support", CheckStatus.PASS,
                        "support is deductive and contains every detected limit", [], subject)
            if not missing else
            make_result("limit_in_support", CheckStatus.FAIL,
                        "detected limit outside a deductive support", u.labels(missing), subject)
        )
    else:
        theorems.add(make_result("limit_in_support", CheckStatus.NOT_APPLICABLE,
                                 "support is not deductive", [], subject))

    expected = support | limits
    adds_limits = closure == expected
    theorems.add(
        make_result("closure_adds_limits", CheckStatus.PASS,
                    "Cl□(support) = support ∪ D", [], subject)
        if adds_limits else
        make_result("closure_adds_limits", CheckStatus.FAIL,
                    "Cl□(support) ≠ support ∪ D", u.labels(closure ^ expected), subject)
    )

    if not adds_limits:
        theorems.add(make_result("deductive_contains_limits", CheckStatus.NOT_APPLICABLE,
                                 "requires Cl□(support) = support ∪ D", [], subject))
    else:
        # Cn(support) is the least deductive superset of the support
        missing = limits & ~closure
        theorems.add(
            make_result("deductive_contains_limits", CheckStatus.PASS,
                        "every deductive superset of the support contains D", [], subject)
            if not missing else
            make_result("deductive_contains_limits", CheckStatus.FAIL,
                        "a deductive superset of the support misses a limit", u.labels(missing), subject)
        )

    for result in _check_partner(metric, seq, report, partner, epsilon, two_eps, tol):
        theorems.add(result)
    return theorems


def _check_partner(metric, seq, report, partner, epsilon, two_eps, tol) -> List[CheckResult]:
    subject = seq.name
    if partner is None:
        return [
            make_result("tail_coincidence", CheckStatus.NOT_APPLICABLE, "no partner sequence", [], subject),
            make_result("prefix_tail_coincidence", CheckStatus.NOT_APPLICABLE, "no partner sequence", [], subject),
        ]
    u = metric.universe
    subject = f"{seq.name}~{partner.name}"
    tail = _common_tail(metric, seq, partner, tol)
    prefix = _common_prefix(metric, seq, partner, tol)
    if tail == 0:
        message = "sequences do not coincide at the end"
        return [
            make_result("tail_coincidence", CheckStatus.NOT_APPLICABLE, message, [], subject),
            make_result("prefix_tail_coincidence", CheckStatus.NOT_APPLICABLE, message, [], subject),
        ]

    other = detect_limits(metric, partner, epsilon)
    bound = two_eps + tol
    witness = None
    for x in report.detected:
        for y in other.detected:
            if not metric.cog_exact(u.index(x), u.index(y)) < bound:
                witness = [x, y]
                break
        if witness:
            break
    status = CheckStatus.FAIL if witness else CheckStatus.PASS
    tail_message = (f"common tail of {tail}; limits within 2ε" if not witness
                    else f"common tail of {tail}; limits 2ε or more apart")
    results = [make_result("tail_coincidence", status, tail_message, witness or [], subject)]
    if prefix == 0:
        results.append(make_result("prefix_tail_coincidence", CheckStatus.NOT_APPLICABLE,
                                   "no common prefix", [], subject))
    else:
        results.append(make_result("prefix_tail_coincidence", status,
                                   f"common prefix of {prefix}, {tail_message}", witness or [], subject))
    return results


# =============================================================================
# BLACK HOLES AND COMPACTNESS
# =============================================================================

def detect_black_hole(
    metric: PseudoMetric,
    seq: ThoughtSequence,
    x: str,
    epsilon,
    region: SentenceSet,
) -> Optional[int]:
    """
    Onset k of a black hole around the virtual limit x, or None.

    Requires B(x, ε) ⊆ region; k is one past the last entry inside the
    ball (1 if no entry ever enters). A final entry inside the ball means
    the tail re-enters and there is no black hole.
    """
    _check_epsilon(epsilon)
    metric.require_valid()
    positions = _sequence_indices(metric, seq)
    around = ball(metric, x, epsilon)
    if not around <= region:
        return None
    inside = metric.inside([metric.universe.index(x)], positions, epsilon)[0]
    hits = np.flatnonzero(inside)
    if not len(hits):
        return 1
    if hits[-1] == len(positions) - 1:
        return None
    return int(hits[-1]) + 2


@dataclass(frozen=True)
class BlackHole:
    sequence: str
    virtual_limit: str
    epsilon: float
    region: Tuple[str, ...]
    onset: int

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "virtual_limit": self.virtual_limit,
            "epsilon": self.epsilon,
            "region": list(self.region),
            "onset": self.onset,
        }


@dataclass
class CompactnessReport:
    compact: bool
    black_holes: List[BlackHole] = field(default_factory=list)
    results: List[CheckResult] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)


def check_compactness(
    metric: PseudoMetric,
    solution_space: SentenceSet,
    sequences: Sequence[ThoughtSequence],
    epsilon_grid: Sequence[float],
) -> CompactnessReport:
    """
    Search the registered sequences for black holes in the solution space.

    A sequence that declares a virtual limit is examined at that limit only
    (when it lies in the solution space); otherwise every x in the space is
    tried. The region is always the solution space itself. Each black hole
    is checked for divergence and for an alternate route through another
    registered sequence.
    """
    for epsilon in epsilon_grid:
        _check_epsilon(epsilon)
    u = metric.universe
    report = CompactnessReport(compact=True)
    region = tuple(solution_space.labels())

    if not sequences:
        message = "compact (vacuous): no registered sequences"
        logger.warning(message)
        report.diagnostics.append(message)
        report.results.append(make_result("compactness", CheckStatus.PASS, message))
        return report

    limit_cache: Dict[Tuple[str, float], LimitReport] = {}

    def limits_of(seq: ThoughtSequence, epsilon) -> LimitReport:
        key = (seq.name, float(epsilon))
        if key not in limit_cache:
            limit_cache[key] = detect_limits(metric, seq, epsilon)
        return limit_cache[key]

    for seq in sequences:
        if seq.virtual_limit is not None:
            targets = [seq.virtual_limit] if seq.virtual_limit in solution_space else []
        else:
            targets = list(solution_space)
        for epsilon in sorted(epsilon_grid):
            for x in targets:
                k = detect_black_hole(metric, seq, x, epsilon, solution_space)
                if k is None:
                    continue
                hole = BlackHole(seq.name, x, float(epsilon), region, k)
                report.black_holes.append(hole)
                subject = f"{seq.name}@{x},ε={epsilon}"
                report.results.append(make_result(
                    "black_hole", CheckStatus.INFO, f"black hole from position {k}",
                    [seq.name, x, float(epsilon), k], subject))
                converges = x in limits_of(seq, epsilon).detected
                report.results.append(make_result(
                    "black_hole_divergence", CheckStatus.FAIL if converges else CheckStatus.PASS,
                    "sequence converges to its virtual limit" if converges
                    else "sequence does not converge to its virtual limit",
                    [x], subject))
                report.results.append(
                    check_alternate_route(metric, hole, sequences, limits_of))

    report.compact = not report.black_holes
    if report.compact:
        report.results.insert(0, make_result(
            "compactness", CheckStatus.PASS, "compact relative to registered sequences and grid"))
    else:
        first = report.black_holes[0]
        report.results.insert(0, make_result(
            "compactness", CheckStatus.INFO,
            f"not compact: {len(report.black_holes)} black hole(s)",
            [first.sequence, first.virtual_limit, first.epsilon, list(first.region), first.onset]))
    logger.info("compactness over %d sequences: %s", len(sequences),
                "compact" if report.compact else "not compact")
    return report


def check_alternate_route(metric: PseudoMetric, hole: BlackHole, sequences, limits_of=None) -> CheckResult:
    """Another registered sequence that reaches the virtual limit at the same ε."""
    subject = f"{hole.sequence}@{hole.virtual_limit},ε={hole.epsilon}"
    for seq in sequences:
        if seq.name == hole.sequence:
            continue
        limits = limits_of(seq, hole.epsilon) if limits_of else detect_limits(metric, seq, hole.epsilon)
        if hole.virtual_limit in limits.detected:
            return make_result("alternate_route", CheckStatus.PASS,
                               f"{seq.name} reaches {hole.virtual_limit}", [seq.name], subject)
    return make_result("alternate_route", CheckStatus.NOT_APPLICABLE,
                       "no other registered sequence reaches the virtual limit", [], subject)
