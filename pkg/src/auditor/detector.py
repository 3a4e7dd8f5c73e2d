"""
Scenario auditor - runs workbench commands against one scenario.

Each command has one check method that returns a SectionReport; run()
dispatches through a method map and assembles the Report. Expensive
intermediate objects (the deductive family of Ω, τ, the topology) are
built once per auditor.
"""

import logging
import time
from typing import Callable, Dict, List, Optional

from src import __version__
from src.cognition import (
    LimitReport,
    check_compactness,
    check_limit_theorems,
    coincidence_classes,
    detect_limits,
    validate_pseudometric,
)
from src.consequence import RuleSystem, validate_operator
from src.environment import (
    base_closure,
    build_practical_topology,
    check_cognitive_continuity,
    check_topology,
    weak_topology_clopen,
)
from src.errors import CapExceededError, PreconditionError
from src.families import (
    CLASSIC_FILTER,
    CLASSIC_IDEAL,
    CONSEQUENCE_FILTER,
    CONSEQUENCE_IDEAL,
    UNDERIVABLE,
    build_connection_ideal,
    build_fd_filter,
    build_fhat_filter,
    build_truth_ideal,
    check_family_axioms,
    claim_rows,
    make_family,
    theorem_verdict,
)
from src.lattice import (
    CctFamily,
    MooreFamily,
    build_cct,
    check_structure_theorems,
    cognitive_closure,
    enumerate_deductive,
)
from src.scenario import ScenarioContext

from .checklist import CheckStatus
from .results import Report, SectionReport, make_result

logger = logging.getLogger(__name__)

COMMANDS = ("validate", "closures", "cct", "theorems", "limits", "blackhole", "families", "environment")
ALL = "all"


class ScenarioAuditor:
    """
    Runs the workbench commands for one scenario.

    Usage:
        auditor = ScenarioAuditor(context, digest)
        report = auditor.run("theorems")
    """

    def __init__(self, context: ScenarioContext, digest: str = ""):
        self.context = context
        self.settings = context.settings
        self.universe = context.universe
        self.op = context.operator
        self.digest = digest
        self._omega_family: Optional[MooreFamily] = None
        self._tau: Optional[CctFamily] = None

    # =========================================================================
    # SHARED STRUCTURES
    # =========================================================================

    def omega_family(self) -> MooreFamily:
        if self._omega_family is None:
            self._omega_family = enumerate_deductive(self.op, self.universe.omega, self.settings)
        return self._omega_family

    def tau(self) -> CctFamily:
        if self._tau is None:
            self._tau = build_cct(self.op, self.settings)
        return self._tau

    def _labels(self, mask: int) -> List[str]:
        return self.universe.labels(mask)

    # =========================================================================
    # COMMANDS
    # =========================================================================

    def check_validate(self) -> SectionReport:
        """Tarski axioms, the union bound and the cognitive conditions."""
        section = SectionReport("validate")
        implications = self.context.implication_map or None
        report = validate_operator(self.op, implications, settings=self.settings)
        section.extend(report.results)
        section.data = {
            "operator": report.operator_kind,
            "mode": report.mode,
            "subsets_checked": report.subsets_checked,
        }
        for message in self.universe.diagnostics:
            section.note(message)
        return section

    def check_closures(self) -> SectionReport:
        """Deductive sets of Ω and closures of the scenario's query sets."""
        section = SectionReport("closures")
        family = None
        try:
            family = self.omega_family()
            section.data["deductive"] = family.labels()
            section.data["deductive_count"] = len(family)
        except CapExceededError as e:
            section.note(f"deductive sets not enumerated: {e}")

        queries = []
        for labels in self.context.scenario.queries:
            a = self.universe.subset(labels)
            closed = self.op.close_mask(a.mask)
            entry = {
                "set": a.labels(),
                "closure": self._labels(closed),
                "deductive": closed == a.mask,
            }
            if family is not None:
                entry["cognitive_closure"] = cognitive_closure(self.op, a, family).labels()
            if isinstance(self.op, RuleSystem):
                trace = self.op.derivation_trace(a.mask)
                entry["derivations"] = {
                    self.universe.symbols[s]: self._rule_text(r) for s, r in sorted(trace.items())
                }
            queries.append(entry)
        section.data["queries"] = queries
        return section

    def _rule_text(self, index: int) -> str:
        rule = self.op.rules[index]
        return f"{{{', '.join(rule.premises.labels())}}} -> {rule.conclusion}"

    def check_cct(self) -> SectionReport:
        """The CWO family τ and the deductive subsets of C it comes from."""
        section = SectionReport("cct")
        tau = self.tau()
        section.data = {
            "tau": tau.labels(),
            "tau_size": len(tau),
            "deductive_in_c": tau.deductive.labels(),
            "union": self._labels(tau.union),
        }
        for message in tau.diagnostics:
            section.note(message)
        return section

    def check_theorems(self) -> SectionReport:
        """t1-t5, their corollaries and the closure properties."""
        section = SectionReport("theorems")
        omega = None
        try:
            omega = self.omega_family()
        except CapExceededError as e:
            section.note(f"Ω-level checks not evaluated: {e}")
        report = check_structure_theorems(self.op, self.universe, self.tau(), self.settings, omega)
        section.extend(report.results)
        section.data["verdicts"] = {r.check_id: r.status for r in report.results}
        for note in report.notes:
            section.note(note)
        return section

    def check_limits(self) -> SectionReport:
        """Pseudometric axioms, ε-limits of every sequence and the limit theorems."""
        section = SectionReport("limits")
        metric = self.context.metric
        if metric is None:
            section.note("no pseudometric declared")
            return section
        for message in metric.diagnostics:
            section.note(message)

        metric_report = validate_pseudometric(metric, settings=self.settings)
        section.extend(metric_report.results)
        section.data["metric"] = {"variant": metric.variant, "mode": metric_report.mode}
        if not metric.validated:
            section.note("limit detection skipped: pseudometric axioms fail")
            return section

        classes = [c for c in coincidence_classes(metric) if len(c) > 1]
        section.add(make_result("coincidence", CheckStatus.INFO,
                                f"{len(classes)} class(es) of cognitively coinciding sentences", classes))

        epsilon = self.settings.epsilon
        sequences = self.context.sequences
        reports: Dict[str, LimitReport] = {}
        for name, seq in sequences.items():
            reports[name] = detect_limits(metric, seq, epsilon, self.settings.limit_point_min)
        for name, seq in sequences.items():
            partner = sequences.get(seq.partner) if seq.partner else None
            theorems = check_limit_theorems(self.op, metric, seq, reports[name], epsilon, partner)
            section.extend(theorems.results)
        section.data["epsilon"] = float(epsilon)
        section.data["sequences"] = {name: r.to_dict() for name, r in reports.items()}
        return section

    def check_blackhole(self) -> SectionReport:
        """Black holes of the registered sequences in the solution space."""
        section = SectionReport("blackhole")
        metric = self.context.metric
        if metric is None:
            section.note("no pseudometric declared")
            return section
        if not metric.validated:
            validate_pseudometric(metric, settings=self.settings)
        if not metric.validated:
            section.note("black-hole search skipped: pseudometric axioms fail")
            return section

        space = self.universe.subset(self.context.scenario.solution_space)
        report = check_compactness(metric, space, list(self.context.sequences.values()),
                                   self.settings.epsilon_grid)
        section.extend(report.results)
        section.data = {
            "compact": report.compact,
            "black_holes": [hole.to_dict() for hole in report.black_holes],
            "epsilon_grid": [float(e) for e in self.settings.epsilon_grid],
            "solution_space": space.labels(),
        }
        for message in report.diagnostics:
            section.note(message)
        return section

    def check_families(self) -> SectionReport:
        """Connection and truth ideals, f_d and f̂ filters, and explicit families."""
        section = SectionReport("families")
        block = self.context.scenario.families
        if block is None:
            section.note("no families declared")
            return section
        u = self.universe
        op = self.op
        within = u.subset(block.connection_within) if block.connection_within is not None else u.cognitive
        data: Dict[str, Dict[str, list]] = {}

        graph = self.context.graph
        for target in block.connection_targets:
            family = build_connection_ideal(graph, target, within, self.settings)
            report = check_family_axioms(family, CLASSIC_IDEAL)
            section.extend(report.results)
            section.add(theorem_verdict("connection_ideal", report, family.name))
            data.setdefault("connection_ideals", {})[target] = family.labels()

        if block.truth_target is not None:
            truths = u.subset(block.truth_labels)
            family = build_truth_ideal(graph, block.truth_target, within, truths, self.settings)
            report = check_family_axioms(family, CONSEQUENCE_IDEAL, op, self.settings)
            section.extend(claim_rows(report, "truth_consequence_ideal"))
            section.add(theorem_verdict("truth_consequence_ideal", report, family.name))
            data.setdefault("truth_ideals", {})[block.truth_target] = family.labels()

        for fd in block.fd_filters:
            family = build_fd_filter(op, u.subset(fd.domain), fd.required, self.settings)
            classic = check_family_axioms(family, CLASSIC_FILTER)
            section.extend(classic.results)
            section.add(theorem_verdict("fd_filter", classic, family.name))
            consequence = check_family_axioms(family, CONSEQUENCE_FILTER, op, self.settings)
            section.extend(claim_rows(consequence, "fd_consequence_filter"))
            section.add(theorem_verdict("fd_consequence_filter", consequence, family.name))
            data.setdefault("fd_filters", {})[family.name] = family.labels()

        for f in block.fhat_targets:
            family = build_fhat_filter(op, u, f, self.settings)
            data.setdefault("fhat_filters", {})[f] = family.labels()
            if not family.members:
                section.add(make_result("fhat_filter", CheckStatus.NOT_APPLICABLE, UNDERIVABLE, [f], family.name))
                section.note(f"{UNDERIVABLE}: {f}")
                continue
            report = check_family_axioms(family, CLASSIC_FILTER)
            section.extend(claim_rows(report, "fhat_filter"))
            section.add(theorem_verdict("fhat_filter", report, family.name))

        for explicit in block.explicit:
            family = make_family(u, u.mask(explicit.domain), [u.mask(m) for m in explicit.members],
                                 name=explicit.name)
            report = check_family_axioms(family, explicit.kind, op, self.settings)
            section.extend(report.results)
            data.setdefault("explicit", {})[explicit.name] = family.labels()

        section.data = data
        return section

    def check_environment(self) -> SectionReport:
        """Practical-whole topology, base closures and continuity of the cognitive map."""
        section = SectionReport("environment")
        env = self.context.environment
        if env is None:
            section.note("no environment declared")
            return section
        topology = build_practical_topology(env, self.settings)
        section.extend(check_topology(topology))

        closures = {}
        for obj in env.base:
            try:
                closure = base_closure(env, obj.name)
            except PreconditionError as e:
                section.note(str(e))
                continue
            closures[obj.name] = {
                "whole": env.labels(closure.whole),
                "ambiguous": closure.ambiguous,
                "multiplicity": closure.multiplicity,
            }
        section.data = {"opens": topology.labels(), "base_closures": closures}

        cmap = self.context.cognitive_map
        if cmap is None:
            section.note("no cognitive map declared")
            return section
        continuity = check_cognitive_continuity(cmap, topology, self.tau())
        section.extend(continuity.results)
        for note in continuity.notes:
            section.note(note)
        clopen = weak_topology_clopen(cmap, topology)
        section.extend(clopen.results)
        section.data["preimages"] = [self._labels(m) for m in clopen.family]
        section.data["complemented"] = clopen.complemented
        return section

    # =========================================================================
    # DISPATCH
    # =========================================================================

    def _methods(self) -> Dict[str, Callable[[], SectionReport]]:
        return {
            "validate": self.check_validate,
            "closures": self.check_closures,
            "cct": self.check_cct,
            "theorems": self.check_theorems,
            "limits": self.check_limits,
            "blackhole": self.check_blackhole,
            "families": self.check_families,
            "environment": self.check_environment,
        }

    def run(self, command: str) -> Report:
        """
        Run one command (or all of them, in COMMANDS order).

        Raises:
            PreconditionError: unknown command
        """
        methods = self._methods()
        if command == ALL:
            selected = list(COMMANDS)
        elif command in methods:
            selected = [command]
        else:
            raise PreconditionError(f"unknown command: {command}")

        scenario = self.context.scenario
        report = Report(
            command=command,
            scenario_name=scenario.name,
            scenario_digest=self.digest,
            tool_version=__version__,
            seed=self.settings.seed,
        )
        for name in selected:
            started = time.perf_counter()
            report.add_section(methods[name]())
            logger.info("%s finished in %.3f s", name, time.perf_counter() - started)
        logger.info("%s: %d passed, %d failed, %d discrepancies",
                    command, report.passed, report.failed, report.discrepancies)
        return report
