"""
Scenario documents.

A scenario is one JSON document (``"version": 1``) describing a universe,
its consequence operator and everything the workbench commands consume.
The pydantic models validate shape and referential integrity;
build_context() turns a validated Scenario into domain objects.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.cognition import PseudoMetric, make_matrix_metric, make_weight_metric
from src.config import DEFAULT_SETTINGS, Settings
from src.consequence import Operator, RuleSystem, make_rule, make_table_operator
from src.environment import CognitiveMap, Environment, make_environment
from src.families import FAMILY_KINDS, ConnectionGraph
from src.models.sequence import ThoughtSequence, make_sequence
from src.models.universe import Universe, make_universe

logger = logging.getLogger(__name__)

SCENARIO_VERSION = 1


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid")


class UniverseBlock(_Block):
    symbols: List[str]
    cognitive: List[str] = Field(default_factory=list)
    logic_base: List[str] = Field(default_factory=list)


class RuleModel(_Block):
    premises: List[str] = Field(default_factory=list)
    conclusion: str


class TableEntry(_Block):
    input: List[str]
    output: List[str]


class ImplicationModel(_Block):
    antecedent: str
    consequent: str
    sentence: str


class SimilarityEntry(_Block):
    x: str
    y: str
    distance: float


class SequenceModel(_Block):
    name: str
    thoughts: List[str]
    virtual_limit: Optional[str] = None
    constant_tail: bool = False
    partner: Optional[str] = None


class FdFilterModel(_Block):
    domain: List[str]
    required: List[str]


class ExplicitFamilyModel(_Block):
    name: str
    kind: str
    domain: List[str]
    members: List[List[str]] = Field(default_factory=list)


class FamiliesBlock(_Block):
    edges: List[Tuple[str, str]] = Field(default_factory=list)
    connection_within: Optional[List[str]] = None  # defaults to C
    connection_targets: List[str] = Field(default_factory=list)
    truth_labels: List[str] = Field(default_factory=list)
    truth_target: Optional[str] = None
    fhat_targets: List[str] = Field(default_factory=list)
    fd_filters: List[FdFilterModel] = Field(default_factory=list)
    explicit: List[ExplicitFamilyModel] = Field(default_factory=list)


class BaseObjectModel(_Block):
    name: str
    members: List[str]
    tag: Literal["complete", "irreducible"] = "complete"


class EnvironmentBlock(_Block):
    points: List[str]
    base: List[BaseObjectModel] = Field(default_factory=list)
    practical_wholes: List[List[str]] = Field(default_factory=list)
    map: Dict[str, str] = Field(default_factory=dict)


class ParametersBlock(_Block):
    epsilon: Optional[float] = None
    epsilon_grid: Optional[List[float]] = None
    enumeration_cap: Optional[int] = None
    family_cap: Optional[int] = None
    sample_count: Optional[int] = None
    tol_eq: Optional[float] = None
    seed: Optional[int] = None
    limit_point_min: Optional[int] = None


class Scenario(_Block):
    version: Literal[1]
    name: str
    universe: UniverseBlock
    rules: List[RuleModel] = Field(default_factory=list)
    table: Optional[List[TableEntry]] = None
    implications: List[ImplicationModel] = Field(default_factory=list)
    queries: List[List[str]] = Field(default_factory=list)
    weights: Dict[str, float] = Field(default_factory=dict)
    similarity: List[SimilarityEntry] = Field(default_factory=list)
    sequences: List[SequenceModel] = Field(default_factory=list)
    solution_space: List[str] = Field(default_factory=list)
    families: Optional[FamiliesBlock] = None
    environment: Optional[EnvironmentBlock] = None
    parameters: ParametersBlock = Field(default_factory=ParametersBlock)

    @model_validator(mode="after")
    def check_references(self) -> "Scenario":
        """Every label used anywhere must be declared; all problems are listed at once."""
        symbols = set(self.universe.symbols)
        problems: List[str] = []

        def need(labels, where: str):
            for label in labels:
                if label not in symbols:
                    problems.append(f"{where}: unknown sentence {label!r}")

        need(self.universe.cognitive, "universe.cognitive")
        need(self.universe.logic_base, "universe.logic_base")
        if self.table is not None and self.rules:
            problems.append("rules and table are mutually exclusive")
        for i, rule in enumerate(self.rules):
            need(rule.premises + [rule.conclusion], f"rules[{i}]")
        for i, entry in enumerate(self.table or []):
            need(entry.input + entry.output, f"table[{i}]")
        for i, imp in enumerate(self.implications):
            need([imp.antecedent, imp.consequent, imp.sentence], f"implications[{i}]")
        for i, query in enumerate(self.queries):
            need(query, f"queries[{i}]")
        need(self.weights, "weights")
        if self.weights:
            problems.extend(f"weights: missing weight for {label!r}"
                            for label in self.universe.symbols if label not in self.weights)
        if self.weights and self.similarity:
            problems.append("weights and similarity are mutually exclusive")
        for i, entry in enumerate(self.similarity):
            need([entry.x, entry.y], f"similarity[{i}]")

        names = [s.name for s in self.sequences]
        if len(set(names)) != len(names):
            problems.append("sequence names must be distinct")
        for seq in self.sequences:
            need(seq.thoughts, f"sequences[{seq.name}]")
            if seq.virtual_limit is not None:
                need([seq.virtual_limit], f"sequences[{seq.name}].virtual_limit")
            if seq.partner is not None and seq.partner not in names:
                problems.append(f"sequences[{seq.name}].partner: unknown sequence {seq.partner!r}")
        need(self.solution_space, "solution_space")

        if self.families is not None:
            fam = self.families
            for i, (x, y) in enumerate(fam.edges):
                need([x, y], f"families.edges[{i}]")
            need(fam.connection_within or [], "families.connection_within")
            need(fam.connection_targets, "families.connection_targets")
            need(fam.truth_labels, "families.truth_labels")
            if fam.truth_target is not None:
                need([fam.truth_target], "families.truth_target")
            need(fam.fhat_targets, "families.fhat_targets")
            for i, fd in enumerate(fam.fd_filters):
                need(fd.domain + fd.required, f"families.fd_filters[{i}]")
            for explicit in fam.explicit:
                if explicit.kind not in FAMILY_KINDS:
                    problems.append(f"families.explicit[{explicit.name}]: unknown kind {explicit.kind!r}")
                need(explicit.domain, f"families.explicit[{explicit.name}].domain")
                for member in explicit.members:
                    need(member, f"families.explicit[{explicit.name}].members")

        if self.environment is not None:
            env = self.environment
            points = set(env.points)
            for obj in env.base:
                problems.extend(f"environment.base[{obj.name}]: unknown point {p!r}"
                                for p in obj.members if p not in points)
            for i, pw in enumerate(env.practical_wholes):
                problems.extend(f"environment.practical_wholes[{i}]: unknown point {p!r}"
                                for p in pw if p not in points)
            need(env.map, "environment.map")
            problems.extend(f"environment.map[{s}]: unknown point {p!r}"
                            for s, p in env.map.items() if p not in points)

        if problems:
            raise ValueError("; ".join(problems))
        return self


@dataclass
class ScenarioContext:
    """Domain objects built from one scenario."""
    scenario: Scenario
    settings: Settings
    universe: Universe
    operator: Operator
    metric: Optional[PseudoMetric] = None
    sequences: Dict[str, ThoughtSequence] = field(default_factory=dict)
    graph: Optional[ConnectionGraph] = None
    environment: Optional[Environment] = None
    cognitive_map: Optional[CognitiveMap] = None

    @property
    def implication_map(self) -> Dict[Tuple[str, str], str]:
        return {(i.antecedent, i.consequent): i.sentence for i in self.scenario.implications}


def scenario_settings(scenario: Scenario, base: Settings = DEFAULT_SETTINGS, **overrides) -> Settings:
    """Defaults < scenario parameters < explicit overrides (CLI flags)."""
    params = scenario.parameters.model_dump(exclude_none=True)
    return base.merged(**params).merged(**overrides)


def build_context(scenario: Scenario, settings: Settings) -> ScenarioContext:
    """
    Build every domain object the scenario describes.

    Raises the library's own errors (UniverseError, MetricError,
    PreconditionError, ...) for content the schema cannot rule out.
    """
    block = scenario.universe
    universe = make_universe(
        block.symbols, block.cognitive, block.logic_base,
        max_symbols=settings.max_symbols, allow_dynamic=settings.allow_dynamic,
    )
    if scenario.table is not None:
        operator = make_table_operator(
            universe, [(e.input, e.output) for e in scenario.table], settings.table_cap)
    else:
        operator = RuleSystem(universe, tuple(make_rule(universe, r.premises, r.conclusion)
                                              for r in scenario.rules))

    metric = None
    if scenario.similarity:
        metric = make_matrix_metric(universe, [(e.x, e.y, e.distance) for e in scenario.similarity],
                                    tol_eq=settings.tol_eq)
    elif scenario.weights:
        metric = make_weight_metric(universe, scenario.weights, tol_eq=settings.tol_eq)

    sequences = {
        s.name: make_sequence(universe, s.name, s.thoughts, s.virtual_limit, s.constant_tail, s.partner)
        for s in scenario.sequences
    }

    graph = None
    if scenario.families is not None:
        graph = ConnectionGraph(universe, scenario.families.edges)

    environment = cognitive_map = None
    if scenario.environment is not None:
        env = scenario.environment
        environment = make_environment(
            env.points, [(b.name, b.members, b.tag) for b in env.base], env.practical_wholes)
        if env.map:
            cognitive_map = CognitiveMap(universe, environment, env.map)

    logger.info("scenario %s: %d symbols, %s operator", scenario.name, len(universe), operator.kind)
    return ScenarioContext(scenario, settings, universe, operator, metric, sequences,
                           graph, environment, cognitive_map)
