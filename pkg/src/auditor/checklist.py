"""
Catalog of machine-checked statements.

Every axiom, theorem, corollary and construction property that the
workbench verifies has one CheckItem here. Check functions across the
package report against these ids, so a report can always be traced back to
the statement it tests.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional


class CheckCategory(Enum):
    """Categories for catalog items."""
    CONSEQUENCE_AXIOMS = "Consequence Axioms"
    COGNITIVE_CONDITIONS = "Cognitive Conditions"
    STRUCTURE = "Structure Theorems"
    CLOSURE_PROPERTIES = "Closure Properties"
    METRIC = "Pseudometric Axioms"
    LIMITS = "Limit Theorems"
    BLACK_HOLE = "Black Holes and Compactness"
    FAMILIES = "Filters and Ideals"
    ENVIRONMENT = "Environment Topology"


class CheckStatus(Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "discrepancy"  # the finite instance contradicts a stated claim
    NOT_APPLICABLE = "not_applicable"
    NOT_EVALUATED = "not_evaluated"
    INFO = "info"


FAILING_STATUSES = (CheckStatus.FAIL, CheckStatus.DISCREPANCY)


@dataclass(frozen=True)
class CheckItem:
    """A single statement in the catalog."""
    id: str
    category: CheckCategory
    description: str
    statement: str
    # Failures of report-only claims are discrepancies, not defects
    report_only: bool = False


CHECK_CATALOG: List[CheckItem] = [
    # =========================================================================
    # CONSEQUENCE OPERATOR AXIOMS
    # =========================================================================
    CheckItem("axiom_i", CheckCategory.CONSEQUENCE_AXIOMS,
              "Denumerability of the language",
              "the sentences form a countable set"),
    CheckItem("axiom_ii", CheckCategory.CONSEQUENCE_AXIOMS,
              "Inclusion: A ⊆ Cn(A)", "A ⊆ Cn(A)"),
    CheckItem("axiom_iii", CheckCategory.CONSEQUENCE_AXIOMS,
              "Monotonicity: A ⊆ B ⇒ Cn(A) ⊆ Cn(B)",
              "A ⊆ B ⇒ Cn(A) ⊆ Cn(B)"),
    CheckItem("axiom_iv", CheckCategory.CONSEQUENCE_AXIOMS,
              "Idempotence: Cn(Cn(A)) = Cn(A)", "Cn(Cn(A)) = Cn(A)"),
    CheckItem("axiom_v", CheckCategory.CONSEQUENCE_AXIOMS,
              "Finitariness: every consequence has a finite premise set",
              "X ∈ Cn(A) ⇒ X ∈ Cn(B) for some finite B ⊆ A"),
    CheckItem("axiom_vi", CheckCategory.CONSEQUENCE_AXIOMS,
              "Deduction theorem over the supplied implication encoding",
              "Y ∈ Cn(A ∪ {X}) ⇒ (X → Y) ∈ Cn(A)"),
    CheckItem("union_bound", CheckCategory.CONSEQUENCE_AXIOMS,
              "Cn(A) ∪ Cn(B) ⊆ Cn(A ∪ B), equality for deductive A, B, A ∪ B",
              "Cn(A) ∪ Cn(B) ⊆ Cn(A ∪ B); equal when A, B, A ∪ B are deductive"),
    CheckItem("cond_empty", CheckCategory.COGNITIVE_CONDITIONS,
              "Cn(∅) ≠ ∅", "Cn(∅) ≠ ∅"),
    CheckItem("cond_whole", CheckCategory.COGNITIVE_CONDITIONS,
              "Cn(C) ≠ C", "Cn(C) ≠ C"),

    # =========================================================================
    # CLOSURE LATTICE AND STRUCTURE THEOREMS
    # =========================================================================
    CheckItem("moore_intersection", CheckCategory.STRUCTURE,
              "Deductive sets are closed under pairwise intersection",
              "Cn(A) = A, Cn(B) = B ⇒ Cn(A ∩ B) = A ∩ B"),
    CheckItem("closure_least_deductive", CheckCategory.STRUCTURE,
              "Cl□(A) equals Cn(A) for every A",
              "∩{D ⊇ A : Cn(D) = D} = Cn(A)"),
    CheckItem("t1", CheckCategory.STRUCTURE,
              "Unions of CWO sets are CWO", "∪F ∈ τ for every F ⊆ τ"),
    CheckItem("t2", CheckCategory.STRUCTURE,
              "Intersections of CWO sets are CWO when the union of complements is deductive",
              "∩F ∈ τ for F ⊆ τ when ∪{C ∖ A : A ∈ F} is deductive"),
    CheckItem("t3", CheckCategory.STRUCTURE,
              "Some sentence of C belongs to no CWO set",
              "C ∖ ∪τ ≠ ∅"),
    CheckItem("t4", CheckCategory.STRUCTURE,
              "Some sentence of C belongs to a CWO set",
              "∪τ ≠ ∅",
              report_only=True),
    CheckItem("t4_intersection", CheckCategory.STRUCTURE,
              "The intersection of all deductive complements of CWO sets is non-empty",
              "∩{C ∖ A : A ∈ τ} ≠ ∅"),
    CheckItem("t5", CheckCategory.STRUCTURE,
              "No A ⊆ C with both A and C ∖ A deductive",
              "no A ⊆ C with Cn(A) = A and Cn(C ∖ A) = C ∖ A"),
    CheckItem("closure_empty_whole", CheckCategory.STRUCTURE,
              "Cl□(∅) ≠ ∅ and Cl□(C) ≠ C", "Cl□(∅) ≠ ∅ and Cl□(C) ≠ C"),
    CheckItem("tau_member_closure", CheckCategory.STRUCTURE,
              "For A ∈ τ: Cl□(A) ≠ A and Cl□(C ∖ A) = C ∖ A",
              "A ∈ τ ⇒ Cl□(A) ≠ A and Cl□(C ∖ A) = C ∖ A"),
    CheckItem("cl_i", CheckCategory.CLOSURE_PROPERTIES,
              "A ⊆ B ⇒ Cl□(A) ⊆ Cl□(B)", "if A ⊆ B then Cl□(A) ⊆ Cl□(B)"),
    CheckItem("cl_ii", CheckCategory.CLOSURE_PROPERTIES,
              "Cl□(A) ∪ Cl□(B) ⊆ Cl□(A ∪ B)", "Cl□(A) ∪ Cl□(B) ⊆ Cl□(A ∪ B)"),
    CheckItem("cl_iii", CheckCategory.CLOSURE_PROPERTIES,
              "Cl□(A ∪ B) = Cl□(A) ∪ Cl□(B) for deductive A, B, A ∪ B",
              "A, B, A ∪ B deductive ⇒ Cl□(A ∪ B) = Cl□(A) ∪ Cl□(B)"),
    CheckItem("cl_iv", CheckCategory.CLOSURE_PROPERTIES,
              "Cl□(A ∩ B) ⊆ Cl□(A) ∩ Cl□(B)", "Cl□(A ∩ B) ⊆ Cl□(A) ∩ Cl□(B)"),
    CheckItem("cl_v", CheckCategory.CLOSURE_PROPERTIES,
              "Cl□(A ∩ B) = Cl□(A) ∩ Cl□(B) for deductive A, B, A ∩ B",
              "A, B, A ∩ B deductive ⇒ Cl□(A ∩ B) = Cl□(A) ∩ Cl□(B)"),

    # =========================================================================
    # PSEUDOMETRIC
    # =========================================================================
    CheckItem("metric_range", CheckCategory.METRIC,
              "Distances lie in [0, 1]", "Cog: C × C → [0,1]"),
    CheckItem("metric_identity", CheckCategory.METRIC,
              "Cog(x, x) = 0", "Cog(x,y) = 0 ⇔ x ≈ y"),
    CheckItem("metric_symmetry", CheckCategory.METRIC,
              "Cog(x, y) = Cog(y, x)", "Cog(x,y) = Cog(y,x)"),
    CheckItem("metric_triangle", CheckCategory.METRIC,
              "Triangle inequality", "Cog(x,z) ≤ Cog(x,y) + Cog(y,z)"),
    CheckItem("metric_congruence", CheckCategory.METRIC,
              "x ≈ y ⇒ Cog(x, z) = Cog(y, z)", "x ≈ z ⇒ Cog(x,y) = Cog(z,y)"),

    # =========================================================================
    # LIMITS OF THOUGHTS
    # =========================================================================
    CheckItem("limits_within_2eps", CheckCategory.LIMITS,
              "Detected limits of one prefix lie within 2ε of each other",
              "x′, x″ ε-limits ⇒ Cog(x′, x″) < 2ε"),
    CheckItem("constant_tail_coincide", CheckCategory.LIMITS,
              "Limits of a declared constant tail cognitively coincide",
              "constant tail ⇒ its ε-limits are at distance 0"),
    CheckItem("limit_in_support", CheckCategory.LIMITS,
              "A deductive support contains every detected limit",
              "Cn(S) = S ⇒ D ⊆ S",
              report_only=True),
    CheckItem("closure_adds_limits", CheckCategory.LIMITS,
              "Cl□(support) = support ∪ D",
              "Cl□(S) = S ∪ D",
              report_only=True),
    CheckItem("deductive_contains_limits", CheckCategory.LIMITS,
              "Every deductive superset of the support contains D",
              "S ⊆ A, Cn(A) = A ⇒ D ⊆ A"),
    CheckItem("tail_coincidence", CheckCategory.LIMITS,
              "Sequences with coinciding tails have limits within 2ε",
              "x_n ≈ y_n for n ≥ m ⇒ limits within 2ε"),
    CheckItem("prefix_tail_coincidence", CheckCategory.LIMITS,
              "Sequences sharing a prefix and a tail have limits within 2ε",
              "common prefix and common tail ⇒ limits within 2ε"),
    CheckItem("coincidence", CheckCategory.LIMITS,
              "Cognitive coincidence classes", "x ≈ y when Cog(x,y) = 0"),

    # =========================================================================
    # BLACK HOLES
    # =========================================================================
    CheckItem("black_hole", CheckCategory.BLACK_HOLE,
              "A black hole around the virtual limit",
              "x_n ∉ B(x, ε) ⊆ A for all n ≥ k"),
    CheckItem("compactness", CheckCategory.BLACK_HOLE,
              "Solution space admits no black hole (registered sequences, ε grid)",
              "no black hole in A for any registered sequence and grid ε"),
    CheckItem("black_hole_divergence", CheckCategory.BLACK_HOLE,
              "A black-hole sequence does not converge to its virtual limit",
              "black hole at x ⇒ x is not an ε-limit"),
    CheckItem("alternate_route", CheckCategory.BLACK_HOLE,
              "Another registered sequence reaches the virtual limit",
              "x is an ε-limit of another registered sequence"),

    # =========================================================================
    # FILTERS AND IDEALS
    # =========================================================================
    CheckItem("ideal_nonempty", CheckCategory.FAMILIES, "∅ belongs to the ideal", "∅ ∈ I"),
    CheckItem("ideal_downward", CheckCategory.FAMILIES, "Ideal is downward closed", "B ⊂ A ∈ I ⇒ B ∈ I"),
    CheckItem("ideal_union", CheckCategory.FAMILIES, "Ideal is closed under union", "A, B ∈ I ⇒ A ∪ B ∈ I"),
    CheckItem("filter_top", CheckCategory.FAMILIES, "The domain belongs to the filter", "domain ∈ F"),
    CheckItem("filter_upward", CheckCategory.FAMILIES, "Filter is upward closed", "A ∈ F, A ⊂ B ⇒ B ∈ F"),
    CheckItem("filter_intersection", CheckCategory.FAMILIES,
              "Filter is closed under intersection", "A, B ∈ F ⇒ A ∩ B ∈ F"),
    CheckItem("cideal_i", CheckCategory.FAMILIES, "Cn(∅) belongs to the consequence-ideal", "Cn(φ) ∈ I"),
    CheckItem("cideal_ii", CheckCategory.FAMILIES,
              "Consequence-ideal is closed under smaller consequences",
              "if Cn(B) ⊂ Cn(A) then Cn(B) ∈ I"),
    CheckItem("cideal_iii", CheckCategory.FAMILIES,
              "Consequence-ideal is closed under union of consequences",
              "Cn(A) ∪ Cn(B) ∈ I"),
    CheckItem("cfilter_i", CheckCategory.FAMILIES, "Cn(domain) belongs to the consequence filter", "Cn(C) ∈ F"),
    CheckItem("cfilter_ii", CheckCategory.FAMILIES,
              "Consequence filter is closed under larger consequences",
              "if Cn(A) ⊂ Cn(B) then Cn(B) ∈ F"),
    CheckItem("cfilter_iii", CheckCategory.FAMILIES,
              "Consequence filter is closed under intersection of consequences",
              "Cn(A) ∩ Cn(B) ∈ F"),
    CheckItem("connection_ideal", CheckCategory.FAMILIES,
              "The connection family of f* is an ideal", "P(reach(f*)) is an ideal"),
    CheckItem("truth_consequence_ideal", CheckCategory.FAMILIES,
              "The truth-restricted connection family is a consequence-ideal",
              "P(reach(f*) ∩ M) is a consequence-ideal",
              report_only=True),
    CheckItem("fd_filter", CheckCategory.FAMILIES,
              "f_d is a filter on C_d", "f_d satisfies the filter axioms on C_d"),
    CheckItem("fd_consequence_filter", CheckCategory.FAMILIES,
              "f_d is a consequence filter on C_d", "f_d satisfies the consequence-filter axioms on C_d",
              report_only=True),
    CheckItem("fhat_filter", CheckCategory.FAMILIES,
              "f̂ is a filter in C", "{A ⊆ C : f ∈ Cn(A)} satisfies the filter axioms", report_only=True),

    # =========================================================================
    # ENVIRONMENT
    # =========================================================================
    CheckItem("pw_union", CheckCategory.ENVIRONMENT,
              "Every proper open is a listed practical whole and a union of base objects",
              "K open, K ∉ {∅, E} ⇒ K is a listed union of base objects"),
    CheckItem("base_condition", CheckCategory.ENVIRONMENT,
              "Every practical whole contains a base object",
              "every practical whole K contains some b ∈ B"),
    CheckItem("clopen_by_designation", CheckCategory.ENVIRONMENT,
              "Proper opens are clopen by designation", "proper opens are open and closed"),
    CheckItem("continuity", CheckCategory.ENVIRONMENT,
              "Preimages of proper opens are CWO sets", "U proper open ⇒ f⁻¹(U) ∈ τ"),
    CheckItem("preimage_clopen", CheckCategory.ENVIRONMENT,
              "Preimage family is closed under complement in C",
              "{f⁻¹(U) : U open} is closed under complement in C", report_only=True),
]

_BY_ID: Dict[str, CheckItem] = {item.id: item for item in CHECK_CATALOG}


# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def get_checks_by_category(category: CheckCategory) -> List[CheckItem]:
    """Get all catalog items for a specific category."""
    return [item for item in CHECK_CATALOG if item.category == category]


def get_check(check_id: str) -> Optional[CheckItem]:
    """Get a specific catalog item by id."""
    return _BY_ID.get(check_id)


def get_report_only_checks() -> List[CheckItem]:
    """Items whose failures are reported as discrepancies."""
    return [item for item in CHECK_CATALOG if item.report_only]
