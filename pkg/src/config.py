"""
Workbench settings.

Every tunable lives in one frozen dataclass. Scenario ``parameters`` and
command-line flags are layered over the defaults with ``Settings.merged``.
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Optional, Tuple


LOG_LEVEL_ENV = "CCSPACE_LOG_LEVEL"


@dataclass(frozen=True)
class Settings:
    """Caps, tolerances and sampling parameters for all checks."""
    # core-universe
    max_symbols: int = 64
    allow_dynamic: bool = True
    # consequence
    table_cap: int = 16
    exhaustive_axiom_cap: int = 14
    # closure-lattice
    enumeration_cap: int = 24
    union_exhaustive_limit: int = 20
    closure_property_cap: int = 12
    # families
    family_cap: int = 14
    # cognition-metric
    exhaustive_metric_cap: int = 4096
    tol_eq: float = 1e-9
    epsilon: float = 0.2
    epsilon_grid: Tuple[float, ...] = (0.1, 0.2)
    limit_point_min: Optional[int] = None
    # environment
    max_base_objects: int = 20
    # randomized checks
    sample_count: int = 1000
    seed: int = 0

    def merged(self, **overrides) -> "Settings":
        """Return a copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        changes = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise KeyError(f"unknown setting: {key}")
            if key == "epsilon_grid":
                value = tuple(value)
            changes[key] = value
        return replace(self, **changes)


DEFAULT_SETTINGS = Settings()


def log_level_from_env(default: str = "WARNING") -> str:
    """Logging level name taken from CCSPACE_LOG_LEVEL."""
    return os.getenv(LOG_LEVEL_ENV, default).upper()
