"""
Finite sentence universes and sentence sets.

Structure:
- Universe holds the ordered symbol list (the ambient set), the cognitive
  subspace C and the logic base L
- SentenceSet is an immutable membership mask over one Universe
- Bit i of a mask is the i-th symbol of the universe, so ascending mask
  value is the lectic order used everywhere in the workbench

Closures are always taken in the ambient set, never inside C, so that
Cn(C) can be strictly larger than C.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from src.config import DEFAULT_SETTINGS
from src.errors import (
    DuplicateLabelError,
    NotASubsetError,
    UniverseError,
    UniverseTooLargeError,
    UnknownSentenceError,
)

logger = logging.getLogger(__name__)

LOGIC_OUTSIDE_COGNITIVE = "logic base outside cognitive space; τ will be empty"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks(domain: int) -> Iterator[int]:
    """Yield every submask of domain in ascending (lectic) order, starting at 0."""
    s = 0
    while True:
        yield s
        if s == domain:
            return
        s = (s - domain) & domain


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(indices: Iterable[int]) -> int:
    """Build a mask from bit indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Universe:
    """
    The ambient sentence set with its cognitive subspace and logic base.

    Labels are opaque strings. Use make_universe() to build one; it
    validates labels and records diagnostics.
    """
    symbols: Tuple[str, ...]
    cognitive_mask: int
    logic_mask: int
    diagnostics: Tuple[str, ...] = field(default=(), compare=False)
    _index: Dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self._index:
            object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __hash__(self) -> int:
        return hash((self.symbols, self.cognitive_mask, self.logic_mask))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.symbols)) - 1

    @property
    def omega(self) -> "SentenceSet":
        return SentenceSet(self, self.full_mask)

    @property
    def cognitive(self) -> "SentenceSet":
        return SentenceSet(self, self.cognitive_mask)

    @property
    def logic_base(self) -> "SentenceSet":
        return SentenceSet(self, self.logic_mask)

    @property
    def empty(self) -> "SentenceSet":
        return SentenceSet(self, 0)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownSentenceError(label) from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def mask(self, labels: Iterable[str]) -> int:
        """Mask of the given labels; raises UnknownSentenceError."""
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def subset(self, labels: Iterable[str]) -> "SentenceSet":
        return SentenceSet(self, self.mask(labels))

    def from_mask(self, mask: int) -> "SentenceSet":
        if mask & ~self.full_mask:
            raise UniverseError("mask has bits outside the universe")
        return SentenceSet(self, mask)

    def labels(self, mask: int) -> List[str]:
        """Labels of mask in universe order."""
        return [self.symbols[i] for i in iter_bits(mask)]


@dataclass(frozen=True)
class SentenceSet:
    """
    An immutable subset of a Universe.

    Equality and hashing use the membership mask only; combining sets from
    two different universes raises UniverseError.
    """
    universe: Universe = field(compare=False, repr=False)
    mask: int

    def _other(self, other: "SentenceSet") -> int:
        if other.universe is not self.universe and other.universe.symbols != self.universe.symbols:
            raise UniverseError("sentence sets belong to different universes")
        return other.mask

    def __or__(self, other: "SentenceSet") -> "SentenceSet":
        return SentenceSet(self.universe, self.mask | self._other(other))

    def __and__(self, other: "SentenceSet") -> "SentenceSet":
        return SentenceSet(self.universe, self.mask & self._other(other))

    def __sub__(self, other: "SentenceSet") -> "SentenceSet":
        return SentenceSet(self.universe, self.mask & ~self._other(other))

    def __le__(self, other: "SentenceSet") -> bool:
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other: "SentenceSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "SentenceSet") -> bool:
        return other <= self

    def __gt__(self, other: "SentenceSet") -> bool:
        return other < self

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.universe.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        symbols = self.universe.symbols
        return (symbols[i] for i in iter_bits(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def labels(self) -> List[str]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ",".join(self) + "}"


def make_universe(
    symbols: Iterable[str],
    cognitive: Iterable[str],
    logic_base: Iterable[str],
    max_symbols: Optional[int] = None,
    allow_dynamic: Optional[bool] = None,
) -> Universe:
    """
    Build a Universe from label lists.

    Args:
        symbols: Ordered, distinct, non-empty labels of the ambient set
        cognitive: Labels of the cognitive subspace C
        logic_base: Labels of the logic base L
        max_symbols: Fast-path size; larger universes need allow_dynamic
        allow_dynamic: Permit universes beyond max_symbols

    Returns:
        The Universe. A diagnostic is recorded (and logged) when the logic
        base is not contained in the cognitive space.
    """
    max_symbols = DEFAULT_SETTINGS.max_symbols if max_symbols is None else max_symbols
    allow_dynamic = DEFAULT_SETTINGS.allow_dynamic if allow_dynamic is None else allow_dynamic

    ordered: List[str] = []
    seen = set()
    for label in symbols:
        if not isinstance(label, str) or not label:
            raise UniverseError(f"labels must be non-empty strings, got {label!r}")
        if label in seen:
            raise DuplicateLabelError(label)
        seen.add(label)
        ordered.append(label)

    if len(ordered) > max_symbols:
        if not allow_dynamic:
            raise UniverseTooLargeError(
                f"{len(ordered)} symbols exceed the fixed maximum {max_symbols}"
            )
        logger.debug("universe of %d symbols uses dynamic membership", len(ordered))

    index = {s: i for i, s in enumerate(ordered)}

    def to_mask(labels: Iterable[str], where: str) -> int:
        m = 0
        for label in labels:
            if label not in index:
                raise UnknownSentenceError(label, where)
            m |= 1 << index[label]
        return m

    cognitive_mask = to_mask(cognitive, "symbols (cognitive)")
    logic_mask = to_mask(logic_base, "symbols (logic_base)")

    diagnostics: List[str] = []
    if logic_mask & ~cognitive_mask:
        logger.warning(LOGIC_OUTSIDE_COGNITIVE)
        diagnostics.append(LOGIC_OUTSIDE_COGNITIVE)

    return Universe(
        symbols=tuple(ordered),
        cognitive_mask=cognitive_mask,
        logic_mask=logic_mask,
        diagnostics=tuple(diagnostics),
        _index=index,
    )


def complement_in(a: SentenceSet, within: SentenceSet) -> SentenceSet:
    """Relative complement within ∖ a; a must be contained in within."""
    if not a <= within:
        raise NotASubsetError(f"{a!r} is not contained in {within!r}")
    return within - a
