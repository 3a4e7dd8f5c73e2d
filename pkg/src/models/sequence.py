"""
Thought sequences.

A ThoughtSequence is a finite prefix of an infinite sequence of thoughts.
Entries are sentence labels of one Universe; the prefix may declare a
virtual limit (the thought the sequence is meant to reach) and whether its
last entry repeats forever.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.errors import EmptySequenceError, UnknownSentenceError
from src.models.universe import SentenceSet, Universe


@dataclass(frozen=True)
class ThoughtSequence:
    """A named, non-empty, finite list of thoughts."""
    name: str
    thoughts: Tuple[str, ...]
    virtual_limit: Optional[str] = None
    constant_tail: bool = False
    # Name of a sequence whose tail is compared with this one
    partner: Optional[str] = None

    def __len__(self) -> int:
        return len(self.thoughts)

    def support(self, universe: Universe) -> SentenceSet:
        """The set of thoughts occurring in the prefix."""
        return universe.subset(self.thoughts)


def make_sequence(
    universe: Universe,
    name: str,
    thoughts,
    virtual_limit: Optional[str] = None,
    constant_tail: bool = False,
    partner: Optional[str] = None,
) -> ThoughtSequence:
    """Validate entries against the universe and build a ThoughtSequence."""
    thoughts = tuple(thoughts)
    if not thoughts:
        raise EmptySequenceError(f"sequence {name!r} is empty")
    for label in thoughts:
        if label not in universe:
            raise UnknownSentenceError(label, f"sequence {name!r}")
    if virtual_limit is not None and virtual_limit not in universe:
        raise UnknownSentenceError(virtual_limit, f"virtual limit of {name!r}")
    return ThoughtSequence(name, thoughts, virtual_limit, constant_tail, partner)
