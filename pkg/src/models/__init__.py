"""Data models for ccspace."""

from .universe import SentenceSet, Universe, complement_in, make_universe
from .sequence import ThoughtSequence, make_sequence

__all__ = [
    "SentenceSet",
    "Universe",
    "complement_in",
    "make_universe",
    "ThoughtSequence",
    "make_sequence",
]
