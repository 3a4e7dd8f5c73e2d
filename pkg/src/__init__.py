"""ccspace - a workbench for cognitive-consequence operators on finite universes."""

__version__ = "0.1.0"
