"""Cognitive-consequence spaces: closure operators, CWO topologies, limits and filters."""

from ._ccspace import (
    System,
    WeightMetric,
    detect_black_hole,
    run,
    sha256_hex,
    __version__,
)

__all__ = ["System", "WeightMetric", "detect_black_hole", "run", "sha256_hex", "__version__"]
