"""Shipped weighting presets for the default metric profile.

Four article-age phases, each with its own weight vector. The earliest and
latest phases also ship the judgment matrices the weights were derived from;
the middle phases ship constants only.
"""

from __future__ import annotations

from .ahp import PairwiseMatrix, WeightVector
from .errors import DomainError
from .profiles import DEFAULT_PROFILE

PHASES = (1, 2, 3, 4)

# Upper triangles (row-major) of the shipped judgment matrices.
# Criterion order: citeulike, mendeley, html_views, pdf_downloads,
# citations, facebook, twitter.
_PHASE1_UPPER = (
    1, 1 / 4, 1 / 6, 4, 1 / 4, 1 / 6,
    1 / 4, 1 / 6, 4, 1 / 4, 1 / 6,
    1 / 4, 6, 3, 2,
    9, 4, 3,
    1 / 4, 1 / 7,
    1 / 2,
)

_PHASE4_UPPER = (
    1, 3, 2, 1 / 7, 3, 2,
    3, 2, 1 / 7, 3, 2,
    1 / 4, 1 / 9, 1, 1,
    1 / 6, 1, 1,
    4, 3,
    1 / 2,
)

PHASE_MATRICES: dict[int, PairwiseMatrix] = {
    1: PairwiseMatrix.from_upper(_PHASE1_UPPER, DEFAULT_PROFILE),
    4: PairwiseMatrix.from_upper(_PHASE4_UPPER, DEFAULT_PROFILE),
}

# Shipped constants, one row per phase. Rows are renormalized to sum exactly
# to 1 when building the WeightVector (the 4-decimal constants carry up to
# 1e-4 of rounding).
_PHASE_WEIGHTS: dict[int, tuple[float, ...]] = {
    1: (0.0477, 0.0477, 0.1996, 0.3901, 0.0234, 0.1109, 0.1806),
    2: (0.1723, 0.1723, 0.1182, 0.2108, 0.1321, 0.0828, 0.1116),
    3: (0.1514, 0.1514, 0.0481, 0.0921, 0.3979, 0.0644, 0.0947),
    4: (0.1269, 0.1269, 0.0455, 0.0809, 0.4819, 0.0570, 0.0810),
}


def preset_weights(phase: int) -> WeightVector:
    """Shipped weight vector for an article-age phase (1..4)."""
    if not isinstance(phase, int) or isinstance(phase, bool) or phase not in _PHASE_WEIGHTS:
        raise DomainError(f"unknown phase {phase!r}; expected one of {PHASES}",
                          code="unknown_phase")
    return WeightVector.normalized(_PHASE_WEIGHTS[phase], DEFAULT_PROFILE)
