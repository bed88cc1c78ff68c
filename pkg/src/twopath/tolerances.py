"""Shared numerical tolerances used by every validity check in the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances for construction-time and derived-value checks.

    Double precision leaves several orders of magnitude of headroom over
    2x2 arithmetic, so structural residuals sit at 1e-12 while quantities
    that compound several operations (variances, squared overlaps) get a
    looser threshold.
    """

    norm: float = 1e-12  # state normalization residual
    herm: float = 1e-12  # Hermiticity residual, max-norm
    unit: float = 1e-12  # unitarity residual, max-norm
    var: float = 1e-10   # variance floor / saturation threshold
    comp: float = 1e-10  # complementarity overlap deviation


TOL = Tolerances()
