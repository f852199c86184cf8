"""Gamma and Mittag-Leffler functions on real arguments.

The two-parameter Mittag-Leffler function

    E_{a,b}(z) = sum_{k>=0} z^k / Gamma(a*k + b)

is evaluated by direct series summation. That is the right tool here: the
relaxation arguments produced by the solver satisfy |z| <= a/(AB(a)+1-a) <= 1
on the unit interval, well inside the series regime, so no asymptotic branch
is provided. The series either meets its stopping rule or raises
:class:`SeriesConvergenceError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "DEFAULT_CONTROL",
    "MLSeriesControl",
    "SeriesConvergenceError",
    "gamma",
    "ml_one",
    "ml_two",
]


class SeriesConvergenceError(RuntimeError):
    """The Mittag-Leffler series did not meet its stopping rule."""


@dataclass(frozen=True)
class MLSeriesControl:
    """Truncation control for the Mittag-Leffler series.

    Summation stops once the running term drops below ``rel_tolerance`` times
    the partial sum for two consecutive terms; exceeding ``max_terms`` without
    that happening is an error.
    """

    rel_tolerance: float = 1e-15
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tolerance < 1.0:
            raise ValueError(
                f"rel_tolerance must be in (0, 1), got {self.rel_tolerance}"
            )
        if self.max_terms < 50:
            raise ValueError(f"max_terms must be >= 50, got {self.max_terms}")


DEFAULT_CONTROL = MLSeriesControl()

# Largest argument with Gamma(x) finite in double precision; past this the
# series tail is summed through logs.
_GAMMA_OVERFLOW = 171.6


def gamma(x: float) -> float:
    """Gamma(x) for real x > 0.

    Raises ValueError for x <= 0 and OverflowError once Gamma(x) exceeds the
    double-precision range (x > ~171.6).
    """
    if x <= 0.0:
        raise ValueError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def ml_two(
    alpha: float,
    beta: float,
    z: float,
    control: MLSeriesControl = DEFAULT_CONTROL,
) -> float:
    """Two-parameter Mittag-Leffler function E_{alpha,beta}(z), alpha in (0, 1]."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if beta <= 0.0:
        raise ValueError(f"beta must be > 0, got {beta}")

    log_abs_z = math.log(abs(z)) if z != 0.0 else None
    total = 0.0
    power = 1.0  # z**k; may overflow to inf late in the tail, unused there
    small_streak = 0
    for k in range(control.max_terms):
        x = alpha * k + beta
        if x < _GAMMA_OVERFLOW:
            term = power / math.gamma(x)
        elif z == 0.0:
            term = 0.0
        else:
            exponent = k * log_abs_z - math.lgamma(x)
            term = 0.0 if exponent < -745.0 else math.exp(exponent)
            if z < 0.0 and k % 2:
                term = -term
        total += term
        if abs(term) <= control.rel_tolerance * abs(total):
            small_streak += 1
            if small_streak == 2:
                return total
        else:
            small_streak = 0
        power *= z
    raise SeriesConvergenceError(
        f"E_({alpha},{beta})({z}) did not converge within {control.max_terms} terms"
    )


def ml_one(
    alpha: float, z: float, control: MLSeriesControl = DEFAULT_CONTROL
) -> float:
    """One-parameter Mittag-Leffler function E_alpha(z) = E_{alpha,1}(z)."""
    return ml_two(alpha, 1.0, z, control)
