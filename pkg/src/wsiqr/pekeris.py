"""Pekeris-type replacement of the centrifugal 1/r**2 term.

1/r**2 ~ (Q/R0)**2 [d0 + d1 y + d2 y**2],  y = t / (1 + q t).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidParameterError, PoleError
from .params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength


@dataclass(frozen=True)
class PekerisCoefficients:
    d0: float
    d1: float
    d2: float
    b: float = 0.0  # MeV, Q**2 delta**2 / R0**2

    def with_strength(self, spec: PotentialSpec, delta2: float) -> "PekerisCoefficients":
        return replace(self, b=(spec.Q / spec.R0) ** 2 * delta2)


def ws_coefficients(alpha: float) -> PekerisCoefficients:
    if not alpha > 0:
        raise InvalidParameterError(f"alpha must be positive, got {alpha}")
    if alpha <= 2:
        warnings.warn(f"alpha = {alpha} <= 2: Pekeris expansion quality degrades", RuntimeWarning,
                      stacklevel=2)
    inv = 1.0 / alpha
    return PekerisCoefficients(d0=1 - 4 * inv + 12 * inv * inv,
                               d1=8 * inv - 48 * inv * inv,
                               d2=48 * inv * inv)


def hulthen_coefficients() -> PekerisCoefficients:
    return PekerisCoefficients(d0=1.0 / 12.0, d1=1.0, d2=1.0)


def coefficients_for(spec: PotentialSpec, delta2: float | None = None) -> PekerisCoefficients:
    """Family-appropriate coefficients, with ``b`` filled in when ``delta2`` is given."""
    if spec.family is Family.WOODS_SAXON:
        c = ws_coefficients(spec.alpha)
    else:
        c = hulthen_coefficients()
    return c if delta2 is None else c.with_strength(spec, delta2)


def coefficients_for_state(spec: PotentialSpec, qn: QuantumNumbers) -> PekerisCoefficients:
    _, delta2 = centrifugal_strength(qn, spec.mass_term)
    return coefficients_for(spec, delta2)


def approx_inverse_r2(r, spec: PotentialSpec, c: PekerisCoefficients):
    """Pekeris approximation to 1/r**2 (array-friendly)."""
    t = spec.t_of_r(r)
    denom = 1.0 + spec.q * t
    if np.any(denom == 0):
        raise PoleError("1 + q exp(-alpha x) vanishes")
    y = t / denom
    out = (spec.Q / spec.R0) ** 2 * (c.d0 + c.d1 * y + c.d2 * y * y)
    return out if np.ndim(out) else float(out)


def taylor_match_residual(c: PekerisCoefficients, alpha: float) -> tuple[float, float, float]:
    """Order-0, 1, 2 mismatch between the Pekeris expansion and 1 - 2x + 3x**2."""
    return (abs(c.d0 + c.d1 / 2 + c.d2 / 4 - 1),
            abs(alpha * (c.d1 + c.d2) / 4 - 2),
            abs(alpha * alpha * c.d2 / 16 - 3))


def ws_taylor_residual(alpha: float) -> tuple[float, float, float]:
    return taylor_match_residual(ws_coefficients(alpha), alpha)


def as_dict(c: PekerisCoefficients) -> dict:
    return {"d0": c.d0, "d1": c.d1, "d2": c.d2, "b": c.b}

