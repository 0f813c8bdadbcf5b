"""Quadrature over a classical interval with square-root endpoint behaviour.

Integrals of the form

    int_{rA}^{rB} f(r) / sqrt((r - rA)(rB - r)) dr      (kernel="inverse")
    int_{rA}^{rB} f(r) * sqrt((r - rA)(rB - r)) dr      (kernel="sqrt")

are mapped by r = rA + (rB - rA) sin(theta)**2 onto a smooth integrand on
[0, pi/2] and evaluated by Gauss-Legendre with node doubling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, DomainError

MAX_NODES = 2 ** 14
_PANEL_ORDER = 128


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


@lru_cache(maxsize=None)
def _theta_rule(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights on [0, pi/2] with ``nodes`` points in total."""
    if nodes <= _PANEL_ORDER:
        x, w = _gauss_legendre(nodes)
        return (x + 1) * (math.pi / 4), w * (math.pi / 4)
    panels = nodes // _PANEL_ORDER
    x, w = _gauss_legendre(_PANEL_ORDER)
    half = math.pi / 4 / panels
    centers = (np.arange(panels) * 2 + 1) * half
    th = (centers[:, None] + half * x[None, :]).ravel()
    wt = np.tile(w * half, panels)
    return th, wt


def _estimate(f, rA, rB, kernel, nodes):
    th, wt = _theta_rule(nodes)
    s = np.sin(th)
    c = np.cos(th)
    r = rA + (rB - rA) * s * s
    fr = np.asarray(f(r), dtype=float)
    if kernel == "inverse":
        return 2.0 * float(np.dot(wt, fr))
    return 2.0 * (rB - rA) ** 2 * float(np.dot(wt, fr * (s * c) ** 2))


def integrate_sqrt_kernel(f, rA: float, rB: float, kernel: str = "inverse",
                          rtol: float = 1e-12, atol: float = 0.0,
                          start_nodes: int = 16) -> float:
    if kernel not in ("inverse", "sqrt"):
        raise ValueError(f"unknown kernel kind {kernel!r}")
    if rB == rA:
        return 0.0
    if rB < rA:
        raise DomainError(f"need rA <= rB, got ({rA}, {rB})")
    nodes = start_nodes
    prev = _estimate(f, rA, rB, kernel, nodes)
    while nodes < MAX_NODES:
        nodes *= 2
        cur = _estimate(f, rA, rB, kernel, nodes)
        if not math.isfinite(cur):
            raise AccuracyError("quadrature produced a non-finite value", estimate=cur)
        if abs(cur - prev) <= rtol * abs(cur) + atol:
            return cur
        prev = cur
    raise AccuracyError(f"no convergence with {MAX_NODES} nodes", estimate=prev)


def integrate_interval(f, lo: float, hi: float, rtol: float = 1e-12, atol: float = 0.0,
                       start_nodes: int = 16) -> float:
    """Plain integral of a smooth f over [lo, hi] by the same node-doubling rule."""
    if hi == lo:
        return 0.0
    th_scale = (hi - lo) / (math.pi / 2)

    def g(theta):
        return f(lo + th_scale * theta) * th_scale

    nodes = start_nodes
    th, wt = _theta_rule(nodes)
    prev = float(np.dot(wt, g(th)))
    while nodes < MAX_NODES:
        nodes *= 2
        th, wt = _theta_rule(nodes)
        cur = float(np.dot(wt, g(th)))
        if abs(cur - prev) <= rtol * abs(cur) + atol:
            return cur
        prev = cur
    raise AccuracyError(f"no convergence with {MAX_NODES} nodes", estimate=prev)


# -- appendix identities ----------------------------------------------------

IDENTITY_IDS = ("A1", "A2", "A3", "A4", "A5")


@dataclass(frozen=True)
class IntegralReport:
    identity_id: str
    rA: float
    rB: float
    a: float | None
    b: float | None
    closed_value: float
    numeric_value: float

    @property
    def abs_diff(self) -> float:
        return abs(self.closed_value - self.numeric_value)

    def as_row(self) -> dict:
        return {"identity": self.identity_id, "rA": self.rA, "rB": self.rB,
                "a": self.a, "b": self.b, "closed": self.closed_value,
                "numeric": self.numeric_value, "abs_diff": self.abs_diff}


def appendix_closed(identity_id: str, rA: float, rB: float, a=None, b=None) -> float:
    if identity_id == "A1":
        return math.pi / 2 * (rA + rB)
    if identity_id == "A2":
        return math.pi / math.sqrt(rA * rB)
    if identity_id == "A3":
        return math.pi
    if identity_id == "A4":
        return math.pi * ((rA + rB) / 2 - math.sqrt(rA * rB))
    if identity_id == "A5":
        return math.pi / math.sqrt((a + b * rA) * (a + b * rB))
    raise ValueError(f"unknown identity {identity_id!r}")


def appendix_identity(identity_id: str, rA: float, rB: float,
                      a: float | None = None, b: float | None = None) -> IntegralReport:
    if not rB > rA > 0:
        raise DomainError(f"need rB > rA > 0, got ({rA}, {rB})")
    if identity_id == "A5":
        if a is None or b is None:
            raise ValueError("A5 needs a and b")
        if not (a + b * rA > 0 and a + b * rB > 0):
            raise DomainError("A5 needs a + b r > 0 at both endpoints")
    closed = appendix_closed(identity_id, rA, rB, a, b)
    if identity_id == "A1":
        numeric = integrate_sqrt_kernel(lambda r: r, rA, rB)
    elif identity_id == "A2":
        numeric = integrate_sqrt_kernel(lambda r: 1.0 / r, rA, rB)
    elif identity_id == "A3":
        numeric = integrate_sqrt_kernel(lambda r: np.ones_like(r), rA, rB)
    elif identity_id == "A4":
        numeric = integrate_sqrt_kernel(lambda r: 1.0 / r, rA, rB, kernel="sqrt")
    else:
        numeric = integrate_sqrt_kernel(lambda r: 1.0 / (a + b * r), rA, rB)
    return IntegralReport(identity_id, rA, rB, a, b, closed, numeric)


def random_appendix_draws(rng: np.random.Generator, count: int, lo: float = 0.1, hi: float = 10.0):
    """Yield random IntegralReports for all five identities, ``count`` draws each."""
    for _ in range(count):
        rA, rB = sorted(rng.uniform(lo, hi, size=2))
        if rA == rB:
            rB = rA + 1e-3
        a = float(rng.uniform(0.0, 5.0))
        b = float(rng.uniform(0.1, 5.0))
        for ident in IDENTITY_IDS:
            if ident == "A5":
                yield appendix_identity(ident, float(rA), float(rB), a, b)
            else:
                yield appendix_identity(ident, float(rA), float(rB))
