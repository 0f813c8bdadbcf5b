"""Bound-state energies from the improved quantization rule.

In the variable y = t / (1 + q t) the Pekeris-approximated effective potential
is the quadratic

    V(y) = b d2 y**2 + (b d1 - V0) y + b d0,        dy/dr = -(1/a) y (1 - q y).

Two routes are provided:

* ``solve_energy``: closed-form solution of the quantization condition.
* ``quantize_numeric``: root-finding on the phase integral evaluated by
  quadrature, with the quantum correction also obtained by quadrature from the
  ground-state logarithmic derivative.

Dimensionless channel constants used throughout (M = mass_term):

    g1 = a**2 (V0 - b d1) / M,   g2 = a**2 b d2 / M,   zeta = sqrt(1 + 4 g2),
    m**2 + q m = g2,             eps = a sqrt((b d0 - E) / M),
    rho = a sqrt((X - E) / M),   X = b (d0 + d1/q + d2/q**2) - V0/q.

The quantization condition reduces to ``eps + q rho = q m - n``.  The printed
variants of the phase integral, quantum correction and condition are kept as
``*_printed`` functions for auditing only.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (AccuracyError, BranchViolationError, DegenerateConditionError,
                     DegenerateQuadraticError, DomainError, InvalidParameterError,
                     NoBoundStateError, NoClassicalRegionError, PrintedFormulaSingularError,
                     SingularBranchError)
from .numerics import integrate_interval, integrate_sqrt_kernel
from .params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength
from .pekeris import PekerisCoefficients, coefficients_for

TP_REL_TOL = 1e-10
CLOSED_RESIDUAL_TOL = 1e-10


class Route(enum.Enum):
    CLOSED_FORM = "closed-form"
    NUMERIC_IQR = "numeric-iqr"
    ORACLE = "oracle"


# -- channel ----------------------------------------------------------------

@dataclass(frozen=True)
class Channel:
    """Spectrum inputs for one potential and one centrifugal strength.

    Built from ``delta2`` alone, so states sharing delta2 share every number
    derived here.
    """

    spec: PotentialSpec
    delta2: float
    coeffs: PekerisCoefficients

    @classmethod
    def from_delta2(cls, spec: PotentialSpec, delta2: float) -> "Channel":
        return cls(spec, delta2, coefficients_for(spec, delta2))

    @classmethod
    def from_state(cls, spec: PotentialSpec, qn: QuantumNumbers) -> "Channel":
        _, delta2 = centrifugal_strength(qn, spec.mass_term)
        return cls.from_delta2(spec, delta2)

    @property
    def q(self) -> float:
        return self.spec.q

    @property
    def b(self) -> float:
        return self.coeffs.b

    @property
    def kappa(self) -> float:
        return self.spec.a / math.sqrt(self.spec.mass_term)

    @property
    def g1(self) -> float:
        s, c = self.spec, self.coeffs
        return s.a * s.a * (s.V0 - c.b * c.d1) / s.mass_term

    @property
    def g2(self) -> float:
        s, c = self.spec, self.coeffs
        return s.a * s.a * c.b * c.d2 / s.mass_term

    @property
    def zeta(self) -> float:
        disc = 1.0 + 4.0 * self.g2
        if disc < 0:
            raise InvalidParameterError(f"1 + 4 g2 = {disc} < 0: no real branch parameter")
        return math.sqrt(disc)

    @property
    def m(self) -> float:
        # minus branch for Woods-Saxon, plus branch for Hulthen
        if self.spec.family is Family.WOODS_SAXON:
            return -(self.q / 2) * (1 - self.zeta)
        return -(self.q / 2) * (1 + self.zeta)

    @property
    def X(self) -> float:
        s, c, q = self.spec, self.coeffs, self.q
        return c.b * (c.d0 + c.d1 / q + c.d2 / (q * q)) - s.V0 / q

    @property
    def asymptote(self) -> float:
        """V(y = 0), the r -> infinity limit b d0."""
        return self.coeffs.b * self.coeffs.d0

    def eps_of(self, E: float) -> float:
        rad = (self.asymptote - E) / self.spec.mass_term
        if rad < 0:
            raise BranchViolationError("b d0 - E < 0", radicand=rad)
        return self.spec.a * math.sqrt(rad)

    def rho_of(self, E: float) -> float:
        rad = (self.X - E) / self.spec.mass_term
        if rad < 0:
            raise BranchViolationError("X - E < 0", radicand=rad)
        return self.spec.a * math.sqrt(rad)


def channel(spec: PotentialSpec, qn: QuantumNumbers) -> Channel:
    return Channel.from_state(spec, qn)


# -- potential, turning points, momentum -------------------------------------

def effective_potential_y(y, spec: PotentialSpec, coeffs: PekerisCoefficients):
    c = coeffs
    return c.b * c.d2 * y * y + (c.b * c.d1 - spec.V0) * y + c.b * c.d0


@dataclass(frozen=True)
class TurningPoints:
    yA: float
    yB: float

    def within(self, y_max: float) -> bool:
        return 0 <= self.yA <= self.yB <= y_max


def turning_points(E: float, spec: PotentialSpec, coeffs: PekerisCoefficients) -> TurningPoints:
    c = coeffs
    A = c.b * c.d2
    B = c.b * c.d1 - spec.V0
    C = c.b * c.d0 - E
    if A == 0:
        raise DegenerateQuadraticError("b d2 = 0: single turning point, use the linear limit")
    if A < 0:
        raise NoClassicalRegionError("b d2 < 0: the quadratic opens downward")
    disc = B * B - 4 * A * C
    if disc < 0:
        raise NoClassicalRegionError(f"discriminant {disc} < 0 at E = {E}")
    root = math.sqrt(disc)
    # stable pairing of the two roots
    big = -(B - root) / 2 if B < 0 else -(B + root) / 2
    r1 = big / A
    r2 = C / big if big != 0 else 0.0
    yA, yB = min(r1, r2), max(r1, r2)
    # Vieta checks: yA + yB = -B/A, yA yB = C/A
    total, prod = -B / A, C / A
    if abs(yA + yB - total) > TP_REL_TOL * max(abs(yA) + abs(yB), 1e-300) or \
            abs(yA * yB - prod) > TP_REL_TOL * max(abs(yA * yB), abs(prod), 1e-300):
        raise AccuracyError(f"turning-point identities violated at E = {E}")
    return TurningPoints(yA, yB)


def momentum_y(y, E: float, spec: PotentialSpec, coeffs: PekerisCoefficients, tp=None):
    """Local wave number k(y) = sqrt((E - V(y)) / M) inside the classical region."""
    tp = tp or turning_points(E, spec, coeffs)
    y = np.asarray(y, dtype=float)
    slack = 1e-12 * max(1.0, abs(tp.yB))
    if np.any(y < tp.yA - slack) or np.any(y > tp.yB + slack):
        raise DomainError("y outside the classical region [yA, yB]")
    K = math.sqrt(coeffs.b * coeffs.d2 / spec.mass_term)
    val = K * np.sqrt(np.clip((tp.yB - y) * (y - tp.yA), 0.0, None))
    return val if val.ndim else float(val)


# -- ground state ------------------------------------------------------------

@dataclass(frozen=True)
class GroundStateSolution:
    """Linear logarithmic derivative phi0(y) = slope * y + intercept (1/fm)."""

    m: float
    phi0_slope: float
    phi0_intercept: float
    E0_tilde: float
    E0: float
    eps0: float
    rho0: float

    @property
    def bound(self) -> bool:
        return self.eps0 > 0 and self.rho0 > 0 and self.E0_tilde < 0


def ground_state(ch: Channel) -> GroundStateSolution:
    s = ch.spec
    m = ch.m
    if m == 0:
        raise SingularBranchError("m = 0 (Woods-Saxon with delta = 0)")
    slope = m / s.a
    intercept = 1 / (2 * s.a) - s.a * (s.V0 - ch.b * ch.coeffs.d1) / (2 * s.mass_term * m)
    e0_tilde = -s.mass_term * intercept ** 2
    eps0 = -s.a * intercept
    return GroundStateSolution(m=m, phi0_slope=slope, phi0_intercept=intercept,
                               E0_tilde=e0_tilde, E0=e0_tilde + ch.asymptote,
                               eps0=eps0, rho0=m - ch.q * eps0)


# -- quantum correction -------------------------------------------------------

def quantum_correction_closed(ch: Channel) -> float:
    """Closed form of the quantum correction, -pi (1 + q (m - sqrt(g2)))."""
    m = ch.m
    if m == 0:
        raise SingularBranchError("m = 0 (Woods-Saxon with delta = 0)")
    g2 = ch.g2
    if g2 < 0:
        raise BranchViolationError("g2 < 0", radicand=g2)
    return -math.pi * (1 + ch.q * (m - math.sqrt(g2)))


def quantum_correction_printed(ch: Channel) -> float:
    """Literal transcription of the published correction (audit only)."""
    m = ch.m
    if m == 0:
        raise SingularBranchError("m = 0 (Woods-Saxon with delta = 0)")
    g2 = ch.g2
    if g2 < 0:
        raise BranchViolationError("g2 < 0", radicand=g2)
    return -math.pi * (math.sqrt(g2) / ch.q + m / ch.q + 1)


def _bound_ground_state(ch: Channel) -> GroundStateSolution:
    gs = ground_state(ch)
    if not gs.bound:
        raise NoBoundStateError("ground state is not normalizable for this channel",
                                energy=gs.E0, diagnostics={"eps0": gs.eps0, "rho0": gs.rho0})
    return gs


def quantum_correction_numeric(ch: Channel) -> float:
    """Quadrature of int k0' phi0 / phi0' dr between the ground-state turning points."""
    s = ch.spec
    gs = _bound_ground_state(ch)
    ratio = gs.phi0_intercept / gs.phi0_slope
    q = ch.q
    if ch.b == 0:
        if q > 0:
            raise NoClassicalRegionError("b = 0 with q = +1 has a single turning point")
        yA = -gs.E0 / s.V0
        pref = s.a * math.sqrt(s.V0 / (s.mass_term * yA))

        def g(theta):
            c2 = np.cos(theta) ** 2
            return pref * (yA + ratio * c2) / (c2 + yA)

        return integrate_interval(g, 0.0, math.pi / 2, atol=1e-14)

    tp = turning_points(gs.E0, s, ch.coeffs)
    _check_physical(tp, q)
    K = math.sqrt(ch.b * ch.coeffs.d2 / s.mass_term)
    mid = (tp.yA + tp.yB) / 2

    def f(y):
        return s.a * K * (mid - y) * (y + ratio) / (y * (1 - q * y))

    return integrate_sqrt_kernel(f, tp.yA, tp.yB, kernel="inverse", atol=1e-14)


def _check_physical(tp: TurningPoints, q: float) -> None:
    if tp.yA <= 0:
        raise DomainError("yA <= 0: classical region reaches r = infinity")
    if q > 0 and tp.yB >= 1:
        raise DomainError("yB >= 1: classical region crosses the pole of dr/dy")


# -- phase integral -----------------------------------------------------------

def momentum_integral_closed(E: float, spec: PotentialSpec, coeffs: PekerisCoefficients) -> float:
    """Closed form pi kappa (q sqrt(b d2) - sqrt(b d0 - E) - q sqrt(X - E))."""
    q = spec.q
    c = coeffs
    kappa = spec.a / math.sqrt(spec.mass_term)
    X = c.b * (c.d0 + c.d1 / q + c.d2 / (q * q)) - spec.V0 / q
    rads = (c.b * c.d2, c.b * c.d0 - E, X - E)
    for rad in rads:
        if rad < 0:
            raise BranchViolationError(f"negative radicand {rad}", radicand=rad)
    r1, r2, r3 = (math.sqrt(v) for v in rads)
    return math.pi * kappa * (q * r1 - r2 - q * r3)


def momentum_integral_printed(E: float, spec: PotentialSpec, coeffs: PekerisCoefficients) -> float:
    """Literal transcription of the published phase integral (audit only)."""
    q = spec.q
    c = coeffs
    kappa = spec.a / math.sqrt(spec.mass_term)
    rads = (c.b * c.d2 / (q * q), c.b * c.d0 - E,
            c.b * (c.d0 + c.d1 / q + c.d2 / (q * q)) - spec.V0 / q - E)
    for rad in rads:
        if rad < 0:
            raise BranchViolationError(f"negative radicand {rad}", radicand=rad)
    r1, r2, r3 = (math.sqrt(v) for v in rads)
    return math.pi * kappa * (r1 + r2 - r3)


def momentum_integral_numeric(E: float, spec: PotentialSpec, coeffs: PekerisCoefficients) -> float:
    """int_{rA}^{rB} k(r) dr by quadrature in y."""
    q = spec.q
    M = spec.mass_term
    if coeffs.b == 0:
        if q > 0 or E >= 0:
            raise NoClassicalRegionError("linear potential without a second turning point")
        yA = -E / spec.V0
        pref = 2 * spec.a * math.sqrt(spec.V0 * yA / M)

        def g(theta):
            s2 = np.sin(theta) ** 2
            return pref * s2 / (1 - s2 + yA)

        return integrate_interval(g, 0.0, math.pi / 2)
    tp = turning_points(E, spec, coeffs)
    if tp.yA == tp.yB:
        return 0.0
    _check_physical(tp, q)
    K = math.sqrt(coeffs.b * coeffs.d2 / M)
    return integrate_sqrt_kernel(lambda y: spec.a * K / (y * (1 - q * y)), tp.yA, tp.yB,
                                 kernel="sqrt")


def momentum_integral_slope(E: float, spec: PotentialSpec, coeffs: PekerisCoefficients) -> float:
    """d/dE of the phase integral, int dr / (2 M k)."""
    q = spec.q
    M = spec.mass_term
    if coeffs.b == 0:
        yA = -E / spec.V0
        pref = spec.a / math.sqrt(M * spec.V0 * yA)

        def g(theta):
            c2 = np.cos(theta) ** 2
            return pref * c2 / (c2 + yA)

        return integrate_interval(g, 0.0, math.pi / 2)
    tp = turning_points(E, spec, coeffs)
    _check_physical(tp, q)
    K = math.sqrt(coeffs.b * coeffs.d2 / M)
    return integrate_sqrt_kernel(lambda y: spec.a / (2 * M * K * y * (1 - q * y)),
                                 tp.yA, tp.yB, kernel="inverse")


def energy_window(ch: Channel) -> tuple[float, float]:
    """Energies for which the phase integral has two physical turning points."""
    s, c, q = ch.spec, ch.coeffs, ch.q
    if c.b == 0:
        if q > 0:
            raise NoBoundStateError("Woods-Saxon s-wave: no second turning point")
        return -math.inf, 0.0
    if c.b < 0:
        raise NoBoundStateError("negative centrifugal strength: no two-turning-point region")
    y_star = (s.V0 - c.b * c.d1) / (2 * c.b * c.d2)
    y_top = 1.0 if q > 0 else math.inf
    if not 0 < y_star < y_top:
        raise NoBoundStateError(
            f"V(y) has no minimum inside the y-domain (vertex at y = {y_star:.6g})")
    lo = float(effective_potential_y(y_star, s, c))
    hi = ch.asymptote if q < 0 else min(ch.asymptote, ch.X)
    return lo, hi


# -- solved levels --------------------------------------------------------------

@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    E: float
    route: Route
    valid: bool = True
    flags: tuple[str, ...] = ()
    diagnostics: dict = field(default_factory=dict, compare=False)


def solve_condition(ch: Channel, n: int) -> tuple[float, float, float]:
    """Unchecked two-radical solution of eps + q rho = q m - n.

    Returns ``(eps, rho, E)``; a physical state needs eps > 0 and rho > 0.
    """
    C = ch.q * ch.m - n
    if C == 0:
        raise DegenerateConditionError(f"C = 0 for n = {n}")
    S = (ch.q * ch.g1 - ch.g2) / C
    eps = (C + S) / 2
    rho = ch.q * (C - S) / 2
    s = ch.spec
    E = ch.asymptote - s.mass_term * eps * eps / (s.a * s.a)
    return eps, rho, E


def quantization_residual(E: float, ch: Channel, n: int) -> float:
    """eps(E) + q rho(E) - (q m - n) with principal square roots."""
    return ch.eps_of(E) + ch.q * ch.rho_of(E) - (ch.q * ch.m - n)


def _window_ok(spec: PotentialSpec, E: float) -> bool:
    if spec.family is Family.WOODS_SAXON:
        return -spec.V0 < E < 0
    return E < 0


def _level_flags(ch: Channel, qn: QuantumNumbers, E: float):
    flags = list(qn.flags)
    diag = {}
    if ch.b > 0:
        try:
            tp = turning_points(E, ch.spec, ch.coeffs)
            diag["yA"], diag["yB"] = tp.yA, tp.yB
            if tp.yB > ch.spec.y_max:
                flags.append("outside-trust-region")
        except (NoClassicalRegionError, AccuracyError):
            flags.append("no-turning-points")
    return flags, diag


def solve_energy(qn: QuantumNumbers, spec: PotentialSpec) -> EnergyLevel:
    ch = Channel.from_state(spec, qn)
    return solve_energy_channel(ch, qn)


def solve_energy_channel(ch: Channel, qn: QuantumNumbers) -> EnergyLevel:
    eps, rho, E = solve_condition(ch, qn.n)
    diag = {"eps": eps, "rho": rho, "m": ch.m, "g1": ch.g1, "g2": ch.g2}
    if not (eps > 0 and rho > 0):
        raise NoBoundStateError(
            f"no bound state for {qn}: eps = {eps:.6g}, rho = {rho:.6g} (need both > 0)",
            energy=E, diagnostics=diag)
    if not _window_ok(ch.spec, E):
        raise NoBoundStateError(f"E = {E:.6g} outside the bound-state window for {qn}",
                                energy=E, diagnostics=diag)
    res = quantization_residual(E, ch, qn.n)
    if abs(res) > CLOSED_RESIDUAL_TOL * max(1.0, abs(ch.q * ch.m - qn.n)):
        raise AccuracyError(f"closed-form residual {res:.3g} too large", estimate=E)
    flags, extra = _level_flags(ch, qn, E)
    diag.update(extra)
    diag["residual"] = res
    if ch.m != 0 and ch.g2 >= 0:
        diag["Qc"] = quantum_correction_closed(ch)
    return EnergyLevel(qn, E, Route.CLOSED_FORM, valid="outside-trust-region" not in flags,
                       flags=tuple(flags), diagnostics=diag)


def quantize_numeric(qn: QuantumNumbers, spec: PotentialSpec,
                     max_bisect: int = 200, newton_steps: int = 10) -> EnergyLevel:
    """Root-find E with int k dr = (n + 1) pi + Qc, every integral by quadrature.

    N = n + 1 counts the zeros of the logarithmic derivative; the correction is
    the ground-state quadrature, additive with its own sign.
    """
    ch = Channel.from_state(spec, qn)
    qc = quantum_correction_numeric(ch)
    target = (qn.n + 1) * math.pi + qc
    if target <= 0:
        raise NoBoundStateError(f"phase target {target:.6g} <= 0")
    lo, hi = energy_window(ch)
    hi = min(hi, 0.0)
    c = ch.coeffs

    def F(E):
        try:
            return momentum_integral_numeric(E, spec, c) - target
        except AccuracyError as exc:
            return exc.estimate - target

    if not math.isfinite(lo):
        lo = -spec.V0
        while F(lo) > 0:
            lo *= 2
            if lo < -1e12 * spec.V0:
                raise NoBoundStateError("could not bracket from below")
    else:
        lo = lo + 1e-14 * max(1.0, abs(lo))
    span = hi - lo
    if span <= 0:
        raise NoBoundStateError("empty energy window")
    hi_eval = hi - 1e-12 * span
    if F(hi_eval) < 0:
        raise NoBoundStateError(f"no sign change in bracket for {qn}")
    a_, b_ = lo, hi_eval
    tol = 1e-10 * spec.V0
    for _ in range(max_bisect):
        mid = 0.5 * (a_ + b_)
        if F(mid) < 0:
            a_ = mid
        else:
            b_ = mid
        if b_ - a_ < tol:
            break
    E = 0.5 * (a_ + b_)
    for _ in range(newton_steps):
        step = F(E) / momentum_integral_slope(E, spec, c)
        E_new = E - step
        if not a_ - tol <= E_new <= b_ + tol:
            break
        E = E_new
        if abs(step) <= 1e-12 * abs(E):
            break
    if not _window_ok(spec, E):
        raise NoBoundStateError(f"E = {E:.6g} outside the bound-state window", energy=E)
    flags, diag = _level_flags(ch, qn, E)
    diag["Qc"] = qc
    diag["integral_residual"] = F(E)
    return EnergyLevel(qn, E, Route.NUMERIC_IQR, valid="outside-trust-region" not in flags,
                       flags=tuple(flags), diagnostics=diag)


# -- printed formulas (cross-check evaluators) ----------------------------------

def _checked_den(x: float, what: str) -> float:
    if x == 0:
        raise PrintedFormulaSingularError(f"{what} vanishes")
    return x


def energy_formula_general(qn: QuantumNumbers, spec: PotentialSpec) -> float:
    """Printed general spectrum; upper sign Woods-Saxon, lower sign Hulthen."""
    _, delta2 = centrifugal_strength(qn, spec.mass_term)
    c = coefficients_for(spec)
    M, R0, Q, q, al = spec.mass_term, spec.R0, spec.Q, spec.q, spec.alpha
    sign = -1.0 if spec.family is Family.WOODS_SAXON else 1.0
    root = math.sqrt(1 + 4 / M * Q * Q * delta2 / (q * q * al * al) * c.d2)
    den = _checked_den(2 * qn.n + 1 + sign * root, "2n + 1 -/+ sqrt(...)")
    inner = al * al * den / (4 * R0 * R0) - (
        (q * c.d1 + c.d2) * delta2 * Q * Q / (M * q * q) - spec.V0 * R0 * R0 / (M * q)
    ) / (R0 * R0 * den)
    return delta2 * Q * Q / (R0 * R0) * c.d0 - M * R0 * R0 / (al * al) * inner * inner


def energy_formula_ws(qn: QuantumNumbers, spec: PotentialSpec) -> float:
    if spec.family is not Family.WOODS_SAXON:
        raise InvalidParameterError("Woods-Saxon formula on a non-Woods-Saxon spec")
    _, delta2 = centrifugal_strength(qn, spec.mass_term)
    c = coefficients_for(spec)
    M, R0, a, al = spec.mass_term, spec.R0, spec.a, spec.alpha
    root = math.sqrt(1 + 4 / M * delta2 / (al * al) * c.d2)
    den = _checked_den(2 * qn.n + 1 - root, "2n + 1 - sqrt(...)")
    inner = den / (4 * a * a) - (delta2 / (M * R0 * R0) * (c.d1 + c.d2) - spec.V0 / M) / den
    return delta2 / (R0 * R0) * c.d0 - M * a * a * inner * inner


def energy_formula_d3(qn: QuantumNumbers, spec: PotentialSpec) -> float:
    if spec.family is not Family.WOODS_SAXON or qn.D != 3:
        raise InvalidParameterError("three-dimensional Woods-Saxon formula needs D = 3")
    c = coefficients_for(spec)
    M, R0, a, al = spec.mass_term, spec.R0, spec.a, spec.alpha
    ll = qn.l * (qn.l + 1)
    root = math.sqrt(1 + 4 * ll * c.d2 / (al * al))
    den = _checked_den(2 * qn.n + 1 - root, "2n + 1 - sqrt(...)")
    inner = den / (4 * a * a) - (ll * (c.d1 + c.d2) / (R0 * R0) - spec.V0 / M) / den
    return M * ll / (R0 * R0) * c.d0 - M * a * a * inner * inner


def energy_formula_hulthen(qn: QuantumNumbers, spec: PotentialSpec) -> float:
    """Printed Hulthen spectrum with V0 = alpha Z e**2 (so mu Z e**2 / hbar**2 = V0 / (2 M alpha))."""
    if spec.family is not Family.HULTHEN:
        raise InvalidParameterError("Hulthen formula on a non-Hulthen spec")
    M, al = spec.mass_term, spec.alpha
    N = qn.n + qn.l + (qn.D - 1) / 2
    coupling = spec.V0 / (2 * M * al)
    bracket = coupling / (_checked_den(N, "n + l + (D-1)/2") * al) - N / 2
    return M * al * al * (qn.angular_factor / 12 - bracket * bracket)


def solve_printed_condition(qn: QuantumNumbers, spec: PotentialSpec) -> float:
    """Two-radical reduction of the printed quantization condition (audit only)."""
    ch = Channel.from_state(spec, qn)
    q, b, c = ch.q, ch.b, ch.coeffs
    kappa = ch.kappa
    if b < 0:
        raise BranchViolationError("b < 0", radicand=b)
    C = (qn.n - math.sqrt(ch.g2) / q - ch.m / q) / kappa - math.sqrt(b * c.d2 / (q * q))
    if C == 0:
        raise DegenerateConditionError("C = 0")
    S = (ch.asymptote - ch.X) / C
    return ch.asymptote - ((C + S) / 2) ** 2


def formula_discrepancy(qn: QuantumNumbers, spec: PotentialSpec) -> dict:
    """Printed spectra next to the closed-form condition (unchecked energy)."""
    ch = Channel.from_state(spec, qn)
    out = {"n": qn.n, "l": qn.l, "D": qn.D}
    try:
        eps, rho, ref = solve_condition(ch, qn.n)
        out.update(E_condition=ref, bound=bool(eps > 0 and rho > 0))
    except DegenerateConditionError:
        ref = None
        out.update(E_condition=None, bound=False)
    evaluators = {"general": energy_formula_general}
    if spec.family is Family.WOODS_SAXON:
        evaluators["woods_saxon"] = energy_formula_ws
        if qn.D == 3:
            evaluators["d3"] = energy_formula_d3
    else:
        evaluators["hulthen"] = energy_formula_hulthen
    for name, fn in evaluators.items():
        try:
            val = fn(qn, spec)
        except PrintedFormulaSingularError:
            val = None
        out[f"E_{name}"] = val
        out[f"diff_{name}"] = None if (val is None or ref is None) else abs(val - ref)
    try:
        out["E_printed_condition"] = solve_printed_condition(qn, spec)
    except (DegenerateConditionError, BranchViolationError):
        out["E_printed_condition"] = None
    return out
