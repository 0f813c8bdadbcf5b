"""Analytic radial eigenfunctions of the Pekeris-approximated equation.

With t = exp(-(r - shift)/a) the solution regular at r -> infinity is

    u(r) = N t**eps (1 + q t)**nu 2F1(-n, n + 2 eps - q zeta + 1; 1 + 2 eps; -q t),

nu = (1 - q zeta)/2.  Substituting back into the radial equation shows this
is the form that solves it; ``hyp_B_printed`` keeps the published parameter
(n + 2 eps + q zeta - q, argument t) for comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (DomainError, InvalidParameterError, NoBoundStateError,
                     NotNormalizableError, PoleError)
from .numerics import _gauss_legendre
from .params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength
from .pekeris import PekerisCoefficients, approx_inverse_r2, coefficients_for

TAIL_LOG10 = 30.0  # truncate where t**(2 eps) < 1e-30


def decay_exponent(E: float, qn: QuantumNumbers, spec: PotentialSpec) -> float:
    """eps = a sqrt(b d0 / mass_term - E / mass_term) (dimensionless)."""
    _, delta2 = centrifugal_strength(qn, spec.mass_term)
    c = coefficients_for(spec, delta2)
    rad = (c.b * c.d0 - E) / spec.mass_term
    if not rad > 0:
        raise NoBoundStateError(f"E = {E} is not below the asymptote b d0 = {c.b * c.d0}",
                                energy=E)
    return spec.a * math.sqrt(rad)


def nu_zeta(qn: QuantumNumbers, spec: PotentialSpec,
            coeffs: PekerisCoefficients | None = None) -> tuple[float, float]:
    """(nu, zeta); minus branch for Woods-Saxon, plus branch for Hulthen."""
    if coeffs is None or coeffs.b == 0:
        _, delta2 = centrifugal_strength(qn, spec.mass_term)
        coeffs = coefficients_for(spec, delta2)
    g2 = spec.a ** 2 * coeffs.b * coeffs.d2 / spec.mass_term
    disc = 1 + 4 * g2 / (spec.q * spec.q)
    if disc < 0:
        raise InvalidParameterError(f"1 + 4 g2 = {disc} < 0")
    zeta = math.sqrt(disc)
    nu = (1 - zeta) / 2 if spec.family is Family.WOODS_SAXON else (1 + zeta) / 2
    return nu, zeta


# -- hypergeometric series --------------------------------------------------

def _check_terminating(A, C):
    if int(A) != A or A > 0:
        raise InvalidParameterError(f"A must be a non-positive integer, got {A}")
    if C <= 0 and int(C) == C:
        raise PoleError(f"C = {C} is a non-positive integer")


def gauss_2f1_terminating(A: int, B: float, C: float, z):
    """Terminating 2F1(A, B; C; z) for A = -n, by Pochhammer recurrence.

    Terms are formed in extended precision and accumulated with Neumaier
    compensated summation, since the alternating series cancels heavily for
    z near 1; array z is evaluated elementwise.
    """
    _check_terminating(A, C)
    n = -int(A)
    ext = np.longdouble
    z = np.asarray(z, dtype=ext)
    B, C = ext(B), ext(C)
    term = np.ones_like(z)
    total = np.ones_like(z)
    comp = np.zeros_like(z)
    for k in range(n):
        term = term * ((A + k) * (B + k) / ((C + k) * (k + 1))) * z
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp += np.where(big, (total - t) + term, (term - t) + total)
        total = t
    out = (total + comp).astype(float)
    return out if out.ndim else float(out)


def gauss_2f1_terminating_deriv(A: int, B: float, C: float, z):
    """d/dz of the terminating series, (A B / C) 2F1(A+1, B+1; C+1; z)."""
    if A == 0:
        z = np.asarray(z, dtype=float)
        out = np.zeros_like(z)
        return out if out.ndim else 0.0
    return A * B / C * np.asarray(gauss_2f1_terminating(A + 1, B + 1, C + 1, z))


def jacobi_recurrence(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the standard three-term recurrence."""
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + alpha + beta
        a1 = 2 * k * (k + alpha + beta) * (s - 2)
        a2 = (s - 1) * (alpha * alpha - beta * beta)
        a3 = (s - 2) * (s - 1) * s
        a4 = 2 * (k + alpha - 1) * (k + beta - 1) * s
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1


def jacobi_via_2f1(n: int, alpha: float, beta: float, x):
    """P_n^(alpha, beta)(1 - 2x) from the hypergeometric series."""
    pref = math.exp(math.lgamma(alpha + 1 + n) - math.lgamma(alpha + 1) - math.lgamma(n + 1))
    return pref * np.asarray(gauss_2f1_terminating(-n, n + alpha + beta + 1, alpha + 1, x))


# -- wavefunction ------------------------------------------------------------

@dataclass
class RadialWavefunction:
    qn: QuantumNumbers
    spec: PotentialSpec
    E: float
    eps_tilde: float
    nu: float
    zeta: float
    hyp_A: int
    hyp_B: float
    hyp_C: float
    norm: float = 1.0
    normalized: bool = False

    @classmethod
    def from_energy(cls, qn: QuantumNumbers, spec: PotentialSpec, E: float) -> "RadialWavefunction":
        eps = decay_exponent(E, qn, spec)
        nu, zeta = nu_zeta(qn, spec)
        q = spec.q
        return cls(qn=qn, spec=spec, E=E, eps_tilde=eps, nu=nu, zeta=zeta,
                   hyp_A=-qn.n, hyp_B=qn.n + 2 * eps - q * zeta + 1, hyp_C=1 + 2 * eps)

    @classmethod
    def from_level(cls, level, spec: PotentialSpec) -> "RadialWavefunction":
        return cls.from_energy(level.qn, spec, level.E)

    @property
    def hyp_B_printed(self) -> float:
        q = self.spec.q
        return self.qn.n + 2 * self.eps_tilde + q * self.zeta - q

    @property
    def r_max(self) -> float:
        return self.spec.shift + TAIL_LOG10 * math.log(10) * self.spec.a / (2 * self.eps_tilde)

    def raw(self, r, printed: bool = False):
        """Unnormalized u(r); ``printed=True`` uses the published B and argument."""
        s = self.spec
        t = s.t_of_r(r)
        if printed:
            F = gauss_2f1_terminating(self.hyp_A, self.hyp_B_printed, self.hyp_C, t)
        else:
            F = gauss_2f1_terminating(self.hyp_A, self.hyp_B, self.hyp_C, -s.q * t)
        return t ** self.eps_tilde * (1 + s.q * t) ** self.nu * F

    def __call__(self, r):
        return self.norm * self.raw(r)

    def derivative(self, r):
        """du/dr from the analytic log-derivative of each factor."""
        s = self.spec
        t = s.t_of_r(r)
        z = -s.q * t
        F = np.asarray(gauss_2f1_terminating(self.hyp_A, self.hyp_B, self.hyp_C, z))
        dF = np.asarray(gauss_2f1_terminating_deriv(self.hyp_A, self.hyp_B, self.hyp_C, z))
        pre = t ** self.eps_tilde * (1 + s.q * t) ** self.nu
        # d/dt of pre*F, then dt/dr = -t/a
        d_dt = pre * ((self.eps_tilde / t + s.q * self.nu / (1 + s.q * t)) * F - s.q * dF)
        return self.norm * d_dt * (-t / s.a)


def radial_u(r, wf: RadialWavefunction):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("radial_u needs r > 0")
    out = wf(r)
    return out if np.ndim(out) else float(out)


def _norm_integral(wf: RadialWavefunction, panels: int) -> float:
    x, w = _gauss_legendre(32)
    edges = np.linspace(0.0, wf.r_max, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    r = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wt = (half[:, None] * w[None, :]).ravel()
    u = wf.raw(r)
    return float(np.dot(wt, u * u))


def normalize(wf: RadialWavefunction, panels: int = 64, rtol: float = 1e-12,
              max_panels: int = 2 ** 14) -> float:
    """Set ``wf.norm`` so that int_0^inf u**2 dr = 1 and return it."""
    if not wf.eps_tilde > 0:
        raise NotNormalizableError("eps <= 0: the tail does not decay")
    prev = _norm_integral(wf, panels)
    while True:
        panels *= 2
        cur = _norm_integral(wf, panels)
        if abs(cur - prev) <= rtol * cur:
            break
        if panels >= max_panels:
            raise NotNormalizableError("normalization integral did not converge")
        prev = cur
    if not (cur > 0 and math.isfinite(cur)):
        raise NotNormalizableError(f"norm integral {cur}")
    wf.norm = 1.0 / math.sqrt(cur)
    wf.normalized = True
    return wf.norm


def norm_integral(wf: RadialWavefunction, panels: int = 1024) -> float:
    """int_0^r_max (norm * raw)**2 dr at fixed resolution."""
    return wf.norm ** 2 * _norm_integral(wf, panels)


def _sign_changes(fun, r_lo: float, r_hi: float, samples: int, tol: float) -> int:
    r = np.linspace(r_lo, r_hi, samples)
    v = np.asarray(fun(r))
    count = 0
    idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
    for i in idx:
        lo, hi = r[i], r[i + 1]
        flo = v[i]
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            fm = float(fun(mid))
            if fm == 0:
                break
            if np.sign(fm) == np.sign(flo):
                lo, flo = mid, fm
            else:
                hi = mid
        count += 1
    return count


def node_count(wf: RadialWavefunction, samples: int = 20001) -> int:
    """Strict sign changes of u on (0, r_max)."""
    tol = 1e-10 * wf.spec.a
    return _sign_changes(wf.raw, tol, wf.r_max, samples, tol)


def phi_zero_count(wf: RadialWavefunction, samples: int = 20001) -> int:
    """Zeros of phi = u'/u, i.e. sign changes of u', on (0, r_max)."""
    tol = 1e-10 * wf.spec.a
    return _sign_changes(wf.derivative, tol, wf.r_max, samples, tol)


def total_radial_factor(r, wf: RadialWavefunction):
    r = np.asarray(r, dtype=float)
    out = r ** (-(wf.qn.D - 1) / 2) * wf(r)
    return out if np.ndim(out) else float(out)


def effective_potential_r(r, wf: RadialWavefunction, exact: bool = False):
    s = wf.spec
    _, delta2 = centrifugal_strength(wf.qn, s.mass_term)
    r = np.asarray(r, dtype=float)
    if exact:
        return s.potential(r) + delta2 / (r * r)
    c = coefficients_for(s)
    return s.potential(r) + delta2 * approx_inverse_r2(r, s, c)


def ode_residual(wf: RadialWavefunction, r, h: float | None = None, exact: bool = False):
    """|u'' + (E - V_eff) u / M| / (|E| / M * max|u|) with a five-point stencil."""
    s = wf.spec
    r = np.asarray(r, dtype=float)
    # local step: the solution varies on the scale min(a, r) near the origin
    h = np.asarray(h if h is not None else 2e-3 * np.minimum(s.a, np.abs(r)), dtype=float)
    if not s.q > 0 and np.any(r - 2 * h <= 0):
        raise DomainError("stencil reaches r <= 0")
    u = [wf(r + k * h) for k in (-2, -1, 0, 1, 2)]
    d2 = (-u[0] + 16 * u[1] - 30 * u[2] + 16 * u[3] - u[4]) / (12 * h * h)
    res = d2 + (wf.E - effective_potential_r(r, wf, exact)) / s.mass_term * u[2]
    scale = abs(wf.E) / s.mass_term * np.max(np.abs(u[2]))
    return np.abs(res) / scale
