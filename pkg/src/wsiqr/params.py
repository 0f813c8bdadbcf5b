"""Physical parameters, unit conventions and D-dimensional centrifugal factors.

All arithmetic is in MeV and fm.  ``mass_term`` is hbar**2 / (2 mu) and is
always passed explicitly; the default corresponds to a nucleon.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

DEFAULT_MASS_TERM = 20.7355  # MeV fm^2, hbar^2 c^2 / (2 * 939 MeV)
DEFAULT_V0 = 50.0
DEFAULT_R0_COEFF = 1.25
DEFAULT_A = 0.6
DEFAULT_MASS_NUMBER = 64


class Family(enum.Enum):
    WOODS_SAXON = "woods-saxon"
    HULTHEN = "hulthen"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower().replace("_", "-").replace("é", "e")
        aliases = {"ws": cls.WOODS_SAXON, "woods-saxon": cls.WOODS_SAXON,
                   "woodssaxon": cls.WOODS_SAXON, "hulthen": cls.HULTHEN}
        try:
            return aliases[key]
        except KeyError:
            raise InvalidParameterError(f"unknown potential family {text!r}") from None


def derive_radius(r0: float, mass_number: int) -> float:
    """Nuclear radius ``r0 * A**(1/3)`` in fm."""
    if not r0 > 0:
        raise InvalidParameterError(f"r0 must be positive, got {r0}")
    if int(mass_number) != mass_number or mass_number < 1:
        raise InvalidParameterError(f"mass number must be an integer >= 1, got {mass_number}")
    # cbrt is exact on perfect cubes, unlike ** (1/3)
    return r0 * float(np.cbrt(float(mass_number)))


@dataclass(frozen=True)
class PotentialSpec:
    """Deformed Woods-Saxon / Hulthen well.

    V(r) = -V0 t / (1 + q t) with t = exp(-(r - shift) / a).  For the
    Woods-Saxon family ``shift = R0``; for the Hulthen family ``R0 = 1`` and the
    exponential is measured from the origin so the pole of 1/(1 - t) sits at
    r = 0.
    """

    V0: float
    R0: float
    a: float
    q: float
    Q: float
    mass_term: float
    family: Family

    def __post_init__(self):
        for name in ("V0", "R0", "a", "mass_term"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be positive and finite, got {value}")
        alpha = self.R0 / self.a
        if not math.isfinite(alpha):
            raise InvalidParameterError("R0/a must be finite")
        if self.family is Family.WOODS_SAXON:
            if self.q != 1 or self.Q != 1:
                raise InvalidParameterError("Woods-Saxon requires q = +1 and Q = 1")
        elif self.family is Family.HULTHEN:
            if self.q != -1 or self.R0 != 1:
                raise InvalidParameterError("Hulthen requires q = -1 and R0 = 1")
            if not math.isclose(self.Q, alpha, rel_tol=1e-14):
                raise InvalidParameterError("Hulthen requires Q = alpha = R0/a")
        else:  # pragma: no cover - enum exhausted
            raise InvalidParameterError(f"unknown family {self.family}")

    @classmethod
    def woods_saxon(cls, V0: float = DEFAULT_V0, R0: float | None = None,
                    a: float = DEFAULT_A, mass_term: float = DEFAULT_MASS_TERM,
                    r0: float = DEFAULT_R0_COEFF,
                    mass_number: int = DEFAULT_MASS_NUMBER) -> "PotentialSpec":
        if R0 is None:
            R0 = derive_radius(r0, mass_number)
        return cls(V0=V0, R0=R0, a=a, q=1.0, Q=1.0, mass_term=mass_term,
                   family=Family.WOODS_SAXON)

    @classmethod
    def hulthen(cls, alpha: float, V0: float,
                mass_term: float = DEFAULT_MASS_TERM) -> "PotentialSpec":
        """Hulthen well -V0 e^{-alpha r} / (1 - e^{-alpha r}); V0 = alpha Z e^2."""
        if not alpha > 0:
            raise InvalidParameterError(f"alpha must be positive, got {alpha}")
        return cls(V0=V0, R0=1.0, a=1.0 / alpha, q=-1.0, Q=1.0 / (1.0 / alpha),
                   mass_term=mass_term, family=Family.HULTHEN)

    @property
    def alpha(self) -> float:
        return self.R0 / self.a

    @property
    def shift(self) -> float:
        return self.R0 if self.family is Family.WOODS_SAXON else 0.0

    @property
    def y_max(self) -> float:
        """Upper end of the physical y-domain (r -> 0); infinite for Hulthen."""
        if self.q > 0:
            return 1.0 / (1.0 + math.exp(-self.shift / self.a))
        return math.inf

    def t_of_r(self, r):
        return np.exp(-(np.asarray(r, dtype=float) - self.shift) / self.a)

    def y_of_r(self, r):
        t = self.t_of_r(r)
        denom = 1.0 + self.q * t
        return t / denom

    def potential(self, r):
        """Bare well -V0 y(r) (no centrifugal term)."""
        return -self.V0 * self.y_of_r(r)


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int
    D: int

    def __post_init__(self):
        for name, lo in (("n", 0), ("l", 0), ("D", 2)):
            value = getattr(self, name)
            if int(value) != value or value < lo:
                raise InvalidParameterError(f"{name} must be an integer >= {lo}, got {value}")

    @property
    def Lambda(self) -> int:
        return 2 * self.l + self.D - 2

    @property
    def angular_factor(self) -> float:
        """(l + (D-1)/2)(l + (D-3)/2); the centrifugal strength in units of mass_term."""
        return (self.l + (self.D - 1) / 2) * (self.l + (self.D - 3) / 2)

    @property
    def flags(self) -> tuple[str, ...]:
        # Lambda = 0 gives an attractive inverse-square term outside the
        # regime the Pekeris expansion was built for.
        return ("attractive-inverse-square",) if self.Lambda == 0 else ()

    def shifted(self, dl: int) -> "QuantumNumbers":
        """Interdimensional partner (n, l + dl, D - 2 dl)."""
        return QuantumNumbers(self.n, self.l + dl, self.D - 2 * dl)


def centrifugal_strength(qn: QuantumNumbers, mass_term: float) -> tuple[float, float]:
    """Return ``(lam, delta2)``; two routes to the same number.

    lam = (Lambda**2 - 1) mass_term / 4 and delta2 = mass_term (l+(D-1)/2)(l+(D-3)/2).
    """
    lam = (qn.Lambda ** 2 - 1) * mass_term / 4
    delta2 = mass_term * qn.angular_factor
    return lam, delta2
