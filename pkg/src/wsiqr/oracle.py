"""Finite-difference eigensolver for the radial equation.

-M u'' + V_eff(r) u = E u on a uniform grid with Dirichlet ends; the
three-point Laplacian gives a symmetric tridiagonal matrix whose lowest
eigenpairs come from Sturm bisection plus inverse iteration (LAPACK
stebz/stein via scipy).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import GridMismatchError, InvalidParameterError, OracleError
from .params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength
from .pekeris import approx_inverse_r2, coefficients_for

DEFAULT_POINTS = 4000


class CentrifugalMode(enum.Enum):
    EXACT = "exact"
    PEKERIS = "pekeris"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise InvalidParameterError(f"unknown centrifugal mode {text!r}") from None


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    n_points: int
    whole_line: bool = False  # allow r_min <= 0 (Pekeris mode only)

    def __post_init__(self):
        lo_ok = self.whole_line or self.r_min > 0
        if not (lo_ok and self.r_min < self.r_max):
            raise InvalidParameterError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if int(self.n_points) != self.n_points or self.n_points < 100:
            raise InvalidParameterError(f"n_points must be an integer >= 100, got {self.n_points}")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points + 1)

    @property
    def r(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.n_points + 1)

    def refined(self) -> "RadialGrid":
        """Same end points, half the spacing."""
        return RadialGrid(self.r_min, self.r_max, 2 * (self.n_points + 1) - 1, self.whole_line)


def default_grid(spec: PotentialSpec, n_points: int = DEFAULT_POINTS,
                 r_max: float | None = None) -> RadialGrid:
    # The Hulthen well is Coulomb-like at the origin; a wall at 1e-4 shifts
    # s-wave levels at the 1e-4 level, so it sits much closer to r = 0.
    r_min = 1e-4 if spec.family is Family.WOODS_SAXON else 1e-10
    if r_max is None:
        r_max = spec.shift + 30 * spec.a
    return RadialGrid(r_min, r_max, n_points)


def whole_line_grid(spec: PotentialSpec, n_points: int = DEFAULT_POINTS,
                    depth: float = 30.0) -> RadialGrid:
    """Grid on [shift - depth a, shift + depth a] for the Pekeris equation on the full line.

    The q = +1 analytic solutions are eigenfunctions of this problem; on the
    half-line they only agree when u(0) is negligible.
    """
    if spec.q < 0:
        raise InvalidParameterError("the Hulthen equation has a pole at r = 0")
    return RadialGrid(spec.shift - depth * spec.a, spec.shift + depth * spec.a, n_points, True)


def effective_potential(r, spec: PotentialSpec, qn: QuantumNumbers, mode) -> np.ndarray:
    mode = CentrifugalMode.parse(mode)
    lam, delta2 = centrifugal_strength(qn, spec.mass_term)
    r = np.asarray(r, dtype=float)
    if mode is CentrifugalMode.EXACT:
        return spec.potential(r) + lam / (r * r)
    return spec.potential(r) + delta2 * approx_inverse_r2(r, spec, coefficients_for(spec))


def build_hamiltonian(spec: PotentialSpec, qn: QuantumNumbers, grid: RadialGrid,
                      mode=CentrifugalMode.EXACT) -> tuple[np.ndarray, np.ndarray]:
    """Return (diagonal, off-diagonal) of the symmetric tridiagonal Hamiltonian."""
    h2 = grid.h * grid.h
    if grid.whole_line and CentrifugalMode.parse(mode) is not CentrifugalMode.PEKERIS:
        raise InvalidParameterError("whole-line grids need the Pekeris centrifugal term")
    diag = 2 * spec.mass_term / h2 + effective_potential(grid.r, spec, qn, mode)
    off = np.full(grid.n_points - 1, -spec.mass_term / h2)
    return diag, off


@dataclass(frozen=True)
class OracleSpectrum:
    mode: CentrifugalMode
    grid: RadialGrid
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k is eigenvector k, sum(v**2) h = 1


def _fix_vectors(vecs: np.ndarray, h: float) -> np.ndarray:
    vecs = vecs / np.sqrt(h * np.sum(vecs * vecs, axis=0))
    # sign convention: first sizeable component positive
    for k in range(vecs.shape[1]):
        col = vecs[:, k]
        idx = np.argmax(np.abs(col) > 1e-3 * np.abs(col).max())
        if col[idx] < 0:
            vecs[:, k] = -col
    return vecs


def eigen_lowest(diag: np.ndarray, off: np.ndarray, count: int, h: float = 1.0,
                 vectors: bool = True):
    """Lowest ``count`` eigenpairs; returns (values, vectors or None)."""
    if count < 1:
        raise InvalidParameterError("count must be >= 1")
    count = min(count, len(diag))
    try:
        if vectors:
            w, v = eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1))
        else:
            w = eigh_tridiagonal(diag, off, eigvals_only=True, select="i",
                                 select_range=(0, count - 1))
            v = None
    except np.linalg.LinAlgError as exc:
        raise OracleError(f"tridiagonal eigensolver failed: {exc}") from exc
    if np.any(np.diff(w) <= 0):
        raise OracleError("eigenvalues are not strictly increasing")
    return w, (_fix_vectors(v, h) if vectors else None)


def sturm_count(diag: np.ndarray, off: np.ndarray, shift: float) -> int:
    """Number of eigenvalues strictly below ``shift`` (LDL^T pivot signs)."""
    count = 0
    d = diag[0] - shift
    tiny = np.finfo(float).tiny
    for i in range(len(diag)):
        if i:
            d = diag[i] - shift - off[i - 1] ** 2 / d
        if d == 0:
            d = -tiny
        if d < 0:
            count += 1
    return count


def solve(spec: PotentialSpec, qn: QuantumNumbers, count: int, mode=CentrifugalMode.EXACT,
          grid: RadialGrid | None = None, vectors: bool = True) -> OracleSpectrum:
    mode = CentrifugalMode.parse(mode)
    grid = grid or default_grid(spec)
    diag, off = build_hamiltonian(spec, qn, grid, mode)
    w, v = eigen_lowest(diag, off, count, grid.h, vectors)
    return OracleSpectrum(mode, grid, w, v)


@dataclass(frozen=True)
class OracleLevels:
    mode: CentrifugalMode
    energies: np.ndarray
    errors: np.ndarray
    coarse: np.ndarray
    fine: np.ndarray
    flags: tuple[str, ...] = field(default=())


def oracle_levels(spec: PotentialSpec, l: int, D: int, count: int, mode=CentrifugalMode.EXACT,
                  grid: RadialGrid | None = None) -> OracleLevels:
    """Richardson-extrapolated (N, 2N) bound-state energies, E < 0 only."""
    mode = CentrifugalMode.parse(mode)
    qn = QuantumNumbers(0, l, D)
    grid = grid or default_grid(spec)
    e1 = solve(spec, qn, count, mode, grid, vectors=False).eigenvalues
    e2 = solve(spec, qn, count, mode, grid.refined(), vectors=False).eigenvalues
    k = min(len(e1), len(e2))
    e1, e2 = e1[:k], e2[:k]
    ext = (4 * e2 - e1) / 3
    err = np.abs(e2 - e1) / 3
    keep = ext < 0
    # bound states are the leading entries
    nb = int(np.argmin(keep)) if not keep.all() else k
    flags = () if nb >= count else ("fewer-bound-states",)
    return OracleLevels(mode, ext[:nb], err[:nb], e1[:nb], e2[:nb], flags)


def sample_normalized(u_values: np.ndarray, grid: RadialGrid) -> np.ndarray:
    u = np.asarray(u_values, dtype=float)
    return u / math.sqrt(grid.h * float(np.dot(u, u)))


def overlap(u_grid: np.ndarray, vec: np.ndarray, grid: RadialGrid) -> float:
    """|sum u v h| for two grid functions normalized on ``grid``."""
    u_grid = np.asarray(u_grid, dtype=float)
    vec = np.asarray(vec, dtype=float)
    if u_grid.shape != vec.shape or u_grid.shape[0] != grid.n_points:
        raise GridMismatchError(f"shapes {u_grid.shape} and {vec.shape} vs grid {grid.n_points}")
    return abs(float(np.dot(u_grid, vec)) * grid.h)


def sign_changes(vec: np.ndarray, rel_floor: float = 1e-8) -> int:
    """Sign changes ignoring components below ``rel_floor`` * max|vec|."""
    v = np.asarray(vec, dtype=float)
    v = v[np.abs(v) > rel_floor * np.abs(v).max()]
    return int(np.count_nonzero(np.sign(v[:-1]) != np.sign(v[1:])))
