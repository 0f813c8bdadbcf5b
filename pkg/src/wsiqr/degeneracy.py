"""Interdimensional degeneracy families (n, l, D) -> (n, l +- 1, D -+ 2)."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import WsIqrError
from .oracle import CentrifugalMode, RadialGrid, default_grid, oracle_levels
from .params import PotentialSpec, QuantumNumbers, centrifugal_strength
from .spectrum import solve_energy

D_MAX = 12


@dataclass(frozen=True)
class DegeneracyFamily:
    anchor: QuantumNumbers
    members: tuple[QuantumNumbers, ...]

    @property
    def Lambda(self) -> int:
        return self.anchor.Lambda

    def delta2(self, mass_term: float) -> float:
        return centrifugal_strength(self.anchor, mass_term)[1]


def family_of(anchor: QuantumNumbers, D_min: int = 2, D_max: int = D_MAX) -> DegeneracyFamily:
    lam = anchor.Lambda
    members = []
    for D in range(max(D_min, 2), D_max + 1):
        twice_l = lam + 2 - D
        if twice_l < 0 or twice_l % 2:
            continue
        members.append(QuantumNumbers(anchor.n, twice_l // 2, D))
    members.sort(key=lambda qn: qn.D)
    return DegeneracyFamily(anchor, tuple(members))


@dataclass
class MemberResult:
    qn: QuantumNumbers
    delta2: float
    E: float | None
    flag: str = ""


@dataclass
class FamilyReport:
    family: DegeneracyFamily
    members: list[MemberResult]
    bit_identical_inputs: bool
    bit_identical_energies: bool
    max_pairwise_diff: float | None
    oracle: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        oracle_ok = all(v["agree"] for v in self.oracle.values())
        return self.bit_identical_inputs and self.bit_identical_energies and oracle_ok


def _oracle_pair(spec, pair, mode, grid, n):
    out = []
    for qn in pair:
        lv = oracle_levels(spec, qn.l, qn.D, n + 1, mode, grid)
        if len(lv.energies) <= n:
            return None
        out.append((float(lv.energies[n]), float(lv.errors[n])))
    (e1, s1), (e2, s2) = out
    diff = abs(e1 - e2)
    return {"members": [tuple(vars(qn).values()) for qn in pair], "E": [e1, e2],
            "diff": diff, "estimate": max(s1, s2), "agree": diff <= max(s1, s2)}


def verify_family(family: DegeneracyFamily, spec: PotentialSpec,
                  oracle_pair: tuple[QuantumNumbers, QuantumNumbers] | None = None,
                  grid: RadialGrid | None = None,
                  modes=(CentrifugalMode.PEKERIS, CentrifugalMode.EXACT)) -> FamilyReport:
    if not family.members:
        raise ValueError("empty family")
    results = []
    for qn in family.members:
        d2 = centrifugal_strength(qn, spec.mass_term)[1]
        try:
            E = solve_energy(qn, spec).E
            results.append(MemberResult(qn, d2, E))
        except WsIqrError as exc:
            results.append(MemberResult(qn, d2, None, type(exc).__name__))
    d2s = {r.delta2 for r in results}
    energies = [r.E for r in results if r.E is not None]
    same_E = bool(energies) and len(set(energies)) == 1 and len(energies) == len(results)
    spread = float(np.ptp(energies)) if energies else None
    rep = FamilyReport(family, results, len(d2s) == 1, same_E, spread)
    if oracle_pair is not None:
        grid = grid or default_grid(spec)
        for mode in modes:
            res = _oracle_pair(spec, oracle_pair, CentrifugalMode.parse(mode), grid, family.anchor.n)
            rep.oracle[CentrifugalMode.parse(mode).value] = res or {"agree": False, "diff": None,
                                                                     "missing": True}
    return rep
