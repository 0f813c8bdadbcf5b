import math

import numpy as np
import pytest

from wsiqr import spectrum as sp
from wsiqr.errors import (BranchViolationError, DegenerateConditionError,
                          DegenerateQuadraticError, NoBoundStateError, NoClassicalRegionError,
                          SingularBranchError)
from wsiqr.params import PotentialSpec, QuantumNumbers
from wsiqr.verify import ws_sweep


def hulthen(alpha=0.1):
    return PotentialSpec.hulthen(alpha, 2 * alpha, mass_term=1.0)


DEEP_WS = PotentialSpec.woods_saxon(V0=300.0, R0=5.0, a=1.0)


def test_hulthen_exact_ladder():
    spec = hulthen()
    expected = [-0.9025, -0.16, -0.0336111111111111]
    for n, E in enumerate(expected):
        qn = QuantumNumbers(n, 0, 3)
        assert sp.solve_energy(qn, spec).E == pytest.approx(E, rel=1e-13)
        assert sp.energy_formula_hulthen(qn, spec) == pytest.approx(E, rel=1e-13)


def test_hulthen_worked_value():
    spec = hulthen(0.5)
    assert sp.energy_formula_hulthen(QuantumNumbers(0, 0, 3), spec) == pytest.approx(-0.5625, abs=1e-15)
    with pytest.raises(NoBoundStateError):
        sp.solve_energy(QuantumNumbers(1, 0, 3), spec)


def test_closed_vs_numeric_rule_hulthen():
    spec = hulthen()
    for qn in (QuantumNumbers(1, 0, 3), QuantumNumbers(0, 1, 3), QuantumNumbers(1, 1, 4)):
        assert sp.quantize_numeric(qn, spec).E == pytest.approx(sp.solve_energy(qn, spec).E, abs=1e-12)


def test_closed_vs_numeric_rule_deep_ws():
    qn = QuantumNumbers(0, 12, 3)
    lv = sp.solve_energy(qn, DEEP_WS)
    assert lv.valid and lv.flags == ()
    assert sp.quantize_numeric(qn, DEEP_WS).E == pytest.approx(lv.E, abs=1e-8)


def test_monotone_in_n():
    spec = hulthen(0.05)
    E = [sp.solve_energy(QuantumNumbers(n, 1, 3), spec).E for n in range(4)]
    assert all(a < b for a, b in zip(E, E[1:]))


def test_quantization_residual_zero_at_solution():
    qn = QuantumNumbers(2, 1, 3)
    spec = hulthen(0.05)
    ch = sp.Channel.from_state(spec, qn)
    E = sp.solve_energy(qn, spec).E
    assert abs(sp.quantization_residual(E, ch, qn.n)) < 1e-12
    assert abs(sp.quantization_residual(E * 1.01, ch, qn.n)) > 1e-6


def test_default_ws_has_no_analytic_levels():
    ws = PotentialSpec.woods_saxon()
    with pytest.raises(DegenerateConditionError):
        sp.solve_energy(QuantumNumbers(0, 0, 3), ws)
    with pytest.raises(NoBoundStateError) as info:
        sp.solve_energy(QuantumNumbers(0, 1, 3), ws)
    assert info.value.energy is not None
    assert info.value.diagnostics["rho"] < 0


def test_ground_state_consistency():
    ch = sp.Channel.from_state(DEEP_WS, QuantumNumbers(0, 12, 3))
    gs = sp.ground_state(ch)
    eps, rho, E = sp.solve_condition(ch, 0)
    assert gs.bound
    assert gs.eps0 == pytest.approx(eps, rel=1e-12)
    assert gs.rho0 == pytest.approx(rho, rel=1e-12)
    assert gs.E0 == pytest.approx(E, rel=1e-12)
    # m * (m + q) = g2
    assert ch.m * (ch.m + ch.q) == pytest.approx(ch.g2, rel=1e-13)


def test_singular_branch():
    ws = PotentialSpec.woods_saxon()
    ch = sp.Channel.from_state(ws, QuantumNumbers(0, 0, 3))
    with pytest.raises(SingularBranchError):
        sp.ground_state(ch)
    with pytest.raises(SingularBranchError):
        sp.quantum_correction_closed(ch)


def test_turning_points_identities():
    ch = sp.Channel.from_state(DEEP_WS, QuantumNumbers(0, 12, 3))
    lo, hi = sp.energy_window(ch)
    E = 0.5 * (lo + hi)
    tp = sp.turning_points(E, DEEP_WS, ch.coeffs)
    V = sp.effective_potential_y(np.array([tp.yA, tp.yB]), DEEP_WS, ch.coeffs)
    assert np.allclose(V, E, rtol=1e-12, atol=1e-10)
    assert sp.momentum_y(tp.yA, E, DEEP_WS, ch.coeffs, tp) == pytest.approx(0, abs=1e-6)
    with pytest.raises(NoClassicalRegionError):
        sp.turning_points(lo - 10, DEEP_WS, ch.coeffs)


def test_turning_points_degenerate():
    ws = PotentialSpec.woods_saxon()
    ch = sp.Channel.from_state(ws, QuantumNumbers(0, 0, 3))
    with pytest.raises(DegenerateQuadraticError):
        sp.turning_points(-10.0, ws, ch.coeffs)


def test_corrected_formulas_vs_quadrature_sweep():
    rng = np.random.default_rng(11)
    for spec, qn, _ in ws_sweep(rng, count=10):
        ch = sp.Channel.from_state(spec, qn)
        qc = sp.quantum_correction_numeric(ch)
        assert sp.quantum_correction_closed(ch) == pytest.approx(qc, rel=1e-8)
        lo, hi = sp.energy_window(ch)
        E = lo + 0.3 * (hi - lo)
        num = sp.momentum_integral_numeric(E, spec, ch.coeffs)
        assert sp.momentum_integral_closed(E, spec, ch.coeffs) == pytest.approx(num, rel=1e-10)


def test_printed_formulas_disagree_with_quadrature():
    spec = hulthen()
    ch = sp.Channel.from_state(spec, QuantumNumbers(0, 1, 3))
    qc = sp.quantum_correction_numeric(ch)
    assert abs(sp.quantum_correction_printed(ch) - qc) > 1.0
    E = sp.solve_energy(QuantumNumbers(0, 1, 3), spec).E
    num = sp.momentum_integral_numeric(E, spec, ch.coeffs)
    assert sp.momentum_integral_printed(E, spec, ch.coeffs) == pytest.approx(-num, rel=1e-10)


def test_hulthen_s_wave_limit_numeric():
    spec = hulthen()
    ch = sp.Channel.from_state(spec, QuantumNumbers(0, 0, 3))
    assert ch.b == 0
    assert sp.quantum_correction_numeric(ch) == pytest.approx(0.0, abs=1e-12)
    E = -0.16
    closed = sp.momentum_integral_closed(E, spec, ch.coeffs)
    assert sp.momentum_integral_numeric(E, spec, ch.coeffs) == pytest.approx(closed, rel=1e-12)


def test_printed_spectra_agree_when_level_exists():
    for qn in (QuantumNumbers(0, 12, 3),):
        E = sp.solve_energy(qn, DEEP_WS).E
        for fn in (sp.energy_formula_general, sp.energy_formula_ws, sp.energy_formula_d3):
            assert fn(qn, DEEP_WS) == pytest.approx(E, rel=1e-12)
    spec = hulthen()
    qn = QuantumNumbers(1, 1, 4)
    assert sp.energy_formula_general(qn, spec) == pytest.approx(sp.solve_energy(qn, spec).E, rel=1e-12)


def test_printed_condition_reduction():
    spec = hulthen()
    qn = QuantumNumbers(2, 0, 3)
    assert sp.solve_printed_condition(qn, spec) == pytest.approx(sp.solve_energy(qn, spec).E, rel=1e-12)
    qn = QuantumNumbers(0, 12, 3)
    assert abs(sp.solve_printed_condition(qn, DEEP_WS) - sp.solve_energy(qn, DEEP_WS).E) > 100


def test_branch_violation():
    spec = hulthen()
    ch = sp.Channel.from_state(spec, QuantumNumbers(0, 1, 3))
    with pytest.raises(BranchViolationError):
        sp.momentum_integral_closed(ch.asymptote + 1.0, spec, ch.coeffs)


def test_trust_region_flag():
    # shallow radius pushes the inner turning point past r = 0
    spec = PotentialSpec.woods_saxon(V0=300.0, R0=2.0, a=0.4)
    flagged = []
    for l in range(1, 30):
        try:
            lv = sp.solve_energy(QuantumNumbers(0, l, 3), spec)
        except Exception:
            continue
        if "outside-trust-region" in lv.flags:
            flagged.append(lv)
    for lv in flagged:
        assert not lv.valid and lv.diagnostics["yB"] > spec.y_max


def test_degenerate_members_share_everything():
    spec = hulthen(0.05)
    a = sp.solve_energy(QuantumNumbers(0, 3, 4), spec)
    b = sp.solve_energy(QuantumNumbers(0, 1, 8), spec)
    assert a.E == b.E
    assert a.diagnostics == b.diagnostics
