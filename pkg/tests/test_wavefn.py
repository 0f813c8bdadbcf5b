import math

import numpy as np
import pytest
from scipy.special import eval_jacobi, hyp2f1

from wsiqr import oracle as orc
from wsiqr import spectrum as sp
from wsiqr import wavefn as wfn
from wsiqr.errors import NoBoundStateError, PoleError
from wsiqr.params import PotentialSpec, QuantumNumbers

HUL = PotentialSpec.hulthen(0.1, 0.2, mass_term=1.0)
DEEP_WS = PotentialSpec.woods_saxon(V0=800.0, R0=5.0, a=1.0)


def make(spec, qn):
    w = wfn.RadialWavefunction.from_level(sp.solve_energy(qn, spec), spec)
    wfn.normalize(w)
    return w


def test_2f1_small_cases():
    assert wfn.gauss_2f1_terminating(0, 3.3, 1.7, 0.4) == 1.0
    assert wfn.gauss_2f1_terminating(-1, 3.3, 1.7, 0.4) == pytest.approx(1 - 3.3 / 1.7 * 0.4)
    with pytest.raises(PoleError):
        wfn.gauss_2f1_terminating(-2, 1.0, -1.0, 0.3)


def test_2f1_against_scipy():
    rng = np.random.default_rng(2)
    for _ in range(50):
        n = int(rng.integers(0, 9))
        B, C = rng.uniform(0.1, 6, 2)
        z = rng.uniform(-3, 1)
        ref = hyp2f1(-n, B, C, z)
        assert wfn.gauss_2f1_terminating(-n, B, C, z) == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_jacobi_identity():
    rng = np.random.default_rng(4)
    for _ in range(200):
        n = int(rng.integers(0, 11))
        A, B = rng.uniform(-0.99, 4, 2)
        x = rng.uniform(0, 1)
        ref = wfn.jacobi_recurrence(n, A, B, 1 - 2 * x)
        assert float(ref) == pytest.approx(eval_jacobi(n, A, B, 1 - 2 * x), rel=1e-12, abs=1e-12)
        assert abs(wfn.jacobi_via_2f1(n, A, B, x) - ref) < 1e-10 * max(1, abs(ref))


def test_decay_and_nu_zeta():
    qn = QuantumNumbers(0, 0, 3)
    assert wfn.decay_exponent(-0.16, qn, HUL) == pytest.approx(HUL.a * 0.4)
    nu, zeta = wfn.nu_zeta(qn, HUL)
    assert zeta == 1.0 and nu == 1.0
    nu, zeta = wfn.nu_zeta(qn, PotentialSpec.woods_saxon())
    assert zeta == 1.0 and nu == 0.0
    with pytest.raises(NoBoundStateError):
        wfn.decay_exponent(0.1, qn, HUL)
    for spec, q3 in ((HUL, QuantumNumbers(1, 2, 3)), (DEEP_WS, QuantumNumbers(0, 19, 3))):
        nu, zeta = wfn.nu_zeta(q3, spec)
        ch = sp.Channel.from_state(spec, q3)
        assert nu * (nu - 1) == pytest.approx(spec.a ** 2 * ch.b * ch.coeffs.d2 / spec.mass_term, rel=1e-12)


@pytest.mark.parametrize("n,l,D", [(0, 0, 3), (1, 0, 3), (2, 0, 3), (1, 1, 3), (1, 1, 4)])
def test_hulthen_wavefunctions(n, l, D):
    qn = QuantumNumbers(n, l, D)
    w = make(HUL, qn)
    assert wfn.norm_integral(w) == pytest.approx(1.0, abs=1e-8)
    assert wfn.node_count(w) == n
    assert wfn.phi_zero_count(w) == n + 1
    r = np.linspace(0.5, w.r_max / 2, 300)
    assert np.max(wfn.ode_residual(w, r)) < 1e-6


def test_printed_parameters_fail_ode():
    qn = QuantumNumbers(1, 0, 3)
    w = make(HUL, qn)
    r = np.linspace(1.0, 60.0, 100)
    h = 2e-3 * HUL.a
    u = [w.raw(r + k * h, printed=True) for k in (-2, -1, 0, 1, 2)]
    d2 = (-u[0] + 16 * u[1] - 30 * u[2] + 16 * u[3] - u[4]) / (12 * h * h)
    res = np.abs(d2 + (w.E - wfn.effective_potential_r(r, w)) * u[2] / HUL.mass_term)
    assert np.max(res) / (abs(w.E) * np.max(np.abs(u[2]))) > 1e-2
    # ground state: both forms coincide
    w0 = make(HUL, QuantumNumbers(0, 0, 3))
    assert np.allclose(w0.raw(r, printed=True), w0.raw(r))


def test_residual_fourth_order():
    w = make(HUL, QuantumNumbers(2, 0, 3))
    r = np.linspace(5.0, 60.0, 50)
    e1 = np.max(wfn.ode_residual(w, r, h=0.4))
    e2 = np.max(wfn.ode_residual(w, r, h=0.2))
    assert 10 < e1 / e2 < 22


def test_normalization_properties():
    qn = QuantumNumbers(1, 1, 3)
    w = make(HUL, qn)
    r = np.linspace(1, 80, 40)
    base = w(r)
    w2 = wfn.RadialWavefunction.from_level(sp.solve_energy(qn, HUL), HUL)
    w2.norm = 7.0
    wfn.normalize(w2)
    assert np.allclose(w2(r), base, rtol=1e-12)
    n1 = w.norm
    assert wfn._norm_integral(w, 4096) == pytest.approx(wfn._norm_integral(w, 2048), rel=1e-9)
    assert math.isfinite(n1)


def test_total_radial_factor():
    w = make(HUL, QuantumNumbers(0, 1, 3))
    r = np.array([0.5, 2.0, 9.0])
    assert np.allclose(wfn.total_radial_factor(r, w), w(r) / r)
    w2 = make(HUL, QuantumNumbers(0, 1, 2))
    assert wfn.total_radial_factor(1.0, w2) == pytest.approx(float(w2(1.0)))


def test_tail_slope():
    w = make(HUL, QuantumNumbers(1, 0, 3))
    r1, r2 = 150.0, 160.0
    slope = (math.log(abs(w(r2))) - math.log(abs(w(r1)))) / (r2 - r1)
    assert slope == pytest.approx(-w.eps_tilde / HUL.a, rel=1e-3)


def test_decay_matches_oracle_tail():
    qn = QuantumNumbers(0, 19, 3)
    E = sp.solve_energy(qn, DEEP_WS).E
    eps = wfn.decay_exponent(E, qn, DEEP_WS)
    grid = orc.whole_line_grid(DEEP_WS)
    vec = orc.solve(DEEP_WS, qn, 1, "pekeris", grid).eigenvectors[:, 0]
    r = grid.r
    sel = (r > DEEP_WS.R0 + 6) & (r < DEEP_WS.R0 + 12)
    fit = np.polyfit(r[sel] / DEEP_WS.a, np.log(np.abs(vec[sel])), 1)[0]
    assert fit == pytest.approx(-eps, rel=0.01)


def test_whole_line_ws_overlap_and_nodes():
    for qn in (QuantumNumbers(0, 20, 3), QuantumNumbers(1, 20, 3)):
        w = make(DEEP_WS, qn)
        grid = orc.whole_line_grid(DEEP_WS)
        vecs = orc.solve(DEEP_WS, qn, qn.n + 1, "pekeris", grid).eigenvectors
        u = orc.sample_normalized(w.raw(grid.r), grid)
        assert orc.overlap(u, vecs[:, qn.n], grid) > 0.999
        assert orc.sign_changes(vecs[:, qn.n]) == qn.n
        assert wfn.node_count(w) == qn.n
