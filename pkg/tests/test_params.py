import math

import pytest

from wsiqr.errors import InvalidParameterError
from wsiqr.params import Family, PotentialSpec, QuantumNumbers, centrifugal_strength, derive_radius


def test_derive_radius_examples():
    assert derive_radius(1.25, 64) == 5.0
    assert derive_radius(1.25, 1) == 1.25
    r = derive_radius(1.25, 56)
    assert math.isclose((r / 1.25) ** 3, 56, rel_tol=1e-14)
    assert math.isclose(r, 4.78233, rel_tol=1e-6)


@pytest.mark.parametrize("r0,A", [(0.0, 10), (-1.0, 10), (1.25, 0), (1.25, 2.5)])
def test_derive_radius_rejects(r0, A):
    with pytest.raises(InvalidParameterError):
        derive_radius(r0, A)


@pytest.mark.parametrize("l,D,expected", [(0, 3, 0.0), (1, 3, 2.0), (0, 5, 2.0)])
def test_centrifugal_strength_examples(l, D, expected):
    lam, d2 = centrifugal_strength(QuantumNumbers(0, l, D), 1.0)
    assert lam == d2 == expected


def test_lambda_equals_delta2_everywhere():
    for D in range(2, 15):
        for l in range(0, 12):
            lam, d2 = centrifugal_strength(QuantumNumbers(0, l, D), 20.7355)
            assert lam == pytest.approx(d2, rel=1e-15, abs=1e-12)


def test_strength_invariant_under_shift():
    for l in range(1, 6):
        for D in range(2, 10):
            qn = QuantumNumbers(0, l, D)
            assert centrifugal_strength(qn, 3.3) == centrifugal_strength(qn.shifted(-1), 3.3)


def test_lambda_zero_flag():
    assert QuantumNumbers(0, 0, 2).Lambda == 0
    assert "attractive-inverse-square" in QuantumNumbers(0, 0, 2).flags
    assert QuantumNumbers(0, 1, 2).flags == ()
    assert centrifugal_strength(QuantumNumbers(0, 0, 2), 1.0)[0] == -0.25


@pytest.mark.parametrize("bad", [dict(n=-1, l=0, D=3), dict(n=0, l=-1, D=3), dict(n=0, l=0, D=1),
                                 dict(n=0.5, l=0, D=3)])
def test_quantum_numbers_validation(bad):
    with pytest.raises(InvalidParameterError):
        QuantumNumbers(**bad)


def test_spec_invariants():
    ws = PotentialSpec.woods_saxon()
    assert ws.R0 == 5.0 and ws.a == 0.6 and ws.V0 == 50.0 and ws.q == 1 and ws.Q == 1
    h = PotentialSpec.hulthen(0.5, 1.0, mass_term=1.0)
    assert h.R0 == 1 and h.q == -1 and h.Q == pytest.approx(h.alpha) and h.alpha == pytest.approx(0.5)
    with pytest.raises(InvalidParameterError):
        PotentialSpec(V0=50, R0=5, a=0.6, q=-1, Q=1, mass_term=1, family=Family.WOODS_SAXON)
    with pytest.raises(InvalidParameterError):
        PotentialSpec(V0=50, R0=2, a=0.6, q=-1, Q=2 / 0.6, mass_term=1, family=Family.HULTHEN)
    with pytest.raises(InvalidParameterError):
        PotentialSpec.woods_saxon(V0=-1)
    with pytest.raises(InvalidParameterError):
        PotentialSpec.woods_saxon(a=0)


def test_potential_shapes():
    ws = PotentialSpec.woods_saxon()
    assert ws.potential(ws.R0) == pytest.approx(-ws.V0 / 2)
    assert ws.potential(100.0) == pytest.approx(0.0, abs=1e-50)
    h = PotentialSpec.hulthen(0.5, 1.0, mass_term=1.0)
    # Coulomb-like near the origin: -V0 / (alpha r)
    r = 1e-6
    assert h.potential(r) == pytest.approx(-1.0 / (0.5 * r), rel=1e-5)
    assert ws.y_max == pytest.approx(1 / (1 + math.exp(-ws.alpha)))


def test_family_parse():
    assert Family.parse("WS") is Family.WOODS_SAXON
    assert Family.parse("Hulthén") is Family.HULTHEN
    with pytest.raises(InvalidParameterError):
        Family.parse("coulomb")
