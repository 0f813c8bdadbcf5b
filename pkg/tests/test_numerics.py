import math

import numpy as np
import pytest

from wsiqr.errors import AccuracyError, DomainError
from wsiqr.numerics import (appendix_closed, appendix_identity, integrate_interval,
                            integrate_sqrt_kernel, random_appendix_draws)


def test_constant_inverse_kernel_is_pi():
    for rA, rB in [(0.1, 0.2), (1.0, 3.0), (2.0, 9.5)]:
        assert integrate_sqrt_kernel(lambda r: np.ones_like(r), rA, rB) == pytest.approx(math.pi, rel=1e-14)


def test_a4_variant():
    val = integrate_sqrt_kernel(lambda r: 1 / r, 1.0, 3.0, kernel="sqrt")
    assert val == pytest.approx(math.pi * (2 - math.sqrt(3)), rel=1e-12)


def test_empty_interval_and_domain():
    assert integrate_sqrt_kernel(lambda r: r, 2.0, 2.0) == 0.0
    with pytest.raises(DomainError):
        integrate_sqrt_kernel(lambda r: r, 3.0, 2.0)
    with pytest.raises(ValueError):
        integrate_sqrt_kernel(lambda r: r, 1.0, 2.0, kernel="log")


def test_non_convergence_reports_estimate():
    with pytest.raises(AccuracyError) as info:
        integrate_sqrt_kernel(lambda r: np.sin(1 / (r - 1.0 + 1e-9)), 1.0, 2.0)
    assert info.value.estimate is not None


def test_examples():
    rep = appendix_identity("A1", 1.0, 3.0)
    assert rep.closed_value == pytest.approx(2 * math.pi)
    assert rep.abs_diff < 1e-10
    assert appendix_identity("A3", 0.7, 4.4).closed_value == math.pi
    a5 = appendix_closed("A5", 1.0, 2.0, 0.0, 1.0)
    assert a5 == pytest.approx(math.pi / math.sqrt(2))
    assert a5 == appendix_closed("A2", 1.0, 2.0)


def test_domain_errors():
    with pytest.raises(DomainError):
        appendix_identity("A1", 0.0, 1.0)
    with pytest.raises(DomainError):
        appendix_identity("A5", 1.0, 2.0, a=-3.0, b=1.0)


def test_scale_covariance():
    c = 3.7
    assert appendix_closed("A1", c, 2 * c) == pytest.approx(c * appendix_closed("A1", 1, 2))
    assert appendix_closed("A2", c, 2 * c) == pytest.approx(appendix_closed("A2", 1, 2) / c)
    assert appendix_closed("A3", c, 2 * c) == appendix_closed("A3", 1, 2)


def test_random_draws_deterministic():
    a = [r.as_row() for r in random_appendix_draws(np.random.default_rng(3), 20)]
    b = [r.as_row() for r in random_appendix_draws(np.random.default_rng(3), 20)]
    assert a == b
    assert all(r["abs_diff"] < 1e-8 for r in a)


def test_integrate_interval():
    assert integrate_interval(np.cos, 0.0, math.pi / 2) == pytest.approx(1.0, rel=1e-14)
