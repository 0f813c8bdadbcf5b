"""One test per acceptance criterion.

Tolerances are pinned in the criterion runners in wsiqr.verify:
C1 1e-12, C2 / C3 1e-6 relative, C4 1e-8 MeV, C5 1e-3 MeV, C6 5% relative,
C7 1e-6 relative, C8 bit-identical closed form and oracle agreement within the
extrapolation estimate, C9 nodes exact, overlap > 0.999, residual < 1e-6, Jacobi
1e-10, C10 abs_diff < 1e-8, C11 byte-identical reports.

C4, C5, C6 and C9 fail for the default Woods-Saxon spec: it has no level
satisfying eps > 0 and rho > 0, so there is no closed-form energy to compare.
They are not marked xfail on purpose.
"""
import pytest

from wsiqr.verify import CRITERIA


def _criterion(rep, number):
    found = [c for c in rep.criteria if c.number == number]
    assert len(found) == 1, f"criterion {number} missing from the report"
    return found[0]


@pytest.mark.parametrize("number,key", CRITERIA, ids=[f"C{n}-{k}" for n, k in CRITERIA])
def test_criterion(verify_report, number, key):
    c = _criterion(verify_report, number)
    assert c.key == key
    assert c.passed, c.line() + "\n" + "\n".join(c.details[:20])
