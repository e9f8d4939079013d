import pytest

from ascoeff.moments import (hankel_det, hankel_product, moments, orthogonality, pasep_readings,
                             pasep_rhs, verify_pasep_identity, z_fugacity, z_n)
from ascoeff.param_ring import ONE, ParamPoly, RationalPoint, random_points
from ascoeff.recurrence import spec_hat, spec_prime


def test_small_moments():
    mu = moments(spec_prime(), 2)
    assert mu[0] == ONE
    assert mu[1] == ParamPoly.parse("-a - b")
    assert z_n(0) == ONE
    assert z_n(1) == ParamPoly.parse("a + b")
    assert z_fugacity(1) == ParamPoly.parse("xi*a + b")


def test_z2_frozen():
    assert z_n(2) == ParamPoly.parse("a^2 + a*b + b^2 + q*a*b + a^2*b + a*b^2")


@pytest.mark.parametrize("N", range(9))
def test_zn_nonneg(N):
    assert z_n(N).is_nonneg()


def test_fugacity_reduces():
    for N in range(5):
        z = z_fugacity(N)
        assert z.is_nonneg() and z.subs(xi=1) == z_n(N)


def test_orthogonality():
    mu = moments(spec_hat(), 6)
    assert all(orthogonality(n, mu) for n in range(1, 7))


def test_hankel():
    mu = moments(spec_prime(), 6)
    assert all(hankel_det(mu, m) == hankel_product(spec_prime(), m) for m in range(4))


def test_pasep_identity():
    pts = random_points(20, seed=0)
    assert verify_pasep_identity(0, pts)
    assert verify_pasep_identity(1, pts)
    assert pasep_readings(5, pts) == {"verbatim": True}
    # the alternative reading disagrees, so the check is not vacuous
    assert not verify_pasep_identity(3, pts, "k")


def test_pasep_pole():
    with pytest.raises(ValueError):
        pasep_rhs(2, RationalPoint.of(q=1, alpha=1, beta=2))
