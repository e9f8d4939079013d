import pytest

from ascoeff.param_ring import q_binomial
from ascoeff.recurrence import g
from ascoeff.xy_ring import X, XYPoly, Y, specialize_xy
from ascoeff.young import (block_B, coeff_tilde, coeff_young, enumerate_partitions,
                           lattice_path_oracle, s_m, verify_mod, verify_young_identities,
                           weight_u, weight_w, young_xy)

G31_YOUNG = ("X0*X1 + X0*X2 + X1*X2 + X0*Y1 + Y0*X2 + X1*Y2 + X0*Y0 + q*X0*Y0 + q^2*X0*Y0"
             " + Y0*Y1 + Y0*Y2 + Y1*Y2")


def qb(n, k):
    return XYPoly.from_qpoly(q_binomial(n, k))


def prod(factors):
    out = XYPoly.const(1)
    for f in factors:
        out = out * f
    return out


def test_enumerate_partitions():
    assert list(enumerate_partitions(0, 4)) == [()]
    assert len(list(enumerate_partitions(2, 3))) == 10
    assert sorted(enumerate_partitions(3, 1)) == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]


def test_s_m():
    assert s_m(1, (3, 3, 1, 0)) == 1
    assert s_m(1, (3, 3, 0, 0)) == 2
    assert all(s_m(m, (0, 0, 0)) == 0 for m in range(4))


def test_weights():
    assert weight_w(()) == XYPoly.const(1)
    assert weight_w((0,)) == X(0)
    assert weight_w((1,)) == Y(0)
    assert weight_w((3, 3, 1, 0)) == X(0) * Y(1) * Y(3) * Y(4)
    assert weight_u(1, (3, 3, 1, 0)) == X(0) * Y(1) * Y(3) * Y(0) * qb(5, 1)
    assert weight_u(1, (3, 3, 0, 0)) == X(0) * X(1) * Y(0) * Y(1) * qb(5, 2)


@pytest.mark.parametrize("k", range(5))
def test_weight_u_zero_rows(k):
    for i in range(k + 1):
        mu = (1,) * (k - i) + (0,) * i
        want = qb(k, i) * prod(X(j) for j in range(i)) * prod(Y(j) for j in range(k - i))
        assert weight_u(0, mu) == want


def test_g31_young_form():
    assert young_xy(1, 2) == XYPoly.parse(G31_YOUNG)
    assert coeff_young(1, 2) == specialize_xy(XYPoly.parse(G31_YOUNG)) == g(3, 1)


def test_small_cases():
    assert coeff_young(4, 0) == g(4, 4)
    for k in range(5):
        want = sum((qb(k, i) * prod(X(j) for j in range(i)) * prod(Y(j) for j in range(k - i))
                    for i in range(k + 1)), XYPoly())
        assert young_xy(0, k) == want
        assert coeff_tilde(0, k) == sum(
            (prod(X(j) for j in range(i)) * prod(Y(j) for j in range(i, k)) for i in range(k + 1)),
            XYPoly())


def test_lattice_oracle():
    assert lattice_path_oracle(3, 0) == XYPoly.const(1)
    assert lattice_path_oracle(0, 1) == X(0) + Y(0)
    assert all(lattice_path_oracle(n, k) == coeff_tilde(n, k)
               for n in range(5) for k in range(5 - n))


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 1), (1, 4)])
def test_young_identities(n, k):
    rep = verify_young_identities(n, k)
    assert rep.ok, rep.failures()


def test_block_example():
    assert sorted(block_B((3, 3, 1, 0, 0, 0), 2)) == [
        (3, 3, 1, 0, 0, 0), (5, 3, 1, 0, 0, 0), (5, 5, 1, 0, 0, 0)]


def test_young_identities_need_positive_n():
    with pytest.raises(ValueError):
        verify_young_identities(0, 2)


def test_mod():
    assert verify_mod(6).ok
