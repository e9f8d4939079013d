from itertools import combinations

import pytest

from ascoeff.minors import (KOORNWINDER, all_specs, build_G, det_bareiss, det_cofactor, split_bound,
                            peel_bound, M_dominance, minor, sweep_positivity, verify_two_step,
                            verify_M_inequalities)
from ascoeff.param_ring import ONE, ParamPoly
from ascoeff.recurrence import fugacity_subs, g


def test_build_G():
    G = build_G(5)
    assert all(G[n, n] == ONE for n in range(5))
    assert G[1, 3].is_zero()
    assert G[3, 1] == g(3, 1)
    with pytest.raises(ValueError):
        build_G(0)


def test_methods_agree():
    assert build_G(7, "recurrence") == build_G(7, "young") == build_G(7, "setpair")


def test_minor_basics():
    G = build_G(5)
    assert minor(G, [3], [3]) == ONE
    assert minor(G, [2, 4], [1, 2]) == g(4, 2) * g(2, 1) - g(4, 1)
    assert minor(G, [1, 2], [2, 3]).is_zero()
    with pytest.raises(IndexError):
        minor(G, [5], [0])
    with pytest.raises(ValueError):
        minor(G, [1, 2], [0])


def test_determinant_methods_agree():
    G = build_G(6)
    for s in (3, 4):
        for rows in combinations(range(6), s):
            for cols in list(combinations(range(6), s))[::3]:
                assert minor(G, rows, cols, "cofactor") == minor(G, rows, cols, "bareiss")


def test_bareiss_pivoting():
    P = ParamPoly.parse
    m = [[P("0"), P("a")], [P("b"), P("q")]]
    assert det_bareiss(m) == det_cofactor(m) == P("-a*b")


def test_sweep_small():
    recs = sweep_positivity(5, 2, all_specs())
    assert recs and all(r.passed for r in recs)
    assert [(len(r.rows), r.rows, r.cols) for r in recs[:3]] == [
        (1, (0,), (0,)), (1, (0,), (1,)), (1, (0,), (2,))]


def test_sweep_is_independent_of_workers():
    assert sweep_positivity(5, 2, ("none", "e2=0"), jobs=1) == \
        sweep_positivity(5, 2, ("none", "e2=0"), jobs=2)


def test_koornwinder_specialization():
    G = build_G(4)
    assert G.specialize(KOORNWINDER)[3, 1] == fugacity_subs(g(3, 1))
    recs = sweep_positivity(5, 2, (KOORNWINDER,))
    assert all(r.passed for r in recs)


def test_two_step_inequality():
    for n, a in [(0, 0), (2, 3), (1, 1)]:
        d, ok = verify_two_step(n, a, 0)
        assert d.is_zero() and ok
    assert all(verify_two_step(n, a, b)[1] for n in range(3) for a in range(3) for b in range(3))


def test_M_inequalities():
    assert M_dominance(3, 2)
    assert peel_bound((0,), 1, 2, 1)
    assert split_bound((0, 1), 1, 2, 0)
    assert verify_M_inequalities(4).ok


def test_reference_two_step_expansion_is_the_0_1_2_instance():
    from test_acceptance import TWO_STEP_EXAMPLE
    shown = ParamPoly.parse(TWO_STEP_EXAMPLE)
    d, ok = verify_two_step(0, 1, 2)
    assert ok and d == shown and len(shown) == 36
    assert d == g(3, 1) * g(1, 0) - g(3, 0)
