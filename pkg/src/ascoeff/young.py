"""Young-diagram formulas for the coefficients and the supporting identities.

Partitions are plain tuples with explicit zero parts; their length matters.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from .param_ring import ParamPoly, q_binomial, q_binomial_coeffs
from .recurrence import g
from .report import Report
from .xy_ring import X, XYPoly, Y, specialize_xy, xy_sum


def enumerate_partitions(l: int, width: int) -> Iterator[tuple[int, ...]]:
    """Partitions with exactly l parts (zeros allowed) bounded by width, in colex order."""
    for t in combinations_with_replacement(range(width + 1), l):
        yield t[::-1]


def s_m(m: int, mu) -> int:
    if mu and mu[0] == 2 * m + 1:
        return min(mu.count(0), mu.count(2 * m + 1))
    return 0


def _z_split(indices):
    xs, ys = [], []
    for v in indices:
        if v % 2 == 0:
            xs.append(v // 2)
        else:
            ys.append(v // 2)
    return xs, ys


def _w_factors(mu, drop: int = 0):
    # Z_{mu_l}, Z_{mu_(l-1) + 2}, ... skipping the `drop` largest parts
    l = len(mu)
    return _z_split(mu[l - 1 - i] + 2 * i for i in range(l - drop))


def weight_w(mu) -> XYPoly:
    xs, ys = _w_factors(mu)
    return XYPoly.mono(xs, ys)


def _u_terms(m: int, mu):
    s = s_m(m, mu)
    xs, ys = _w_factors(mu, s)
    ys.extend(range(s))
    return tuple(sorted(xs)), tuple(sorted(ys)), q_binomial_coeffs(m + len(mu), s)


def weight_u(m: int, mu) -> XYPoly:
    xs, ys, binom = _u_terms(m, mu)
    return XYPoly.from_keys({(e, xs, ys): c for e, c in enumerate(binom)})


@lru_cache(maxsize=None)
def young_xy(n: int, k: int) -> XYPoly:
    """Sum of u_n over the (k) x (2n+1) rectangle, before specialization."""
    acc: dict = {}
    for mu in enumerate_partitions(k, 2 * n + 1):
        xs, ys, binom = _u_terms(n, mu)
        for e, c in enumerate(binom):
            key = (e, xs, ys)
            acc[key] = acc.get(key, 0) + c
    return XYPoly.from_keys(acc)


def coeff_young(n: int, k: int) -> ParamPoly:
    return specialize_xy(young_xy(n, k))


@lru_cache(maxsize=None)
def coeff_tilde(n: int, k: int) -> XYPoly:
    acc: dict = {}
    for mu in enumerate_partitions(k, 2 * n + 1):
        xs, ys = _w_factors(mu)
        key = (0, tuple(sorted(xs)), tuple(sorted(ys)))
        acc[key] = acc.get(key, 0) + 1
    return XYPoly.from_keys(acc)


def _z(v: int) -> XYPoly:
    return X(v // 2) if v % 2 == 0 else Y(v // 2)


def lattice_path_oracle(n: int, k: int) -> XYPoly:
    """Path sum from (-2n-1, n) to (0, n+k) in the staircase lattice."""
    # f[i] = weight of paths reaching (i, j) for -2j-1 <= i <= 0, stored at offset
    f = {i: XYPoly.const(1) for i in range(-2 * n - 1, 1)}
    for j in range(n, n + k):
        step = {i: f[i] * _z(i + 2 * j + 1) for i in f}
        running = XYPoly()
        f = {}
        for i in range(-2 * (j + 1) - 1, 1):
            running = running + step.get(i, XYPoly())
            f[i] = running
    return f[0]


def lam_xy(m: int) -> XYPoly:
    """lambda_m written with X, Y and Y_-1."""
    return Y(m - 1) * X(m) - XYPoly.mono((0,), (-1,), e_q=m)


def b_xy(m: int) -> XYPoly:
    return X(m) + Y(m)


def lam_tilde(m: int) -> XYPoly:
    return Y(m - 1) * X(m)


def _ys(lo: int, hi: int) -> XYPoly:
    """Y_lo ... Y_hi; empty product when hi < lo."""
    return XYPoly.mono((), range(lo, hi + 1))


def _xs(lo: int, hi: int) -> XYPoly:
    return XYPoly.mono(range(lo, hi + 1), ())


def _qb(n: int, k: int) -> XYPoly:
    return XYPoly.from_qpoly(q_binomial(n, k))


def _same(lhs: XYPoly, rhs: XYPoly) -> bool:
    return lhs == rhs or specialize_xy(lhs) == specialize_xy(rhs)


# -- the set decompositions --------------------------------------------------

def _rect(l: int, width: int):
    return list(enumerate_partitions(l, width)) if l >= 0 else []


def block_B(mu, n: int) -> list[tuple]:
    """The block generated by mu inside (k+1) x (2n-1) with s_{n-1}(mu) > 0."""
    l = s_m(n - 1, mu)
    rest = mu[l:]
    return [(2 * n + 1,) * i + (2 * n - 1,) * (l - i) + rest for i in range(l + 1)]


def s_bar(n: int, nu) -> int:
    return min(nu.count(2), nu.count(2 * n + 1))


def block_C(nu, n: int) -> list[tuple]:
    l = s_bar(n, nu)
    head = nu[:len(nu) - l]
    return [head + (2,) * (l - i) + (0,) * i for i in range(l + 1)]


def in_BX(mu, n):
    l = s_m(n, mu)
    return l > 0 and mu[l] == 2 * n


def in_BY(mu, n):
    l = s_m(n, mu)
    return l > 0 and mu[l] == 2 * n + 1


def in_CX(nu, n):
    l = s_m(n, nu)
    return nu.count(0) >= l + 1


def in_CY(nu, n):
    l = s_m(n, nu)
    return len(nu) > l and nu.count(0) == l and nu[len(nu) - l - 1] == 1


def bij_a(mu):
    return tuple(p + 2 for p in mu[1:-1])


def bij_a_inv(nu, n):
    return (2 * n - 1,) + tuple(p - 2 for p in nu) + (0,)


def bij_b(mu, n):
    l = s_m(n, mu)
    mid = mu[l + 1:len(mu) - l]
    return (2 * n + 1,) * (l - 1) + mid + (0,) * l


def bij_b_inv(nu, n):
    l = s_m(n, nu)
    mid = nu[l:len(nu) - l - 1]
    return (2 * n + 1,) * (l + 1) + (2 * n,) + mid + (0,) * (l + 1)


def bij_c(mu, n):
    l = s_m(n, mu)
    mid = mu[l + 1:len(mu) - l]
    return (2 * n + 1,) * (l - 1) + mid + (1,) + (0,) * (l - 1)


def bij_c_inv(nu, n):
    l = s_m(n, nu)
    mid = nu[l:len(nu) - l - 1]
    return (2 * n + 1,) * (l + 2) + mid + (0,) * (l + 1)


def u_bar(n: int, k: int, mu) -> XYPoly:
    if mu[0] <= 2 * n - 1:
        return weight_u(n - 1, mu)
    head = X(n + k) if mu[0] == 2 * n else Y(n + k)
    return head * weight_u(n, mu[1:])


def v_def(n: int, k: int, nu) -> XYPoly:
    return X(n + k) * weight_u(n, (2 * n + 1,) + nu) - lam_xy(n + k) * weight_u(n, nu)


def _zprod(nu, lo: int, hi: int, k: int) -> XYPoly:
    # prod_{i=lo}^{hi} Z_{nu_i + 2(k-1-i)}, 1-indexed
    out = XYPoly.const(1)
    for i in range(lo, hi + 1):
        out = out * _z(nu[i - 1] + 2 * (k - 1 - i))
    return out


_BMINUS = XYPoly.mono((), (-1,), e_q=1)  # beta - e2


def v_closed(n: int, k: int, nu) -> XYPoly:
    l = s_m(n, nu)
    if in_CX(nu, n):
        return (_xs(0, l) * X(n + k - l - 1) * _zprod(nu, l + 1, k - 2 - l, k)
                * _ys(0, l - 1) * _qb(n + k, l + 1) * _BMINUS).shift_q(l)
    return (_xs(0, l) * _zprod(nu, l + 1, k - 1 - l, k) * _ys(0, l - 1)
            * _qb(n + k, l) * _BMINUS).shift_q(n + k - l - 1)


def qbinom_xy_step(k: int, i: int) -> bool:
    lhs = _qb(k + 1, i) * X(i - 1) * Y(k - i)
    rhs = (_qb(k, i - 1) * X(k) * Y(k - i) + _qb(k, i) * X(i - 1) * Y(k)
           - lam_xy(k) * _qb(k - 1, i - 1))
    return _same(lhs, rhs)


def _gk0(k: int) -> XYPoly:
    return xy_sum(_qb(k, i) * _xs(0, i - 1) * _ys(0, k - i - 1) for i in range(k + 1))


def gk0_recurrence(k: int) -> bool:
    return _same(_gk0(k + 1), b_xy(k) * _gk0(k) - lam_xy(k) * _gk0(k - 1))


def y_tail_identity(n: int, l: int) -> bool:
    lhs = _ys(n - l - 1, n - 1) + xy_sum(
        _ys(n - l - 1, n - i - 1) * _qb(n + 1, i) * _ys(0, i - 1) for i in range(1, l + 2))
    rhs = (_qb(n, l + 1) * _ys(0, l)
           + Y(n) * xy_sum(_ys(n - l - 1, n - i - 1) * _qb(n, i - 1) * _ys(0, i - 2)
                           for i in range(1, l + 2))
           + _BMINUS * xy_sum((_ys(n - l - 1, n - i - 2) * _qb(n, i)
                               * _ys(0, i - 1)).shift_q(n - i - 1) for i in range(l + 1)))
    return _same(lhs, rhs)


def verify_young_identities(n: int, k: int, report: Report | None = None) -> Report:
    """Decompositions, bijections and weight identities behind the inductive step."""
    rep = report if report is not None else Report()
    tag = f"n={n},k={k}"
    if n < 1:
        raise ValueError("the inductive step needs n >= 1")
    big = _rect(k + 1, 2 * n + 1)
    small = _rect(k - 1, 2 * n + 1)

    # disjoint covers
    b_hat = [mu for mu in big if s_m(n, mu) == 0 and s_m(n - 1, mu) == 0]
    b_gens = [mu for mu in _rect(k + 1, 2 * n - 1) if s_m(n - 1, mu) > 0]
    b_blocks = [block_B(mu, n) for mu in b_gens]
    bx = [mu for mu in big if in_BX(mu, n)]
    by = [mu for mu in big if in_BY(mu, n)]
    pieces = b_hat + [m for blk in b_blocks for m in blk] + bx + by
    rep.add("cover.B", tag, sorted(pieces) == sorted(big))
    c_gens = [nu for nu in small if all(p >= 2 for p in nu)]
    c_blocks = [block_C(nu, n) for nu in c_gens]
    cx = [nu for nu in small if in_CX(nu, n)]
    cy = [nu for nu in small if in_CY(nu, n)]
    pieces = [m for blk in c_blocks for m in blk] + cx + cy
    rep.add("cover.C", tag, sorted(pieces) == sorted(small))

    # bijections
    ok = (sorted(bij_a(mu) for mu in b_gens) == sorted(c_gens)
          and all(bij_a_inv(bij_a(mu), n) == mu for mu in b_gens))
    rep.add("bij.a", tag, ok)
    ok = (sorted(bij_b(mu, n) for mu in bx) == sorted(cx)
          and all(bij_b_inv(bij_b(mu, n), n) == mu for mu in bx)
          and all(bij_b(bij_b_inv(nu, n), n) == nu for nu in cx))
    rep.add("bij.b", tag, ok)
    ok = (sorted(bij_c(mu, n) for mu in by) == sorted(cy)
          and all(bij_c_inv(bij_c(mu, n), n) == mu for mu in by)
          and all(bij_c(bij_c_inv(nu, n), n) == nu for nu in cy))
    rep.add("bij.c", tag, ok)

    # weight identities
    rep.add("weight.a", tag, all(weight_u(n, mu) == u_bar(n, k, mu) for mu in b_hat))
    ok = True
    for mu, blk in zip(b_gens, b_blocks):
        lhs = xy_sum(weight_u(n, m) for m in blk)
        rhs = (xy_sum(u_bar(n, k, m) for m in blk)
               + xy_sum(v_def(n, k, nu) for nu in block_C(bij_a(mu), n)))
        ok = ok and _same(lhs, rhs)
    rep.add("weight.b", tag, ok)
    rep.add("weight.c", tag, all(_same(weight_u(n, mu), u_bar(n, k, mu) + v_def(n, k, bij_b(mu, n)))
                             for mu in bx))
    rep.add("weight.d", tag, all(_same(weight_u(n, mu), u_bar(n, k, mu) + v_def(n, k, bij_c(mu, n)))
                             for mu in by))

    # auxiliary identities at size n + k
    m = n + k
    rep.add("xy.step", f"k={m}", all(qbinom_xy_step(m, i) for i in range(1, m + 2)))
    rep.add("gk0.rec", f"k={m}", gk0_recurrence(m))
    rep.add("y.tail", f"n={m}", all(y_tail_identity(m, l) for l in range(m)))

    # closed forms of v_n
    rep.add("v.closed", tag, all(_same(v_def(n, k, nu), v_closed(n, k, nu)) for nu in small))
    return rep


def verify_mod(max_total: int = 8, report: Report | None = None) -> Report:
    """u_m = w once alpha = 0, and once beta = e2."""
    rep = report if report is not None else Report()
    for total in range(max_total + 1):
        for l in range(total + 1):
            width = total - l
            ok = True
            for m in (width // 2, width // 2 + 1):
                for mu in enumerate_partitions(l, width):
                    u = specialize_xy(weight_u(m, mu))
                    w = specialize_xy(weight_w(mu))
                    ok = ok and u.subs(a=0) == w.subs(a=0)
                    ok = ok and u.subs(b=ParamPoly.var("e2")) == w.subs(b=ParamPoly.var("e2"))
            rep.add("mod", f"l={l},width={width}", ok)
    return rep


def verify_tilde_recurrence(n: int, k: int) -> bool:
    lhs = coeff_tilde(n, k + 1)
    rhs = b_xy(n + k) * coeff_tilde(n, k)
    if n > 0:
        rhs = rhs + coeff_tilde(n - 1, k + 1)
    if k > 0:
        rhs = rhs - lam_tilde(n + k) * coeff_tilde(n, k - 1)
    return lhs == rhs


def young_matches_recurrence(n: int, k: int) -> bool:
    return coeff_young(n, k) == g(n + k, n)
