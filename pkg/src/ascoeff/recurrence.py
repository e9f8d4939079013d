"""Three-term recurrences for the transformed Al-Salam-Chihara family."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .param_ring import (ALPHA, BETA, EPS1, EPS2, ONE, XI, ZERO, ParamPoly,
                         RationalPoint, q_int, q_power)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Structure constants of p_{n+1} = (x + s*b_n) p_n - lam_n p_{n-1}, s = +1 if plus_b."""
    b: Callable[[int], object]
    lam: Callable[[int], object]
    name: str
    plus_b: bool = True


def b_hat(n: int) -> ParamPoly:
    return (ALPHA + BETA) * q_power(n) + (EPS1 + EPS2) * q_int(n)


def lam_hat(n: int) -> ParamPoly:
    if n < 1:
        raise ValueError("lambda_n needs n >= 1")
    return (EPS1 * EPS2 * q_int(n) * q_int(n - 1)
            + (ALPHA * EPS2 + BETA * EPS1) * q_power(n - 1) * q_int(n)
            + ALPHA * BETA * (q_power(2 * n - 1) - q_power(n - 1)))


_PRIME = {"e1": ALPHA * BETA, "e2": ALPHA * BETA}
_FUGACITY = {"a": XI * ALPHA, "e1": XI * ALPHA * BETA, "e2": ALPHA * BETA}


def prime_subs(p: ParamPoly) -> ParamPoly:
    return p.subs(**_PRIME)


def fugacity_subs(p: ParamPoly) -> ParamPoly:
    return p.subs(**_FUGACITY)


def _cached(f):
    return lru_cache(maxsize=None)(f)


def spec_hat() -> RecurrenceSpec:
    return RecurrenceSpec(_cached(b_hat), _cached(lam_hat), "hat")


def spec_prime() -> RecurrenceSpec:
    return RecurrenceSpec(_cached(lambda n: prime_subs(b_hat(n))),
                          _cached(lambda n: prime_subs(lam_hat(n))), "prime")


def spec_fugacity() -> RecurrenceSpec:
    return RecurrenceSpec(_cached(lambda n: fugacity_subs(b_hat(n))),
                          _cached(lambda n: fugacity_subs(lam_hat(n))), "fugacity")


SPECS = {"hat": spec_hat, "prime": spec_prime, "fugacity": spec_fugacity}


def polys(spec: RecurrenceSpec, N: int, zero=ZERO, one=ONE) -> list[list]:
    """p_0..p_N as dense coefficient lists (index i holds [x^i]).

    Works over any commutative ring; pass zero/one of that ring.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    sign = 1 if spec.plus_b else -1
    prev: list = []
    cur = [one]
    out = [cur]
    for n in range(N):
        bn = spec.b(n) if sign > 0 else -spec.b(n)
        nxt = [zero] * (n + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + bn * c
        if prev:
            lam = spec.lam(n)
            for i, c in enumerate(prev):
                nxt[i] = nxt[i] - lam * c
        prev, cur = cur, nxt
        out.append(cur)
    return out


_HAT_ROWS: list = []


def _extend_hat(n: int) -> None:
    spec = spec_hat()
    rows = _HAT_ROWS
    if not rows:
        rows.append((ONE,))
    while len(rows) <= n:
        m = len(rows) - 1
        cur, prev = rows[m], rows[m - 1] if m else ()
        nxt = [ZERO] * (m + 2)
        bm = spec.b(m)
        for i, c in enumerate(cur):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + bm * c
        if m:
            lam = spec.lam(m)
            for i, c in enumerate(prev):
                nxt[i] = nxt[i] - lam * c
        rows.append(tuple(nxt))


def g(n: int, i: int) -> ParamPoly:
    """[x^i] of the n-th transformed polynomial; 0 when i > n."""
    if n < 0 or i < 0:
        raise ValueError("indices must be nonnegative")
    if i > n:
        return ZERO
    if len(_HAT_ROWS) <= n:
        _extend_hat(n)
    return _HAT_ROWS[n][i]


def coeff(spec_name: str, n: int, i: int) -> ParamPoly:
    if spec_name == "hat":
        return g(n, i)
    if i > n:
        return ZERO
    return polys(SPECS[spec_name](), n)[n][i]


def q1_closed_form(n: int, k: int) -> ParamPoly:
    """[x^(n-k)] of p'_n at q = 1, as a polynomial in a, b."""
    if k < 0 or k > n:
        return ZERO
    out = ParamPoly.const(comb(n, k))
    for i in range(n - k, n):
        out = out * (ALPHA + BETA + i * ALPHA * BETA)
    return out


# -- classical family at rational points ------------------------------------

def classical_params(pt: RationalPoint) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, q) of the classical family from (alpha, beta, q)."""
    if pt.q == 1 or pt.alpha == 0 or pt.beta == 0:
        raise ValueError("point must avoid q = 1, alpha = 0, beta = 0")
    q = pt.q
    return (1 - q - pt.alpha) / pt.alpha, (1 - q - pt.beta) / pt.beta, q


def classical_spec(pt: RationalPoint) -> RecurrenceSpec:
    a, b, q = classical_params(pt)
    return RecurrenceSpec(lambda n: (a + b) * q ** n / 2,
                          lambda n: (1 - q ** n) * (1 - a * b * q ** (n - 1)) / 4,
                          "classical", plus_b=False)


def prime_at(p: ParamPoly, pt: RationalPoint) -> Fraction:
    """Value of p after e1 = e2 = alpha*beta, at the point."""
    ab = pt.alpha * pt.beta
    return p.evaluate({"q": pt.q, "a": pt.alpha, "b": pt.beta, "e1": ab, "e2": ab,
                       "xi": pt.xi})


def verify_classical_bridge(n: int, k: int, points) -> bool:
    """Check the coefficient relation between classical and transformed families."""
    if n < 0 or k < 0:
        raise ValueError("n, k must be >= 0")
    for pt in points:
        cl = polys(classical_spec(pt), n + k, Fraction(0), Fraction(1))[n + k]
        c = (pt.q - 1) / (2 * pt.alpha * pt.beta)
        rhs = sum((comb(n + i, n) * c ** (k - i) * prime_at(g(n + k, n + i), pt)
                   for i in range(k + 1)), Fraction(0))
        if cl[n] != rhs:
            return False
    return True
