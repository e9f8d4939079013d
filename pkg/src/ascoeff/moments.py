"""Moments via weighted Motzkin paths and the PASEP partition function."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .minors import det_bareiss
from .param_ring import ONE, ZERO, ParamPoly, RationalPoint
from .recurrence import (RecurrenceSpec, classical_spec, g, spec_fugacity, spec_hat,
                         spec_prime)
from .report import Report


def moments(spec: RecurrenceSpec, N: int, zero=ZERO, one=ONE) -> list:
    """mu_0..mu_N as signed Motzkin path sums.

    Level steps at height h weigh -b_h for the (x + b) convention and b_h
    otherwise; down steps from height h weigh lam_h.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    sign = -1 if spec.plus_b else 1
    level = [spec.b(h) if sign > 0 else -spec.b(h) for h in range(N + 1)]
    lam = [None] + [spec.lam(h) for h in range(1, N + 1)]
    # row[h] = weight of paths of the current length ending at height h
    row = [one] + [zero] * N
    out = [one]
    for step in range(1, N + 1):
        top = min(step, N - step)
        new = [zero] * (N + 1)
        for h in range(top + 1):
            w = level[h] * row[h]
            if h:
                w = w + row[h - 1]
            if h + 1 <= N and h + 1 <= step - 1:
                w = w + lam[h + 1] * row[h + 1]
            new[h] = w
        row = new
        out.append(row[0])
    return out


def z_n(N: int) -> ParamPoly:
    mu = moments(spec_prime(), N)[N]
    return mu if N % 2 == 0 else -mu


def z_fugacity(N: int) -> ParamPoly:
    mu = moments(spec_fugacity(), N)[N]
    return mu if N % 2 == 0 else -mu


def _prime_point(pt: RationalPoint) -> dict:
    return {"q": pt.q, "a": pt.alpha, "b": pt.beta, "xi": pt.xi, "e1": 0, "e2": 0}


def pasep_rhs(N: int, pt: RationalPoint, reading: str = "verbatim") -> Fraction:
    """Right side of the PASEP moment formula at a rational point.

    reading="verbatim" puts the prefactor to the power N outside the k-sum;
    reading="k" uses the power k inside it.
    """
    if pt.q == 1 or pt.alpha == 0 or pt.beta == 0:
        raise ValueError("point must avoid q = 1, alpha = 0, beta = 0")
    mu = moments(classical_spec(pt), N, Fraction(0), Fraction(1))
    c = 2 * pt.alpha * pt.beta / (1 - pt.q)
    if reading == "verbatim":
        return c ** N * sum(comb(N, k) * mu[N - k] for k in range(N + 1))
    if reading == "k":
        return sum(comb(N, k) * c ** k * mu[N - k] for k in range(N + 1))
    raise ValueError(f"unknown reading {reading!r}")


def verify_pasep_identity(N: int, points, reading: str = "verbatim") -> bool:
    z = z_n(N)
    return all(z.evaluate(_prime_point(pt)) == pasep_rhs(N, pt, reading) for pt in points)


def pasep_readings(N: int, points) -> dict[str, bool]:
    """Verbatim reading first; the k-exponent variant is tried only if it fails."""
    out = {"verbatim": verify_pasep_identity(N, points)}
    if not out["verbatim"]:
        out["k"] = verify_pasep_identity(N, points, "k")
    return out


def hankel_det(mu, m: int) -> ParamPoly:
    return det_bareiss([[mu[i + j] for j in range(m + 1)] for i in range(m + 1)])


def hankel_product(spec: RecurrenceSpec, m: int) -> ParamPoly:
    out = ONE
    for i in range(1, m + 1):
        out = out * spec.lam(i) ** (m - i + 1)
    return out


def orthogonality(n: int, mu) -> bool:
    """The functional kills p_n for n >= 1."""
    return sum((g(n, i) * mu[i] for i in range(n + 1)), ZERO) == ZERO


def verify_moments(max_N: int = 8, points=(), hankel_m: int = 3,
                   report: Report | None = None) -> Report:
    rep = report if report is not None else Report()
    for N in range(max_N + 1):
        rep.add("zn.nonneg", f"N={N}", z_n(N).is_nonneg())
    for N in range(min(max_N, 6) + 1):
        z = z_fugacity(N)
        rep.add("zxi.nonneg", f"N={N}", z.is_nonneg() and z.subs(xi=1) == z_n(N))
    mu_hat = moments(spec_hat(), max_N)
    for n in range(1, max_N + 1):
        rep.add("orth", f"n={n}", orthogonality(n, mu_hat))
    for name, spec in (("prime", spec_prime()), ("hat", spec_hat())):
        mu = moments(spec, 2 * hankel_m)
        for m in range(hankel_m + 1):
            rep.add("hankel", f"spec={name},m={m}", hankel_det(mu, m) == hankel_product(spec, m))
    if points:
        for N in range(min(max_N, 5) + 1):
            res = pasep_readings(N, points)
            detail = ",".join(f"{k}={'ok' if v else 'fail'}" for k, v in res.items())
            rep.add("pasep", f"N={N}", res["verbatim"], "" if res["verbatim"] else detail)
    return rep
