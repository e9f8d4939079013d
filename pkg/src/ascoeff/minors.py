"""Coefficient matrix G, exact minors, and the positivity sweeps."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .param_ring import ParamPoly, ONE, ZERO
from .recurrence import fugacity_subs, g
from .report import Report
from .setpair import M_mu, coeff_setpair
from .xy_ring import XYPoly, specialize_xy
from .young import coeff_young

# name -> substitution applied entrywise to G
SPECIALIZATIONS = {
    "a=0": {"a": 0},
    "b=0": {"b": 0},
    "a=e1": {"a": ParamPoly.var("e1")},
    "b=e2": {"b": ParamPoly.var("e2")},
    "e1=0": {"e1": 0},
    "e2=0": {"e2": 0},
}
KOORNWINDER = "fugacity"


def _entry(method: str, n: int, i: int) -> ParamPoly:
    if i > n:
        return ZERO
    if method == "recurrence":
        return g(n, i)
    if method == "young":
        return coeff_young(i, n - i)
    if method == "setpair":
        return coeff_setpair(i, n - i)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class CoeffMatrix:
    """Top-left N x N block of (g_{n,i}), rows n and columns i from 0."""
    N: int
    rows: tuple[tuple[ParamPoly, ...], ...]

    def __getitem__(self, idx) -> ParamPoly:
        n, i = idx
        return self.rows[n][i]

    def map(self, f) -> CoeffMatrix:
        return CoeffMatrix(self.N, tuple(tuple(f(x) for x in r) for r in self.rows))

    def specialize(self, name: str | None) -> CoeffMatrix:
        if name is None or name == "none":
            return self
        if name == KOORNWINDER:
            return self.map(fugacity_subs)
        try:
            images = SPECIALIZATIONS[name]
        except KeyError:
            raise ValueError(f"unknown specialization {name!r}") from None
        return self.map(lambda p: p.subs(**images))


def build_G(N: int, method: str = "recurrence") -> CoeffMatrix:
    if N < 1:
        raise ValueError("N must be >= 1")
    return CoeffMatrix(N, tuple(tuple(_entry(method, n, i) for i in range(N))
                                for n in range(N)))


@lru_cache(maxsize=None)
def _cached_G(N: int, spec: str | None) -> CoeffMatrix:
    return build_G(N).specialize(spec)


# -- determinants -----------------------------------------------------------------

def det_cofactor(m) -> ParamPoly:
    size = len(m)
    if size == 0:
        return ONE
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j, x in enumerate(m[0]):
        if not x:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = x * det_cofactor(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(m) -> ParamPoly:
    """Fraction-free elimination; every division is asserted exact."""
    a = [list(r) for r in m]
    size = len(a)
    if size == 0:
        return ONE
    sign, prev = 1, ONE
    for k in range(size - 1):
        if not a[k][k]:
            piv = next((r for r in range(k + 1, size) if a[r][k]), None)
            if piv is None:
                return ZERO
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        prev = a[k][k]
    d = a[-1][-1]
    return d if sign > 0 else -d


def minor(G: CoeffMatrix, rows, cols, method: str = "auto") -> ParamPoly:
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("rows and cols must have the same length")
    if any(not 0 <= x < G.N for x in rows + cols):
        raise IndexError("minor index out of range")
    m = [[G[r, c] for c in cols] for r in rows]
    if method == "cofactor" or (method == "auto" and len(rows) <= 3):
        return det_cofactor(m)
    return det_bareiss(m)


# -- sweeps -----------------------------------------------------------------------

@dataclass(frozen=True)
class MinorRecord:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    nonvanishing: bool
    nonneg: bool
    term_count: int
    spec: str = "none"

    @property
    def passed(self) -> bool:
        return not self.nonvanishing or self.nonneg

    def as_dict(self):
        return {"rows": list(self.rows), "cols": list(self.cols), "spec": self.spec,
                "nonvanishing": self.nonvanishing, "nonneg": self.nonneg,
                "term_count": self.term_count}


def _minor_jobs(N: int, max_size: int):
    for s in range(1, max_size + 1):
        for rows in combinations(range(N), s):
            for cols in combinations(range(N), s):
                yield rows, cols


def _run_chunk(args) -> list[MinorRecord]:
    N, spec, jobs = args
    G = _cached_G(N, None if spec == "none" else spec)
    out = []
    for rows, cols in jobs:
        d = minor(G, rows, cols)
        out.append(MinorRecord(rows, cols, bool(d), d.is_nonneg(), len(d), spec))
    return out


def sweep_positivity(N: int, max_size: int, specs=("none",), jobs: int = 1,
                     chunk: int = 64) -> list[MinorRecord]:
    """All minors of size <= max_size, sorted by (spec order, size, rows, cols)."""
    if N < 1 or max_size < 1:
        raise ValueError("N and max_size must be >= 1")
    work = list(_minor_jobs(N, max_size))
    tasks = [(N, spec, work[i:i + chunk]) for spec in specs
             for i in range(0, len(work), chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_run_chunk, tasks))
    else:
        parts = [_run_chunk(t) for t in tasks]
    return [r for p in parts for r in p]


def all_specs() -> tuple[str, ...]:
    return ("none",) + tuple(SPECIALIZATIONS)


# -- the two-step inequality ------------------------------------------------------

def verify_two_step(n: int, a: int, b: int) -> tuple[ParamPoly, bool]:
    if min(n, a, b) < 0:
        raise ValueError("n, a, b must be >= 0")
    diff = g(n + a + b, n + a) * g(n + a, n) - g(n + a + b, n)
    return diff, diff.is_nonneg()


# -- inequalities among generalized q-binomials ------------------------------------

def _geq(f: ParamPoly, h: ParamPoly) -> bool:
    return (f - h).is_nonneg()


def dominance_pairs(n: int, b: int):
    """(mu, nu) with len(mu) >= len(nu), mu_1 >= -1, nu_1 >= 0 and mu <= nu termwise."""
    for l1 in range(n + 1):
        for l2 in range(l1 + 1):
            for mu in combinations_with_replacement(range(-1, n - l1 + 1), l1):
                for nu in combinations_with_replacement(range(0, n - l2 + 1), l2):
                    if all(x <= y for x, y in zip(mu, nu)):
                        yield mu, nu


def M_dominance(n: int, b: int) -> bool:
    return all(_geq(M_mu(nu, n - len(nu), b), M_mu(mu, n - len(mu), b))
               for mu, nu in dominance_pairs(n, b))


def _ys_prod(nu, shift: int) -> ParamPoly:
    return specialize_xy(XYPoly.mono((), [v + shift + i for i, v in enumerate(nu)]))


def peel_bound_rhs(mu, n: int, b: int, k: int) -> ParamPoly:
    l = len(mu)
    total = ZERO
    for nu in combinations_with_replacement(range(n + l + 1), k):
        y = _ys_prod(nu, b - k)
        if nu[0] <= n:
            total = total + M_mu((), nu[0], b - k) * y
        else:
            j = n + l + 1 - nu[0]
            total = total + M_mu(tuple(mu[j - 1:]), n, b - k) * y
    return total


def peel_bound(mu, n: int, b: int, k: int) -> bool:
    return _geq(peel_bound_rhs(tuple(mu), n, b, k), M_mu(tuple(mu), n, b))


def split_bound(mu, n: int, b: int, k: int) -> bool:
    mu = tuple(mu)
    rhs = M_mu(mu, n, b - k) * M_mu((), n + len(mu) + b - k, k)
    return _geq(rhs, M_mu(mu, n, b))


def product_rule(fs, hs) -> bool:
    """Product rule: f_j >= h_j and h_1..h_{i-1} >= 0 give prod f >= prod h."""
    if not all(_geq(f, h) for f, h in zip(fs, hs)):
        return True
    if not all(h.is_nonneg() for h in hs[:-1]):
        return True
    pf, ph = ONE, ONE
    for f, h in zip(fs, hs):
        pf, ph = pf * f, ph * h
    return _geq(pf, ph)


def verify_M_inequalities(max_total: int = 5, report: Report | None = None) -> Report:
    rep = report if report is not None else Report()
    for total in range(max_total + 1):
        for b in range(total + 1):
            n = total - b
            rep.add("dominance", f"n={n},b={b}", M_dominance(n, b))
            ok_peel = ok_split = True
            for l in range(n + 1):
                for mu in combinations_with_replacement(range(n + 1), l):
                    for k in range(b + 1):
                        if l and k:
                            ok_peel = ok_peel and peel_bound(mu, n, b, k)
                        ok_split = ok_split and split_bound(mu, n, b, k)
            rep.add("peel", f"n={n},b={b}", ok_peel)
            rep.add("split", f"n={n},b={b}", ok_split)
            pairs = [(M_mu(nu, n - len(nu), b), M_mu(mu, n - len(mu), b))
                     for mu, nu in dominance_pairs(n, b) if mu and mu[0] >= 0][:6]
            ok_prod = all(product_rule([f1, f2], [h1, h2])
                       for f1, h1 in pairs for f2, h2 in pairs)
            rep.add("product", f"n={n},b={b}", ok_prod)
    return rep
