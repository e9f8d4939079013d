"""Set-pair formula, generalized q-binomials and the exchange bijection psi."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .param_ring import ParamPoly, ZERO, binom2, q_binomial, q_int
from .report import Report
from .xy_ring import X, XYPoly, Y, specialize_xy, swap_xy, xy_sum


def rank_complement(S, k: int) -> int:
    """k-th smallest nonnegative integer not in S; -1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return -1
    S = set(S)
    v = -1
    while k:
        v += 1
        if v not in S:
            k -= 1
    return v


def lambda_of(S) -> tuple[int, ...]:
    return tuple(x - i for i, x in enumerate(sorted(S)))


def _complement(B, upto: int) -> list[int]:
    Bs = set(B)
    return [v for v in range(upto) if v not in Bs]


def displaced(n: int, a: int, b: int, mu, B):
    """Displaced elements of B with their replacements.

    Yields (e, j, l, r): e = n+b+a-j runs through B inside [n+b, n+b+a) from
    the largest down, l counts them from 1, and r = B(mu_j + l).
    """
    comp = None
    lo, hi = n + b, n + b + a
    out = []
    l = 0
    for e in sorted(B, reverse=True):
        if e >= hi:
            raise ValueError("B out of range")
        if e < lo:
            break
        l += 1
        j = hi - e
        if comp is None:
            comp = _complement(B, n + a + b + a + 2)
        idx = mu[j - 1] + l
        r = -1 if idx == 0 else comp[idx - 1]
        out.append((e, j, l, r))
    return out


def _mono_key(n, a, b, mu, B, xs=()):
    # (e_q, xs, ys) of the weight with the A-part given by xs
    ys = [v for v in B if v < n + b]
    eq = 0
    for e, _, _, r in displaced(n, a, b, mu, B):
        eq += e - r
        ys.append(r)
    if -1 in ys and eq < 1:
        raise AssertionError("Y_-1 must come with a positive power of q")
    return eq, tuple(sorted(xs)), tuple(sorted(ys))


def weight_w_n_xy(n: int, A, B) -> XYPoly:
    A, B = sorted(A), sorted(B)
    a, b = len(A), len(B)
    _check_pair(n, a, b, A, B)
    return XYPoly({_mono_key(n, a, b, lambda_of(A), B, A): 1})


def weight_w_n(n: int, A, B) -> ParamPoly:
    return specialize_xy(weight_w_n_xy(n, A, B))


def _check_pair(n, a, b, A, B):
    if len(set(A)) != a or len(set(B)) != b:
        raise ValueError("sets must not repeat elements")
    if any(not 0 <= v < n + a for v in A) or any(not 0 <= v < n + a + b for v in B):
        raise ValueError("set out of range")


def pairs(n: int, a: int, b: int):
    """T(n, a, b) in lexicographic order of (A, B)."""
    for A in combinations(range(n + a), a):
        for B in combinations(range(n + a + b), b):
            yield A, B


@lru_cache(maxsize=None)
def setpair_xy(n: int, k: int) -> XYPoly:
    acc: dict = {}
    for a in range(k + 1):
        b = k - a
        for A in combinations(range(n + a), a):
            mu = lambda_of(A)
            for B in combinations(range(n + a + b), b):
                key = _mono_key(n, a, b, mu, B, A)
                acc[key] = acc.get(key, 0) + 1
    return XYPoly.from_keys(acc)


def coeff_setpair(n: int, k: int) -> ParamPoly:
    return specialize_xy(setpair_xy(n, k))


# -- generalized q-binomials ---------------------------------------------------

def m_mu_xy(mu, n: int, B) -> XYPoly:
    mu = tuple(mu)
    B = sorted(B)
    a, b = len(mu), len(B)
    if any(not 0 <= v < n + a + b for v in B):
        raise ValueError("B out of range")
    return XYPoly({_mono_key(n, a, b, mu, B): 1})


def m_mu(mu, n: int, B) -> ParamPoly:
    return specialize_xy(m_mu_xy(mu, n, B))


def _check_mu(mu, n):
    if any(x > y for x, y in zip(mu, mu[1:])):
        raise ValueError("mu must be weakly increasing")
    if mu and (mu[0] < -1 or mu[-1] > n):
        raise ValueError("mu out of range")


@lru_cache(maxsize=None)
def M_mu_xy(mu: tuple, n: int, b: int) -> XYPoly:
    """Sum of m over all b-subsets; zero when b < 0."""
    mu = tuple(mu)
    if b < 0:
        return XYPoly()
    _check_mu(mu, n)
    a = len(mu)
    acc: dict = {}
    for B in combinations(range(n + a + b), b):
        key = _mono_key(n, a, b, mu, B)
        acc[key] = acc.get(key, 0) + 1
    return XYPoly.from_keys(acc)


@lru_cache(maxsize=None)
def M_mu(mu: tuple, n: int, b: int) -> ParamPoly:
    return specialize_xy(M_mu_xy(tuple(mu), n, b))


def _runs(mu):
    """Distinct values with multiplicities, in order."""
    vals, mult = [], []
    for v in mu:
        if vals and vals[-1] == v:
            mult[-1] += 1
        else:
            vals.append(v)
            mult.append(1)
    return vals, mult


def coeff_extract_M(mu, n: int, b: int, E) -> ParamPoly:
    """Closed-form coefficient of prod_{i in E} Y_i in M_n^mu(b)."""
    E = sorted(E)
    if len(E) != b or any(not 0 <= v < n + b for v in E):
        raise ValueError("E must be a b-subset of {0..n+b-1}")
    if mu and mu[0] < 0:
        raise ValueError("mu must be nonnegative here")
    nus, es = _runs(tuple(mu))
    lam = lambda_of(E)
    fs, cs = [], []
    for v in nus:
        hits = [E[t] for t, x in enumerate(lam) if x == v]
        fs.append(len(hits))
        cs.append(hits[0] if hits else 0)
    p = len(nus)
    ds = [n + b + sum(es[i + 1:]) - (cs[i] + fs[i] - 1) for i in range(p)]
    total = ZERO
    for ks in product(*(range(min(es[i], fs[i]) + 1) for i in range(p))):
        term = ParamPoly.const(1)
        for i, k in enumerate(ks):
            term = term * q_binomial(es[i], k) * q_binomial(fs[i], k)
            term = term.shift_q(k * (ds[i] + k - 1))
        total = total + term
    return total


def coeff_of_y(p: XYPoly, E) -> ParamPoly:
    """Coefficient (a polynomial in q) of prod_{i in E} Y_i."""
    ys = tuple(sorted(E))
    return ParamPoly.from_terms(((e, 0, 0, 0, 0, 0), c)
                                for (e, xs, y), c in p.raw().items() if not xs and y == ys)


# -- the bijection -------------------------------------------------------------

def psi(n: int, a: int, b: int, A, B) -> tuple[tuple, tuple]:
    """Map (A, B) in T(n,a,b) to (B2, A2) in T(n,b,a)."""
    A, B = sorted(A), sorted(B)
    if len(A) != a or len(B) != b:
        raise ValueError("set sizes do not match a, b")
    _check_pair(n, a, b, A, B)
    mu = lambda_of(A)
    moves = displaced(n, a, b, mu, B)
    J = {j for _, j, _, _ in moves}
    A2 = [A[m - 1] for m in range(1, a + 1) if m not in J]
    A2 += [n + a + b - (r - (A[j - 1] - j)) for _, j, _, r in moves]
    B2 = [v for v in B if v < n + b] + [r for *_, r in moves]
    return tuple(sorted(B2)), tuple(sorted(A2))


def in_T(n: int, a: int, b: int, S1, S2) -> bool:
    return (len(set(S1)) == len(S1) == a and len(set(S2)) == len(S2) == b
            and all(0 <= v < n + a for v in S1) and all(0 <= v < n + a + b for v in S2))


def check_psi(n: int, a: int, b: int) -> bool:
    seen = set()
    for A, B in pairs(n, a, b):
        B2, A2 = psi(n, a, b, A, B)
        if not in_T(n, b, a, B2, A2):
            return False
        if sum(A) + sum(B) != sum(A2) + sum(B2):
            return False
        if psi(n, b, a, B2, A2) != (tuple(A), tuple(B)):
            return False
        seen.add((B2, A2))
    return len(seen) == sum(1 for _ in pairs(n, b, a))


def _qsum(it) -> ParamPoly:
    acc: dict = {}
    for e in it:
        acc[e] = acc.get(e, 0) + 1
    return ParamPoly.from_terms(((e, 0, 0, 0, 0, 0), c) for e, c in acc.items())


def verify_simple_identity(n: int, a: int, b: int, with_psi: bool = True) -> bool:
    lhs = (q_binomial(n + a, a) * q_binomial(n + a + b, b)).shift_q(binom2(a) + binom2(b))
    rhs = (q_binomial(n + a + b, a) * q_binomial(n + b, b)).shift_q(binom2(a) + binom2(b))
    if lhs != rhs:
        return False
    left = _qsum(sum(A) + sum(B) for A, B in pairs(n, a, b))
    right = _qsum(sum(S1) + sum(S2) for S1, S2 in pairs(n, b, a))
    if left != right or left != lhs:
        return False
    if with_psi:
        images = _qsum(sum(B2) + sum(A2) for B2, A2 in
                       (psi(n, a, b, A, B) for A, B in pairs(n, a, b)))
        return images == right
    return True


# -- graph oracle with e2 = 0 --------------------------------------------------

def pos2_graph_oracle(n: int, k: int) -> ParamPoly:
    """Path sum over the layered graph; the Y edges sit to the right of all X edges."""
    far = 4 * (n + k) + 8
    # state: (position of the last vertical step, weight)
    states: dict = {None: XYPoly.const(1)}
    for r in range(n, n + k):
        edges = [(2 * i - r, X(i)) for i in range(r + 1)]
        edges += [(far + 2 * i - r, Y(i)) for i in range(r + 1)]
        nxt: dict = {}
        for pos, w in states.items():
            for epos, lab in edges:
                if pos is None or epos >= pos:
                    nxt[epos] = nxt.get(epos, XYPoly()) + w * lab
        states = nxt
    total = xy_sum(states.values())
    return specialize_xy(total).subs(e2=0)


# -- identity suite --------------------------------------------------------------

def incr_compositions(a: int, lo: int, hi: int):
    for t in combinations_with_replacement(range(lo, hi + 1), a):
        yield t


def _same(lhs: XYPoly, rhs: XYPoly) -> bool:
    return lhs == rhs or specialize_xy(lhs) == specialize_xy(rhs)


def _minus1(mu):
    return tuple(v - 1 for v in mu)


def insert(nu, i: int) -> tuple:
    return tuple(sorted(nu + (i,)))


def M_step(mu, n: int, b: int) -> bool:
    a = len(mu)
    lhs = M_mu_xy(mu, n + 1, b)
    rhs = Y(n + a + b) * M_mu_xy(mu, n + 1, b - 1) + M_mu_xy(_minus1(mu), n, b)
    return _same(lhs, rhs)


def M_step_neg(nu, n: int, b: int) -> bool:
    a = len(nu) + 1
    lhs = M_mu_xy((-1,) + _minus1(nu), n, b)
    rhs = (XYPoly.mono((), (-1,), e_q=n + a + b) * M_mu_xy(nu, n + 1, b - 1)
           + M_mu_xy(_minus1(nu), n, b))
    return _same(lhs, rhs)


def _qi(m: int) -> XYPoly:
    return XYPoly.from_qpoly(q_int(m))


def M_insert_identity(nu, n: int, b: int) -> bool:
    """Both branches, chosen by whether nu starts at -1."""
    taus, es = _runs(nu)
    p = len(taus)
    tot = sum(es)
    M = lambda m: M_mu_xy(m, n, b)
    lhs = _qi(n + b + 1 + tot) * M(nu)
    rhs = XYPoly()
    second = taus[0] == -1
    start = 1 if second else 0
    for i in range(start, p):
        rhs = rhs + (_qi(es[i] + 1) * M(insert(nu, taus[i]))).shift_q(taus[i] + sum(es[:i]))
    if second:
        rhs = rhs + _qi(es[0]) * M(insert(nu, -1))
    else:
        for l in range(0, taus[0]):
            rhs = rhs + M(insert(nu, l)).shift_q(l)
    for i in range(p - 1):
        for l in range(taus[i] + 1, taus[i + 1]):
            rhs = rhs + M(insert(nu, l)).shift_q(sum(es[:i + 1]) + l)
    for l in range(taus[-1] + 1, n + 1):
        rhs = rhs + M(insert(nu, l)).shift_q(tot + l)
    return _same(lhs, rhs)


def x_of(mu) -> XYPoly:
    """X_mu = prod X_{mu_i + i - 1}."""
    return XYPoly.mono([v + i for i, v in enumerate(mu)], ())


def nu_bar(nu, i: int) -> tuple:
    left = tuple(v for v in nu if v <= i)
    right = tuple(v - 1 for v in nu if v > i)
    return left + (i,) + right


def M_x_telescope(nu, n: int, b: int) -> bool:
    a = len(nu) + 1
    M = lambda m: M_mu_xy(m, n, b)
    nm = _minus1(nu)
    full = nu + (n + 1,)
    lhs = (x_of(full) * M(_minus1(full))
           - (X(n + a + b) - X(0)) * x_of(nu) * M(nm)
           - X(0) * x_of(nu) * M((-1,) + nm))
    rhs = xy_sum(x_of(nu_bar(nu, i)) * (M(insert(nm, i)) - M(insert(nm, i - 1)))
                 for i in range(n + 1))
    return _same(lhs, rhs)


def eq_ma_xy(n: int, k: int) -> XYPoly:
    return xy_sum(x_of(mu) * M_mu_xy(mu, n, k - a)
                  for a in range(k + 1) for mu in incr_compositions(a, 0, n))


def swap_symmetry(n: int, a: int, b: int) -> bool:
    for A, B in pairs(n, a, b):
        B2, A2 = psi(n, a, b, A, B)
        if swap_xy(weight_w_n_xy(n, A, B)) != weight_w_n_xy(n, B2, A2):
            return False
    return True


def rank_stability(n: int, a: int, b: int) -> bool:
    for B in combinations(range(n + a + b), b):
        k = sum(1 for v in B if v >= n + b)
        C = [v for v in B if v <= n + b - 2]
        if any(rank_complement(B, l) != rank_complement(C, l) for l in range(1, n + k + 1)):
            return False
    return True


def verify_M_identities(max_total: int = 6, report: Report | None = None) -> Report:
    """Identities for M and the rephrased main formula for all n + a + b <= max_total."""
    rep = report if report is not None else Report()
    for total in range(max_total + 1):
        for n in range(total + 1):
            for a in range(total - n + 1):
                b = total - n - a
                tag = f"n={n},a={a},b={b}"
                if b >= 1:
                    rep.add("M.step", tag, all(M_step(mu, n, b)
                                            for mu in incr_compositions(a, 0, n + 1)))
                    if a >= 1:
                        rep.add("M.neg", tag, all(M_step_neg(nu, n, b)
                                               for nu in incr_compositions(a - 1, 0, n + 1)))
                if a >= 1:
                    rep.add("x.telescope", tag, all(M_x_telescope(nu, n, b)
                                           for nu in incr_compositions(a - 1, 0, n + 1)))
                    ok1 = ok2 = True
                    for nu in incr_compositions(a, -1, n):
                        if nu[0] >= 0:
                            ok1 = ok1 and M_insert_identity(nu, n, b)
                        else:
                            ok2 = ok2 and M_insert_identity(nu, n, b)
                    rep.add("insert.first", tag, ok1)
                    rep.add("insert.second", tag, ok2)
                ok = True
                for mu in incr_compositions(a, 0, n):
                    for E in combinations(range(n + b), b):
                        ok = ok and coeff_extract_M(mu, n, b, E) == coeff_of_y(M_mu_xy(mu, n, b), E)
                rep.add("coeff.closed", tag, ok)
                eps = M_mu((0,) * a, n, b).subs(e2=0)
                target = (q_binomial(n + a + b, b) * ParamPoly.var("b", b)).shift_q(binom2(b))
                ok = all(M_mu(mu, n, b).subs(e2=0) == target
                         for mu in incr_compositions(a, -1, n)) and eps == target
                rep.add("e2zero", tag, ok)
        for n in range(total + 1):
            k = total - n
            rep.add("rephrased", f"n={n},k={k}", eq_ma_xy(n, k) == setpair_xy(n, k))
    return rep
