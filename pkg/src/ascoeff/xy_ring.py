"""Polynomials in X_0, X_1, ..., Y_-1, Y_0, Y_1, ... over Z[q, 1/q].

A monomial is stored as ``(e_q, xs, ys)`` where ``xs`` and ``ys`` are sorted
tuples of indices with repetition, so ``X0^2*Y1`` is ``(0, (0, 0), (1,))``.
"""
from __future__ import annotations

import json
import re
from functools import lru_cache
from heapq import merge
from typing import Iterable, NamedTuple

from .param_ring import (ALPHA, BETA, EPS1, EPS2, ONE, ParamPoly, ParseError,
                         _parse, q_int, q_power)


class XYMonomial(NamedTuple):
    e_q: int
    xs: tuple
    ys: tuple

    @property
    def degree(self) -> int:
        return len(self.xs) + len(self.ys)


def _mono_sort_key(m: XYMonomial):
    return (m.degree, m.e_q, m.xs, m.ys)


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(merge(a, b))


class XYPoly:
    """Immutable sparse polynomial in the X_i, Y_i with Laurent-q integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {} if terms is None else terms

    @classmethod
    def const(cls, c: int) -> XYPoly:
        return cls({(0, (), ()): int(c)} if c else {})

    @classmethod
    def mono(cls, xs=(), ys=(), e_q: int = 0, coeff: int = 1) -> XYPoly:
        if any(i < 0 for i in xs) or any(i < -1 for i in ys):
            raise ValueError("index out of range")
        return cls({(e_q, tuple(sorted(xs)), tuple(sorted(ys))): coeff} if coeff else {})

    @classmethod
    def X(cls, i: int) -> XYPoly:
        return cls.mono(xs=(i,))

    @classmethod
    def Y(cls, i: int) -> XYPoly:
        return cls.mono(ys=(i,))

    @classmethod
    def from_qpoly(cls, p: ParamPoly) -> XYPoly:
        """Embed a polynomial in q alone."""
        out = {}
        for m, c in p.terms():
            if any(m[1:]):
                raise ValueError("only q may appear")
            out[(m.e_q, (), ())] = c
        return cls(out)

    @classmethod
    def from_keys(cls, terms: dict) -> XYPoly:
        return cls({k: c for k, c in terms.items() if c})

    def raw(self) -> dict:
        """Read-only view of the term map (key -> coefficient)."""
        return self._terms

    def terms(self):
        items = [(XYMonomial(*k), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: _mono_sort_key(t[0]))
        return items

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = XYPoly.const(other)
        if not isinstance(other, XYPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _coerce(other):
        if isinstance(other, XYPoly):
            return other
        if isinstance(other, int):
            return XYPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return XYPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return XYPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return XYPoly({k: c * other for k, c in self._terms.items()} if other else {})
        if not isinstance(other, XYPoly):
            return NotImplemented
        out: dict = {}
        for (qa, xa, ya), ca in self._terms.items():
            for (qb, xb, yb), cb in other._terms.items():
                k = (qa + qb, _merge(xa, xb), _merge(ya, yb))
                out[k] = out.get(k, 0) + ca * cb
        return XYPoly.from_keys(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = XYPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift_q(self, e: int) -> XYPoly:
        return XYPoly({(q + e, xs, ys): c for (q, xs, ys), c in self._terms.items()})

    def has_ym1(self) -> bool:
        return any(ys and ys[0] == -1 for _, _, ys in self._terms)

    def is_nonneg(self) -> bool:
        return all(c > 0 and q >= 0 for (q, _, _), c in self._terms.items())

    # -- serialization --------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.terms()):
            factors = []
            if m.e_q == 1:
                factors.append("q")
            elif m.e_q:
                factors.append(f"q^{m.e_q}")
            for letter, idxs in (("X", m.xs), ("Y", m.ys)):
                j = 0
                while j < len(idxs):
                    r = j
                    while r < len(idxs) and idxs[r] == idxs[j]:
                        r += 1
                    name = letter + ("m1" if idxs[j] == -1 else str(idxs[j]))
                    factors.append(name if r - j == 1 else f"{name}^{r - j}")
                    j = r
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list[dict]:
        return [{"e_q": m.e_q, "x": list(m.xs), "y": list(m.ys), "coeff": str(c)}
                for m, c in self.terms()]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> XYPoly:
        if isinstance(data, str):
            data = json.loads(data)
        out = XYPoly()
        for entry in data:
            out = out + cls.mono(entry["x"], entry["y"], int(entry["e_q"]), int(entry["coeff"]))
        return out

    @classmethod
    def parse(cls, text: str) -> XYPoly:
        def slot(m):
            name = m.group(0)
            if name == "q":
                return ("q", 0)
            idx = -1 if name[1:] == "m1" else int(name[1:])
            return (name[0], idx)

        def build(items):
            out = XYPoly()
            for exps, c in items:
                xs, ys, eq = [], [], 0
                for (letter, idx), e in exps.items():
                    if letter == "q":
                        eq += e
                    elif e < 0:
                        raise ValueError("negative exponent on X/Y")
                    elif letter == "X":
                        xs += [idx] * e
                    else:
                        ys += [idx] * e
                out = out + cls.mono(xs, ys, eq, c)
            return out

        return _parse(text, _XY_VAR, slot, None, build)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"XYPoly({self.to_text()!r})"


_XY_VAR = re.compile(r"q|X\d+|Ym1|Y\d+")


def X(i: int) -> XYPoly:
    return XYPoly.X(i)


def Y(i: int) -> XYPoly:
    return XYPoly.Y(i)


def Z(n: int) -> XYPoly:
    """X_{n/2} for even n, Y_{(n-1)/2} for odd n."""
    return X(n // 2) if n % 2 == 0 else Y(n // 2)


def z_index(n: int) -> tuple[str, int]:
    return ("X", n // 2) if n % 2 == 0 else ("Y", n // 2)


def xy_sum(polys: Iterable[XYPoly]) -> XYPoly:
    out: dict = {}
    for p in polys:
        for k, c in p.raw().items():
            out[k] = out.get(k, 0) + c
    return XYPoly.from_keys(out)


def swap_xy(p: XYPoly) -> XYPoly:
    """Exchange X_i and Y_i."""
    if p.has_ym1():
        raise ValueError("swap_xy is undefined in the presence of Y_-1")
    return XYPoly({(q, ys, xs): c for (q, xs, ys), c in p.raw().items()})


@lru_cache(maxsize=None)
def x_value(i: int) -> ParamPoly:
    return ALPHA * q_power(i) + EPS1 * q_int(i)


@lru_cache(maxsize=None)
def y_value(i: int) -> ParamPoly:
    if i == -1:
        return (BETA - EPS2).shift_q(-1)
    return BETA * q_power(i) + EPS2 * q_int(i)


@lru_cache(maxsize=1 << 16)
def _spec_mono(xs: tuple, ys: tuple) -> ParamPoly:
    # peel one factor at a time so shared suffixes are cached
    if xs:
        return x_value(xs[0]) * _spec_mono(xs[1:], ys)
    if ys:
        return y_value(ys[0]) * _spec_mono((), ys[1:])
    return ONE


def specialize_xy(p: XYPoly) -> ParamPoly:
    """Substitute X_i, Y_i (and Y_-1) by their values in q, a, b, e1, e2."""
    raw = p.raw()
    if raw and not p.has_ym1():
        shift = min(q for q, _, _ in raw)
        pos = {(q - shift, xs, ys): c for (q, xs, ys), c in raw.items() if c > 0}
        neg = {(q - shift, xs, ys): -c for (q, xs, ys), c in raw.items() if c < 0}
        out = _specialize_packed(pos) if pos else ParamPoly()
        if neg:
            out = out - _specialize_packed(neg)
        return out.shift_q(shift) if shift else out
    groups: dict = {}
    for (q, xs, ys), c in raw.items():
        g = groups.setdefault((xs, ys), {})
        g[q] = g.get(q, 0) + c
    acc: dict = {}
    for (xs, ys), qc in groups.items():
        qpoly = ParamPoly.from_terms(((e, 0, 0, 0, 0, 0), c) for e, c in qc.items())
        if not qpoly:
            continue
        for k, c in (qpoly * _spec_mono(xs, ys))._terms.items():
            acc[k] = acc.get(k, 0) + c
    return ParamPoly._clean(acc)


# -- fast path for nonnegative input -------------------------------------------
# A polynomial in q with nonnegative coefficients below 2**bits is packed into
# one integer by evaluating at q = 2**bits.  X_i = a*q^i + e1*[i]_q, so a product
# of r X-factors is stored as {number of a factors: packed q-polynomial}.


@lru_cache(maxsize=None)
def _packed_factor(i: int, bits: int) -> tuple[int, int]:
    # (coefficient of a or b, coefficient of e1 or e2), each packed
    qi = 0
    for j in range(i):
        qi |= 1 << (bits * j)
    return 1 << (bits * i), qi


@lru_cache(maxsize=1 << 18)
def _packed_prod(idx: tuple, bits: int) -> tuple[int, ...]:
    """Packed expansion of prod(lin_i) where lin_i = a*q^i + e*[i]_q; index = power of a."""
    if not idx:
        return (1,)
    rest = _packed_prod(idx[1:], bits)
    lead, tail = _packed_factor(idx[0], bits)
    out = [0] * (len(rest) + 1)
    for r, v in enumerate(rest):
        if v:
            out[r + 1] += v * lead
            out[r] += v * tail
    return tuple(out)


def _q1_bound(raw) -> int:
    # at q = 1 and a = b = e1 = e2 = 1 every coefficient is bounded by the value
    total = 0
    for (_, xs, ys), c in raw.items():
        v = c
        for i in xs:
            v *= i + 1
        for i in ys:
            v *= i + 1
        total += v
    return total


def _specialize_packed(raw) -> ParamPoly:
    bits = max(_q1_bound(raw).bit_length() + 1, 8)
    by_x: dict = {}
    for (e, xs, ys), c in raw.items():
        sub = by_x.setdefault(xs, {})
        sub[ys] = sub.get(ys, 0) + (c << (bits * e))
    acc: dict = {}
    for xs, sub in by_x.items():
        ysum: dict = {}
        for ys, cq in sub.items():
            for s, v in enumerate(_packed_prod(ys, bits)):
                if v:
                    key = (len(ys), s)
                    ysum[key] = ysum.get(key, 0) + cq * v
        xp = _packed_prod(xs, bits)
        na = len(xs)
        for r, xv in enumerate(xp):
            if not xv:
                continue
            for (nb, s), yv in ysum.items():
                key = (na, r, nb, s)
                acc[key] = acc.get(key, 0) + xv * yv
    mask = (1 << bits) - 1
    terms = []
    for (na, r, nb, s), v in acc.items():
        e = 0
        while v:
            c = v & mask
            if c:
                terms.append(((e, r, s, na - r, nb - s, 0), c))
            v >>= bits
            e += 1
    return ParamPoly.from_terms(terms)
