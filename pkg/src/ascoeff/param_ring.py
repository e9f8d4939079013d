"""Exact polynomials over Z[q, 1/q][a, b, e1, e2, xi].

Monomials are packed into a single Python int so that multiplying two
monomials is one integer addition.  The q exponent lives in the top field and
may be negative; the remaining fields are non-negative and each occupy
``_FIELD`` bits.  Integer order on packed keys is lex order on
(q, a, b, e1, e2, xi), which is a monomial order (used by exact division).
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

VARS = ("q", "a", "b", "e1", "e2", "xi")

_FIELD = 32
_MASK = (1 << _FIELD) - 1
# shift of each variable inside a packed key, q on top
_SHIFT = {"q": 5 * _FIELD, "a": 4 * _FIELD, "b": 3 * _FIELD,
          "e1": 2 * _FIELD, "e2": _FIELD, "xi": 0}
_MAX_EXP = 1 << (_FIELD - 1)


class Monomial(NamedTuple):
    e_q: int = 0
    e_alpha: int = 0
    e_beta: int = 0
    e_eps1: int = 0
    e_eps2: int = 0
    e_xi: int = 0

    @property
    def degree(self) -> int:
        return sum(self)


def pack(exps) -> int:
    eq, ea, eb, e1, e2, ex = exps
    for e in (ea, eb, e1, e2, ex):
        if e < 0:
            raise ValueError("only the q exponent may be negative")
        if e >= _MAX_EXP:
            raise OverflowError("exponent too large")
    if abs(eq) >= _MAX_EXP:
        raise OverflowError("exponent too large")
    return ((((((eq << _FIELD) | ea) << _FIELD | eb) << _FIELD | e1)
             << _FIELD | e2) << _FIELD) | ex


def unpack(key: int) -> Monomial:
    ex = key & _MASK
    key >>= _FIELD
    e2 = key & _MASK
    key >>= _FIELD
    e1 = key & _MASK
    key >>= _FIELD
    eb = key & _MASK
    key >>= _FIELD
    ea = key & _MASK
    eq = key >> _FIELD
    return Monomial(eq, ea, eb, e1, e2, ex)


def _sort_key(mono: Monomial):
    # ascending total degree, then descending lex: 1, q, a, b, ..., q^2, q*a, ...
    return (mono.degree, tuple(-e for e in mono))


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class ParamPoly:
    """Immutable sparse polynomial with big-integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # terms: packed key -> nonzero int; callers hand over ownership
        self._terms = {} if terms is None else terms
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _clean(cls, terms):
        return cls({k: c for k, c in terms.items() if c})

    @classmethod
    def const(cls, c: int) -> ParamPoly:
        return cls({0: int(c)} if c else {})

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> ParamPoly:
        return cls({pack(exps): int(coeff)} if coeff else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> ParamPoly:
        if name not in _SHIFT:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0] * 6
        exps[VARS.index(name)] = power
        return cls.monomial(exps)

    @classmethod
    def from_terms(cls, items: Iterable) -> ParamPoly:
        """Build from (exponent vector, coefficient) pairs; duplicates are summed."""
        terms: dict[int, int] = {}
        for exps, c in items:
            k = pack(exps)
            terms[k] = terms.get(k, 0) + int(c)
        return cls._clean(terms)

    @classmethod
    def q_poly(cls, coeffs, shift: int = 0) -> ParamPoly:
        """Polynomial in q from a dense coefficient list, lowest power first."""
        base = _SHIFT["q"]
        return cls({(i + shift) << base: int(c) for i, c in enumerate(coeffs) if c})

    # -- inspection ----------------------------------------------------
    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order."""
        items = [(unpack(k), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: _sort_key(t[0]))
        return iter(items)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exps) -> int:
        return self._terms.get(pack(exps), 0)

    def variables(self) -> set[str]:
        used = set()
        for k in self._terms:
            for name, e in zip(VARS, unpack(k)):
                if e:
                    used.add(name)
        return used

    def min_q_exp(self) -> int:
        return min((k >> _SHIFT["q"] for k in self._terms), default=0)

    def is_nonneg(self) -> bool:
        """True iff every coefficient is positive and no q exponent is negative."""
        qs = _SHIFT["q"]
        return all(c > 0 and k >> qs >= 0 for k, c in self._terms.items())

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, int):
            return ParamPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return ParamPoly(out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ParamPoly()
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return ParamPoly._clean(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> ParamPoly:
        if not c:
            return ParamPoly()
        return ParamPoly({k: v * c for k, v in self._terms.items()})

    def shift_q(self, e: int) -> ParamPoly:
        """Multiply by q**e (e may be negative)."""
        d = e << _SHIFT["q"]
        return ParamPoly({k + d: c for k, c in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div(self, other: ParamPoly) -> ParamPoly:
        """Quotient of an exact division; raises ArithmeticError if inexact."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        dkey = max(other._terms)
        dcoef = other._terms[dkey]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            rkey = max(rem)
            mono = rkey - dkey
            c, r = divmod(rem[rkey], dcoef)
            if r or min(unpack(mono)[1:]) < 0:
                raise ArithmeticError("division is not exact")
            quot[mono] = c
            for k, v in other._terms.items():
                kk = k + mono
                nv = rem.get(kk, 0) - c * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return ParamPoly(quot)

    # -- substitution and evaluation ------------------------------------
    def subs(self, **images) -> ParamPoly:
        """Ring homomorphism sending the named variables to given polynomials.

        A negative power of q can only be mapped when the image of q is a unit
        (a single monomial with coefficient +-1, free of the other variables'
        negative powers).
        """
        for name in images:
            if name not in _SHIFT:
                raise ValueError(f"unknown variable {name!r}")
        images = {n: ParamPoly._coerce(p) for n, p in images.items()}
        qinv = None
        if "q" in images:
            qi = images["q"]
            if len(qi) == 1:
                (k, c), = qi._terms.items()
                mono = unpack(k)
                if c in (1, -1) and not any(mono[1:]):
                    qinv = ParamPoly({(-mono.e_q) << _SHIFT["q"]: c})
        powers: dict[tuple[str, int], ParamPoly] = {}

        def power(name, e):
            if (name, e) not in powers:
                if e < 0:
                    if qinv is None:
                        raise ValueError("negative power of q needs a unit image")
                    powers[(name, e)] = qinv ** (-e)
                else:
                    powers[(name, e)] = images[name] ** e
            return powers[(name, e)]

        out = ParamPoly()
        groups: dict[tuple, dict[int, int]] = {}
        for k, c in self._terms.items():
            mono = unpack(k)
            kept = [0] * 6
            moved = []
            for idx, (name, e) in enumerate(zip(VARS, mono)):
                if name in images and e:
                    moved.append((name, e))
                else:
                    kept[idx] = e
            g = groups.setdefault(tuple(moved), {})
            kk = pack(kept)
            g[kk] = g.get(kk, 0) + c
        for moved, rest in sorted(groups.items()):
            factor = ONE
            for name, e in moved:
                factor = factor * power(name, e)
            out = out + factor * ParamPoly._clean(rest)
        return out

    def evaluate(self, point) -> Fraction:
        """Exact value at a RationalPoint (or any mapping of variable -> rational)."""
        vals = point.as_dict() if hasattr(point, "as_dict") else dict(point)
        vals = [Fraction(vals.get(name, 0)) for name in VARS]
        total = Fraction(0)
        for k, c in self._terms.items():
            term = Fraction(c)
            for v, e in zip(vals, unpack(k)):
                if e:
                    if e < 0 and v == 0:
                        raise ZeroDivisionError("q = 0 with a negative power of q")
                    term *= v ** e
            total += term
        return total

    # -- serialization --------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.terms()):
            factors = []
            for name, e in zip(VARS, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_json(self) -> list[dict]:
        return [{"exps": list(mono), "coeff": str(c)} for mono, c in self.terms()]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> ParamPoly:
        if isinstance(data, str):
            data = json.loads(data)
        items = []
        for entry in data:
            exps = entry["exps"]
            if len(exps) != 6:
                raise ValueError("exps must have six entries")
            items.append((tuple(int(e) for e in exps), int(entry["coeff"])))
        return cls.from_terms(items)

    @classmethod
    def parse(cls, text: str) -> ParamPoly:
        return _parse(text, _PARAM_VAR, lambda m: VARS.index(m.group(0)), 6,
                      lambda items: cls.from_terms(items))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"ParamPoly({self.to_text()!r})"


# ---------------------------------------------------------------------------
# text parser shared with xy_ring

_PARAM_VAR = re.compile(r"xi|e1|e2|q|a|b")
_TOKEN_INT = re.compile(r"\d+")
_TOKEN_EXP = re.compile(r"\^(-?\d+)")


def _parse(text, var_re, var_slot, nslots, build):
    """Parse "c*v^e*... + ..." into (exponent vector, coeff) items.

    var_re matches one variable name; var_slot maps the match to a slot index
    (or a hashable slot key when nslots is None).
    """
    pos = 0
    n = len(text)
    items = []

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos] == " ":
            pos += 1

    skip_ws()
    if text[pos:].strip() == "0":
        return build([])
    first = True
    while True:
        skip_ws()
        if pos >= n:
            if first:
                raise ParseError("empty input", pos)
            break
        sign = 1
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = -1
            elif first:
                raise ParseError("leading '+'", pos)
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        first = False
        coeff = 1
        exps = [0] * nslots if nslots else {}
        m = _TOKEN_INT.match(text, pos)
        need_factor = True
        if m:
            coeff = int(m.group(0))
            pos = m.end()
            need_factor = False
            if pos < n and text[pos] == "*":
                pos += 1
                need_factor = True
        if need_factor:
            while True:
                m = var_re.match(text, pos)
                if not m:
                    raise ParseError("expected variable", pos)
                slot = var_slot(m)
                pos = m.end()
                e = 1
                me = _TOKEN_EXP.match(text, pos)
                if me:
                    e = int(me.group(1))
                    pos = me.end()
                exps[slot] = exps.get(slot, 0) + e if isinstance(exps, dict) else exps[slot] + e
                if pos < n and text[pos] == "*":
                    pos += 1
                    continue
                break
        items.append((exps, sign * coeff))
        skip_ws()
        if pos < n and text[pos] not in "+-":
            raise ParseError("unexpected character", pos)
    try:
        return build(items)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc


# ---------------------------------------------------------------------------
# constants and q-analogues

ZERO = ParamPoly()
ONE = ParamPoly.const(1)
Q = ParamPoly.var("q")
ALPHA = ParamPoly.var("a")
BETA = ParamPoly.var("b")
EPS1 = ParamPoly.var("e1")
EPS2 = ParamPoly.var("e2")
XI = ParamPoly.var("xi")


def q_power(e: int) -> ParamPoly:
    return ParamPoly({e << _SHIFT["q"]: 1})


@lru_cache(maxsize=None)
def q_int(n: int) -> ParamPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return ParamPoly.q_poly([1] * n)


def _gauss_coeffs(n: int, k: int) -> list[int]:
    # prod_{i<k} (1 - q^(n-i)) / (1 - q^(i+1)), each division exact
    poly = [1]
    for i in range(k):
        top = n - i
        nxt = poly + [0] * top
        for j, c in enumerate(poly):
            nxt[j + top] -= c
        # divide by (1 - q^(i+1)): out[j] = nxt[j] + out[j - (i+1)]
        step = i + 1
        out = []
        for j in range(len(nxt) - step):
            out.append(nxt[j] + (out[j - step] if j >= step else 0))
        poly = out
    return poly


@lru_cache(maxsize=None)
def q_binomial_coeffs(n: int, k: int) -> tuple[int, ...]:
    """Dense coefficients of the Gaussian binomial, lowest power first."""
    if n < 0 or k < 0 or k > n:
        return ()
    return tuple(_gauss_coeffs(n, min(k, n - k)))


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> ParamPoly:
    """Gaussian binomial coefficient; zero outside 0 <= k <= n."""
    return ParamPoly.q_poly(q_binomial_coeffs(n, k))


def binom2(n: int) -> int:
    return n * (n - 1) // 2


class RationalPoint(NamedTuple):
    """Exact rational values for q, a, b, e1, e2, xi."""
    q: Fraction
    alpha: Fraction
    beta: Fraction
    eps1: Fraction = Fraction(0)
    eps2: Fraction = Fraction(0)
    xi: Fraction = Fraction(1)

    @classmethod
    def of(cls, q, alpha, beta, eps1=0, eps2=0, xi=1):
        return cls(*(Fraction(v) for v in (q, alpha, beta, eps1, eps2, xi)))

    def as_dict(self):
        return {"q": self.q, "a": self.alpha, "b": self.beta,
                "e1": self.eps1, "e2": self.eps2, "xi": self.xi}


def random_points(count: int, seed: int = 0) -> list[RationalPoint]:
    """Seeded rational points avoiding q in {0, 1} and zero alpha, beta."""
    import random

    rng = random.Random(seed)

    def frac(nonzero=True, avoid=()):
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if (v or not nonzero) and v not in avoid:
                return v

    pts = []
    for _ in range(count):
        q = frac(avoid=(Fraction(1),))
        pts.append(RationalPoint(q, frac(), frac(), frac(False), frac(False), frac()))
    return pts
