"""Exact sparse multivariate polynomials over the integers.

Polynomials are stored as a mapping from exponent tuples to coefficients over
an ordered tuple of variable names. Variables that do not occur are dropped,
so two polynomials that are mathematically equal always compare equal.

A value whose coefficients are not all integers is returned as a
:class:`RationalPoly`, a subclass that callers can test for explicitly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Iterator, Mapping

_BASE_ORDER = ("q", "x", "y", "s", "t", "v", "w")
_INDEXED = re.compile(r"^([wv])_?(\d+)$")


def var_key(name: str) -> tuple:
    """Sort key fixing the canonical variable order."""
    if name in _BASE_ORDER:
        return (0, _BASE_ORDER.index(name), 0, "")
    m = _INDEXED.match(name)
    if m:
        return (1, 0 if m.group(1) == "w" else 1, int(m.group(2)), name)
    if name in ("qt", "wt"):
        return (2, 0 if name == "qt" else 1, 0, "")
    return (3, 0, 0, name)


def _as_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool):
        return int(c)
    return c


class MPoly:
    """Immutable sparse polynomial with exact coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None):
        vars = tuple(vars)
        terms = dict(terms or {})
        order = sorted(range(len(vars)), key=lambda i: var_key(vars[i]))
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names")
        used = [False] * len(vars)
        clean = {}
        for e, c in terms.items():
            if len(e) != len(vars):
                raise ValueError("exponent length does not match variables")
            c = _as_coeff(c)
            if c == 0:
                continue
            for i, k in enumerate(e):
                if k < 0:
                    raise ValueError("negative exponent")
                if k:
                    used[i] = True
            clean[e] = c
        keep = [i for i in order if used[i]]
        self.vars = tuple(vars[i] for i in keep)
        self.terms = {tuple(e[i] for i in keep): c for e, c in clean.items()}
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c) -> "MPoly":
        return _make((), {(): c})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return _make((name,), {(1,): 1})

    @classmethod
    def coerce(cls, x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, str):
            return parse(x)
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to a polynomial")

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.vars

    def const_value(self):
        if self.vars:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable. The zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeffs(self) -> list:
        return list(self.terms.values())

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return iter(sorted(self.terms.items(), key=lambda t: _glex(t[0]), reverse=True))

    # arithmetic

    def _lift(self, names: tuple[str, ...]) -> dict:
        idx = [names.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            full = [0] * len(names)
            for i, k in zip(idx, e):
                full[i] = k
            out[tuple(full)] = c
        return out

    def _unify(self, other: "MPoly"):
        names = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
        return names, self._lift(names), other._lift(names)

    def __add__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        names, a, b = self._unify(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return _make(names, a)

    __radd__ = __add__

    def __neg__(self):
        return _make(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return _make((), {})
        if other.is_const():
            k = other.const_value()
            return _make(self.vars, {e: c * k for e, c in self.terms.items()})
        if self.is_const():
            return other * self
        names, a, b = self._unify(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return _make(names, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Divide by a nonzero constant or by an exact polynomial factor."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return _make(self.vars, {e: Fraction(c) / other for e, c in self.terms.items()})
        ok, quot = divides(MPoly.coerce(other), self)
        if not ok:
            raise ValueError("division leaves a nonzero remainder")
        return quot

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, bindings: Mapping | None = None, **kw):
        """Evaluate with every variable bound to a number.

        Works for any numeric type supporting ``+``, ``*`` and integer powers,
        including ``Fraction``, ``complex`` and mpmath numbers.
        """
        b = dict(bindings or {})
        b.update(kw)
        missing = [v for v in self.vars if v not in b]
        if missing:
            raise KeyError(f"unbound variables: {', '.join(missing)}")
        vals = [b[v] for v in self.vars]
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    __call__ = evaluate

    def substitute(self, bindings: Mapping | None = None, **kw) -> "MPoly":
        """Replace variables by exact numbers or polynomials."""
        b = dict(bindings or {})
        b.update(kw)
        b = {k: v for k, v in b.items() if k in self.vars}
        if not b:
            return self
        for k, v in b.items():
            if not isinstance(v, (int, Fraction, MPoly)):
                raise TypeError(f"substitution value for {k} must be exact")
        keep = [v for v in self.vars if v not in b]
        keep_idx = [self.vars.index(v) for v in keep]
        sub_idx = [(self.vars.index(k), MPoly.coerce(v)) for k, v in b.items()]
        powers: dict = {}

        def power(i, p, k):
            key = (i, k)
            if key not in powers:
                powers[key] = p**k
            return powers[key]

        # group terms by the retained exponent part to limit polynomial work
        groups: dict = {}
        for e, c in self.terms.items():
            rest = tuple(e[i] for i in keep_idx)
            sub = tuple(e[i] for i, _ in sub_idx)
            groups.setdefault(sub, {})[rest] = c
        total = MPoly()
        for sub, rest_terms in groups.items():
            factor = MPoly.const(1)
            for (i, p), k in zip(sub_idx, sub):
                if k:
                    factor = factor * power(i, p, k)
            total = total + factor * _make(tuple(keep), rest_terms)
        return total

    def coeff(self, var: str, j: int) -> "MPoly":
        """Coefficient of ``var**j``, as a polynomial in the remaining variables."""
        if var not in self.vars:
            return self if j == 0 else MPoly()
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        out = {}
        for e, c in self.terms.items():
            if e[i] == j:
                out[e[:i] + e[i + 1 :]] = c
        return _make(rest, out)

    def coefficient_list(self, var: str) -> list["MPoly"]:
        """Coefficients of ``var**0 .. var**deg``."""
        return [self.coeff(var, j) for j in range(max(self.degree(var), 0) + 1)]

    def derivative(self, var: str) -> "MPoly":
        if var not in self.vars:
            return MPoly()
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return _make(self.vars, out)

    def slice(self, var: str, bindings: Mapping | None = None, **kw) -> "UniSlice":
        """Bind all variables except ``var`` to exact numbers and return the slice."""
        b = dict(bindings or {})
        b.update(kw)
        p = self.substitute({k: Fraction(v) for k, v in b.items()})
        extra = [v for v in p.vars if v != var]
        if extra:
            raise KeyError(f"unbound variables: {', '.join(extra)}")
        deg = p.degree(var)
        coeffs = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            coeffs[e[0] if e else 0] = Fraction(c)
        return UniSlice(coeffs, var)

    def content(self) -> Fraction:
        """Greatest common divisor of the coefficients (rational content)."""
        from math import gcd, lcm

        if not self.terms:
            return Fraction(0)
        cs = [Fraction(c) for c in self.terms.values()]
        num = 0
        den = 1
        for c in cs:
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    # text

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_poly(self)!r})"


class RationalPoly(MPoly):
    """Polynomial with at least one non-integer rational coefficient."""

    __slots__ = ()


def _make(vars, terms) -> MPoly:
    p = MPoly(vars, terms)
    if any(isinstance(c, Fraction) for c in p.terms.values()):
        r = RationalPoly.__new__(RationalPoly)
        r.vars, r.terms, r._hash = p.vars, p.terms, None
        return r
    return p


def _glex(e: tuple[int, ...]) -> tuple:
    return (sum(e), e)


def lead(p: MPoly) -> tuple[tuple[int, ...], object]:
    """Leading exponent and coefficient in graded-lex order."""
    if not p.terms:
        raise ValueError("zero polynomial has no leading term")
    e = max(p.terms, key=_glex)
    return e, p.terms[e]


def divides(d, p) -> tuple[bool, MPoly | None]:
    """Test whether ``d`` divides ``p`` exactly.

    Uses leading-term elimination in graded-lex order. Returns ``(True, quotient)``
    or ``(False, None)``. The quotient may have rational coefficients when ``d``
    is not primitive.
    """
    d = MPoly.coerce(d)
    p = MPoly.coerce(p)
    if d.is_zero():
        raise ZeroDivisionError("divisor is zero")
    if p.is_zero():
        return True, MPoly()
    names = tuple(sorted(set(d.vars) | set(p.vars), key=var_key))
    dt = d._lift(names)
    rem = p._lift(names)
    de = max(dt, key=_glex)
    dc = dt[de]
    quot: dict = {}
    while rem:
        re_ = max(rem, key=_glex)
        rc = rem[re_]
        shift = tuple(a - b for a, b in zip(re_, de))
        if any(s < 0 for s in shift):
            return False, None
        f = Fraction(rc) / dc
        f = _as_coeff(f)
        quot[shift] = f
        for e, c in dt.items():
            k = tuple(a + b for a, b in zip(e, shift))
            v = rem.get(k, 0) - f * c
            v = _as_coeff(v) if isinstance(v, Fraction) else v
            if v == 0:
                rem.pop(k, None)
            else:
                rem[k] = v
    return True, _make(names, quot)


# text format


def _mono_str(names, e) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: MPoly) -> str:
    """Canonical text: descending graded-lex terms, explicit signs, ``*`` and ``^``."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p:
        neg = c < 0
        a = -c if neg else c
        mono = _mono_str(p.vars, e)
        if not mono:
            body = _coeff_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff_str(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        if m.group(1) is not None:
            toks.append(("num", m.group(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2)))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        t = self.peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise ValueError(f"parse error near token {self.i}: {t[1]!r}")
        self.i += 1
        return t

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif t == ("op", "/"):
                self.take()
                d = self.power()
                if not d.is_const() or d.is_zero():
                    raise ValueError("division only by nonzero constants")
                acc = acc / Fraction(d.const_value())
            elif t[0] in ("num", "name") or t == ("op", "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                raise ValueError("negative exponents are not polynomial")
            e = self.atom()
            if not e.is_const() or not isinstance(e.const_value(), int) or neg:
                raise ValueError("exponent must be a non-negative integer")
            return base ** e.const_value()
        return base

    def atom(self):
        t = self.peek()
        if t[0] == "num":
            self.take()
            return MPoly.const(Fraction(t[1]))
        if t[0] == "name":
            self.take()
            return MPoly.var(t[1])
        if t == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        if t == ("op", "-"):
            self.take()
            return -self.power()
        raise ValueError(f"unexpected token {t[1]!r}")


def parse(text: str) -> MPoly:
    """Parse a polynomial written with ``+ - * / ^ **``, parentheses and implicit products."""
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial text")
    p = _Parser(toks)
    v = p.expr()
    if p.i != len(toks):
        raise ValueError(f"trailing input at token {p.i}: {toks[p.i][1]!r}")
    return v


def P(text: str) -> MPoly:
    """Short alias for :func:`parse`."""
    return parse(text)


# basis changes and coefficient families


def to_tilde_basis(p: MPoly) -> MPoly:
    """Rewrite in ``qt = q - 1`` and ``wt = w - 1``."""
    return p.substitute(q=parse("qt + 1"), w=parse("wt + 1"))


def from_tilde_basis(p: MPoly) -> MPoly:
    return p.substitute(qt=parse("q - 1"), wt=parse("w - 1"))


def coeff_alpha(ph: MPoly, j: int) -> MPoly:
    """Coefficient of ``q**j`` as a polynomial in ``w``."""
    return ph.coeff("q", j)


def coeff_beta(ph: MPoly, j: int) -> MPoly:
    """Coefficient of ``w**j`` as a polynomial in ``q``."""
    return ph.coeff("w", j)


def beta_bar(ph: MPoly, j: int) -> MPoly:
    """Reduced coefficient ``coeff_beta(ph, j) / (q - 1)``.

    Raises:
        ValueError: if ``q - 1`` does not divide the coefficient.
    """
    b = coeff_beta(ph, j)
    ok, quot = divides(parse("q - 1"), b)
    if not ok:
        raise ValueError(f"(q - 1) does not divide the w^{j} coefficient")
    return quot


class UniSlice:
    """Dense univariate polynomial with exact rational coefficients, ascending order."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable, var: str):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs
        self.var = var

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else _num(c, x))
        return acc

    def derivative(self) -> "UniSlice":
        return UniSlice([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coeffs), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, UniSlice) and self.var == other.var and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"UniSlice({[str(c) for c in self.coeffs]}, {self.var!r})"


def _num(c: Fraction, like):
    """Convert an exact coefficient to the numeric type of ``like``."""
    try:
        import mpmath

        if isinstance(like, (mpmath.mpf, mpmath.mpc)):
            return mpmath.mpf(c.numerator) / c.denominator
    except ImportError:  # pragma: no cover
        pass
    return c.numerator / c.denominator


def as_number(x) -> Number:
    """Helper used by the CLI: parse an exact rational from text or pass numbers through."""
    if isinstance(x, Rational):
        return Fraction(x)
    return Fraction(str(x))
