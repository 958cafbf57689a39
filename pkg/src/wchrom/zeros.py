"""Certified roots of one-variable slices of Ph, maximal-real-zero tracking and closed-form zero checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
import numpy as np

from .poly import MPoly, UniSlice

POLISH_DPS = 60


def is_real(z: complex) -> bool:
    return abs(z.imag) < 1e-9 * (1 + abs(z.real))


def _exact(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(x)


@dataclass
class RootList:
    """Roots of a univariate slice with multiplicities and scaled residuals.

    ``degenerate`` marks an identically zero slice, which has no roots to report.
    """

    var: str
    roots: list[complex] = field(default_factory=list)
    mult: list[int] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)
    slice: UniSlice | None = None
    degenerate: bool = False

    @property
    def degree(self) -> int:
        return -1 if self.slice is None or self.slice.is_zero() else self.slice.degree

    def expanded(self) -> list[complex]:
        """Roots repeated by multiplicity."""
        out = []
        for r, m in zip(self.roots, self.mult):
            out.extend([r] * m)
        return out

    def real_roots(self) -> list[float]:
        return sorted(r.real for r in self.roots if is_real(r))

    def max_real(self) -> float | None:
        rr = self.real_roots()
        return rr[-1] if rr else None

    def certified(self) -> bool:
        return not self.degenerate and all(res <= 1e-8 for res in self.residuals)


def _mp_coeffs(s: UniSlice) -> list:
    return [mpmath.mpf(c.numerator) / c.denominator for c in s.coeffs]


def _horner(cs, x):
    acc = mpmath.mpf(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _deriv(cs):
    return [k * c for k, c in enumerate(cs)][1:]


def _newton(cs, x0, steps: int = 80):
    d = _deriv(cs)
    x = mpmath.mpc(x0)
    for _ in range(steps):
        fx = _horner(cs, x)
        dfx = _horner(d, x)
        if dfx == 0:
            break
        step = fx / dfx
        x -= step
        if abs(step) <= mpmath.mpf(10) ** (-POLISH_DPS + 5) * max(1, abs(x)):
            break
    return x


def scaled_residual(s: UniSlice, r: complex) -> float:
    """``|p(r)| / (||c||_1 * max(1, |r|)^deg)``."""
    with mpmath.workdps(POLISH_DPS):
        val = abs(_horner(_mp_coeffs(s), mpmath.mpc(r)))
        scale = float(s.l1_norm()) * max(1.0, abs(r)) ** s.degree
    return float(val) / scale if scale else float(val)


# Exact square-free decomposition over the rationals (ascending coefficient lists)


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        _trim(a)
    return q, a


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def square_free_parts(cs: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's decomposition: ``p = c * prod_i f_i**i`` with square-free, pairwise coprime ``f_i``.

    Returns the non-constant ``(f_i, i)`` in increasing ``i``.
    """
    a = _trim([Fraction(c) for c in cs])
    out = []
    g = _gcd(a, _deriv(a))
    b = _divmod(a, g)[0]
    c = _divmod(_deriv(a), g)[0]
    d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
    i = 1
    while len(b) > 1:
        f = _gcd(b, d) if d else b
        if len(f) > 1:
            out.append((f, i))
        b = _divmod(b, f)[0]
        c = _divmod(d, f)[0] if d else []
        d = _trim([x - y for x, y in _zip_pad(c, _deriv(b))])
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _simple_roots(cs: list[Fraction]) -> list[complex]:
    """Roots of a square-free polynomial: companion-matrix estimates polished at high precision."""
    if len(cs) == 2:
        return [complex(-cs[0] / cs[1])]
    lead = cs[-1]
    est = np.roots([float(c / lead) for c in reversed(cs)])
    with mpmath.workdps(POLISH_DPS):
        mc = [mpmath.mpf(c.numerator) / c.denominator for c in cs]
        roots = [complex(_newton(mc, z)) for z in est]
        sep = min((abs(x - y) for i, x in enumerate(roots) for y in roots[i + 1:]), default=1.0)
        if sep < 1e-12:
            roots = [complex(z) for z in mpmath.polyroots(list(reversed(mc)), maxsteps=400,
                                                           extraprec=200)]
    return roots


def _pair_conjugates(roots: list[complex], mult: list[int]) -> tuple[list[complex], list[int]]:
    """Snap near-real roots to the axis and make non-real roots exact conjugate pairs."""
    out_r, out_m = [], []
    pending = []
    for r, m in zip(roots, mult):
        if is_real(r):
            out_r.append(complex(r.real, 0.0))
            out_m.append(m)
        else:
            pending.append((r, m))
    used = [False] * len(pending)
    for i, (r, m) in enumerate(pending):
        if used[i]:
            continue
        used[i] = True
        best, bd = None, math.inf
        for j in range(i + 1, len(pending)):
            if not used[j] and pending[j][1] == m:
                d = abs(pending[j][0] - r.conjugate())
                if d < bd:
                    best, bd = j, d
        if best is not None and bd < 1e-6 * (1 + abs(r)):
            used[best] = True
            z = (r + pending[best][0].conjugate()) / 2
            out_r += [z, z.conjugate()]
            out_m += [m, m]
        else:
            out_r.append(r)
            out_m.append(m)
    order = sorted(range(len(out_r)), key=lambda k: (out_r[k].real, out_r[k].imag))
    return [out_r[k] for k in order], [out_m[k] for k in order]


def solve_slice(s: UniSlice) -> RootList:
    """All complex roots of an exact slice with exact multiplicities.

    The slice is split into square-free factors over the rationals; the simple
    roots of each factor come from the companion matrix and are then Newton
    polished at ``POLISH_DPS`` digits.
    """
    if s.is_zero():
        return RootList(s.var, slice=s, degenerate=True)
    if s.degree == 0:
        return RootList(s.var, slice=s)
    roots: list[complex] = []
    mult: list[int] = []
    for f, m in square_free_parts(s.coeffs):
        for r in _simple_roots(f):
            roots.append(r)
            mult.append(m)
    roots, mult = _pair_conjugates(roots, mult)
    res = [scaled_residual(s, r) for r in roots]
    return RootList(s.var, roots, mult, res, s)


def _slice(ph: MPoly, var: str, other: str, value) -> UniSlice:
    extra = set(ph.vars) - {var, other}
    if extra:
        raise ValueError(f"slice needs a polynomial in {var} and {other} only; found {sorted(extra)}")
    return ph.slice(var, **{other: _exact(value)})


def roots_q(ph: MPoly, w) -> RootList:
    """Roots in ``q`` of ``Ph(q, w)`` at the given exact or float ``w``."""
    return solve_slice(_slice(ph, "q", "w", w))


def roots_w(ph: MPoly, q) -> RootList:
    """Roots in ``w`` of ``Ph(q, w)`` at the given ``q``; ``q = 1`` gives a degenerate slice."""
    return solve_slice(_slice(ph, "w", "q", q))


# Maximal real zero


@dataclass(frozen=True)
class MrzTrack:
    params: tuple[float, ...]
    values: tuple[float | None, ...]
    jumps: tuple[tuple[float, float, float | None, float | None], ...]


def q_mrz(ph: MPoly, w) -> float | None:
    return roots_q(ph, w).max_real()


def q_mrz_track(ph: MPoly, w_path: Iterable, jump: float = 0.25) -> MrzTrack:
    """Maximal real q-root along ``w_path``; consecutive changes above ``jump`` are reported."""
    ws = [float(w) for w in w_path]
    vals = [q_mrz(ph, w) for w in ws]
    jumps = []
    for i in range(len(ws) - 1):
        a, b = vals[i], vals[i + 1]
        if (a is None) != (b is None) or (a is not None and abs(a - b) > jump):
            jumps.append((ws[i], ws[i + 1], a, b))
    return MrzTrack(tuple(ws), tuple(vals), tuple(jumps))


def _bisect(pred: Callable[[float], bool], a: float, b: float, tol: float = 1e-12) -> float:
    pa = pred(a)
    if pred(b) == pa:
        raise ValueError("predicate does not change over the bracket")
    while b - a > tol:
        m = (a + b) / 2
        if pred(m) == pa:
            a = m
        else:
            b = m
    return (a + b) / 2


def locate_mrz_jump(ph: MPoly, lo: float, hi: float, level: float) -> float:
    """Parameter where ``q_mrz`` crosses ``level`` discontinuously inside ``[lo, hi]``."""
    return _bisect(lambda w: (q_mrz(ph, w) or -math.inf) > level, lo, hi)


def locate_collision(ph: MPoly, lo: float, hi: float) -> tuple[float, float]:
    """``w`` where the number of distinct real q-roots changes, and the root there."""
    def n_real(w):
        return sum(m for r, m in zip(*_rm(ph, w)) if is_real(r))

    w = _bisect(lambda x: n_real(x) > n_real(lo), lo, hi, 1e-13)
    rl = roots_q(ph, w)
    nonreal = [r for r in rl.roots if not is_real(r)]
    cand = nonreal or rl.roots
    return w, min(cand, key=lambda r: abs(r.imag)).real if nonreal else _closest_pair(rl.roots)


def _rm(ph, w):
    rl = roots_q(ph, w)
    return rl.roots, rl.mult


def _closest_pair(rs: Sequence[complex]) -> float:
    best, val = math.inf, rs[0].real
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            d = abs(rs[i] - rs[j])
            if d < best:
                best, val = d, ((rs[i] + rs[j]) / 2).real
    return val


def locate_max_imag(ph: MPoly, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section maximum of the largest ``|Im q|`` over ``w`` in ``[lo, hi]``."""
    def f(w):
        return max((abs(r.imag) for r in roots_q(ph, w).roots), default=0.0)

    g = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    w = (a + b) / 2
    return w, f(w)


# Divergent w-roots


@dataclass(frozen=True)
class DivergenceReport:
    q_star: float
    deltas: tuple[float, ...]
    max_abs_root: dict
    diverges: bool
    sign_flip: bool | None
    companions: dict


def w_zero_divergence_check(ph: MPoly, q_star, deltas: Sequence[float] = (1e-2, 1e-3, 1e-4),
                            side: str = "both") -> DivergenceReport:
    """Probe ``w``-roots as ``q -> q_star`` where the top ``w`` coefficient vanishes.

    A root diverges when ``max |w| * delta`` stays bounded away from zero along
    the approach. ``sign_flip`` records whether the largest real root changes
    sign between the two sides. ``companions`` lists the remaining roots at the
    closest approach on each side.
    """
    q_star = float(q_star)
    sides = {"both": (-1, 1), "left": (-1,), "right": (1,)}[side]
    big: dict = {}
    comp: dict = {}
    products = {}
    for sgn in sides:
        vals = []
        for d in deltas:
            rl = roots_w(ph, Fraction(q_star) + sgn * Fraction(d))
            r = max(rl.roots, key=abs)
            vals.append(r)
            if d == deltas[-1]:
                rest = [x for x in rl.expanded()]
                rest.remove(r)
                comp[sgn] = tuple(rest)
        big[sgn] = tuple(vals)
        products[sgn] = [abs(v) * d for v, d in zip(vals, deltas)]
    diverges = all(p[-1] >= 0.5 * p[0] > 0 for p in products.values())
    flip = None
    if len(sides) == 2 and diverges:
        a, b = big[-1][-1], big[1][-1]
        if is_real(a) and is_real(b):
            flip = (a.real > 0) != (b.real > 0)
    return DivergenceReport(q_star, tuple(deltas), big, diverges, flip, comp)


# Closed-form zero formulas


def _sq(x):
    return np.sqrt(complex(x))


def l3_q_roots(w) -> list[complex]:
    """Non-fixed q-roots of Ph(L_3): (4 - 3w +- sqrt(w(5w - 4))) / 2."""
    r = _sq(w * (5 * w - 4))
    return [(4 - 3 * w + r) / 2, (4 - 3 * w - r) / 2]


def l3_w_roots(q) -> list[complex]:
    r = _sq((q - 1) * (5 * q - 9))
    return [(5 - 3 * q + r) / 2, (5 - 3 * q - r) / 2]


def kn_w_root(n: int, q) -> list[complex]:
    return [complex(1 - q / n)]


def l4_w_roots(q) -> list[complex]:
    return [complex(2 - q), complex(-((q - 2) ** 2) / (3 * q - 4))]


def l6_w_roots(q) -> list[complex]:
    r = _sq(8 * q * q - 16 * q + 9)
    base = [complex(-((q - 2) ** 2) / (2 * q - 3))]
    return base + [(q - 2) * (5 - 4 * q + s * r) / (4 * (q - 1)) for s in (1, -1)]


def y5_w_roots(q) -> list[complex]:
    r = _sq(8 * q * q - 28 * q + 25)
    return [complex(2 - q)] + [(-4 * q * q + 13 * q - 11 + s * (q - 1) * r) / (2 * (2 * q - 3))
                               for s in (1, -1)]


def isoy6_w_roots(q) -> list[complex]:
    r = _sq(3 * q * q - 10 * q + 9)
    return [complex(2 - q)] + [(-2 * q * q + 6 * q - 5 + s * (q - 1) * r) / (q - 2)
                               for s in (1, -1)]


def match_multisets(got: Sequence[complex], want: Sequence[complex], tol: float = 1e-9) -> float:
    """Largest distance in a greedy matching of two equal-size root multisets (inf if sizes differ)."""
    if len(got) != len(want):
        return math.inf
    rest = list(got)
    worst = 0.0
    for z in sorted(want, key=lambda c: (c.real, c.imag)):
        k = min(range(len(rest)), key=lambda i: abs(rest[i] - z))
        worst = max(worst, abs(rest[k] - z) / max(1.0, abs(z)))
        rest.pop(k)
    return worst


def roots_with_fixed(rl: RootList, fixed: Sequence[complex], tol: float = 1e-9) -> list[complex]:
    """Expanded roots with one copy of each ``fixed`` value removed."""
    rest = rl.expanded()
    for f in fixed:
        k = min(range(len(rest)), key=lambda i: abs(rest[i] - f))
        if abs(rest[k] - f) > tol * max(1.0, abs(f)):
            raise ValueError(f"expected root {f} not found")
        rest.pop(k)
    return rest
