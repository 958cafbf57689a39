"""Eigenvalues, the Phi limit, dominance regions and accumulation loci for infinite-length families.

Families are described by their eigenvalue sets:

* ``line``: ``lambda_{1,0,j} = (q - 2 +- sqrt(A1)) / 2`` with ``A1 = (q-2)^2 + 4(q-1)w``.
* ``circuit``: the line pair plus the constant ``-1``.
* ``wheel``: the circuit set with ``q -> q - 1``.
* ``wheel_full``: the ``wheel`` set plus ``q - 2``, the extra eigenvalue carried by
  the hub term of the exact wheel formula.
* ``ladder``: the eight width-2 cyclic square-strip eigenvalues (``Phi`` takes the square root).
"""

from __future__ import annotations

import cmath
import csv
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .strips import ladder_eigenvalues

FAMILIES = ("line", "circuit", "wheel", "wheel_full", "ladder")

LABELS = {
    "line": ("lambda_101", "lambda_102"),
    "circuit": ("lambda_101", "lambda_102", "lambda_11"),
    "wheel": ("lambda_wh+", "lambda_wh-", "minus_one"),
    "wheel_full": ("lambda_wh+", "lambda_wh-", "minus_one", "q_minus_2"),
    "ladder": ("lambda_201", "lambda_202", "lambda_203", "lambda_211", "lambda_212",
               "lambda_213", "lambda_214", "lambda_221"),
}

STRIP_WIDTH = {"line": 1, "circuit": 1, "wheel": 1, "wheel_full": 1, "ladder": 2}


def equimodular_tol(lam_max: float) -> float:
    return max(1e-9, 1e-9 * abs(lam_max))


def discriminant_a1(q, w):
    return (q - 2) ** 2 + 4 * (q - 1) * w


def _check(fam: str) -> None:
    if fam not in FAMILIES:
        raise ValueError(f"unsupported family {fam!r}; choose from {', '.join(FAMILIES)}")


def labelled_eigenvalues(fam: str, q, w) -> list[complex]:
    """Eigenvalues in the family's fixed label order, principal square roots."""
    _check(fam)
    q, w = complex(q), complex(w)
    if fam == "ladder":
        return [complex(v) for v in ladder_eigenvalues(q, w).values()]
    shift = 1 if fam in ("wheel", "wheel_full") else 0
    qq = q - shift
    r = cmath.sqrt(discriminant_a1(qq, w))
    out = [(qq - 2 + r) / 2, (qq - 2 - r) / 2]
    if fam != "line":
        out.append(-1 + 0j)
    if fam == "wheel_full":
        out.append(q - 2)
    return out


def _sort_key(z: complex):
    return (-abs(z), z.real, z.imag)


def eigenvalues_at(fam: str, q, w) -> list[complex]:
    """Eigenvalues sorted by magnitude (descending), then real part, then imaginary part."""
    return sorted(labelled_eigenvalues(fam, q, w), key=_sort_key)


def _grid_eigenvalues(fam: str, q: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Vectorized eigenvalues with shape ``(k,) + q.shape``."""
    q = q.astype(complex)
    w = w.astype(complex)
    if fam == "ladder":
        a2 = (q**4 + 6 * q**3 * w + q**2 * w**2 - 10 * q**3 - 36 * q**2 * w - 2 * q * w**2
              + 39 * q**2 + 72 * q * w + w**2 - 70 * q - 50 * w + 49)
        a3 = q**2 + 4 * (q - 1) * (w - 1)
        a4 = q**2 + 4 * q * (w - 2) + 4 * (4 - 3 * w)
        r2, r3, r4 = np.sqrt(a2), np.sqrt(a3), np.sqrt(a4)
        s = q**2 + (w - 5) * q + 7 - w
        one = np.ones_like(q)
        return np.stack([w * (1 - q), (s + r2) / 2, (s - r2) / 2, -(q - 2 + r3) / 2,
                         -(q - 2 - r3) / 2, -(q - 4 + r4) / 2, -(q - 4 - r4) / 2, one])
    shift = 1 if fam in ("wheel", "wheel_full") else 0
    qq = q - shift
    r = np.sqrt(discriminant_a1(qq, w))
    out = [(qq - 2 + r) / 2, (qq - 2 - r) / 2]
    if fam != "line":
        out.append(-np.ones_like(q))
    if fam == "wheel_full":
        out.append(q - 2)
    return np.stack(out)


# Phi


@dataclass(frozen=True)
class RegionReport:
    """Dominance data at one point.

    ``phi`` is the dominant eigenvalue raised to ``1 / L_y`` (principal root);
    for regions where only ``|Phi|`` is determined, ``abs_phi`` is the meaningful
    quantity. ``entropy`` is ``ln |Phi|``.
    """

    point: complex
    dominant_index: int
    dominant_label: str
    margin: float
    region: str
    phi: complex
    abs_phi: float
    entropy: float


def _circuit_region(label: str, w: complex) -> str:
    """Region names along the conventions used for the circuit limit."""
    real_w = abs(w.imag) == 0
    if real_w and 0 <= w.real <= 1:
        return "R2" if label == "lambda_11" else "R1"
    return {"lambda_101": "R1", "lambda_102": "R2", "lambda_11": "R3"}[label]


def phi(fam: str, q, w) -> RegionReport:
    """Dominant-eigenvalue limit at ``(q, w)`` (length taken to infinity first)."""
    lams = labelled_eigenvalues(fam, q, w)
    dom, marg, _ = _dominance(np.array(lams)[:, None])
    top, margin = int(dom[0]), float(marg[0])
    mags = [abs(z) for z in lams]
    label = LABELS[fam][top]
    if margin <= equimodular_tol(mags[top]):
        region = "boundary"
    elif fam == "circuit":
        region = _circuit_region(label, complex(w))
    elif fam in ("wheel", "wheel_full"):
        region = "R2" if label == "minus_one" else "R1"
    else:
        region = "R1"
    ly = STRIP_WIDTH[fam]
    val = lams[top] ** (1 / ly) if ly > 1 else lams[top]
    a = abs(val)
    ent = math.log(a) if a > 0 else float("-inf")
    return RegionReport(complex(q), top, label, margin, region, val, a, ent)


def phi_line(q, w):
    """Closed form ``lambda_{1,0,1} = (q - 2 + sqrt(A1)) / 2`` used for the line limit.

    The root is the branch that is positive for large positive ``q``. It equals
    the dominant-eigenvalue limit wherever ``lambda_{1,0,1}`` dominates; inside
    ``|q - 1| < 1`` (for instance real ``1 < q < 2``) the other eigenvalue is
    larger, see :func:`phi`.
    """
    r = cmath.sqrt(discriminant_a1(complex(q), complex(w)))
    if (r * complex(q - 2 + 2 * w).conjugate()).real < 0:
        r = -r
    val = (q - 2 + r) / 2
    if isinstance(q, (int, float)) and isinstance(w, (int, float)) and abs(val.imag) < 1e-15:
        return val.real
    return val


def series_w1(q, w):
    t = (q - 1) * (w - 1)
    return q - 1 + t / q - t**2 / q**3 + 2 * t**3 / q**5


def series_w0(q, w):
    z = (q - 1) * w / (q - 2) ** 2
    return (q - 2) * (1 + z - z**2 + 2 * z**3)


def series_large_w(q, w):
    s = math.sqrt((q - 1) * w)
    return s * (1 + (q - 2) / (2 * s))


def series_large_q(q, w):
    return q - 2 + w - w * (w - 1) / q + 2 * w * (w - 1) ** 2 / q**2


@dataclass(frozen=True)
class OrderCheck:
    name: str
    params: tuple
    errors: tuple
    ratios: tuple
    expected_ratio: float
    passed: bool


def _order_check(name, f_exact, f_series, params, expected, rel=0.25) -> OrderCheck:
    errs = [abs(f_exact(*p) - f_series(*p)) for p in params]
    ratios = [errs[i] / errs[i + 1] if errs[i + 1] else math.inf for i in range(len(errs) - 1)]
    ok = all(abs(r / expected - 1) <= rel for r in ratios)
    return OrderCheck(name, tuple(params), tuple(errs), tuple(ratios), expected, ok)


def phi_asymptotics_check(q: float = 3.0) -> list[OrderCheck]:
    """Order-of-accuracy tests for the four line-limit expansions.

    Halving ``w - 1`` (or ``w`` near 0) should shrink the error about 16x,
    doubling ``q`` about 8x, and quadrupling ``w`` at large ``w`` about 2x.
    """
    qz = max(q, 4.0)
    checks = [
        _order_check("w_near_1", phi_line, series_w1,
                     [(q, 1 + 0.02 / 2**k) for k in range(4)], 16.0),
        _order_check("w_near_0", phi_line, series_w0,
                     [(qz, 0.01 / 2**k) for k in range(4)], 16.0),
        _order_check("large_q", phi_line, series_large_q,
                     [(50.0 * 2**k, 0.5) for k in range(4)], 8.0),
        _order_check("large_w", phi_line, series_large_w,
                     [(q, 1e4 * 4**k) for k in range(4)], 2.0),
    ]
    w_big = 1e6
    ratio = phi_line(q, w_big) / math.sqrt((q - 1) * w_big)
    checks.append(OrderCheck("large_w_leading", ((q, w_big),), (abs(ratio - 1),), (), 0.0,
                             abs(ratio - 1) < 1e-3))
    return checks


# Locus scan


@dataclass
class LocusScan:
    """Per-cell dominance on a rectangular grid in the q or w plane."""

    family: str
    plane: str
    fixed: complex
    re: np.ndarray
    im: np.ndarray
    dominant: np.ndarray
    margin: np.ndarray
    flagged: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def cell(self) -> tuple[float, float]:
        dx = self.re[1] - self.re[0] if len(self.re) > 1 else 0.0
        dy = self.im[1] - self.im[0] if len(self.im) > 1 else 0.0
        return float(dx), float(dy)

    def flagged_points(self) -> np.ndarray:
        iy, ix = np.nonzero(self.flagged)
        return self.re[ix] + 1j * self.im[iy]

    def write_csv(self, path_or_file) -> None:
        own = isinstance(path_or_file, str)
        fh = open(path_or_file, "w", newline="") if own else path_or_file
        try:
            wr = csv.writer(fh, lineterminator="\n")
            wr.writerow(["re", "im", "dominant_index", "margin", "flagged"])
            for iy, y in enumerate(self.im):
                for ix, x in enumerate(self.re):
                    wr.writerow([f"{x:.10g}", f"{y:.10g}", int(self.dominant[iy, ix]),
                                 f"{self.margin[iy, ix]:.6e}", int(self.flagged[iy, ix])])
        finally:
            if own:
                fh.close()


def _cell_centers(lo: float, hi: float, n: int) -> np.ndarray:
    h = (hi - lo) / n
    return lo + h * (np.arange(n) + 0.5)


def _dominance(lams: np.ndarray):
    """Dominant index, margin to the largest distinct eigenvalue, and top magnitude.

    Eigenvalues equal in value to the dominant one are not competitors, so a
    repeated eigenvalue never counts as an equimodular pair.
    """
    mags = np.abs(lams)
    dom = np.argmax(mags, axis=0)
    top = np.take_along_axis(mags, dom[None], 0)[0]
    vdom = np.take_along_axis(lams, dom[None], 0)[0]
    same = np.abs(lams - vdom[None]) <= np.maximum(1e-12, 1e-12 * top)[None]
    second = np.where(same, -np.inf, mags).max(axis=0)
    margin = top - np.where(np.isfinite(second), second, 0.0)
    return dom, margin, top


def _match(lams_a: np.ndarray, lams_b: np.ndarray) -> np.ndarray:
    """For each cell, the index in ``b`` assigned to each index in ``a`` (min total distance)."""
    k = lams_a.shape[0]
    if k <= 4:
        perms = np.array(list(itertools.permutations(range(k))))
        cost = np.stack([np.abs(lams_a - lams_b[list(p)]).sum(axis=0) for p in perms])
        best = np.argmin(cost, axis=0)
        return np.moveaxis(perms[best], -1, 0)
    dist = np.abs(lams_a[:, None] - lams_b[None, :])
    return np.argmin(dist, axis=1)


def _eig(fam: str, plane: str, fixed, z: np.ndarray) -> np.ndarray:
    other = np.full_like(z, fixed, dtype=complex)
    return _grid_eigenvalues(fam, z, other) if plane == "q" else _grid_eigenvalues(fam, other, z)


def _follow(lams, lams_step, dom, lams_b, top_b) -> np.ndarray:
    """True where the dominant branch at ``a``, extrapolated to ``b``, is not dominant at ``b``.

    ``lams_step`` holds the same labelled eigenvalues a millionth of the way
    towards ``b``; the first-order prediction separates branches that meet in
    value exactly where the dominance changes.
    """
    pred = lams + (lams_step - lams) * 1e6
    perm = _match(pred, lams_b)
    tgt = np.take_along_axis(perm, dom[None], 0)[0]
    mag = np.abs(np.take_along_axis(lams_b, tgt[None], 0)[0])
    return mag < top_b - np.maximum(1e-9, 1e-9 * top_b)


def _switches(fam, plane, fixed, za, zb, la=None, lb=None) -> np.ndarray:
    """Dominant-branch changes between paired points ``za`` and ``zb`` (either direction)."""
    la = _eig(fam, plane, fixed, za) if la is None else la
    lb = _eig(fam, plane, fixed, zb) if lb is None else lb
    dz = zb - za
    la_h = _eig(fam, plane, fixed, za + 1e-6 * dz)
    lb_h = _eig(fam, plane, fixed, zb - 1e-6 * dz)
    da, _, ta = _dominance(la)
    db, _, tb = _dominance(lb)
    return _follow(la, la_h, da, lb, tb) | _follow(lb, lb_h, db, la, ta)


def _scan_rows(fam, plane, fixed, re, im_rows):
    z = re[None, :] + 1j * im_rows[:, None]
    return _eig(fam, plane, fixed, z)


def locus_scan(fam: str, plane: str = "q", fixed: complex = 1.0,
               window: Sequence[float] = (-6.0, 5.0, -4.0, 4.0),
               resolution: Sequence[int] | int = (800, 800), threads: int = 1) -> LocusScan:
    """Dominant-eigenvalue classification over a grid of cell centers.

    Args:
        fam: eigenvalue family name.
        plane: ``"q"`` scans complex ``q`` at fixed ``w``; ``"w"`` scans ``w`` at fixed ``q``.
        fixed: value of the other parameter.
        window: ``(re_lo, re_hi, im_lo, im_hi)``.
        resolution: ``(nx, ny)`` or a single int for both.
        threads: row blocks evaluated concurrently; the result does not depend on it.

    A cell is flagged when its top two magnitudes agree within tolerance or
    when the dominant eigenvalue switches to a different branch between it and
    a 4-neighbour.
    """
    _check(fam)
    if plane not in ("q", "w"):
        raise ValueError("plane must be 'q' or 'w'")
    nx, ny = (resolution, resolution) if isinstance(resolution, int) else resolution
    if nx < 2 or ny < 1 or nx * ny > 4096**2:
        raise ValueError("resolution must be at least 2x1 and at most 4096^2 cells")
    re_lo, re_hi, im_lo, im_hi = window
    if not (re_lo < re_hi and im_lo <= im_hi):
        raise ValueError("window must have re_lo < re_hi and im_lo <= im_hi")
    re = _cell_centers(re_lo, re_hi, nx)
    im = _cell_centers(im_lo, im_hi, ny) if im_hi > im_lo else np.array([im_lo])
    blocks = np.array_split(np.arange(len(im)), max(1, min(threads, len(im))))
    if len(blocks) > 1:
        with ThreadPoolExecutor(len(blocks)) as ex:
            parts = list(ex.map(lambda b: _scan_rows(fam, plane, fixed, re, im[b]), blocks))
    else:
        parts = [_scan_rows(fam, plane, fixed, re, im)]
    lams = np.concatenate(parts, axis=1)
    dom, margin, top = _dominance(lams)
    flagged = margin <= np.maximum(1e-9, 1e-9 * top)
    z = re[None, :] + 1j * im[:, None]
    for axis in (0, 1):
        n = z.shape[axis]
        if n < 2:
            continue
        a = [slice(None)] * 2
        b = [slice(None)] * 2
        a[axis] = slice(0, n - 1)
        b[axis] = slice(1, n)
        a, b = tuple(a), tuple(b)
        sw = _switches(fam, plane, fixed, z[a], z[b], lams[(slice(None),) + a],
                       lams[(slice(None),) + b])
        flagged[a] |= sw
        flagged[b] |= sw
    return LocusScan(fam, plane, complex(fixed), re, im, dom, margin, flagged,
                     {"window": tuple(window), "resolution": (nx, ny)})


# Real-axis structure


@dataclass(frozen=True)
class AxisReport:
    """Locus features on the real axis: isolated crossings and equimodular segments."""

    crossings: tuple[float, ...]
    segments: tuple[tuple[float, float], ...]


def _equimodular(fam, plane, fixed, x) -> bool:
    r = phi(fam, x, fixed) if plane == "q" else phi(fam, fixed, x)
    return r.region == "boundary"


def _is_switch(fam, plane, fixed, x0, x1) -> bool:
    return bool(_switches(fam, plane, fixed, np.array([complex(x0)]), np.array([complex(x1)]))[0])


def real_axis_report(fam: str, fixed: complex, lo: float = -6.0, hi: float = 5.0,
                     n: int = 800, plane: str = "q", refine: bool = True) -> AxisReport:
    """Sweep the real axis over ``n`` cell centers and report where the locus meets it.

    Crossings are dominant switches between adjacent cells outside equimodular
    segments; segment ends and crossings are bisected to ~1e-12 when ``refine``.
    """
    xs = _cell_centers(lo, hi, n)
    eq = [_equimodular(fam, plane, fixed, x) for x in xs]
    crossings, segments = [], []

    def bisect(a, b, pred):
        pa = pred(a)
        for _ in range(60):
            m = (a + b) / 2
            if pred(m) == pa:
                a = m
            else:
                b = m
        return (a + b) / 2

    i = 0
    while i < n:
        if eq[i]:
            j = i
            while j + 1 < n and eq[j + 1]:
                j += 1
            left = xs[i] if i == 0 else xs[i - 1]
            right = xs[j] if j == n - 1 else xs[j + 1]
            if refine:
                pred = lambda x: _equimodular(fam, plane, fixed, x)  # noqa: E731
                if i > 0:
                    left = bisect(xs[i - 1], xs[i], pred)
                if j < n - 1:
                    right = bisect(xs[j], xs[j + 1], pred)
            if j > i:
                segments.append((float(left), float(right)))
            else:
                crossings.append(float((left + right) / 2 if not refine else xs[i]))
            i = j + 1
            continue
        if i + 1 < n and not eq[i + 1] and _is_switch(fam, plane, fixed, xs[i], xs[i + 1]):
            x = (xs[i] + xs[i + 1]) / 2
            if refine:
                x0 = xs[i]
                x = bisect(xs[i], xs[i + 1],
                           lambda t: not _is_switch(fam, plane, fixed, x0, t))
            crossings.append(float(x))
        i += 1
    return AxisReport(tuple(crossings), tuple(segments))


# Closed-form special points


def q_endpoints(w) -> tuple[complex, complex]:
    """Zeros of A1 in q: ``2[1 - w +- sqrt(w(w - 1))]``."""
    w = complex(w)
    r = cmath.sqrt(w * (w - 1))
    return 2 * (1 - w + r), 2 * (1 - w - r)


def w_z(q) -> float:
    return -((q - 2) ** 2) / (4 * (q - 1))


def special_points(fam: str, w=None, q=None) -> dict:
    """Named special points for a family at fixed ``w`` (q-plane) and/or fixed ``q`` (w-plane).

    Keys: ``q_c`` and ``q_cr1`` (largest and smallest real-axis crossings of the
    closed part of the locus), ``q_int``, ``q_e1``, ``q_e2`` and ``w_z``.
    Real values are returned as floats, the rest as complex.
    """
    _check(fam)
    if fam == "ladder":
        raise ValueError("no closed-form special points for the ladder limit")
    out: dict = {}

    def tidy(z):
        z = complex(z)
        return z.real if abs(z.imag) < 1e-15 else z

    if w is not None:
        wv = float(w) if complex(w).imag == 0 else complex(w)
        e1, e2 = q_endpoints(wv)
        if fam == "line":
            out.update(q_e1=tidy(e1), q_e2=tidy(e2))
        else:
            base: dict = {"q_e1": tidy(e1), "q_e2": tidy(e2)}
            if isinstance(wv, float) and wv >= 0:
                if wv < 1:
                    base.update(q_c=(wv + 3) / (wv + 1), q_cr1=1.0)
                elif wv == 1:
                    base.update(q_c=2.0, q_cr1=0.0)
                else:
                    base.update(q_c=2.0, q_cr1=1.0)
            if wv != 0:
                base["q_int"] = tidy(1 - 1 / wv)
            shift = 1 if fam in ("wheel", "wheel_full") else 0
            for k, v in base.items():
                out[k] = tidy(v + shift)
            if fam == "wheel_full" and isinstance(wv, float) and 0 <= wv <= 1:
                # q - 2 beats lambda_wh+ for q > 2 when w < 1 and meets |-1| at q = 3.
                out["q_c"] = 3.0
    if q is not None:
        qv = complex(q)
        shift = 1 if fam in ("wheel", "wheel_full") else 0
        if qv - shift != 1:
            out["w_z"] = tidy(w_z(qv - shift))
    return out
