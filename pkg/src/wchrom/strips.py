"""Cyclic square-lattice strips: c~ coefficients, eigenvalue multiplicities and L_y <= 2 evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

import mpmath

from .families import ph_circuit
from .poly import MPoly

Q, W = MPoly.var("q"), MPoly.var("w")


def c_tilde(d: int) -> MPoly:
    """sum_j (-1)^j C(2d - j, j) (q - 1)^(d - j)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return sum(((-1) ** j * comb(2 * d - j, j) * (Q - 1) ** (d - j) for j in range(d + 1)),
               MPoly())


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def n_ph_rows(ly_max: int, *, variant: str = "corrected") -> list[list[int]]:
    """Multiplicity rows ``n_Ph(L_y, d)`` for ``L_y = 1..ly_max`` from the circuit row ``[2, 1]``.

    The step is ``n(L+1, 0) = n(L, 0) + n(L, 1)`` and, for ``d >= 1``,
    ``n(L+1, d) = n(L, d-1) + 2 n(L, d) + n(L, d+1)``. ``variant="as_printed"``
    uses ``n(L+1, d-1)`` in place of ``n(L, d-1)``; it does not reproduce the
    reference table and exists only so that difference can be tested.
    """
    if ly_max < 1:
        raise ValueError("ly_max must be >= 1")
    if variant not in ("corrected", "as_printed"):
        raise ValueError(f"unknown variant {variant!r}")
    rows = [[2, 1]]
    for _ in range(ly_max - 1):
        prev = rows[-1]
        size = len(prev)

        def old(d):
            return prev[d] if 0 <= d < size else 0

        new = [old(0) + old(1)]
        for d in range(1, size + 1):
            left = new[d - 1] if variant == "as_printed" else old(d - 1)
            new.append(left + 2 * old(d) + old(d + 1))
        rows.append(new)
    return rows


_ROW_RULES = {
    # seed row at L_y = 1, weight on n(L, d), extra weight on n(L, 0) in the d = 0 entry
    "np": ([1, 1], 1, -1),
    "nz": ([1, 1], 2, -1),
    "nph": ([2, 1], 2, -1),
    "nzh": ([2, 1], 3, -1),
}


def multiplicity_rows(kind: str, ly_max: int) -> list[list[int]]:
    """Rows ``L_y = 1..ly_max`` of a multiplicity table by the three-term step.

    ``n(L+1, d) = n(L, d-1) + c n(L, d) + n(L, d+1)`` with ``c`` equal to 1, 2, 2
    and 3 for the ``np``, ``nz``, ``nph`` and ``nzh`` tables; the ``d = 0`` entry
    uses ``(c + k) n(L, 0) + n(L, 1)`` with the offset ``k`` from the table of rules.
    """
    if kind not in _ROW_RULES:
        raise ValueError(f"unknown table {kind!r}; choose from {', '.join(_ROW_RULES)}")
    if kind == "nph":
        return n_ph_rows(ly_max)
    seed, c, k = _ROW_RULES[kind]
    rows = [list(seed)]
    for _ in range(ly_max - 1):
        prev = rows[-1]

        def old(d):
            return prev[d] if 0 <= d < len(prev) else 0

        new = [(c + k) * old(0) + old(1)]
        new += [old(d - 1) + c * old(d) + old(d + 1) for d in range(1, len(prev) + 1)]
        rows.append(new)
    return rows


def format_table(rows: list[list[int]]) -> str:
    """One line per width: ``L_y`` then the entries for ``d = 0..L_y`` then the row total."""
    return "".join(f"{ly} " + " ".join(map(str, r)) + f" | {sum(r)}\n"
                   for ly, r in enumerate(rows, 1))


def n_z(ly: int, d: int) -> int:
    if not 0 <= d <= ly:
        raise ValueError("need 0 <= d <= L_y")
    num = (2 * d + 1) * comb(2 * ly, ly - d)
    den = ly + d + 1
    if num % den:
        raise ArithmeticError("n_Z is not an integer")
    return num // den


def n_z_row(ly: int) -> list[int]:
    return [n_z(ly, d) for d in range(ly + 1)]


def n_zh_total(ly: int) -> int:
    return sum(comb(ly, j) * comb(2 * j, j) for j in range(ly + 1))


def n_ph_total_closed(ly: int) -> int:
    return comb(2 * ly, ly) + comb(2 * (ly - 1), ly - 1)


@dataclass(frozen=True)
class StripStructure:
    ly: int
    n_ph: tuple[int, ...]
    n_z: tuple[int, ...]
    N_ph: int
    N_z: int
    N_zh: int


def n_ph_table(ly_max: int) -> list[StripStructure]:
    rows = n_ph_rows(ly_max)
    out = []
    for ly, row in enumerate(rows, 1):
        nz = n_z_row(ly)
        out.append(StripStructure(ly, tuple(row), tuple(nz), sum(row), sum(nz), n_zh_total(ly)))
    return out


def identity_check(ly: int, row: list[int] | None = None) -> bool:
    """sum_d c~(d) n_Ph(L_y, d) == q (q - 1)^(L_y - 1), exactly."""
    row = row if row is not None else n_ph_rows(ly)[ly - 1]
    lhs = sum((c_tilde(d) * k for d, k in enumerate(row)), MPoly())
    return lhs == Q * (Q - 1) ** (ly - 1)


def asymptotic_ratios(lo: int = 4, hi: int = 12) -> list[float]:
    """N_Ph(L_y) * sqrt(L_y) / 4^L_y for L_y in [lo, hi]."""
    rows = n_ph_rows(hi)
    return [sum(rows[ly - 1]) * ly**0.5 / 4**ly for ly in range(lo, hi + 1)]


# L_y = 2 eigenvalues


def ladder_discriminants(q, w):
    a2 = (q**4 + 6 * q**3 * w + q**2 * w**2 - 10 * q**3 - 36 * q**2 * w - 2 * q * w**2
          + 39 * q**2 + 72 * q * w + w**2 - 70 * q - 50 * w + 49)
    a3 = q**2 + 4 * (q - 1) * (w - 1)
    a4 = q**2 + 4 * q * (w - 2) + 4 * (4 - 3 * w)
    return a2, a3, a4


def ladder_eigenvalues(q, w) -> dict[tuple[int, int], object]:
    """The eight L_y = 2 eigenvalues keyed by ``(d, j)``; principal square roots."""
    q = mpmath.mpmathify(q)
    w = mpmath.mpmathify(w)
    a2, a3, a4 = ladder_discriminants(q, w)
    r2, r3, r4 = (mpmath.sqrt(a) for a in (a2, a3, a4))
    s = q**2 + (w - 5) * q + 7 - w
    return {
        (0, 1): w * (1 - q),
        (0, 2): (s + r2) / 2,
        (0, 3): (s - r2) / 2,
        (1, 1): -(q - 2 + r3) / 2,
        (1, 2): -(q - 2 - r3) / 2,
        (1, 3): -(q - 4 + r4) / 2,
        (1, 4): -(q - 4 - r4) / 2,
        (2, 1): mpmath.mpf(1),
    }


def ph_strip_cyclic(ly: int, m: int, q=None, w=None, *, dps: int = 50):
    """Ph of the width-``ly``, length-``m`` cyclic square strip from its eigenvalues.

    ``ly = 1`` returns the exact polynomial (numeric ``q, w`` evaluate it).
    ``ly = 2`` needs numeric ``q, w`` and returns an mpmath number computed at
    ``dps`` digits; it is real whenever ``q`` and ``w`` are real.
    """
    if m < 1:
        raise ValueError("strip length must be >= 1")
    if ly == 1:
        p = ph_circuit(m)
        if q is None:
            return p
        return p.evaluate(q=q, w=w)
    if ly != 2:
        raise ValueError("eigenvalue forms are available only for widths 1 and 2")
    if q is None or w is None:
        raise ValueError("width 2 needs numeric q and w")
    with mpmath.workdps(dps):
        lam = ladder_eigenvalues(q, w)
        qq = mpmath.mpmathify(q)
        coef = {0: 1, 1: qq - 2, 2: qq**2 - 5 * qq + 5}
        total = sum(coef[d] * lam[(d, j)] ** m for (d, j) in lam)
        if mpmath.im(mpmath.mpmathify(q)) == 0 and mpmath.im(mpmath.mpmathify(w)) == 0:
            total = mpmath.re(total)
        return +total


def _pair_power_sum(m: int, s: MPoly, p: MPoly) -> MPoly:
    a, b = MPoly.const(2), s
    if m == 0:
        return a
    for _ in range(m - 1):
        a, b = b, s * b - p * a
    return b


def ph_ladder_exact(m: int) -> MPoly:
    """Exact Ph of the L_y = 2 cyclic strip from the eigenvalue pairs' sums and products."""
    if m < 1:
        raise ValueError("strip length must be >= 1")
    s0 = Q**2 + (W - 5) * Q + 7 - W
    p0 = -W * (Q - 3) * (Q**2 - 3 * Q + 3)
    d0 = (W * (1 - Q)) ** m + _pair_power_sum(m, s0, p0)
    d1 = _pair_power_sum(m, -(Q - 2), -W * (Q - 1)) + _pair_power_sum(m, -(Q - 4), -W * (Q - 3))
    return d0 + c_tilde(1) * d1 + c_tilde(2)


def ladder_transmigration_w1(q) -> tuple[list, list]:
    """Sorted eigenvalue multisets at w = 1: computed vs the reduced closed forms."""
    lam = ladder_eigenvalues(q, 1)
    got = sorted((complex(v) for v in lam.values()), key=lambda z: (z.real, z.imag))
    q = complex(q)
    want = [1 - q, q * q - 3 * q + 3, 3 - q, 1 - q, 1, 3 - q, 1, 1]
    want = sorted(want, key=lambda z: (z.real, z.imag))
    return got, want


def is_perfect_square(k: int) -> bool:
    return k >= 0 and isqrt(k) ** 2 == k
