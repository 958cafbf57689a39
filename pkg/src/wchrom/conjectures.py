"""Sign-alternation and unimodality checks on the q-coefficients of Ph, and their w-zero atlas."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import MPoly, UniSlice
from .zeros import RootList, solve_slice


def w_grid(points: int = 21, lo=0, hi=1) -> list[Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    return [lo + (hi - lo) * k / (points - 1) for k in range(points)]


def alpha_slices(ph: MPoly, n: int) -> dict[int, UniSlice]:
    """``alpha_{n-j}(w)`` for ``j = 0..n`` as exact univariate slices in ``w``, keyed by ``j``."""
    return {j: ph.coeff("q", n - j).slice("w") for j in range(n + 1)}


def _alphas_at(ph: MPoly, n: int, w: Fraction) -> list[Fraction]:
    return [Fraction(ph.coeff("q", n - j).evaluate(w=w)) for j in range(n + 1)]


@dataclass(frozen=True)
class SampleVerdict:
    w: Fraction
    status: str  # "pass", "fail" or "out of range"
    detail: str = ""


@dataclass(frozen=True)
class ConjectureReport:
    name: str
    samples: tuple[SampleVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(s.status != "fail" for s in self.samples)

    @property
    def first_failure(self) -> SampleVerdict | None:
        return next((s for s in self.samples if s.status == "fail"), None)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_alternation_at(ph: MPoly, n: int, w) -> SampleVerdict:
    """``sgn alpha_{n-j}(w) = (-1)^j`` for ``0 <= j <= n - 1``, and for ``j = n`` when ``w < 1``.

    Samples with ``w > 1`` are reported as out of range; negative ``w`` is checked.
    """
    w = Fraction(w)
    if w > 1:
        return SampleVerdict(w, "out of range", "conjecture stated for w <= 1")
    alphas = _alphas_at(ph, n, w)
    top = n if w < 1 else n - 1
    for j in range(top + 1):
        if _sign(alphas[j]) != (-1) ** j:
            return SampleVerdict(w, "fail", f"j={j}: alpha={alphas[j]}")
    return SampleVerdict(w, "pass")


def conjecture_sign_alternation(ph: MPoly, n: int, w_samples: Iterable) -> ConjectureReport:
    return ConjectureReport("sign_alternation",
                            tuple(sign_alternation_at(ph, n, w) for w in w_samples))


def is_unimodal(seq: Sequence[Fraction]) -> tuple[bool, str]:
    """Strict rise then strict fall; one pair of equal neighbours is allowed at the peak."""
    i, m = 0, len(seq)
    while i + 1 < m and seq[i] < seq[i + 1]:
        i += 1
    if i + 1 < m and seq[i] == seq[i + 1]:
        i += 1
    while i + 1 < m and seq[i] > seq[i + 1]:
        i += 1
    if i + 1 < m:
        return False, f"breaks at index {i}: {seq[i]} then {seq[i + 1]}"
    return True, ""


def unimodal_at(ph: MPoly, n: int, w) -> SampleVerdict:
    """Unimodality of ``|(-1)^j alpha_{n-j}(w)|`` over the nonzero range of ``j``."""
    w = Fraction(w)
    if not 0 <= w <= 1:
        return SampleVerdict(w, "out of range", "conjecture stated for 0 <= w <= 1")
    alphas = _alphas_at(ph, n, w)
    top = n if w < 1 else n - 1
    seq = [abs(alphas[j]) for j in range(top + 1)]
    while seq and seq[-1] == 0:
        seq.pop()
    ok, why = is_unimodal(seq)
    return SampleVerdict(w, "pass" if ok else "fail", why)


def conjecture_unimodal(ph: MPoly, n: int, w_samples: Iterable) -> ConjectureReport:
    return ConjectureReport("unimodal", tuple(unimodal_at(ph, n, w) for w in w_samples))


def coefficient_zero_atlas(ph: MPoly, n: int) -> dict[int, RootList]:
    """Complex ``w``-roots of every ``alpha_k(w)``, keyed by the power ``k`` of ``q``."""
    return {n - j: solve_slice(s) for j, s in alpha_slices(ph, n).items()}
