"""Closed-form Ph for line, star, complete, circuit and wheel graphs, plus coefficient predictions."""

from __future__ import annotations

from math import comb
from typing import Sequence

from .engine import falling_factor
from .graph import Graph
from .poly import MPoly, divides, parse

Q, V, W = MPoly.var("q"), MPoly.var("v"), MPoly.var("w")


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), MPoly()) for j in range(len(b[0]))]
            for i in range(len(a))]


def _matpow(m, k):
    size = len(m)
    out = [[MPoly.const(int(i == j)) for j in range(size)] for i in range(size)]
    while k:
        if k & 1:
            out = _matmul(out, m)
        k >>= 1
        if k:
            m = _matmul(m, m)
    return out


def z_line(n: int) -> MPoly:
    """Z(L_n, q, v, w) from the 2x2 transfer matrix along the path."""
    if n < 1:
        raise ValueError("L_n requires n >= 1")
    t = [[Q + V - 1, W], [Q - 1, W * (V + 1)]]
    h = [[MPoly.const(1), MPoly()], [MPoly(), W]]
    u = [[Q - 1, MPoly.const(1)]]
    s = [[MPoly.const(1)], [MPoly.const(1)]]
    return _matmul(_matmul(_matmul(u, h), _matpow(t, n - 1)), s)[0][0]


def ph_line(n: int) -> MPoly:
    return z_line(n).substitute(v=-1)


def z_star(n: int) -> MPoly:
    if n < 2:
        raise ValueError("S_n closed form needs n >= 2")
    qt = Q - 1
    return sum(
        (comb(n - 1, j) * V**j * (qt + W ** (j + 1)) * (qt + W) ** (n - 1 - j) for j in range(n)),
        MPoly(),
    )


def ph_star(n: int) -> MPoly:
    return z_star(n).substitute(v=-1)


def ph_complete(n: int) -> MPoly:
    if n < 1:
        raise ValueError("K_n requires n >= 1")
    return falling_factor(n, 1) * (Q + n * (W - 1))


def circuit_power_sum(n: int, q: MPoly = Q, w: MPoly = W) -> MPoly:
    """lambda_1**n + lambda_2**n for the pair with sum q - 2 and product -(q - 1) w."""
    p0, p1 = MPoly.const(2), q - 2
    if n == 0:
        return p0
    a, b = q - 2, (q - 1) * w
    for _ in range(n - 1):
        p0, p1 = p1, a * p1 + b * p0
    return p1


def ph_circuit(n: int, q: MPoly = Q, w: MPoly = W) -> MPoly:
    """Ph(C_n) as eigenvalue power sums; zero for the loop C_1."""
    if n < 1:
        raise ValueError("C_n requires n >= 1")
    return circuit_power_sum(n, q, w) + (q - 2) * (-1) ** n


def p_circuit(n: int, x: MPoly = Q) -> MPoly:
    """Chromatic polynomial of C_n at x: (x - 1)^n + (x - 1)(-1)^n."""
    return (x - 1) ** n + (x - 1) * (-1) ** n


def ph_wheel(n: int) -> MPoly:
    """Ph(Wh_n) for ``n >= 3`` via the rim circuit with one color used by the hub."""
    if n < 3:
        raise ValueError("Wh_n requires n >= 3")
    rim = n - 1
    return (Q - 1) * ph_circuit(rim, Q - 1, W) + W * p_circuit(rim, Q - 1)


def ph_empty(n: int) -> MPoly:
    return (Q - 1 + W) ** n


CLOSED_FORMS = {
    "N": ph_empty,
    "L": ph_line,
    "S": ph_star,
    "K": ph_complete,
    "C": ph_circuit,
    "Wh": ph_wheel,
}


def closed_form(kind: str, n: int) -> MPoly:
    if kind == "S" and n == 1:
        return ph_empty(1)
    if kind not in CLOSED_FORMS:
        raise ValueError(f"no closed form for family {kind!r}")
    return CLOSED_FORMS[kind](n)


def coefficient_oracle(kind: str, n: int) -> dict:
    """Predicted ``alpha_{n-1}``, ``deg_w`` and the top-``w`` coefficient for a family member.

    Returns:
        dict with keys ``alpha_n_minus_1`` (polynomial in w), ``deg_w`` (int)
        and ``beta_top`` (polynomial in q).
    """
    if kind == "L":
        if n < 1:
            raise ValueError("L_n requires n >= 1")
        alpha = 1 + n * (W - 2)
        if n % 2:
            m = (n - 1) // 2
            top, deg = (Q - 1) ** m, m + 1
        else:
            m = n // 2
            top, deg = (Q - 1) ** (m - 1) * ((m + 1) * Q - 2 * m), m
        return {"alpha_n_minus_1": alpha, "deg_w": deg, "beta_top": top}
    if kind == "S":
        if n < 2:
            raise ValueError("S_n requires n >= 2 here")
        alpha = 1 + n * (W - 2)
        if n == 2:
            return {"alpha_n_minus_1": alpha, "deg_w": 1, "beta_top": 2 * (Q - 1)}
        return {"alpha_n_minus_1": alpha, "deg_w": n - 1, "beta_top": Q - 1}
    if kind == "C":
        if n < 2:
            raise ValueError("C_n requires n >= 2 here")
        alpha = n * (W - 2) if n >= 3 else -(3 - 2 * W)
        if n % 2 == 0:
            m = n // 2
            top = 2 * (Q - 1) ** m
        else:
            m = (n - 1) // 2
            top = (2 * m + 1) * (Q - 1) ** m * (Q - 2)
        return {"alpha_n_minus_1": alpha, "deg_w": m, "beta_top": top}
    if kind == "K":
        if n < 2:
            raise ValueError("K_n requires n >= 2 here")
        alpha = -(comb(n, 2) + n * (1 - W))
        return {"alpha_n_minus_1": alpha, "deg_w": 1, "beta_top": n * falling_factor(n, 1)}
    if kind == "Wh":
        if n < 4:
            raise ValueError("Wh_n coefficient predictions need n >= 4")
        rim = n - 1
        alpha = -(3 * rim + 1 - (rim + 1) * W)
        if n == 4:
            # Wh_4 is K_4; the hub term adds one more copy to the w^1 coefficient.
            return {"alpha_n_minus_1": alpha, "deg_w": 1, "beta_top": 4 * falling_factor(4, 1)}
        if n % 2 == 0:
            m = n // 2
            top = (2 * m - 1) * (Q - 1) * (Q - 2) ** (m - 1) * (Q - 3)
            deg = m - 1
        else:
            m = (n - 1) // 2
            top = 2 * (Q - 1) * (Q - 2) ** m
            deg = m
        return {"alpha_n_minus_1": alpha, "deg_w": deg, "beta_top": top}
    raise ValueError(f"unsupported family {kind!r}")


def observed_coefficients(p: MPoly, n: int) -> dict:
    deg = p.degree("w")
    return {
        "alpha_n_minus_1": p.coeff("q", n - 1),
        "deg_w": deg,
        "beta_top": p.coeff("w", deg),
    }


def equivalence_differences(graphs: Sequence[Graph], polys: Sequence[MPoly] | None = None
                            ) -> list[dict]:
    """Pairwise Ph differences for graphs sharing the same chromatic polynomial.

    Each entry records the two labels, whether they are chromatically
    equivalent, the difference, and the cofactor after removing
    ``(q - 1) w (w - 1)^2`` (``None`` when that factor does not divide).
    """
    from .engine import ph

    polys = list(polys) if polys is not None else [ph(g) for g in graphs]
    common = parse("(q-1)*w*(w-1)^2")
    out = []
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            a, b = polys[i], polys[j]
            equiv = graphs[i].n == graphs[j].n and a.substitute(w=1) == b.substitute(w=1)
            diff = a - b
            cof = None
            if equiv:
                ok, quot = divides(common, diff)
                cof = quot if ok else None
            out.append({
                "a": graphs[i].label, "b": graphs[j].label, "equivalent": equiv,
                "difference": diff, "cofactor": cof,
            })
    return out
