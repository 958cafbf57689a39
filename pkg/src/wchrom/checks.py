"""End-to-end validation suite: each check returns a pass/fail result with a short detail line."""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from . import reference as ref
from .conjectures import conjecture_sign_alternation, conjecture_unimodal, w_grid
from .engine import chromatic, delta_ph, ph, potts_Z
from .families import ph_circuit
from .generalized import (CouplingSpec, FieldSpec, eta, list_coloring_ph, potts_Z_general,
                          s_color_ph, s_color_Z)
from .graph import Graph, builtin_graphs, circuit, family, named_tree, random_graph, sq_strip_cyclic
from .oracle import state_histogram
from .poly import MPoly, divides, parse
from .spectra import (labelled_eigenvalues, phi_asymptotics_check, phi_line, q_endpoints,
                      real_axis_report, special_points)
from .strips import (identity_check, multiplicity_rows, n_ph_rows, n_z, n_z_row, n_zh_total,
                     ph_strip_cyclic)
from .zeros import (kn_w_root, l3_q_roots, l3_w_roots, l4_w_roots, l6_w_roots,
                    locate_collision, locate_max_imag, locate_mrz_jump, match_multisets,
                    roots_q, roots_w, roots_with_fixed, isoy6_w_roots, y5_w_roots)

Q, W = MPoly.var("q"), MPoly.var("w")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def named_graph(name: str) -> Graph:
    """Graph for a short name such as ``L4``, ``Wh5``, ``C3`` or a named tree like ``IsoY6``."""
    if name in ("Y5", "Y6", "IsoY6", "H6", "Cr6", "S6"):
        return named_tree(name)
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if not m:
        raise ValueError(f"bad graph name {name!r}")
    return family(f"{m.group(1)}:{m.group(2)}")


def _collect(name: str, parts: list[tuple[str, bool]]) -> CheckResult:
    bad = [p for p, ok in parts if not ok]
    detail = f"{len(parts) - len(bad)}/{len(parts)} sub-checks"
    if bad:
        detail += "; failed: " + ", ".join(bad[:8]) + (" ..." if len(bad) > 8 else "")
    return CheckResult(name, not bad, detail)


# 1


GOLDEN_NAMES = ("L1", "L2", "L3", "L4", "S4", "C2", "C3", "C4", "C5", "Wh5",
                "L5", "Y5", "S5", "L6", "Y6", "IsoY6", "H6", "Cr6", "S6")


def golden_polynomials() -> CheckResult:
    parts = []
    for name in GOLDEN_NAMES:
        got = ph(named_graph(name))
        parts.append((name, got == ref.ph(name)))
        if name in ref.PH_FACTORED:
            parts.append((f"{name}-factored", got == parse(ref.PH_FACTORED[name])))
    return _collect("golden polynomials", parts)


# 2


V_SAMPLES = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1))
W_SAMPLES = (Fraction(0), Fraction(1, 3), Fraction(1), Fraction(2))


def _z_matches_oracle(g: Graph) -> bool:
    z = potts_Z(g)
    for q in range(1, 6):
        h = state_histogram(g, q)
        for v in V_SAMPLES:
            for w in W_SAMPLES:
                brute = sum((int(h[m, k]) * (1 + v) ** m * w**k
                             for m in range(h.shape[0]) for k in range(h.shape[1]) if h[m, k]),
                            Fraction(0))
                if z.evaluate(q=q, v=v, w=w) != brute:
                    return False
    return True


def oracle_equivalence(seed: int = 20240601, n_random: int = 50) -> CheckResult:
    graphs = builtin_graphs(8)
    rng = random.Random(seed)
    for _ in range(n_random):
        graphs.append(random_graph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.9), multi=0.15))
    parts = [(g.label or str(g), _z_matches_oracle(g)) for g in graphs]
    return _collect("oracle equivalence", parts)


# 3


def structure_tables() -> CheckResult:
    rows = n_ph_rows(8)
    parts = [
        ("n_Ph rows", rows == ref.NPH_TABLE),
        ("N_Ph totals", [sum(r) for r in rows] == ref.NPH_TOTALS),
        ("n_Z rows", [n_z_row(ly) for ly in range(1, 9)] == ref.NZ_TABLE),
        ("N_Z totals", [sum(n_z_row(ly)) for ly in range(1, 9)] == ref.NZ_TOTALS),
        ("N_Zh totals", [n_zh_total(ly) for ly in range(1, 9)] == ref.NZH_TOTALS),
        ("N_Ph(8)=16302", sum(rows[7]) == 16302),
        ("n_P rows", multiplicity_rows("np", 8) == ref.NP_TABLE),
        ("n_Zh rows", multiplicity_rows("nzh", 8) == ref.NZH_TABLE),
    ]
    for ly in range(2, 9):
        ok = all(rows[ly - 1][d] == n_z(ly, d) + (n_z(ly - 1, d) if d < ly else 0)
                 for d in range(ly + 1))
        parts.append((f"n_Ph=n_Z+n_Z' L_y={ly}", ok))
    for ly in range(1, 9):
        parts.append((f"identity L_y={ly}", identity_check(ly)))
    return _collect("structure tables", parts)


# 4


Q_GRID = (-1.5, 0.5, 1.7, 2.9, 4.3)
W_GRID = (-0.7, 0.2, 0.6, 1.3, 2.5)


def transfer_vs_enumeration() -> CheckResult:
    parts = []
    for m in range(2, 7):
        exact = ph(sq_strip_cyclic(2, m))
        worst = 0.0
        for q in Q_GRID:
            for w in W_GRID:
                a = float(ph_strip_cyclic(2, m, q, w))
                b = float(exact.evaluate(q=Fraction(q), w=Fraction(w)))
                worst = max(worst, abs(a - b) / max(1.0, abs(b)))
        parts.append((f"ladder m={m} ({worst:.1e})", worst <= 1e-10))
    for n in range(1, 11):
        exact = ph(circuit(n))
        ok = ph_circuit(n) == exact
        with mpmath.workdps(40):
            for q in Q_GRID:
                for w in W_GRID:
                    lams = labelled_eigenvalues("circuit", q, w)
                    val = lams[0] ** n + lams[1] ** n + (q - 2) * lams[2] ** n
                    b = float(exact.evaluate(q=Fraction(q), w=Fraction(w)))
                    ok &= abs(val - b) <= 1e-9 * max(1.0, abs(b))
        parts.append((f"circuit n={n}", ok))
    return _collect("transfer matrix vs enumeration", parts)


# 5


DELTA_EDGES = {
    ("L3", "any"): (0, 1),
    ("C3", "any"): (0, 1, 2),
    ("C4", "any"): (0, 1, 2, 3),
    ("L4", "middle"): ((1, 2),),
    ("L4", "outer"): ((0, 1), (2, 3)),
}


def deletion_contraction() -> CheckResult:
    parts = []
    for (name, where), edges in DELTA_EDGES.items():
        g = named_graph(name)
        want = parse(ref.DELTA[(name, where)])
        for e in edges:
            idx = g.edges.index(e) if isinstance(e, tuple) else e
            parts.append((f"{name} {where} edge {g.edges[idx]}", delta_ph(g, idx) == want))
    return _collect("deletion-contraction deviations", parts)


# 6


def equivalence_differences() -> CheckResult:
    common = parse("(q-1)*w*(w-1)^2")
    parts = []
    for (a, b), text in ref.DIFFERENCES.items():
        ga, gb = named_graph(a), named_graph(b)
        diff = ph(ga) - ph(gb)
        parts.append((f"{a}-{b}", diff == parse(text)))
        parts.append((f"{a}~{b} chromatic", chromatic(ga) == chromatic(gb)))
        parts.append((f"{a}-{b} divisible", divides(common, diff)[0]))
    return _collect("equivalence differences", parts)


# 7


def _formula_parts(tag, poly, var, params, formula, fixed=lambda p: []) -> list[tuple[str, bool]]:
    parts = []
    for p in params:
        rl = roots_w(poly, p) if var == "w" else roots_q(poly, p)
        try:
            got = roots_with_fixed(rl, fixed(p))
            err = match_multisets(got, formula(p))
        except ValueError:
            err = math.inf
        parts.append((f"{tag}@{p} ({err:.1e})", rl.certified() and err <= 1e-9))
    return parts


def zero_formulas() -> CheckResult:
    parts: list[tuple[str, bool]] = []
    l3 = ref.ph("L3")
    parts += _formula_parts("L3 q-roots", l3, "q", (-0.5, 0.1, 0.3, 0.7, 0.9, 1.3, 2.5),
                            l3_q_roots, lambda w: [1])
    parts += _formula_parts("L3 w-roots", l3, "w", (-0.5, 0.3, 1.5, 2.2, 3.7), l3_w_roots)
    for n in range(3, 8):
        kn = ph(family(f"K:{n}"))
        parts += _formula_parts(f"K{n} w-root", kn, "w", (-0.5, 0.3, 2.5, n + 0.7),
                                lambda q, n=n: kn_w_root(n, q))
    qs = (-0.7, 0.4, 1.2, 1.8, 2.6, 3.3, 5.1)
    parts += _formula_parts("L4 w-roots", ref.ph("L4"), "w", qs, l4_w_roots)
    parts += _formula_parts("L6 w-roots", ref.ph("L6"), "w", qs, l6_w_roots)
    parts += _formula_parts("Y5 w-roots", ref.ph("Y5"), "w", qs, y5_w_roots)
    # The double root 2 - q is counted twice, as the formula states.
    parts += _formula_parts("IsoY6 w-roots", ref.ph("IsoY6"), "w", qs,
                            lambda q: isoy6_w_roots(q) + [complex(2 - q)])
    w_col, q_col = locate_collision(l3, 0.5, 1.0)
    parts.append((f"L3 collision w={w_col:.9f}", abs(w_col - 0.8) <= 1e-6))
    parts.append((f"L3 collision q={q_col:.9f}", abs(q_col - 0.8) <= 1e-6))
    w_im, _ = locate_max_imag(l3, 0.05, 0.79)
    parts.append((f"L3 max Im at w={w_im:.9f}", abs(w_im - 0.4) <= 1e-6))
    w_jump = locate_mrz_jump(l3, -0.1, 0.1, 1.5)
    lo, at, hi = (roots_q(l3, x).max_real() for x in (Fraction(-1, 10**4), 0, Fraction(1, 10**4)))
    parts.append((f"L3 q_mrz jump at w={w_jump:.2e}",
                  abs(w_jump) <= 1e-6 and abs(at - 2) < 1e-9 and abs(hi - 1) < 1e-9 and lo > 2))
    return _collect("zero formulas", parts)


# 8


def _near(values, target, tol) -> bool:
    return any(abs(v - target) <= tol for v in values)


def loci(resolution: int = 800) -> CheckResult:
    lo, hi = -6.0, 5.0
    cell = (hi - lo) / resolution
    parts = []
    for w, qc, left in ((1.0, 2.0, 0.0), (0.2, 3.2 / 1.2, 1.0), (0.5, 3.5 / 1.5, 1.0),
                        (0.8, 3.8 / 1.8, 1.0)):
        rep = real_axis_report("circuit", w, lo, hi, resolution, refine=False)
        parts.append((f"circuit w={w} q_c", _near(rep.crossings, qc, cell)))
        parts.append((f"circuit w={w} left", _near(rep.crossings, left, cell)))
        sp = special_points("circuit", w=w)
        parts.append((f"circuit w={w} special", sp["q_c"] == qc and sp["q_cr1"] == left))
    rep = real_axis_report("line", 2.0, lo, hi, resolution, refine=True)
    want = (2 * (1 - 2 - math.sqrt(2)), 2 * (1 - 2 + math.sqrt(2)))
    seg = rep.segments[0] if rep.segments else (math.nan, math.nan)
    parts.append((f"line w=2 endpoints {seg[0]:.4f},{seg[1]:.4f} by scan",
                  abs(seg[0] - want[0]) <= 1e-3 and abs(seg[1] - want[1]) <= 1e-3))
    sp = special_points("line", w=2)
    e1, e2 = q_endpoints(2)
    parts.append(("line w=2 endpoints exact", sp["q_e1"] == e1.real and sp["q_e2"] == e2.real
                  and abs(sp["q_e1"] - 0.828) < 1e-3 and abs(sp["q_e2"] + 4.828) < 1e-3))
    for w in (1.0, 0.2, 0.5, 0.8):
        qc = 2 * (w + 2) / (w + 1)
        rep = real_axis_report("wheel", w, lo, hi, resolution, refine=False)
        parts.append((f"wheel w={w} q_c", _near(rep.crossings, qc, cell)))
        parts.append((f"wheel w={w} special", abs(special_points("wheel", w=w)["q_c"] - qc) < 1e-12))
    return _collect("loci", parts)


# 9


def phi_behavior() -> CheckResult:
    parts = [(c.name, c.passed) for c in phi_asymptotics_check(3.0)]
    ws = [5 * k / 21 for k in range(1, 22)]
    for q in (2.0, 2.5, 3.0, 3.5, 4.0):
        vals = [phi_line(q, w) for w in ws]
        parts.append((f"increasing in w at q={q}", all(a < b for a, b in zip(vals, vals[1:]))))
    qs = [1 + 5 * k / 21 for k in range(1, 22)]
    fixed_w = [k / 10 for k in range(1, 10)] + [k / 10 for k in range(11, 31)]
    for w in fixed_w:
        vals = [phi_line(q, w) for q in qs]
        parts.append((f"increasing in q at w={w}", all(a < b for a, b in zip(vals, vals[1:]))))
    return _collect("phi behavior", parts)


# 10


def conjecture_suite() -> CheckResult:
    parts = []
    grid = w_grid(21)
    for g in builtin_graphs(7):
        if not g.is_connected() or g.has_loop():
            continue
        p = ph(g)
        a = conjecture_sign_alternation(p, g.n, grid)
        u = conjecture_unimodal(p, g.n, grid)
        parts.append((f"{g.label} alternation {a.first_failure}", a.passed))
        parts.append((f"{g.label} unimodal {u.first_failure}", u.passed))
    return _collect("conjecture suites", parts)


# 11


def generalizations() -> CheckResult:
    parts = []
    c3 = circuit(3)
    e1, e2, e3 = eta(1, 3), eta(2, 3), eta(3, 3)
    v = [MPoly.var(f"v_{i}") for i in (1, 2, 3)]
    want = (e1**3 + (v[0] + v[1] + v[2]) * e2 * e1
            + (v[0] * v[1] + v[1] * v[2] + v[2] * v[0] + v[0] * v[1] * v[2]) * e3)
    got = potts_Z_general(c3, FieldSpec("per_color", q=3), CouplingSpec("per_edge"))
    parts.append(("C3 general Z", got == want))
    parts.append(("C3 general Ph", got.substitute(v_1=-1, v_2=-1, v_3=-1)
                  == e1**3 - 3 * e2 * e1 + 2 * e3))
    s, q = MPoly.var("s"), MPoly.var("q")
    for g in builtin_graphs(6):
        z = s_color_Z(g)
        z0 = potts_Z(g).substitute(w=1)
        pg = chromatic(g)
        tag = g.label
        parts.append((f"{tag} Z(s=0)", z.substitute(s=0) == z0))
        parts.append((f"{tag} Z(w=1)", z.substitute(w=1) == z0))
        parts.append((f"{tag} Z(w=0)", z.substitute(w=0) == z0.substitute(q=q - s)))
        parts.append((f"{tag} Z(s=q)", z.substitute(s=q) == W**g.n * z0))
        phs = s_color_ph(g)
        parts.append((f"{tag} Ph(s=0)", phs.substitute(s=0) == pg))
        parts.append((f"{tag} Ph(w=1)", phs.substitute(w=1) == pg))
        parts.append((f"{tag} Ph(w=0)", phs.substitute(w=0) == pg.substitute(q=q - s)))
    w123 = MPoly.var("w_1") * MPoly.var("w_2") * MPoly.var("w_3")
    lists = [(1, 2), (2, 3), (1, 3)]
    parts.append(("list 2w1w2w3", list_coloring_ph(c3, lists) == 2 * w123))
    parts.append(("list count 2", list_coloring_ph(c3, lists, weights=[1, 1, 1]) == 2))
    single = [(1, 2, 3), (1, 2), (1,)]
    parts.append(("list count 1", list_coloring_ph(c3, single, weights=[1, 1, 1]) == 1))
    parts.append(("list single w1w2w3", list_coloring_ph(c3, single) == w123))
    return _collect("generalizations", parts)


CRITERIA: dict[int, tuple[str, Callable[[], CheckResult]]] = {
    1: ("golden polynomials", golden_polynomials),
    2: ("oracle equivalence", oracle_equivalence),
    3: ("structure tables", structure_tables),
    4: ("transfer matrix vs enumeration", transfer_vs_enumeration),
    5: ("deletion-contraction deviations", deletion_contraction),
    6: ("equivalence differences", equivalence_differences),
    7: ("zero formulas", zero_formulas),
    8: ("loci", loci),
    9: ("phi behavior", phi_behavior),
    10: ("conjecture suites", conjecture_suite),
    11: ("generalizations", generalizations),
}

QUICK = (1, 3, 5, 6, 9, 11)


def run_suite(which=None) -> list[CheckResult]:
    keys = sorted(CRITERIA) if which is None else list(which)
    return [CRITERIA[k][1]() for k in keys]

