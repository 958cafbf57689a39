"""Command-line interface: ``wchrom <subcommand> [options]``.

Exit codes: 0 ok, 2 usage or bad input, 3 enumeration cap or work budget
exceeded, 4 invariant failure (including a closed form or table mismatch).
"""

from __future__ import annotations

import argparse
import csv
import difflib
import sys
from fractions import Fraction
from typing import Sequence

from . import engine, families, generalized, oracle, reference, spectra, strips
from .config import CapExceeded, InvariantFailure, default_threads
from .graph import Graph, family, parse_family, read_edge_list
from .poly import MPoly, as_number
from .zeros import roots_q, roots_w

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4

VARS = {
    "q,w": "ph",
    "q,v,w": "Z",
    "q": "chromatic",
    "x,y": "tutte",
    "q,s,v,w": "s_color_Z",
    "q,s,w": "s_color_ph",
}

_TREE_KINDS = ("Y", "IsoY", "H", "Cr")


# Argument helpers


def parse_fix(text: str | None) -> dict[str, Fraction]:
    """``"w=1/2,q=3"`` -> ``{"w": Fraction(1, 2), "q": Fraction(3)}``."""
    out: dict[str, Fraction] = {}
    if not text:
        return out
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep or not name.strip():
            raise ValueError(f"bad --fix item {part!r}; expected NAME=VALUE")
        out[name.strip()] = as_number(value.strip())
    return out


def parse_sweep(text: str) -> list[Fraction]:
    """``"lo:hi:steps"`` -> ``steps`` equally spaced exact values from ``lo`` to ``hi``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"bad --sweep {text!r}; expected lo:hi:steps")
    lo, hi = as_number(parts[0]), as_number(parts[1])
    steps = int(parts[2])
    if steps < 1:
        raise ValueError("--sweep needs at least one step")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]


def parse_complex(text: str) -> complex | float:
    z = complex(text.replace(" ", "").replace("i", "j"))
    return z.real if z.imag == 0 else z


def load_graph(args) -> Graph:
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            return read_edge_list(fh.read())
    if getattr(args, "family", None):
        return family(args.family)
    raise ValueError("give --graph FILE or --family SPEC")


def engine_opts(args) -> dict:
    return {"threads": args.threads or default_threads(), "cap": args.cap}


def fmt_number(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    return str(x)


def fmt_float(x: float) -> str:
    return f"{x:.15g}"


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# Subcommands


def cmd_compute(args) -> int:
    g = load_graph(args)
    key = ",".join(v.strip() for v in args.vars.split(","))
    if key not in VARS:
        raise ValueError(f"unsupported --vars {args.vars!r}; choose from {', '.join(VARS)}")
    opts = engine_opts(args)
    kind = VARS[key]
    if kind == "ph":
        p = engine.ph(g, **opts)
    elif kind == "Z":
        p = engine.potts_Z(g, **opts)
    elif kind == "chromatic":
        p = engine.chromatic(g, **opts)
    elif kind == "tutte":
        p = engine.tutte(g, **opts)
    elif kind == "s_color_Z":
        p = generalized.s_color_Z(g, **opts)
    else:
        p = generalized.s_color_ph(g, **opts)
    fix = parse_fix(args.fix)
    unknown = set(fix) - set(key.split(","))
    if unknown:
        raise ValueError(f"--fix names {sorted(unknown)} are not among --vars {key}")
    if fix:
        p = p.substitute(fix)
    emit(f"{p}\n", args.out)
    return EXIT_OK


def _family_closed_form(text: str) -> tuple[str, MPoly]:
    spec = parse_family(text)
    if spec.kind == "SqStripCyc":
        if spec.width == 1:
            return "circuit transfer form", families.ph_circuit(spec.length)
        if spec.width == 2:
            return "ladder eigenvalue form", strips.ph_ladder_exact(spec.length)
        raise ValueError("closed forms exist only for strip widths 1 and 2")
    if spec.kind in _TREE_KINDS:
        name = f"{spec.kind}{spec.n}"
        if name not in reference.PH:
            raise ValueError(f"no tabulated polynomial for {name}")
        return "tabulated", reference.ph(name)
    if spec.kind == "N":
        return "closed form", families.ph_empty(spec.n)
    return "closed form", families.closed_form(spec.kind, spec.n)


def cmd_family(args) -> int:
    label, closed = _family_closed_form(args.family)
    g = family(args.family)
    computed = engine.ph(g, **engine_opts(args))
    ok = closed == computed
    text = (f"family: {args.family}\n"
            f"{label}: {closed}\n"
            f"engine: {computed}\n")
    if not ok:
        text += f"difference: {closed - computed}\n"
    text += f"verdict: {'match' if ok else 'MISMATCH'}\n"
    emit(text, args.out)
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_tables(args) -> int:
    rows = strips.multiplicity_rows(args.which, args.max)
    text = strips.format_table(rows)
    emit(text, args.out)
    ref_rows, _ = reference.TABLES[args.which]
    overlap = min(args.max, len(ref_rows))
    got = strips.format_table(rows[:overlap]).splitlines(keepends=True)
    want = strips.format_table(ref_rows[:overlap]).splitlines(keepends=True)
    diff = list(difflib.unified_diff(want, got, "reference", "computed"))
    if diff:
        sys.stderr.writelines(diff)
        return EXIT_INVARIANT
    print(f"reference: rows 1..{overlap} identical", file=sys.stderr)
    return EXIT_OK


def cmd_zeros(args) -> int:
    g = load_graph(args)
    ph = engine.ph(g, **engine_opts(args))
    if args.sweep:
        if args.fix:
            raise ValueError("use either --fix or --sweep, not both")
        name = args.param
        values = parse_sweep(args.sweep)
    else:
        fix = parse_fix(args.fix)
        if len(fix) != 1:
            raise ValueError("--fix takes exactly one of w=VALUE or q=VALUE")
        (name, value), = fix.items()
        values = [value]
    if name not in ("q", "w"):
        raise ValueError("the fixed parameter must be q or w")
    solve = roots_q if name == "w" else roots_w
    rows = []
    for value in values:
        rl = solve(ph, value)
        if rl.degenerate:
            print(f"note: slice at {name}={fmt_number(value)} is identically zero", file=sys.stderr)
            continue
        for r, m, res in zip(rl.roots, rl.mult, rl.residuals):
            rows.append([fmt_number(value), fmt_float(r.real), fmt_float(r.imag), m,
                         f"{res:.3e}"])
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(["param", "root_re", "root_im", "mult", "residual"])
        wr.writerows(rows)
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def _parse_window(text: str) -> tuple[float, float, float, float]:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 4 or parts[0] >= parts[1] or parts[2] >= parts[3]:
        raise ValueError("--window needs re_lo,re_hi,im_lo,im_hi with lo < hi")
    return tuple(parts)


def _parse_resolution(text: str) -> tuple[int, int]:
    parts = [int(x) for x in text.lower().split("x")]
    if len(parts) == 1:
        parts *= 2
    if len(parts) != 2 or min(parts) < 2:
        raise ValueError("--resolution needs N or NXxNY with N >= 2")
    return parts[0], parts[1]


def _fmt_point(z) -> str:
    z = complex(z)
    if z.imag == 0:
        return fmt_float(z.real)
    return f"{fmt_float(z.real)}{'+' if z.imag >= 0 else '-'}{fmt_float(abs(z.imag))}i"


def cmd_locus(args) -> int:
    fixed = parse_complex(args.fix)
    window = _parse_window(args.window)
    nx, ny = _parse_resolution(args.resolution)
    scan = spectra.locus_scan(args.family, args.plane, fixed, window, (nx, ny),
                              threads=args.threads or default_threads())
    if args.out:
        scan.write_csv(args.out)
    lines = [f"family={args.family}", f"plane={args.plane}", f"fixed={_fmt_point(fixed)}",
             f"cells={nx}x{ny}", f"flagged={int(scan.flagged.sum())}"]
    if args.family != "ladder":
        kw = {"w": fixed} if args.plane == "q" else {"q": fixed}
        for k, v in sorted(spectra.special_points(args.family, **kw).items()):
            lines.append(f"{k}={_fmt_point(v)}")
    if isinstance(fixed, float):
        axis = spectra.real_axis_report(args.family, fixed, window[0], window[1], nx,
                                        plane=args.plane)
        lines.append("crossings=" + ",".join(fmt_float(x) for x in axis.crossings))
        lines.append("segments=" + ",".join(f"[{fmt_float(a)},{fmt_float(b)}]"
                                            for a, b in axis.segments))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    from . import checks

    if args.criteria:
        which = [int(x) for x in args.criteria.split(",")]
        bad = [k for k in which if k not in checks.CRITERIA]
        if bad:
            raise ValueError(f"unknown criteria {bad}; valid are 1..{len(checks.CRITERIA)}")
    else:
        which = list(checks.QUICK if args.quick else sorted(checks.CRITERIA))
    failed = 0
    for k in which:
        name, fn = checks.CRITERIA[k]
        res = fn()
        failed += not res.passed
        print(f"[{k:2d}] {res.line()}", flush=True)
    print(f"summary: {len(which) - failed}/{len(which)} criteria passed")
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args)
    value = oracle.brute_force_Z(g, args.q, as_number(args.v), as_number(args.w))
    print(fmt_number(value))
    return EXIT_OK


# Parser


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", metavar="FILE", help="edge-list file ('n N' header, 'u v' lines)")
    src.add_argument("--family", metavar="SPEC", help="family string such as C:5, Wh:6, sqcyc:2x4")


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--cap", type=int, default=None,
                   help="maximum edge count for subgraph enumeration (default 30 or WCHROM_CAP)")
    p.add_argument("--out", metavar="FILE", help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wchrom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact polynomial for a graph")
    _add_graph_source(p)
    p.add_argument("--vars", default="q,w",
                   help="q,w (Ph), q,v,w (Z), q (chromatic), x,y (Tutte), q,s,v,w or q,s,w")
    p.add_argument("--fix", help="substitute exact values, e.g. w=1/2,q=3")
    _add_engine_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="closed form against the enumeration engine")
    p.add_argument("--family", required=True, metavar="SPEC")
    _add_engine_flags(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tables", help="strip multiplicity tables")
    p.add_argument("--which", choices=sorted(reference.TABLES), default="nph")
    p.add_argument("--max", type=int, default=8, help="largest strip width")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("zeros", help="complex zeros in q or w as CSV")
    _add_graph_source(p)
    p.add_argument("--fix", help="w=VALUE solves in q; q=VALUE solves in w")
    p.add_argument("--sweep", help="lo:hi:steps values of --param")
    p.add_argument("--param", choices=("q", "w"), default="w", help="parameter swept")
    _add_engine_flags(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("locus", help="dominance grid and special points of a limiting locus")
    p.add_argument("--family", required=True, choices=spectra.FAMILIES)
    p.add_argument("--plane", choices=("q", "w"), default="q")
    p.add_argument("--fix", default="1", help="value of the other parameter (complex allowed)")
    p.add_argument("--window", default="-6,5,-4,4", help="re_lo,re_hi,im_lo,im_hi")
    p.add_argument("--resolution", default="800", help="N or NXxNY cells")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", metavar="FILE", help="grid CSV")
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("check", help="run the acceptance suite")
    p.add_argument("--criteria", help="comma-separated criterion numbers")
    p.add_argument("--quick", action="store_true", help="only the fast criteria")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force Z(G, q, v, w) over all colorings")
    _add_graph_source(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--v", default="-1")
    p.add_argument("--w", default="1")
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantFailure as exc:
        print(f"error: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
