"""Command-line entry point: ``specgeom <subcommand> ...``.

Exit codes: 0 success or expected verdict, 1 input error, 2 internal
invariant failure, 3 negative verdict.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

from specgeom import heat, lattices, polygeom
from specgeom.heat.quadrature import QuadratureConfig, QuadratureError

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_NEGATIVE = 0, 1, 2, 3

LATTICE_FIXTURES = {
    "e8": lattices.e8_basis,
    "e16": lattices.e16_basis,
    "e8xe8": lattices.e8xe8_basis,
}
COMPLEX_FIXTURES = {
    "disk": lambda: polygeom.polygon_complex(4),
    "annulus": polygeom.square_annulus,
    "two-holes": polygeom.two_hole_complex,
}
FIXTURE = "fixture:"


class InputError(Exception):
    pass


class InvariantError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invariant failures here
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


# -- value parsing -------------------------------------------------------------------

_ANGLE = re.compile(r"^\s*(?:([-+]?\d*\.?\d+(?:[eE][-+]?\d+)?)\s*\*?\s*)?pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_angle(text: str) -> float:
    """A float, or ``pi`` with an optional factor and divisor: ``pi``, ``3pi/4``, ``0.8*pi``."""
    m = _ANGLE.match(text.lower())
    if m:
        factor = float(m.group(1)) if m.group(1) else 1.0
        div = float(m.group(2)) if m.group(2) else 1.0
        return factor * math.pi / div
    try:
        return float(text)
    except ValueError:
        raise InputError(f"cannot parse angle {text!r}") from None


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return v


def _nonnegative(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return v


def _rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact number") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return v


def _side(text: str):
    try:
        v = Fraction(text)
    except ValueError:
        v = _positive(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"side {text!r} must be positive")
    return v


def load_lattice_arg(spec: str):
    if spec.startswith(FIXTURE):
        name = spec[len(FIXTURE):]
        if name not in LATTICE_FIXTURES:
            raise InputError(f"unknown lattice fixture {name!r}; choose from {sorted(LATTICE_FIXTURES)}")
        return LATTICE_FIXTURES[name]()
    return lattices.load_form(spec)


def load_complex_arg(spec: str) -> polygeom.CellComplex:
    if spec.startswith(FIXTURE):
        name = spec[len(FIXTURE):]
        if name not in COMPLEX_FIXTURES:
            raise InputError(f"unknown complex fixture {name!r}; choose from {sorted(COMPLEX_FIXTURES)}")
        return COMPLEX_FIXTURES[name]()
    return polygeom.load_complex(spec)


# -- output -------------------------------------------------------------------------


def fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render(result: dict, fmt_name: str) -> str:
    """``result`` holds ``columns`` and ``rows`` plus optional extra JSON-only fields."""
    if fmt_name == "json":
        payload = {k: v for k, v in result.items() if k not in ("columns", "rows")}
        payload["rows"] = [dict(zip(result["columns"], r)) for r in result["rows"]]
        return json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(result["columns"])
    for r in result["rows"]:
        w.writerow([fmt(v) for v in r])
    return buf.getvalue()


class Context:
    def __init__(self, args):
        self.args = args
        self.first_input = None
        self.cfg = QuadratureConfig(args.tol, args.tol) if args.tol else QuadratureConfig()

    def note_input(self, obj):
        if self.first_input is None:
            self.first_input = obj
        return obj


def emit(obj, path: str) -> None:
    if isinstance(obj, (lattices.LatticeBasis, lattices.GramMatrix)):
        lattices.dump_lattice(obj, path)
    elif isinstance(obj, polygeom.Polygon):
        polygeom.dump_polygon(obj, path)
    elif isinstance(obj, polygeom.CellComplex):
        Path(path).write_text(json.dumps(obj.to_json(), sort_keys=True) + "\n")
    else:
        raise InputError("--emit needs a command with a lattice, polygon or complex input")


# -- subcommands --------------------------------------------------------------------


def cmd_milnor_verify(ctx: Context):
    a = ctx.note_input(lattices.e16_basis())
    b = lattices.e8xe8_basis()
    ga, gb = lattices.gram_of_basis(a), lattices.gram_of_basis(b)
    cert = lattices.certificate_isospectral(ga, gb)
    summands = [lattices.orthogonal_decompose(ga).count, lattices.orthogonal_decompose(gb).count]
    isometric = summands[0] == summands[1]
    verdict = f"{'isospectral' if cert.isospectral else 'not isospectral'}, {'isometric?' if isometric else 'non-isometric'}"
    spectra_equal = None
    if ctx.args.cutoff is not None:
        spectra_equal = lattices.torus_spectrum(a, ctx.args.cutoff).lines == lattices.torus_spectrum(b, ctx.args.cutoff).lines
    result = {
        "columns": ["isospectral", "summands_e16", "summands_e8xe8", "spectra_equal", "verdict"],
        "rows": [[cert.isospectral, summands[0], summands[1], spectra_equal, verdict]],
        "isospectral": cert.isospectral,
        "summands": summands,
        "verdict": verdict,
        "certificate": cert.to_dict(),
    }
    if ctx.args.cutoff is not None:
        result["cutoff"] = ctx.args.cutoff
        result["spectra_equal"] = spectra_equal
    ok = cert.isospectral and summands == [1, 2] and spectra_equal in (None, True)
    if not ok:
        sys.stderr.write(f"milnor-verify: unexpected outcome: {verdict}, summands {summands}, spectra_equal={spectra_equal}\n")
    return result, EXIT_OK if ok else EXIT_INTERNAL


def cmd_torus_spectrum(ctx: Context):
    basis = ctx.note_input(load_lattice_arg(ctx.args.lattice))
    cutoff = ctx.args.cutoff
    spec = lattices.torus_spectrum(basis, cutoff)
    rows = [[s, m, 4 * math.pi**2 * float(s)] for s, m in spec.lines]
    return {"columns": ["norm_sq_exact", "multiplicity", "eigenvalue"], "rows": rows, "cutoff": cutoff}, EXIT_OK


def cmd_isospec(ctx: Context):
    a = ctx.note_input(load_lattice_arg(ctx.args.lattice_a))
    b = load_lattice_arg(ctx.args.lattice_b)
    if a.n != b.n:
        raise InputError(f"dimension mismatch: {a.n} vs {b.n}")
    rep = lattices.certificate_isospectral(lattices.as_gram(a), lattices.as_gram(b))
    d = rep.to_dict()
    cols = ["verdict", "first_discrepancy", "det_p", "det_q", "level_p", "level_q", "mu0", "t_bound"]
    result = {"columns": cols, "rows": [[d[c] for c in cols]], "report": d}
    return result, EXIT_OK if rep.isospectral else EXIT_NEGATIVE


def cmd_weyl(ctx: Context):
    box = heat.BoxSpec(ctx.args.sides)
    rows = []
    for lam in ctx.args.lam:
        n, ratio = heat.weyl_ratio(box, ctx.args.bc, lam)
        rows.append([lam, n, ratio])
    return {"columns": ["lambda", "N", "weyl_ratio"], "rows": rows}, EXIT_OK


def cmd_corner(ctx: Context):
    if ctx.args.ngon:
        rows = []
        for n in ctx.args.ngon:
            v = heat.corner_sum_regular_ngon(n, ctx.cfg)
            rows.append([n, v, v - 1 / 6])
        return {"columns": ["N", "corner_sum", "deviation_from_1/6"], "rows": rows}, EXIT_OK
    rows = []
    for text in ctx.args.theta or []:
        theta = parse_angle(text)
        integral = heat.carslaw_integral(theta, ctx.cfg)
        rows.append([theta, integral, heat.corner_coefficient(theta, ctx.cfg)])
    if not rows:
        raise InputError("corner: give --theta or --ngon")
    return {"columns": ["theta", "carslaw_integral", "corner_coefficient"], "rows": rows}, EXIT_OK


def _box_expansion(box: heat.BoxSpec, bc: str, t: float) -> float:
    # two-term expansion (4 pi t)^(-n/2) (|box| -/+ sqrt(pi t)/2 |boundary|)
    sign = -1.0 if heat.BoundaryCondition.parse(bc) is heat.BoundaryCondition.DIRICHLET else 1.0
    return (4 * math.pi * t) ** (-box.n / 2) * (box.volume + sign * math.sqrt(math.pi * t) / 2 * box.boundary_measure)


def cmd_heat_trace(ctx: Context):
    args = ctx.args
    rows = []
    if args.polygon:
        poly = ctx.note_input(polygeom.load_polygon(args.polygon))
        expansion = heat.polygon_heat_expansion(poly, ctx.cfg)
        for t in args.t:
            rows.append([t, None, expansion(t), None])
        extra = {"corner_constant": expansion.corner_constant}
    else:
        box = heat.BoxSpec(args.box)
        extra = {}
        for t in args.t:
            s = heat.heat_trace_eigensum(box, args.bc, t, args.tail_tol)
            e = _box_expansion(box, args.bc, t)
            rows.append([t, s.value, e, s.value - e])
    return {"columns": ["t", "eigensum", "expansion", "residual"], "rows": rows, **extra}, EXIT_OK


def cmd_polygeom(ctx: Context):
    args = ctx.args
    if args.staircase:
        rows = []
        for k in args.staircase:
            if k == args.staircase[0]:
                ctx.note_input(polygeom.staircase_polygon(k))
            r = polygeom.staircase_report(k)
            rows.append([r.k, r.sides, r.perimeter, r.hausdorff_to_disk, r.max_spike_angle])
        return {"columns": ["k", "sides", "perimeter", "hausdorff_to_disk", "max_spike_angle"], "rows": rows}, EXIT_OK
    if args.hausdorff:
        a = ctx.note_input(polygeom.load_polygon(args.hausdorff[0]))
        b = polygeom.load_polygon(args.hausdorff[1])
        d = polygeom.hausdorff_distance(polygeom.PointCloud.of_polygon(a), polygeom.PointCloud.of_polygon(b))
        return {"columns": ["hausdorff"], "rows": [[d]]}, EXIT_OK
    if args.euler:
        c = ctx.note_input(load_complex_arg(args.euler))
        chi = polygeom.euler_characteristic(c)
        return {"columns": ["V", "E", "F", "chi", "holes"], "rows": [[c.V, c.E, c.F, chi, polygeom.holes_from_chi(chi)]]}, EXIT_OK
    raise InputError("polygeom: give one of --staircase, --hausdorff, --euler")


COMMANDS = {
    "milnor-verify": (cmd_milnor_verify, "json"),
    "torus-spectrum": (cmd_torus_spectrum, "csv"),
    "isospec": (cmd_isospec, "json"),
    "weyl": (cmd_weyl, "csv"),
    "corner": (cmd_corner, "csv"),
    "heat-trace": (cmd_heat_trace, "csv"),
    "polygeom": (cmd_polygeom, "csv"),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="specgeom", description="Spectral geometry experiments with CSV/JSON output.")
    p.add_argument("--format", choices=["csv", "json"], help="output format (default depends on the command)")
    p.add_argument("--tol", type=_positive, help="quadrature absolute and relative tolerance")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--emit", metavar="PATH", help="write the first parsed lattice/polygon/complex input in canonical JSON")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("milnor-verify", help="E16 vs E8+E8: isospectral but not isometric")
    s.add_argument("--cutoff", type=_rational, help="also compare torus spectra up to this dual norm")

    s = sub.add_parser("torus-spectrum", help="spectrum lines of a flat torus")
    s.add_argument("lattice", help="lattice JSON file (basis or gram) or fixture:e8|e16|e8xe8")
    s.add_argument("--cutoff", type=_rational, default=Fraction(2), help="bound on the dual norm (integer, fraction or decimal)")

    s = sub.add_parser("isospec", help="isospectrality certificate for two even lattices")
    s.add_argument("lattice_a")
    s.add_argument("lattice_b")

    s = sub.add_parser("weyl", help="eigenvalue counts of a box against the Weyl term")
    s.add_argument("--sides", type=_side, nargs="+", default=[Fraction(1), Fraction(1)])
    s.add_argument("--bc", choices=["dirichlet", "neumann"], default="dirichlet")
    s.add_argument("--lambda", dest="lam", type=_nonnegative, nargs="+", required=True)

    s = sub.add_parser("corner", help="corner integral and coefficient sweeps")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--theta", nargs="+", help="opening angles, e.g. pi, 3pi/4, 2.5")
    g.add_argument("--ngon", type=int, nargs="+", help="regular N-gon corner sums")

    s = sub.add_parser("heat-trace", help="heat trace of a box against its small-time expansion")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--box", type=_side, nargs="+", help="box side lengths")
    g.add_argument("--polygon", help="polygon JSON file (expansion only)")
    s.add_argument("--t", type=_positive, nargs="+", required=True)
    s.add_argument("--bc", choices=["dirichlet", "neumann"], default="dirichlet")
    s.add_argument("--tail-tol", type=_positive, default=1e-12)

    s = sub.add_parser("polygeom", help="polygon constructions and measurements")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--staircase", type=int, nargs="+", metavar="K")
    g.add_argument("--hausdorff", nargs=2, metavar=("FILE_A", "FILE_B"))
    g.add_argument("--euler", metavar="FILE", help="cell complex JSON or fixture:disk|annulus|two-holes")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_INPUT
    func, default_format = COMMANDS[args.command]
    ctx = Context(args)
    try:
        result, code = func(ctx)
        if args.emit:
            emit(ctx.first_input, args.emit)
    except (QuadratureError, lattices.GeneratingSetError, InvariantError, AssertionError) as exc:
        sys.stderr.write(f"{args.command}: internal invariant failure: {exc}\n")
        return EXIT_INTERNAL
    except (InputError, ValueError, TypeError, OSError, ZeroDivisionError) as exc:
        sys.stderr.write(f"{args.command}: {exc}\n")
        return EXIT_INPUT
    text = render(result, args.format or default_format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
