"""Command-line front end.

Every subcommand prints either a human-readable table (default) or a
single JSON object with fixed key order (``--format machine``).  All
rationals are parsed and rendered as exact "p/q" strings.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .geometry import (
    DivisorClass,
    Side,
    SideMismatchError,
    SurfaceGeometry,
    fibre_class,
    section_class,
    todd_relative,
)
from .fourier_mukai import (
    ChernCharacter,
    Polarization,
    fibre_invariants,
    fm_inverse_ch,
    fm_transform_ch,
    wit1_transform_ch,
)
from .spectral import (
    CoverClass,
    cover_invariants,
    cover_sheaf_ch_on_cover_side,
    cover_sheaf_to_surface_ch,
    degree_on_cover,
)
from .stability import (
    CandidateBox,
    SEquivalenceClass,
    SEquivalencePart,
    SubsheafCandidate,
    destabilizer_scan,
    fitting_cycle,
    is_destabilizing,
    slope,
    sym_point,
    threshold_b0,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class CliParseError(Exception):
    """Bad user input that is not caught by argparse itself."""


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise CliParseError("zero denominator in rational %r" % text)
    except ValueError:
        raise CliParseError("cannot parse %r as a rational p/q" % text)


def format_rational(x) -> str:
    return str(Fraction(x))


_SYMBOLS = {Side.X: ("H", "mu"), Side.XHAT: ("Theta", "muhat")}


def format_divisor(u: DivisorClass) -> str:
    hs, fs = _SYMBOLS[u.side]
    terms = []
    for coeff, sym in ((u.h, hs), (u.f, fs)):
        if coeff == 0:
            continue
        if coeff == 1:
            terms.append("+ %s" % sym)
        elif coeff == -1:
            terms.append("- %s" % sym)
        elif coeff > 0:
            terms.append("+ %s*%s" % (format_rational(coeff), sym))
        else:
            terms.append("- %s*%s" % (format_rational(-coeff), sym))
    if not terms:
        return "0"
    out = " ".join(terms)
    return out[2:] if out.startswith("+ ") else out[0] + out[2:]


def format_chern(f: ChernCharacter) -> str:
    return "(%s, %s, %s)" % (
        format_rational(f.rank),
        format_divisor(f.c1),
        format_rational(f.ch2),
    )


def divisor_json(u: DivisorClass) -> dict:
    return {
        "side": u.side.value,
        "h": format_rational(u.h),
        "f": format_rational(u.f),
    }


def chern_json(f: ChernCharacter) -> dict:
    return {
        "side": f.side.value,
        "rank": format_rational(f.rank),
        "c1": divisor_json(f.c1),
        "ch2": format_rational(f.ch2),
    }


def candidate_json(c: SubsheafCandidate) -> dict:
    return {"n_prime": c.n_prime, "c_prime": c.c_prime, "d_prime": c.d_prime}


class Renderer:
    """Collects one invocation's result and emits it in the chosen format."""

    def __init__(self, geo: SurfaceGeometry, fmt: str):
        self.geo = geo
        self.fmt = fmt
        self.lines = []
        self.input = {}
        self.output = {}
        self.diagnostics = {}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def emit(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.fmt == "machine":
            doc = {
                "geometry": {"genus": self.geo.genus, "e": self.geo.e},
                "input": self.input,
                "output": self.output,
                "diagnostics": self.diagnostics,
            }
            stream.write(json.dumps(doc, separators=(", ", ": ")) + "\n")
        else:
            for text in self.lines:
                stream.write(text + "\n")


def parse_chern_args(args, geo: SurfaceGeometry) -> ChernCharacter:
    parts = args.c1.split(",")
    if len(parts) != 2:
        raise CliParseError("--c1 expects two comma-separated rationals, got %r" % args.c1)
    side = Side.X if args.side == "X" else Side.XHAT
    c1 = DivisorClass(side, parse_rational(parts[0]), parse_rational(parts[1]))
    return ChernCharacter(side, parse_rational(args.rank), c1, parse_rational(args.ch2))


def add_chern_flags(parser, default_side="X"):
    parser.add_argument("--rank", required=True, help="ch0 (rational)")
    parser.add_argument("--c1", required=True, metavar="A,B",
                        help="c1 = A*H + B*mu (or A*Theta + B*muhat)")
    parser.add_argument("--ch2", default="0", help="ch2 coefficient (rational)")
    parser.add_argument("--side", choices=["X", "Xhat"], default=default_side)


def cmd_transform(args, geo, out: Renderer) -> int:
    f = parse_chern_args(args, geo)
    if args.inverse:
        mode, result = "inverse", fm_inverse_ch(f, geo)
    elif args.wit1:
        mode, result = "wit1", wit1_transform_ch(f, geo)
    else:
        mode, result = "forward", fm_transform_ch(f, geo)
    out.input = {"mode": mode, "chern": chern_json(f)}
    out.output = {"chern": chern_json(result)}
    out.line("input  : %s on %s" % (format_chern(f), f.side.value))
    out.line("%s transform : %s on %s" % (mode, format_chern(result), result.side.value))
    out.emit()
    return EXIT_OK


def cmd_cover(args, geo, out: Renderer) -> int:
    r = parse_rational(args.r)
    cover = CoverClass(geo, args.n, args.k)
    chi, p, ell = cover_invariants(cover)
    on_cover = cover_sheaf_ch_on_cover_side(cover, r)
    on_surface = cover_sheaf_to_surface_ch(cover, r)
    inv = degree_on_cover(on_surface, cover)
    out.input = {"n": cover.n, "k": cover.k, "r": format_rational(r)}
    out.output = {
        "chi": format_rational(chi),
        "p": format_rational(p),
        "ell": format_rational(ell),
        "ch_on_cover_side": chern_json(on_cover),
        "ch_on_surface": chern_json(on_surface),
        "rank_on_cover": format_rational(inv.rank_on_cover),
        "degree_on_cover": format_rational(inv.degree_on_cover),
        "slope": format_rational(inv.slope()),
    }
    out.line("cover C = %s" % format_divisor(cover.divisor_class()))
    out.line("chi(C) = %s   p = %s   ell = %s"
             % (format_rational(chi), format_rational(p), format_rational(ell)))
    out.line("ch on Jacobian side : %s" % format_chern(on_cover))
    out.line("ch on surface       : %s" % format_chern(on_surface))
    out.line("rank on cover = %s   degree on cover = %s   slope = %s"
             % (format_rational(inv.rank_on_cover),
                format_rational(inv.degree_on_cover),
                format_rational(inv.slope())))
    out.emit()
    return EXIT_OK


def cmd_slope(args, geo, out: Renderer) -> int:
    f = parse_chern_args(args, geo)
    pol = Polarization(parse_rational(args.a), parse_rational(args.b))
    value = slope(f, pol, geo)
    out.input = {
        "chern": chern_json(f),
        "a": format_rational(pol.a),
        "b": format_rational(pol.b),
    }
    out.output = {"slope": format_rational(value)}
    out.line("slope of %s w.r.t. %s*H + %s*mu : %s"
             % (format_chern(f), format_rational(pol.a), format_rational(pol.b),
                format_rational(value)))
    out.emit()
    return EXIT_OK


def cmd_scan(args, geo, out: Renderer) -> int:
    f = parse_chern_args(args, geo)
    pol = Polarization(parse_rational(args.a), parse_rational(args.b))
    box = CandidateBox(args.box, args.box)
    hits = destabilizer_scan(f, pol, box, geo)
    out.input = {
        "chern": chern_json(f),
        "a": format_rational(pol.a),
        "b": format_rational(pol.b),
        "box": args.box,
    }
    out.output = {"destabilizers": [candidate_json(c) for c in hits]}
    out.line("destabilizers of %s in box |c'|,|d'| <= %d:" % (format_chern(f), args.box))
    if not hits:
        out.line("  (none)")
    for cand in hits:
        out.line("  n'=%d c'=%d d'=%d" % (cand.n_prime, cand.c_prime, cand.d_prime))
    out.emit()
    return EXIT_OK


def cmd_threshold(args, geo, out: Renderer) -> int:
    f = parse_chern_args(args, geo)
    a = parse_rational(args.a)
    box = CandidateBox(args.box, args.box)
    try:
        report = threshold_b0(f, a, box, geo)
    except ValueError as exc:
        raise CliParseError(str(exc))
    out.input = {"chern": chern_json(f), "a": format_rational(a), "box": args.box}
    out.output = {
        "b0": format_rational(report.b0),
        "binding": candidate_json(report.binding) if report.binding else None,
        "rho_used": report.rho_used,
        "b_independent": [candidate_json(c) for c in report.b_independent],
    }
    out.line("b0 = %s  (box |c'|,|d'| <= %d, rho = %d)"
             % (format_rational(report.b0), args.box, report.rho_used))
    if report.binding:
        out.line("binding candidate: n'=%d c'=%d d'=%d"
                 % (report.binding.n_prime, report.binding.c_prime,
                    report.binding.d_prime))
    else:
        out.line("binding candidate: none")
    if report.b_independent:
        out.line("b-independent destabilizers (d'=0): %d" % len(report.b_independent))
    out.emit()
    return EXIT_OK


def parse_part(text: str) -> SEquivalencePart:
    pieces = text.split(":")
    if len(pieces) not in (2, 3):
        raise CliParseError("--part expects id:mult or id:mult:singular, got %r" % text)
    try:
        mult = int(pieces[1])
    except ValueError:
        raise CliParseError("bad multiplicity in --part %r" % text)
    singular = len(pieces) == 3 and pieces[2] == "singular"
    if len(pieces) == 3 and not singular:
        raise CliParseError("third field of --part must be 'singular', got %r" % pieces[2])
    return SEquivalencePart(pieces[0], mult, singular)


def cmd_fitting(args, geo, out: Renderer) -> int:
    try:
        cls = SEquivalenceClass(tuple(parse_part(p) for p in args.part))
    except ValueError as exc:
        raise CliParseError(str(exc))
    cycle = fitting_cycle(cls)
    point = sym_point(cls)
    out.input = {
        "parts": [
            {"point": p.point_id, "multiplicity": p.multiplicity, "singular": p.singular}
            for p in cls.parts
        ]
    }
    out.output = {
        "cycle": [{"point": pid, "exponent": exp} for pid, exp in cycle.cycle],
        "length": cycle.length,
        "sym_point": {pid: point[pid] for pid in sorted(point)},
        "degree": sum(point.values()),
    }
    out.line("Fitting cycle: %s"
             % " * ".join("m(%s)^%d" % (pid, exp) for pid, exp in cycle.cycle))
    out.line("length = %d  (total rank n = %d)" % (cycle.length, cls.total_rank()))
    out.line("symmetric-product point: %s"
             % " + ".join("%d*[%s]" % (point[pid], pid) for pid in sorted(point)))
    out.emit()
    return EXIT_OK


def cmd_todd(args, geo, out: Renderer) -> int:
    td = todd_relative(geo)
    out.input = {}
    out.output = {
        "deg0": format_rational(td.deg0),
        "deg2": divisor_json(td.deg2),
        "deg4": format_rational(td.deg4),
    }
    out.line("relative Todd class: %s + (%s) + %s*w"
             % (format_rational(td.deg0), format_divisor(td.deg2),
                format_rational(td.deg4)))
    out.emit()
    return EXIT_OK


def cmd_verify_remark(args, geo, out: Renderer) -> int:
    if geo.genus != 0:
        raise CliParseError("verify-remark requires genus 0, got %d" % geo.genus)
    e = geo.e
    cover = CoverClass(geo, 2, 0)
    # The rank-two transform F of the line bundle on the double cover, and
    # its rank-one subsheaf coming from the section component.
    f = ChernCharacter(Side.X, 2, fibre_class(Side.X).scale(-e), 0)
    sub = ChernCharacter(Side.X, 1, DivisorClass(Side.X, 0, 0), 0)
    slope_l = degree_on_cover(f, cover).slope()
    slope_sub = degree_on_cover(sub, cover).slope()
    o_x = SubsheafCandidate(1, 0, 0)
    pols = [Polarization(1, 1), Polarization(2, 1), Polarization(1, 7),
            Polarization(Fraction(1, 3), Fraction(5, 2))]
    destabilized = all(is_destabilizing(o_x, f, pol, geo) for pol in pols)
    not_destabilized = all(not is_destabilizing(o_x, f, pol, geo) for pol in pols)
    ok_slopes = slope_l == -4 * e and slope_sub == -3 * e
    ok_destab = destabilized if e > 0 else not_destabilized
    verdict = "PASS" if ok_slopes and ok_destab else "FAIL"
    out.input = {"e": e}
    out.output = {
        "slope_on_cover": format_rational(slope_l),
        "slope_of_sub": format_rational(slope_sub),
        "expected": {"slope_on_cover": str(-4 * e), "slope_of_sub": str(-3 * e)},
        "structure_sheaf_destabilizes": destabilized,
        "verdict": verdict,
    }
    out.line("slope of the line bundle on C = 2*Theta : %s (expected %d)"
             % (format_rational(slope_l), -4 * e))
    out.line("slope of its destabilizing subsheaf     : %s (expected %d)"
             % (format_rational(slope_sub), -3 * e))
    if e > 0:
        out.line("structure sheaf destabilizes F = %s for all sampled a,b > 0: %s"
                 % (format_chern(f), "yes" if destabilized else "NO"))
    else:
        out.line("stable boundary: no strict destabilizer (e = 0)")
        out.diagnostics["note"] = "stable boundary: no strict destabilizer"
    if verdict == "FAIL":
        out.line("FAIL: expected slopes (%d, %d), destabilized=%s"
                 % (-4 * e, -3 * e, e > 0))
        out.line("      computed slopes (%s, %s), destabilized=%s"
                 % (format_rational(slope_l), format_rational(slope_sub), destabilized))
    else:
        out.line("PASS")
    out.emit()
    return EXIT_OK if verdict == "PASS" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellsurf",
        description="Exact invariants of sheaves on elliptic surfaces with a section.",
    )
    parser.add_argument("--genus", type=int, default=0, help="genus of the base curve")
    parser.add_argument("--e", type=int, default=0, help="e = deg E = -H^2")
    parser.add_argument("--format", choices=["table", "machine"], default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="Fourier-Mukai transform of a Chern character")
    add_chern_flags(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--inverse", action="store_true")
    mode.add_argument("--wit1", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("cover", help="spectral cover invariants and characters")
    p.add_argument("--n", type=int, required=True, help="cover degree over the base")
    p.add_argument("--k", type=int, default=0, help="fibre coefficient of the cover")
    p.add_argument("--r", required=True, help="degree of the rank-one sheaf on the cover")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("slope", help="slope w.r.t. a*H + b*mu")
    add_chern_flags(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("scan", help="destabilizer candidate scan over a box")
    add_chern_flags(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--box", type=int, required=True, help="bound for |c'| and |d'|")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("threshold", help="stability threshold b0 over a box")
    add_chern_flags(p)
    p.add_argument("--a", required=True)
    p.add_argument("--box", type=int, required=True, help="bound for |c'| and |d'|")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("fitting", help="Fitting cycle of an S-equivalence class")
    p.add_argument("--part", action="append", required=True,
                   metavar="ID:MULT[:singular]")
    p.set_defaults(func=cmd_fitting)

    p = sub.add_parser("verify-remark",
                       help="reproduce the -4e / -3e instability example")
    p.set_defaults(func=cmd_verify_remark)

    p = sub.add_parser("todd", help="relative Todd class")
    p.set_defaults(func=cmd_todd)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        geo = SurfaceGeometry(args.genus, args.e)
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    out = Renderer(geo, args.format)
    try:
        return args.func(args, geo, out)
    except (CliParseError, SideMismatchError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
