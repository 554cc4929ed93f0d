"""
Command-line surface: genfun, enumerate, types, classes, flips, verify, render
"""

import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, TextIO

from .algorithms.flips import FlipAnalyzer, flip_sites
from .algorithms.heights import Fingerprint, tiling_for_fingerprint
from .algorithms.kasteleyn import KasteleynSolver, census, permanent_genfun
from .algorithms.quotients import OrbitCounter
from .algorithms.typegeom import all_types, count_summary, fingerprint_to_type, triangle
from .algorithms.verification import CrossCheckSuite
from .core.errors import InvalidTilingError, RankDeficientError, TilingEngineError
from .core.lattice import Basis, hnf
from .core.polyring import DEFAULT_PERMANENT_CAP, Poly, eval_ones
from .core.tiling import DEFAULT_ENUMERATION_CAP, Orientation, Tiling, TilingEnumerator, type_of
from .utils.export_manager import RENDER_FORMATS, ExportManager, basis_matches, dumps
from .utils.tiling_renderer import DEFAULT_COLORS, RenderOptions, render

logger = logging.getLogger(__name__)


def _fingerprint(text: str) -> Fingerprint:
    try:
        return Fingerprint.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _render_path(text: str) -> str:
    extension = os.path.splitext(text)[1].lower()
    if extension not in RENDER_FORMATS:
        raise argparse.ArgumentTypeError(
            f"unsupported render format '{extension or text}' (use {' or '.join(RENDER_FORMATS)})"
        )
    return text


def _default_cap(args) -> int:
    """The permanent keeps its own smaller default cap"""
    if getattr(args, "command", None) == "genfun" and args.method == "permanent":
        return DEFAULT_PERMANENT_CAP
    return DEFAULT_ENUMERATION_CAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodic-lozenge-tilings",
        description="Exact enumeration of doubly periodic lozenge tilings",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    def lattice_command(name: str, help_text: str, basis_required: bool = True) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--basis", required=basis_required, help="a1,a2,b1,b2 (columns a and b)")
        sub.add_argument(
            "--cap", type=_positive, default=None,
            help=f"index cap (default {DEFAULT_ENUMERATION_CAP}; {DEFAULT_PERMANENT_CAP} for genfun --method permanent)",
        )
        sub.add_argument("--format", choices=("json", "text"), default="json")
        return sub

    genfun = lattice_command("genfun", "generating function Z(L,D,R)")
    genfun.add_argument("--method", choices=("determinant", "permanent", "census"), default="determinant")

    lattice_command("enumerate", "list every periodic tiling")
    lattice_command("types", "fundamental triangle, realizable types and counts")

    classes = lattice_command("classes", "orbit census modulo shifts and/or the involution")
    classes.add_argument("--mod-shift", action="store_true")
    classes.add_argument("--mod-involution", action="store_true")

    flips = lattice_command("flips", "flip sites and flip-graph connectivity for one fingerprint")
    flips.add_argument("--fingerprint", type=_fingerprint, required=True, help="d1,d2")

    verify = lattice_command("verify", "cross-check every symbolic result", basis_required=False)
    verify.add_argument("--max-index", type=_positive, required=True)
    verify.add_argument("--out", help="also write the full JSON report to this path")

    rend = lattice_command("render", "draw a tiling as SVG or PNG", basis_required=False)
    source = rend.add_mutually_exclusive_group(required=True)
    source.add_argument("--tiling", help="tiling JSON file")
    source.add_argument("--cells", help="cell word over L, D, R (requires --basis)")
    source.add_argument("--fingerprint", type=_fingerprint, help="construct a tiling (requires --basis)")
    rend.add_argument("--method", choices=("plane", "octants", "search"), default="plane")
    rend.add_argument("--out", type=_render_path, help="output path (.svg or .png); SVG to stdout if omitted")
    rend.add_argument("--reps", type=_positive, default=3)
    rend.add_argument("--unit", type=float, default=40.0)
    rend.add_argument("--outline", action="store_true", help="draw the fundamental-domain outline")
    for o in Orientation:
        rend.add_argument(f"--color-{o.value.lower()}", default=DEFAULT_COLORS[o])
    return parser


def _emit_poly(poly: Poly, args, out: TextIO, extra: Optional[dict] = None):
    if args.format == "text":
        out.write(f"{poly}\n")
        out.write(f"Z(1,1,1) = {eval_ones(poly)}\n")
        return
    payload = {
        "basis": args.basis.as_matrix(),
        "hnf": hnf(args.basis).to_dict(),
        "polynomial": poly.to_json(),
        "text": str(poly),
        "count": eval_ones(poly),
    }
    payload.update(extra or {})
    out.write(dumps(payload))


def cmd_genfun(args, out: TextIO) -> int:
    if args.method == "determinant":
        poly = KasteleynSolver(args.cap).genfun(args.basis)
    elif args.method == "permanent":
        poly = permanent_genfun(args.basis, cap=args.cap)
    else:
        poly = census(TilingEnumerator(args.cap).enumerate(hnf(args.basis)))
    _emit_poly(poly, args, out, {"method": args.method})
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    tilings = TilingEnumerator(args.cap).enumerate(hnf(args.basis))
    if args.format == "text":
        for tiling in tilings:
            out.write(f"{tiling.word}\t{type_of(tiling)}\n")
    else:
        out.write(dumps([t.to_dict(args.basis) for t in tilings]))
    return 0


def cmd_types(args, out: TextIO) -> int:
    tri = triangle(args.basis)
    pairs = all_types(args.basis)
    summary = count_summary(args.basis)
    if args.format == "text":
        out.write(f"triangle L={tri.vL} D={tri.vD} R={tri.vR}\n")
        for fp, t in pairs:
            out.write(f"{fp}\t{t}\n")
        out.write(" ".join(f"{k}={v}" for k, v in summary.to_dict().items()) + "\n")
    else:
        out.write(dumps({
            "triangle": tri.to_dict(),
            "types": [{"fingerprint": fp.to_list(), "type": t.to_dict()} for fp, t in pairs],
            "summary": summary.to_dict(),
        }))
    return 0


def cmd_classes(args, out: TextIO) -> int:
    result = OrbitCounter(args.cap).classes(
        args.basis, shifts=args.mod_shift, involution=args.mod_involution
    )
    _emit_poly(result.census(), args, out, {
        "mod_shift": args.mod_shift,
        "mod_involution": args.mod_involution,
        "orbits": len(result),
    })
    return 0


def cmd_flips(args, out: TextIO) -> int:
    t = fingerprint_to_type(args.basis, args.fingerprint)
    graph = FlipAnalyzer(args.cap).graph(args.basis, t)
    summary = graph.summary(t)
    sites = {tiling.word: len(flip_sites(tiling)) for tiling in graph.tilings}
    if args.format == "text":
        out.write(f"type {t} fingerprint {args.fingerprint}\n")
        for word, count in sites.items():
            out.write(f"{word}\t{count}\n")
        out.write(f"order={summary.order} size={summary.size} connected={summary.connected}\n")
    else:
        payload = summary.to_dict()
        payload.update({"fingerprint": args.fingerprint.to_list(), "site_counts": sites})
        out.write(dumps(payload))
    return 0


def cmd_verify(args, out: TextIO) -> int:
    extra = [args.basis] if args.basis is not None else []
    report = CrossCheckSuite(args.cap).run(args.max_index, extra)
    if args.out:
        ExportManager().export_report(report, args.out)
    if args.format == "text":
        for entry in report["lattices"]:
            status = "ok" if all(entry["checks"].values()) else "FAIL"
            h = entry["hnf"]
            out.write(f"({h['a']},{h['b']},{h['c']})\t{entry['tilings']}\t{status}\n")
        out.write("passed\n" if report["passed"] else "failed\n")
    else:
        out.write(dumps(report))
    return 0 if report["passed"] else 1


def cmd_render(args, out: TextIO) -> int:
    exporter = ExportManager()
    if args.tiling:
        basis, tiling = exporter.load_tiling(args.tiling)
        if args.basis is not None and not basis_matches(args.basis, tiling):
            raise InvalidTilingError("--basis does not generate the lattice of the tiling file")
    else:
        if args.basis is None:
            raise InvalidTilingError("--cells and --fingerprint require --basis")
        if args.cells:
            tiling = Tiling.from_dict({"hnf": hnf(args.basis).to_dict(), "cells": args.cells})
        else:
            tiling = tiling_for_fingerprint(args.basis, args.fingerprint, method=args.method)
    options = RenderOptions(
        unit=args.unit,
        repetitions=args.reps,
        colors={o: getattr(args, f"color_{o.value.lower()}") for o in Orientation},
        outline=args.outline,
    )
    if args.out:
        exporter.export_render(tiling, args.out, options)
    else:
        out.write(render(tiling, args.reps, options))
    return 0


COMMANDS: Dict[str, Callable] = {
    "genfun": cmd_genfun,
    "enumerate": cmd_enumerate,
    "types": cmd_types,
    "classes": cmd_classes,
    "flips": cmd_flips,
    "verify": cmd_verify,
    "render": cmd_render,
}


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse argv, dispatch, and return the process exit code"""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.cap is None:
        args.cap = _default_cap(args)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        if args.basis is not None:
            try:
                args.basis = Basis.parse(args.basis)
            except RankDeficientError:
                raise
            except ValueError as e:
                sys.stderr.write(f"usage error: {e}\n")
                return 2
        return COMMANDS[args.command](args, out)
    except (TilingEngineError, OSError) as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return 1


def main():
    sys.exit(run())
