"""Command-line surface: instance reports, point classification, SVG
rendering, and seeded verification campaigns.

Exit codes: 0 success, 1 verification found mismatches, 2 malformed
input or flags, 3 output I/O failure.  Identical command lines produce
byte-identical reports and images (no timestamps, fixed seeds).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .campaign import (
    CampaignResult,
    run_boundary_campaign,
    run_identity_campaign,
    run_residual_campaign,
    run_topology_campaign,
)
from .cassini import (
    CassiniSpec,
    DegenerateInput,
    build_curves,
    classify_point,
    critical_radius,
    topology,
)
from .characterization import IdentityMode
from .core import GeometryError, Point, foci_frame, standardize
from .svg import render_svg

_IDENTITY_TOKENS = tuple(mode.value for mode in IdentityMode)
_ALL_MODES = ("residual",) + _IDENTITY_TOKENS + ("topology", "boundary")


def _parse_point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise GeometryError(f"expected point as 'X,Y', got {text!r}")
    try:
        return Point(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise GeometryError(f"bad point {text!r}: {exc}") from None


def _parse_radii(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise GeometryError(f"bad radius list {text!r}: {exc}") from None
    if not values:
        raise GeometryError(f"no radius values in {text!r}")
    return values


def _load_instance(path: str, label: Optional[str]) -> tuple[Point, Point, float]:
    """Pick one record from a line-delimited instance file.

    Each line is one record: {"label": text, "p": [x1, x2], "q": [x1, x2],
    "r": number}.  Labels must be unique; a single-record file may be used
    without naming a label.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw_lines = [line for line in handle if line.strip()]
    except OSError as exc:
        raise GeometryError(f"cannot read instance file {path!r}: {exc}") from None
    records = {}
    for line in raw_lines:
        rec = json.loads(line)
        if not isinstance(rec, dict):
            raise GeometryError(f"instance record is not an object: {line.strip()!r}")
        missing = {"label", "p", "q", "r"} - set(rec)
        if missing:
            raise GeometryError(f"instance record missing fields {sorted(missing)}")
        name = rec["label"]
        if not isinstance(name, str) or not name:
            raise GeometryError("instance label must be nonempty text")
        if name in records:
            raise GeometryError(f"duplicate instance label {name!r}")
        p_val, q_val = rec["p"], rec["q"]
        for coords in (p_val, q_val):
            if not (isinstance(coords, list) and len(coords) == 2):
                raise GeometryError(f"instance point must be [x1, x2], got {coords!r}")
        r_val = float(rec["r"])
        if r_val < 0:
            raise GeometryError(f"instance {name!r} has negative r")
        records[name] = (
            Point(float(p_val[0]), float(p_val[1])),
            Point(float(q_val[0]), float(q_val[1])),
            r_val,
        )
    if not records:
        raise GeometryError(f"instance file {path!r} has no records")
    if label is None:
        if len(records) == 1:
            return next(iter(records.values()))
        raise GeometryError(
            f"instance file {path!r} has {len(records)} records; pick one with --label"
        )
    if label not in records:
        raise GeometryError(f"no instance labeled {label!r} in {path!r}")
    return records[label]


def _resolve_instance(args: argparse.Namespace) -> tuple[Point, Point, float]:
    if args.instances is not None:
        if args.p is not None or args.q is not None or args.r is not None:
            raise GeometryError("--instances conflicts with --p/--q/--r")
        return _load_instance(args.instances, args.label)
    if args.p is None or args.q is None or args.r is None:
        raise GeometryError("need --p, --q and --r (or --instances)")
    return _parse_point(args.p), _parse_point(args.q), float(args.r)


def _fmt_num(value: float) -> str:
    v = float(value)
    if v == 0.0:
        v = 0.0
    return repr(v)


def _fmt_point(pt: Point) -> str:
    return f"({_fmt_num(pt.x1)}, {_fmt_num(pt.x2)})"


def _fmt_endpoint(pt: Point) -> str:
    return f"({pt.x1:.6f}, {pt.x2:.6f})"


def cmd_info(args: argparse.Namespace) -> int:
    p, q, r = _resolve_instance(args)
    spec = CassiniSpec(p, q, r)
    frame = foci_frame(p, q)
    iso, std_p, _std_q = standardize(p, q)
    lines = [
        f"p: {_fmt_point(p)}",
        f"q: {_fmt_point(q)}",
        f"r: {_fmt_num(r)}",
        f"r_star: {_fmt_num(critical_radius(p, q))}",
        f"topology: {topology(spec).value}",
        f"c1: {_fmt_point(frame.c1)}",
        f"c2: {_fmt_point(frame.c2)}",
        f"g_plus: {_fmt_point(frame.g_plus)}",
        f"g_minus: {_fmt_point(frame.g_minus)}",
        f"standard_element: {iso.element.name}",
        f"standard_translation: {_fmt_point(iso.translation)}",
        f"standard_focus: {_fmt_point(std_p)}",
    ]
    try:
        curves = build_curves(spec)
    except DegenerateInput:
        curves = []
    lines.append(f"curves: {len(curves)}")
    for ci, curve in enumerate(curves, start=1):
        lines.append(f"curve {ci} pieces: {len(curve.pieces)}")
        for pi, piece in enumerate(curve.pieces, start=1):
            kind = "segment" if hasattr(piece, "slope_sign") else "arc"
            lines.append(
                f"curve {ci} piece {pi}: region={piece.region.value} kind={kind} "
                f"start={_fmt_endpoint(piece.start)} end={_fmt_endpoint(piece.end)}"
            )
    print("\n".join(lines))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    p, q, r = _resolve_instance(args)
    if args.x is None:
        raise GeometryError("classify needs --x X,Y")
    location = classify_point(CassiniSpec(p, q, r), _parse_point(args.x), tol=args.tol)
    print(location.value)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    if args.instances is not None:
        p, q, r = _resolve_instance(args)
        radii = [r]
    else:
        if args.p is None or args.q is None or args.r is None:
            raise GeometryError("need --p, --q and --r (or --instances)")
        p, q = _parse_point(args.p), _parse_point(args.q)
        radii = _parse_radii(args.r)
    payload = render_svg(
        p,
        q,
        radii,
        samples_per_piece=args.samples,
        overlay_oracle=args.overlay_oracle,
        oracle_n=args.grid,
    )
    with open(args.out, "wb") as handle:
        handle.write(payload)
    return 0


def _run_mode(mode: str, args: argparse.Namespace) -> CampaignResult:
    if mode == "residual":
        return run_residual_campaign(
            trials=args.trials if args.trials is not None else 500,
            seed=args.seed,
            samples_per_curve=args.samples,
        )
    if mode in _IDENTITY_TOKENS:
        return run_identity_campaign(
            IdentityMode(mode),
            trials=args.trials if args.trials is not None else 200,
            grid_n=args.grid,
            seed=args.seed,
            band=args.band,
        )
    if mode == "topology":
        return run_topology_campaign(
            trials=args.trials if args.trials is not None else 100,
            seed=args.seed,
        )
    if mode == "boundary":
        return run_boundary_campaign(samples_per_curve=args.samples)
    raise GeometryError(f"unknown verify mode {mode!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.modes is None:
        modes = list(_ALL_MODES)
    else:
        modes = [token.strip() for token in args.modes.split(",") if token.strip()]
        unknown = [token for token in modes if token not in _ALL_MODES]
        if unknown:
            raise GeometryError(
                f"unknown verify modes {unknown}; choose from {', '.join(_ALL_MODES)}"
            )
    if args.trials is not None and args.trials < 1:
        raise GeometryError("--trials must be at least 1")
    if args.grid < 16:
        raise GeometryError("--grid must be at least 16")
    if args.band < 0:
        raise GeometryError("--band must be nonnegative")
    total_failures = 0
    for mode in modes:
        result = _run_mode(mode, args)
        total_failures += result.failures
        print(
            f"mode={mode} trials={result.trials} failures={result.failures} "
            f"skipped={result.skipped} worst={result.worst_residual:.6e}"
        )
    print(f"overall: {'pass' if total_failures == 0 else 'fail'}")
    return 0 if total_failures == 0 else 1


def _add_instance_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", help="first focus as X,Y")
    sub.add_argument("--q", help="second focus as X,Y")
    sub.add_argument("--instances", help="line-delimited instance file")
    sub.add_argument("--label", help="record label inside --instances")


class _ArgumentParser(argparse.ArgumentParser):
    """Parser that accepts values like -4,-1 after a flag instead of
    mistaking them for option names."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="taxicassini",
        description="Taxicab Cassini curves: construct, classify, render, verify.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    info = subparsers.add_parser("info", help="report instance facts and piece inventory")
    _add_instance_flags(info)
    info.add_argument("--r", help="radius parameter")
    info.set_defaults(func=cmd_info)

    classify = subparsers.add_parser("classify", help="classify a point against the curve")
    _add_instance_flags(classify)
    classify.add_argument("--r", help="radius parameter")
    classify.add_argument("--x", help="probe point as X,Y")
    classify.add_argument("--tol", type=float, default=1e-9, help="On-band tolerance")
    classify.set_defaults(func=cmd_classify)

    render = subparsers.add_parser("render", help="render curves to an SVG file")
    _add_instance_flags(render)
    render.add_argument("--r", help="radius value or comma list for a nested family")
    render.add_argument("--out", required=True, help="output SVG path")
    render.add_argument("--samples", type=int, default=64, help="polyline samples per piece")
    render.add_argument("--overlay-oracle", action="store_true", help="overlay grid contour")
    render.add_argument("--grid", type=int, default=256, help="oracle grid nodes per side")
    render.set_defaults(func=cmd_render)

    verify = subparsers.add_parser("verify", help="run seeded verification campaigns")
    verify.add_argument("--modes", help=f"comma list from: {', '.join(_ALL_MODES)}")
    verify.add_argument("--trials", type=int, help="override per-mode trial count")
    verify.add_argument("--seed", type=int, default=42, help="campaign seed")
    verify.add_argument("--grid", type=int, default=100, help="identity grid nodes per side")
    verify.add_argument("--band", type=float, default=1e-9, help="boundary skip band")
    verify.add_argument("--samples", type=int, default=64, help="curve samples per trial")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
