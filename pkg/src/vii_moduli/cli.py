"""``vii-moduli`` command-line front end.

Exit status: 0 success, 1 usage error, 2 domain error.  Rational arguments
are written ``p/q``; negative values need the ``--flag=-p/q`` form.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .bundles import (
    canonical_form,
    is_polystable,
    is_simple,
    is_stable,
    parse_bundle,
    subbundles,
    validate,
)
from .cohomology import dims, enumerate_R_below, euler_char
from .errors import DomainError, NotApplicable
from .moduli import ModuliReport, SimpleModuliReport, build_polystable_moduli, build_simple_moduli
from .picard import LineBundle, parse_rational
from .render import RenderSpec, render_svg
from .surface import SurfaceModel, mk_surface

SUBCOMMANDS = ("report", "simple-report", "classify", "rr", "enumerate-r", "render")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_surface_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("surface")
    g.add_argument("--surface", choices=("half", "enoki", "parabolic"))
    g.add_argument("--vol-c", type=_rational)
    g.add_argument("--vol-e", type=_rational)
    g.add_argument("--deg-k", type=_rational)
    g.add_argument("--theta-c", type=_rational)
    g.add_argument("--config", type=Path, help="JSON file with surface/vol_c/vol_e/deg_k/theta_c keys")
    p.set_defaults(surface_required=required)


def _add_output_args(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", type=Path)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vii-moduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("report", help="polystable moduli space report")
    _add_surface_args(p)
    _add_output_args(p, ("text", "json", "svg"))

    p = sub.add_parser("simple-report", help="simple-bundle moduli space in a degree window")
    _add_surface_args(p)
    p.add_argument("--lo", type=_rational, required=True)
    p.add_argument("--hi", type=_rational, required=True)
    _add_output_args(p, ("text", "json"))

    p = sub.add_parser("classify", help="stability, simplicity and canonical form of one bundle")
    _add_surface_args(p)
    p.add_argument("--bundle", required=True, help="E:n,l,a | A:n,l,a | S:n,l,a|n,l,a")
    _add_output_args(p, ("text", "json"))

    p = sub.add_parser("rr", help="Euler characteristic of K^n")
    p.add_argument("--n", type=int, required=True)
    _add_surface_args(p, required=False)
    _add_output_args(p, ("text", "json"))

    p = sub.add_parser("enumerate-r", help="members of R(S) up to a degree")
    _add_surface_args(p)
    p.add_argument("--max-degree", type=_rational, required=True)
    _add_output_args(p, ("text", "json"))

    p = sub.add_parser("render", help="SVG drawing of the polystable moduli disc")
    _add_surface_args(p)
    p.add_argument("--width", type=int, default=RenderSpec.width)
    p.add_argument("--height", type=int, default=RenderSpec.height)
    p.add_argument("--out", type=Path)
    return parser


def _surface_from_args(args) -> SurfaceModel | None:
    cfg = {}
    if args.config is not None:
        try:
            cfg = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None

    def pick(flag: str, key: str):
        v = getattr(args, flag)
        if v is None and cfg.get(key) is not None:
            v = parse_rational(str(cfg[key]))
        return v

    kind = args.surface or cfg.get("surface")
    if kind is None:
        if args.surface_required:
            raise UsageError("--surface is required")
        return None
    vol_c = pick("vol_c", "vol_c")
    if vol_c is None:
        raise UsageError("--vol-c is required")
    return mk_surface(
        kind,
        vol_c,
        vol_E=pick("vol_e", "vol_e"),
        deg_K=pick("deg_k", "deg_k"),
        theta_C=pick("theta_c", "theta_c"),
    )


def _color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("VII_MODULI_NO_COLOR")


def _head(text: str) -> str:
    return f"\x1b[1m{text}\x1b[0m" if _color() else text


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _dump_json(d: dict) -> str:
    return json.dumps(d, separators=(",", ":")) + "\n"


def _surface_line(s: SurfaceModel) -> str:
    parts = [s.kind.value, f"vol_C={s.vol_C}"]
    if s.vol_E is not None:
        parts.append(f"vol_E={s.vol_E}")
    parts += [f"deg_K={s.deg_K}", f"theta_C={s.theta_C}"]
    return " ".join(parts)


def format_report_text(r: ModuliReport) -> str:
    lines = [
        f"{_head('surface:')} {_surface_line(r.surface)}",
        f"{_head('rho:')} {r.rho}",
        f"{_head('center:')} {r.center.kind} (F-invariant: {_yes(r.center.f_invariant)})",
        f"{_head('boundary:')} degree {r.boundary.degree}, touches {r.boundary.card_touch}, "
        f"smooth boundary: {_yes(r.boundary.smooth)}",
        f"{_head('singular pairs')} ({len(r.singular_pairs)}):",
    ]
    for p in r.singular_pairs:
        lines.append(f"  node {p.R} (deg {p.node_degree}) <- puncture {p.puncture} (deg {p.puncture_degree})")
    lines.append(f"{_head('boundary touches')} ({len(r.boundary_touches)}):")
    lines += [f"  {t}" for t in r.boundary_touches]
    lines.append(f"{_head('punctures U')} ({len(r.punctures_U)}):")
    lines += [f"  {u}" for u in r.punctures_U]
    c = r.counts
    lines.append(
        f"{_head('counts:')} card_R_le_rho={c.card_R_le_rho} card_U={c.card_U} "
        f"card_boundary_touch={c.card_boundary_touch} card_singular_pairs={c.card_singular_pairs}"
    )
    lines.append(f"{_head('smooth:')} {_yes(r.smooth)}")
    return "\n".join(lines) + "\n"


def format_simple_text(r: SimpleModuliReport) -> str:
    lo, hi = r.window
    lines = [
        f"{_head('surface:')} {_surface_line(r.surface)}",
        f"{_head('window:')} [{lo}, {hi}]",
        f"{_head('non-separated groups')} ({len(r.nonseparated_groups)}):",
    ]
    for g in r.nonseparated_groups:
        extra = f" partner={g.partner}" if g.partner is not None else ""
        lines.append(f"  {g.kind}: {' '.join(g.members)}{extra}")
    lines.append(f"{_head('punctures Q')} ({len(r.punctures_Q)}):")
    lines += [f"  {q}" for q in r.punctures_Q]
    lines.append(f"{_head('plane minus discrete set:')} {_yes(r.plane_minus_discrete)}")
    return "\n".join(lines) + "\n"


def _cmd_report(args) -> str:
    report = build_polystable_moduli(_surface_from_args(args))
    if args.format == "json":
        return _dump_json(report.to_dict())
    if args.format == "svg":
        return render_svg(report)
    return format_report_text(report)


def _cmd_render(args) -> str:
    report = build_polystable_moduli(_surface_from_args(args))
    try:
        spec = RenderSpec(width=args.width, height=args.height)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return render_svg(report, spec)


def _cmd_simple(args) -> str:
    if args.lo > args.hi:
        raise UsageError(f"empty window [{args.lo}, {args.hi}]")
    report = build_simple_moduli(_surface_from_args(args), args.lo, args.hi)
    if args.format == "json":
        return _dump_json(report.to_dict())
    return format_simple_text(report)


def _cmd_classify(args) -> str:
    s = _surface_from_args(args)
    try:
        b = parse_bundle(args.bundle)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None
    b = validate(s, b)
    stable = is_stable(s, b)
    status = "stable" if stable else "polystable" if is_polystable(s, b) else "unstable"
    simple = is_simple(s, b)
    canon = canonical_form(s, b)
    if args.format == "json":
        try:
            subs = [str(x) for x in subbundles(s, b)]
        except NotApplicable:
            subs = None
        return _dump_json(
            {
                "bundle": str(b),
                "stable": stable,
                "polystable": status != "unstable",
                "simple": simple,
                "canonical": str(canon),
                "subbundles": subs,
            }
        )
    return f"{status} {'simple' if simple else 'not-simple'}; canonical={canon}\n"


def _cmd_rr(args) -> str:
    s = _surface_from_args(args)
    Kn = LineBundle.of(args.n)
    chi = euler_char(s, Kn)
    rec = dims(s, Kn) if s is not None else None
    if args.format == "json":
        d = {"n": args.n, "chi": chi}
        if rec is not None:
            d.update(h0=rec.h0, h1=rec.h1, h2=rec.h2)
        return _dump_json(d)
    out = f"chi(K^{args.n}) = {chi}\n"
    if rec is not None:
        out += f"h(K^{args.n}) = (h0={rec.h0}, h1={rec.h1}, h2={rec.h2})\n"
    return out


def _cmd_enumerate(args) -> str:
    members = enumerate_R_below(_surface_from_args(args), args.max_degree)
    if args.format == "json":
        return _dump_json({"max_degree": str(args.max_degree), "R": [str(m) for m in members]})
    return "".join(f"{m}\n" for m in members)


_HANDLERS = {
    "report": _cmd_report,
    "simple-report": _cmd_simple,
    "classify": _cmd_classify,
    "rr": _cmd_rr,
    "enumerate-r": _cmd_enumerate,
    "render": _cmd_render,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(f"a subcommand is required: {', '.join(SUBCOMMANDS)}")
        text = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
