"""Command line front end: ``asymspace <command> <file...> [options]``.

Exit codes: 0 success, 1 usage error, 2 unreadable or invalid space file,
3 a report with unknown flags under ``--strict``, 4 a computation limit
(double description budget) was hit.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify import (
    FLAG_NAMES,
    ball_q_compact,
    covering_dimension,
    decompose,
    separation_report,
)
from .cones import span_theta
from .exact import DimensionMismatch, Subspace, as_rational
from .gauge import GaugeError, Mode, NotPolyhedral, evaluate
from .polyhedra import DDBudgetExceeded
from .quotient import (
    QuotientSpace,
    is_quotient_norm,
    is_quotient_t1,
    quotient_t2_lower_bound,
    subspace_q_closure,
)
from .render import RenderError, render_ball_svg
from .seminorm import seminorm_kernel, seminorm_value
from .spacefile import SpaceFileError, format_rational, load_space_file

__all__ = ["main", "build_parser", "report_to_json", "classify_file"]

COMMANDS = ("eval", "classify", "seminorm", "quotient", "dim", "decompose", "render")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asymspace", description="Exact analysis of polyhedral asymmetric norms.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("files", nargs="+", metavar="file")
    p.add_argument("--strict", action="store_true", help="exit 3 if a report has unknown flags")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("-x", dest="point", help="comma separated rational vector, e.g. 7,2 or 1/2,-3")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="q")
    p.add_argument(
        "--subspace",
        help="name of a subspace block in the file, or a basis like '1,0;0,1' ('' for {0})",
    )
    p.add_argument("--out", help="output path for render")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch classify")
    return p


def _vec(text: str) -> tuple:
    try:
        return tuple(as_rational(c) for c in text.split(","))
    except (ValueError, TypeError, ZeroDivisionError):
        raise UsageError(f"not a rational vector: {text!r}") from None


def _q(x) -> str | None:
    return None if x is None else format_rational(x)


def _vectors(vs) -> list:
    return [[format_rational(c) for c in v] for v in vs]


def _dim_json(d):
    return "infinity" if d == math.inf else d


def _dim_text(d) -> str:
    return "infinity" if d == math.inf else str(d)


def _subspace_text(s: Subspace) -> str:
    return str(s)


def report_to_json(report) -> dict:
    return {
        "flags": {k: report.flags[k].value for k in FLAG_NAMES},
        "provenance": {k: report.flags[k].provenance for k in FLAG_NAMES},
        "dimension": _dim_json(report.dimension),
        "right_bounded": {
            "value": report.right_bounded.value,
            "radius": _q(report.right_bounded_radius),
            "provenance": report.right_bounded.provenance,
        },
        "theta_generators": _vectors(report.theta_generators),
        "constants": {k: _q(v) for k, v in report.constants.items()},
    }


def _flag_text(v) -> str:
    return {True: "true", False: "false", None: "unknown"}[v]


def classify_file(path: str) -> dict:
    """Load and classify one file; returns the JSON report with the ball verdict."""
    space = load_space_file(path)
    fx = space.fixture
    facts = None
    if fx is not None:
        facts = fx.facts
    report = separation_report(space.gauge, facts)
    data = report_to_json(report)
    verdict, _ = ball_q_compact(space.gauge)
    if verdict.value == "unknown" and facts and "ballQCompact" in facts:
        verdict = "compact" if facts["ballQCompact"].value else "not-compact"
    data["ball_q_compact"] = getattr(verdict, "value", verdict)
    return data


def _classify_text(data: dict) -> str:
    lines = []
    for k in FLAG_NAMES:
        lines.append(f"{k:<22} {_flag_text(data['flags'][k]):<8} {data['provenance'][k]}")
    lines.append(f"{'dimension':<22} {data['dimension']}")
    rb = data["right_bounded"]
    radius = "" if rb["radius"] is None else f" r={rb['radius']}"
    lines.append(f"{'rightBounded':<22} {_flag_text(rb['value'])}{radius}  {rb['provenance']}")
    lines.append(f"{'ballCompact':<22} {data['ball_q_compact']}")
    gens = ", ".join("(" + ",".join(g) + ")" for g in data["theta_generators"])
    lines.append(f"{'theta':<22} {gens or '{0}'}")
    for k, v in data["constants"].items():
        lines.append(f"{k:<22} {'none' if v is None else v}")
    return "\n".join(lines)


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _subspace(args, space) -> Subspace:
    if args.subspace is None:
        if len(space.subspaces) == 1:
            return space.subspace(next(iter(space.subspaces)))
        raise UsageError("quotient needs --subspace or exactly one subspace block in the file")
    if args.subspace in space.subspaces:
        return space.subspace(args.subspace)
    text = args.subspace.strip()
    if not text:
        return Subspace.zero(space.dimension)
    vecs = [_vec(v) for v in text.split(";")]
    if any(len(v) != space.dimension for v in vecs):
        raise UsageError(f"subspace basis vectors must have {space.dimension} coordinates")
    return Subspace.span(vecs, space.dimension)


def _cmd_classify(args) -> int:
    paths = args.files
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(classify_file, paths))
    else:
        results = [classify_file(p) for p in paths]
    if args.format == "json":
        payload = results[0] if len(results) == 1 else [
            {"file": p, "report": r} for p, r in zip(paths, results)
        ]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        blocks = []
        for p, r in zip(paths, results):
            body = _classify_text(r)
            blocks.append(body if len(paths) == 1 else f"== {p} ==\n{body}")
        sys.stdout.write("\n\n".join(blocks) + "\n")
    if args.strict and any(v is None for r in results for v in r["flags"].values()):
        return 3
    return 0


def _single(args):
    if len(args.files) != 1:
        raise UsageError(f"{args.command} takes exactly one file")
    return load_space_file(args.files[0])


def _cmd_eval(args) -> int:
    space = _single(args)
    if args.point is None:
        raise UsageError("eval needs -x")
    x = _vec(args.point)
    val = evaluate(space.gauge, x, args.mode)
    shown = format_rational(val) if space.gauge.exact else repr(float(val))
    _emit(args, {"mode": args.mode, "x": [format_rational(c) for c in x], "value": shown}, shown)
    return 0


def _cmd_seminorm(args) -> int:
    space = _single(args)
    kernel = seminorm_kernel(space.gauge)
    payload = {"kernel": _vectors(kernel.basis)}
    if args.point is not None:
        value = format_rational(seminorm_value(space.gauge, _vec(args.point)))
        payload["value"] = value
        text = value
    else:
        text = f"kernel {_subspace_text(kernel)}"
    _emit(args, payload, text)
    return 0


def _cmd_quotient(args) -> int:
    space = _single(args)
    g = space.gauge
    y = _subspace(args, space)
    closure = subspace_q_closure(g, y).v()
    payload = {
        "subspace": _vectors(y.basis),
        "q_closed": is_quotient_t1(g, y),
        "quotient_t1": is_quotient_t1(g, y),
        "quotient_norm": is_quotient_norm(g, y),
        "kernel_in_subspace": quotient_t2_lower_bound(g, y),
        "closure_rays": _vectors(closure.rays),
    }
    lines = [
        f"subspace           {_subspace_text(y)}",
        f"q-closed (X/Y T1)  {str(payload['q_closed']).lower()}",
        f"w_Y is a norm      {str(payload['quotient_norm']).lower()}",
        f"ker in Y           {str(payload['kernel_in_subspace']).lower()}",
    ]
    if args.point is not None:
        value = format_rational(QuotientSpace(g, y)(_vec(args.point)))
        payload["value"] = value
        lines.insert(0, value)
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_dim(args) -> int:
    space = _single(args)
    d = covering_dimension(space.gauge)
    y = span_theta(space.gauge)
    payload = {"dimension": _dim_json(d), "span_theta": _vectors(y.basis)}
    _emit(args, payload, f"{_dim_text(d)}\nspan theta = {_subspace_text(y)}")
    return 0


def _matrix_text(m) -> str:
    return "[" + "; ".join(" ".join(format_rational(c) for c in row) for row in m) + "]"


def _cmd_decompose(args) -> int:
    space = _single(args)
    d = decompose(space.gauge)
    payload = {
        "Y": _vectors(d.y.basis),
        "Z": _vectors(d.z.basis),
        "projection": _vectors(d.projection),
        "K_P": _q(d.k_p),
        "K_I_minus_P": _q(d.k_i_minus_p),
        "Z_is_T1": d.z_is_t1,
    }
    text = "\n".join(
        [
            f"Y            {_subspace_text(d.y)}",
            f"Z            {_subspace_text(d.z)}",
            f"P_Y          {_matrix_text(d.projection)}",
            f"K_P          {payload['K_P']}",
            f"K_I_minus_P  {payload['K_I_minus_P']}",
            f"Z is T1      {str(d.z_is_t1).lower()}",
        ]
    )
    _emit(args, payload, text)
    return 0


def _cmd_render(args) -> int:
    space = _single(args)
    svg = render_ball_svg(space, args.out)
    if args.out is None:
        sys.stdout.write(svg)
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "seminorm": _cmd_seminorm,
    "quotient": _cmd_quotient,
    "dim": _cmd_dim,
    "decompose": _cmd_decompose,
    "render": _cmd_render,
}


def _glue_point(argv: list) -> list:
    # keep "-x -5,2" from being read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "-x":
            nxt = next(it, None)
            out.append(a if nxt is None else f"-x={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_point(argv))
        return _DISPATCH[args.command](args)
    except UsageError as e:
        sys.stderr.write(f"asymspace: usage error: {e}\n")
        return 1
    except (SpaceFileError, GaugeError, DimensionMismatch, OSError) as e:
        sys.stderr.write(f"asymspace: invalid input: {e}\n")
        return 2
    except (NotPolyhedral, RenderError, KeyError) as e:
        sys.stderr.write(f"asymspace: unsupported: {e}\n")
        return 2
    except DDBudgetExceeded as e:
        sys.stderr.write(f"asymspace: {e}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
