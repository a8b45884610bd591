"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports a failure, 2 for
usage, parse and guard errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import counting
from .corners import find_corners, is_walled_at, max_complete, strip_in
from .errors import TilingError
from .families import (
    chain_script,
    holey_report,
    rect_report,
    rect_script,
    theorem_report,
    verify_family,
)
from .reduce import ScriptStep, parse_trace, reduce_to_trace, verify_trace
from .region import (
    Region,
    d_region,
    emit_region,
    half_region,
    half_region_odd,
    half_region_odd_pruned,
    half_region_pruned,
    holey_square,
    holey_square_odd,
    parse_region,
    rectangle,
    t_region,
)

BUILDERS = {
    "rect": (rectangle, 2),
    "holey": (holey_square, 2),
    "holeyodd": (holey_square_odd, 2),
    "half": (half_region, 2),
    "hprime": (half_region_pruned, 2),
    "halfodd": (half_region_odd, 2),
    "hprimeodd": (half_region_odd_pruned, 2),
    "t": (t_region, 3),
    "d": (d_region, 3),
}


class UsageError(TilingError):
    pass


def build(spec: str) -> Region:
    """Evaluate a builder spec such as ``rect:2,3`` or ``t:2,5,4``."""
    name, _, args = spec.partition(":")
    if name not in BUILDERS:
        raise UsageError(f"unknown builder {name!r}; choose from {', '.join(BUILDERS)}")
    fn, arity = BUILDERS[name]
    try:
        values = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise UsageError(f"builder arguments must be integers: {spec!r}") from None
    if len(values) != arity:
        raise UsageError(f"{name} takes {arity} arguments, got {len(values)}")
    return fn(*values)


def resolve_source(source: str, base: Path | None = None) -> Region:
    if source.startswith("gen:"):
        return build(source[len("gen:"):])
    path = Path(source)
    if not path.exists() and base is not None and (base / path).exists():
        path = base / path
    return parse_region(path.read_text())


def load_input(args) -> tuple[Region, str]:
    if (args.file is None) == (args.gen is None):
        raise UsageError("give exactly one of FILE or --gen")
    if args.gen is not None:
        return build(args.gen), f"gen:{args.gen}"
    return parse_region(Path(args.file).read_text()), args.file


def _emit(args, text_lines: list[str], objects: list[dict]) -> None:
    if args.format == "json":
        for obj in objects:
            print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


# -- subcommands --------------------------------------------------------------


def cmd_count(args) -> int:
    region, _ = load_input(args)
    value = counting.count_tilings(region)
    _emit(args, [str(value)], [{"count": value}])
    return 0


def cmd_parity(args) -> int:
    region, _ = load_input(args)
    value = counting.parity_tilings(region)
    _emit(args, [str(value)], [{"parity": value}])
    return 0


def cmd_corners(args) -> int:
    region, _ = load_input(args)
    if not region:
        raise UsageError("region is empty")
    lines, objects = [], []
    for index, corner in enumerate(find_corners(region), start=1):
        s_wall = is_walled_at(region, corner, "s")
        t_wall = is_walled_at(region, corner, "t")
        walled = {(True, True): "both", (True, False): "s", (False, True): "t"}.get((s_wall, t_wall), "none")
        complete = max_complete(region, corner)
        lines.append(
            f"corner {index}: apex=({corner.apex[0]},{corner.apex[1]}) orient={corner.orientation} "
            f"s={corner.s} t={corner.t} p={corner.p} complete_up_to={complete} walled={walled}"
        )
        objects.append(
            {
                "index": index,
                "apex": list(corner.apex),
                "orient": corner.orientation,
                "s": corner.s,
                "t": corner.t,
                "p": corner.p,
                "complete_up_to": complete,
                "walled": walled,
            }
        )
    _emit(args, lines, objects)
    return 0


_SCRIPT_LINE = re.compile(
    r"(open|wall|even)\s+apex=\((-?\d+),(-?\d+)\)\s+orient=(\d)\s+p=(\d+)(?:\s+k=(\d+))?(?:\s+follow=(a|b))?\s*$"
)


def read_script(text: str) -> list[ScriptStep]:
    steps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SCRIPT_LINE.match(line)
        if not m:
            raise UsageError(f"script line {lineno}: cannot parse {line!r}")
        kind, x, y, orient, p, k, follow = m.groups()
        steps.append(
            ScriptStep(kind, (int(x), int(y)), int(orient), int(p), int(k) if k else None, follow or "a")
        )
    return steps


def _rect_params(region: Region) -> tuple[int, int]:
    a, b = region.height, region.width
    n = b - a
    if len(region) != a * b or n < 1 or a % n:
        raise UsageError("cor42 script needs an upright N(kn,(k+1)n) rectangle")
    return a // n, n


def cmd_reduce(args) -> int:
    region, source = load_input(args)
    if args.script is None:
        trace = reduce_to_trace(region, args.strategy, source=source)
    else:
        if args.script == "cor42":
            k, n = _rect_params(region)
            script = rect_script(k, n) if n > 1 else chain_script(k)
        elif args.script == "chain":
            k, n = _rect_params(region)
            if n != 1:
                raise UsageError("chain script needs an N(k,k+1) rectangle")
            script = chain_script(k)
        else:
            script = read_script(Path(args.script).read_text())
        trace = reduce_to_trace(region, "scripted", script, source=source)
    text = trace.to_text()
    if args.out:
        Path(args.out).write_text(text)
    if args.format == "json":
        for index, step in enumerate(trace.steps, start=1):
            c = step.corner
            print(
                json.dumps(
                    {
                        "step": index,
                        "kind": step.kind,
                        "apex": list(c.apex),
                        "orient": c.orientation,
                        "s": c.s,
                        "t": c.t,
                        "p": c.p,
                        "k": step.k,
                        "removed": [list(x) for x in step.removed],
                    }
                )
            )
        print(json.dumps({"terminal_cells": len(trace.terminal), "parity": trace.claimed_parity}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_trace(args) -> int:
    path = Path(args.trace)
    trace = parse_trace(path.read_text(), lambda src: resolve_source(src, path.parent))
    report = verify_trace(trace, oracle_limit=args.oracle_limit)
    objects = [{"step": c.index, "ok": c.ok, "message": c.message} for c in report.checks]
    summary = f"SUMMARY steps={len(report.checks)} {'PASS' if report.ok else 'FAIL'}"
    _emit(args, report.lines() + [summary], objects + [{"ok": report.ok}])
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    target = args.target
    if target == "holey":
        report = holey_report(args.max_n if args.max_n is not None else 5, jobs=args.jobs)
    elif target == "holey-odd":
        report = holey_report(args.max_n if args.max_n is not None else 4, odd=True, jobs=args.jobs)
    elif target == "rect":
        report = rect_report(args.max_k or 3, args.max_n or 3, jobs=args.jobs)
    elif target == "tfamily":
        report = verify_family("T", args.max_k or 4, args.max_p or 3, jobs=args.jobs)
    elif target == "dfamily":
        report = verify_family("D", args.max_k or 4, args.max_p or 3, jobs=args.jobs)
    else:
        report = theorem_report(args.trials, args.seed, args.max_cells)
    n, f = len(report.cases), len(report.failures)
    _emit(
        args,
        [c.line() for c in report.cases] + [report.summary()],
        [c.as_dict() for c in report.cases] + [{"cases": n, "pass": n - f, "fail": f}],
    )
    return 0 if report.ok else 1


def cmd_render(args) -> int:
    marks = {}
    if args.trace is None:
        region, _ = load_input(args)
    if args.corner is not None and args.trace is None:
        corners = find_corners(region)
        if not 1 <= args.corner <= len(corners):
            raise UsageError(f"corner index must be in 1..{len(corners)}")
        corner = corners[args.corner - 1]
        i, j = args.strip if args.strip else (min(corner.s, corner.t),) * 2
        marks = {c: "*" for c in strip_in(region, corner, i, j).cells}
    elif args.trace is not None:
        path = Path(args.trace)
        trace = parse_trace(path.read_text(), lambda src: resolve_source(src, path.parent))
        region = trace.start
        if not 1 <= args.step <= len(trace.steps):
            raise UsageError(f"step must be in 1..{len(trace.steps)}")
        for step in trace.steps[: args.step - 1]:
            region = region.difference(step.removed)
        marks = {c: "*" for c in trace.steps[args.step - 1].removed}
    print(emit_region(region, marks))
    return 0


# -- parser -------------------------------------------------------------------


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected I,J") from None
    return i, j


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tilingparity", description=__doc__.splitlines()[0])
    parser.add_argument("--w-max", type=int, help=f"profile width guard (default {counting.W_MAX})")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("file", nargs="?", help="region file in the #/. grid format")
        p.add_argument("--gen", help="builder spec, e.g. rect:2,3 or t:2,5,4")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    with_input(sub.add_parser("count", help="exact number of tilings")).set_defaults(func=cmd_count)
    with_input(sub.add_parser("parity", help="parity of the number of tilings")).set_defaults(func=cmd_parity)
    with_input(sub.add_parser("corners", help="list corners with completeness and walls")).set_defaults(
        func=cmd_corners
    )

    p = with_input(sub.add_parser("reduce", help="produce a reduction trace"))
    p.add_argument("--strategy", choices=("wall-greedy", "scripted"), default="wall-greedy")
    p.add_argument("--script", help="'cor42', 'chain' or a script file (implies scripted)")
    p.add_argument("--out", help="also write the trace to this file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify-trace", help="replay and check a trace file")
    p.add_argument("trace")
    p.add_argument("--oracle-limit", type=int, default=24)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify_trace)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("target", choices=("holey", "holey-odd", "rect", "tfamily", "dfamily", "theorem"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--max-p", type=int)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-cells", type=int, default=26)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = with_input(sub.add_parser("render", help="ASCII picture of a region"))
    p.add_argument("--corner", type=int, help="1-based corner index to overlay a strip at")
    p.add_argument("--strip", type=_pair, help="strip legs I,J for --corner")
    p.add_argument("--trace", help="trace file whose step to overlay; replaces FILE/--gen")
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    saved = counting.W_MAX
    if args.w_max is not None:
        counting.W_MAX = args.w_max
    try:
        return args.func(args)
    except (TilingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        counting.W_MAX = saved


if __name__ == "__main__":
    sys.exit(main())
