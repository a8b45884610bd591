"""Parity-preserving region rewrites and checkable reduction traces.

``reduce_open`` splits a region at a complete corner into two smaller
regions whose parities add up to the original's; ``reduce_wall`` is the
one-term version available when the short leg is walled.  A term whose strip
does not fit in the region is reported as ``None`` and contributes parity 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .corners import (
    CornerFrame,
    StCorner,
    corner_at,
    find_corners,
    is_complete_up_to,
    is_walled_at,
    strip_cells,
)
from .counting import parity_tilings
from .errors import InvalidArgumentError, PreconditionError
from .region import Cell, Region

ORACLE_LIMIT = 24


def term_parity(term: Region | None) -> int:
    return 0 if term is None else parity_tilings(term)


def _remove_if_present(region: Region, cells: Sequence[Cell]) -> Region | None:
    if all(c in region for c in cells):
        return region.difference(cells)
    return None


def _check_corner(region: Region, corner: StCorner) -> None:
    actual = corner_at(region, corner.frame, corner.p)
    if actual is None:
        raise PreconditionError(f"no ({{s,t}};{corner.p})-corner at {corner.apex} orient={corner.orientation}")
    if (actual.s, actual.t) != (corner.s, corner.t):
        raise PreconditionError(
            f"corner legs are ({actual.s},{actual.t}), not ({corner.s},{corner.t})"
        )


def open_strips(corner: StCorner, k: int) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
    """The ({k,k+1};p)- and ({k+1,k};p)-strips, s-side leg first."""
    f, p = corner.frame, corner.p
    return strip_cells(f, p, k, k + 1), strip_cells(f, p, k + 1, k)


def check_open(region: Region, corner: StCorner, k: int) -> None:
    _check_corner(region, corner)
    if not 1 <= k <= min(corner.s, corner.t):
        raise InvalidArgumentError(f"k={k} outside 1..{min(corner.s, corner.t)}")
    if k == 1 and corner.p > 1:
        raise InvalidArgumentError("k=1 is only licensed for p=1 corners")
    if not is_complete_up_to(region, corner, k):
        raise PreconditionError(f"{corner} is not complete up to {k}")


def reduce_open(region: Region, corner: StCorner, k: int) -> tuple[Region | None, Region | None]:
    check_open(region, corner, k)
    a, b = open_strips(corner, k)
    return _remove_if_present(region, a), _remove_if_present(region, b)


def check_wall(region: Region, corner: StCorner) -> None:
    _check_corner(region, corner)
    if corner.s > corner.t:
        raise PreconditionError(f"wall reduction needs s <= t, got s={corner.s}, t={corner.t}")
    if not is_complete_up_to(region, corner, corner.s):
        raise PreconditionError(f"{corner} is not complete up to s={corner.s}")
    if not is_walled_at(region, corner, "s"):
        raise PreconditionError(f"{corner} is not walled at s={corner.s}")


def reduce_wall(region: Region, corner: StCorner) -> Region | None:
    """Remove the ({s,s+1};p)-strip; ``None`` when it does not fit (parity 0)."""
    check_wall(region, corner)
    strip = strip_cells(corner.frame, corner.p, corner.s, corner.s + 1)
    return _remove_if_present(region, strip)


@dataclass(frozen=True)
class EvenCertificate:
    corner: StCorner
    region_size: int

    parity = 0


def check_double_wall(region: Region, corner: StCorner) -> None:
    _check_corner(region, corner)
    if corner.s != corner.t:
        raise PreconditionError(f"double wall needs s == t, got ({corner.s},{corner.t})")
    if not is_complete_up_to(region, corner, corner.s):
        raise PreconditionError(f"{corner} is not complete up to {corner.s}")
    if not (is_walled_at(region, corner, "s") and is_walled_at(region, corner, "t")):
        raise PreconditionError(f"{corner} is not walled on both sides")


def even_by_double_wall(region: Region, corner: StCorner) -> EvenCertificate:
    check_double_wall(region, corner)
    return EvenCertificate(corner, len(region))


# -- traces -----------------------------------------------------------------


@dataclass
class ReductionStep:
    kind: str  # "open", "wall" or "even"
    corner: StCorner
    k: int
    removed: tuple[Cell, ...]
    other: tuple[Cell, ...] | None = None  # open steps: the strip not followed
    region: Region | None = None  # region after the step

    def to_line(self, index: int) -> str:
        c = self.corner
        line = (
            f"step {index}: {self.kind} apex=({c.apex[0]},{c.apex[1]}) orient={c.orientation} "
            f"s={c.s} t={c.t} p={c.p} k={self.k} removed={_fmt_cells(self.removed)}"
        )
        if self.kind == "open":
            line += " other=" + ("zero" if self.other is None else _fmt_cells(self.other))
        return line


@dataclass
class ReductionTrace:
    start: Region
    source: str = "-"
    steps: list[ReductionStep] = field(default_factory=list)
    side_terms: list[Region] = field(default_factory=list)
    claimed_parity: int | None = None

    @property
    def terminal(self) -> Region:
        return self.steps[-1].region if self.steps else self.start

    def to_text(self) -> str:
        lines = [f"start {self.source}"]
        lines.extend(step.to_line(n) for n, step in enumerate(self.steps, start=1))
        lines.append(f"parity {self.claimed_parity}")
        return "\n".join(lines) + "\n"


def _fmt_cells(cells: Iterable[Cell]) -> str:
    return "[" + ",".join(f"({x},{y})" for x, y in cells) + "]"


_CELL_RE = re.compile(r"\((-?\d+),(-?\d+)\)")
_STEP_RE = re.compile(
    r"step (\d+): (open|wall|even) apex=\((-?\d+),(-?\d+)\) orient=(\d) "
    r"s=(\d+) t=(\d+) p=(\d+) k=(\d+) removed=(\[[^\]]*\])(?: other=(zero|\[[^\]]*\]))?\s*$"
)


def _parse_cells(text: str) -> tuple[Cell, ...]:
    return tuple((int(x), int(y)) for x, y in _CELL_RE.findall(text))


def parse_trace(text: str, resolve: Callable[[str], Region]) -> ReductionTrace:
    """Read the line format back; ``resolve`` turns the start source into a region.

    Regions after each step are left unset: ``verify_trace`` recomputes them.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("start "):
        raise InvalidArgumentError("trace must begin with 'start <source>'")
    source = lines[0][len("start "):].strip()
    trace = ReductionTrace(start=resolve(source), source=source)
    for line in lines[1:]:
        if line.startswith("parity "):
            trace.claimed_parity = int(line.split()[1])
            continue
        m = _STEP_RE.match(line)
        if not m:
            raise InvalidArgumentError(f"malformed trace line: {line!r}")
        _, kind, ax, ay, orient, s, t, p, k, removed, other = m.groups()
        corner = StCorner(int(s), int(t), int(p), CornerFrame((int(ax), int(ay)), int(orient)))
        step = ReductionStep(kind, corner, int(k), _parse_cells(removed))
        if kind == "open":
            step.other = None if other in (None, "zero") else _parse_cells(other)
        trace.steps.append(step)
    if trace.claimed_parity is None:
        raise InvalidArgumentError("trace has no 'parity' footer")
    return trace


@dataclass(frozen=True)
class ScriptStep:
    """One scripted application; ``follow`` picks the open-step branch to continue."""

    kind: str
    apex: Cell
    orientation: int
    p: int
    k: int | None = None
    follow: str = "a"


def _apply(region: Region, kind: str, corner: StCorner, k: int | None, follow: str = "a") -> ReductionStep:
    if kind == "even":
        even_by_double_wall(region, corner)
        return ReductionStep("even", corner, corner.s, (), region=region)
    if kind == "wall":
        check_wall(region, corner)
        strip = strip_cells(corner.frame, corner.p, corner.s, corner.s + 1)
        after = _remove_if_present(region, strip)
        if after is None:
            raise PreconditionError(f"wall strip does not fit at {corner}; use an even step")
        return ReductionStep("wall", corner, corner.s, strip, region=after)
    if kind == "open":
        if k is None:
            raise InvalidArgumentError("open step needs k")
        check_open(region, corner, k)
        a, b = open_strips(corner, k)
        if follow == "b":
            a, b = b, a
        after = _remove_if_present(region, a)
        if after is None:
            raise PreconditionError(f"followed strip does not fit at {corner}, k={k}")
        other = b if all(c in region for c in b) else None
        return ReductionStep("open", corner, k, a, other=other, region=after)
    raise InvalidArgumentError(f"unknown step kind {kind!r}")


def _stuck(region: Region) -> bool:
    black, white = region.black_white()
    return not region or black != white


def qualifying_step(region: Region) -> tuple[str, StCorner] | None:
    """First corner, by apex then orientation, admitting an even or wall step."""
    options = []
    for corner in find_corners(region):
        options.append(corner)
        options.append(corner.swapped())
    options.sort(key=StCorner.sort_key)
    for corner in options:
        if corner.s > corner.t or not is_walled_at(region, corner, "s"):
            continue
        if corner.p > 1 and corner.s < 2:
            continue
        if not is_complete_up_to(region, corner, corner.s):
            continue
        if corner.s == corner.t and is_walled_at(region, corner, "t"):
            return "even", corner
        return "wall", corner
    return None


def reduce_to_trace(
    region: Region,
    strategy: str = "wall-greedy",
    script: Sequence[ScriptStep] | None = None,
    source: str = "-",
) -> ReductionTrace:
    trace = ReductionTrace(start=region, source=source)
    current = region
    if strategy == "wall-greedy":
        while not _stuck(current):
            found = qualifying_step(current)
            if found is None:
                break
            kind, corner = found
            step = _apply(current, kind, corner, None)
            trace.steps.append(step)
            if kind == "even":
                break
            current = step.region
    elif strategy == "scripted":
        for index, item in enumerate(script or (), start=1):
            corner = corner_at(current, CornerFrame(item.apex, item.orientation), item.p)
            if corner is None:
                raise PreconditionError(f"script step {index}: no corner at {item.apex} orient={item.orientation}")
            try:
                step = _apply(current, item.kind, corner, item.k, item.follow)
            except (PreconditionError, InvalidArgumentError) as exc:
                raise PreconditionError(f"script step {index}: {exc}") from exc
            trace.steps.append(step)
            if step.other is not None:
                trace.side_terms.append(current.difference(step.other))
            if item.kind == "even":
                break
            current = step.region
    else:
        raise InvalidArgumentError(f"unknown strategy {strategy!r}")
    trace.claimed_parity = _claimed(trace)
    return trace


def _claimed(trace: ReductionTrace) -> int:
    if trace.steps and trace.steps[-1].kind == "even":
        parity = 0
    else:
        parity = parity_tilings(trace.terminal)
    for side in trace.side_terms:
        parity ^= parity_tilings(side)
    return parity


# -- verification -----------------------------------------------------------


@dataclass
class StepCheck:
    index: int
    ok: bool
    message: str = "ok"


@dataclass
class TraceReport:
    checks: list[StepCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        return [
            f"step {c.index}: {'PASS' if c.ok else 'FAIL'} {c.message}" for c in self.checks
        ]


def verify_trace(trace: ReductionTrace, oracle_limit: int = ORACLE_LIMIT) -> TraceReport:
    """Replay a trace from its start region, trusting nothing it records."""
    checks: list[StepCheck] = []
    current = trace.start
    parity_acc = 0
    ended_even = False
    broken = False
    for index, step in enumerate(trace.steps, start=1):
        if broken:
            checks.append(StepCheck(index, False, "not replayed after an earlier failure"))
            continue
        corner = step.corner
        try:
            _check_corner(current, corner)
            if step.kind == "even":
                check_double_wall(current, corner)
                expected = ((), None)
            elif step.kind == "wall":
                check_wall(current, corner)
                expected = (strip_cells(corner.frame, corner.p, corner.s, corner.s + 1), None)
            elif step.kind == "open":
                check_open(current, corner, step.k)
                expected = open_strips(corner, step.k)
            else:
                raise PreconditionError(f"unknown step kind {step.kind!r}")
        except (PreconditionError, InvalidArgumentError) as exc:
            checks.append(StepCheck(index, False, f"precondition: {exc}"))
            broken = True
            continue

        removed = frozenset(step.removed)
        other = None
        if step.kind == "open":
            a, b = (frozenset(x) for x in expected)
            if removed == a:
                other = b
            elif removed == b:
                other = a
            else:
                checks.append(StepCheck(index, False, "removed cells are not either open strip"))
                broken = True
                continue
            other_fits = other <= current.cells
            recorded = None if step.other is None else frozenset(step.other)
            if recorded != (other if other_fits else None):
                checks.append(StepCheck(index, False, "other-term record does not match"))
                broken = True
                continue
        elif removed != frozenset(expected[0]):
            checks.append(StepCheck(index, False, "removed cells differ from the strip"))
            broken = True
            continue
        if not removed <= current.cells:
            checks.append(StepCheck(index, False, "removed cells are not all in the region"))
            broken = True
            continue

        after = current.difference(removed)
        side = current.difference(other) if other is not None and other <= current.cells else None
        message = "ok"
        if len(current) <= oracle_limit:
            lhs = parity_tilings(current)
            if step.kind == "even":
                rhs = 0
            else:
                rhs = parity_tilings(after) ^ term_parity(side)
            if lhs != rhs:
                checks.append(StepCheck(index, False, f"parity identity fails: {lhs} != {rhs}"))
                broken = True
                continue
            message = "ok (oracle checked)"
        checks.append(StepCheck(index, True, message))
        if side is not None:
            parity_acc ^= parity_tilings(side)
        if step.kind == "even":
            ended_even = True
            break
        current = after

    if not broken:
        final = parity_acc ^ (0 if ended_even else parity_tilings(current))
        ok = final == trace.claimed_parity
        checks.append(
            StepCheck(len(trace.steps) + 1, ok, f"claimed parity {trace.claimed_parity}, recomputed {final}")
        )
    return TraceReport(checks)


# -- randomized soundness check ---------------------------------------------


@dataclass
class TheoremCheck:
    kind: str
    corner: StCorner
    k: int
    expected: int
    got: int

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def theorem_checks(region: Region) -> list[TheoremCheck]:
    """Every licensed open/wall/even application on ``region``, checked by the oracle."""
    out: list[TheoremCheck] = []
    if not region:
        return out
    whole = parity_tilings(region)
    for base in find_corners(region):
        for corner in (base, base.swapped()):
            top = min(corner.s, corner.t)
            ks = ([1] if corner.p == 1 else []) + list(range(2, top + 1))
            for k in ks:
                if not is_complete_up_to(region, corner, k):
                    break
                if corner is base:
                    a, b = reduce_open(region, corner, k)
                    out.append(TheoremCheck("open", corner, k, whole, term_parity(a) ^ term_parity(b)))
            if corner.s <= corner.t and (corner.p == 1 or corner.s >= 2):
                if is_complete_up_to(region, corner, corner.s) and is_walled_at(region, corner, "s"):
                    result = reduce_wall(region, corner)
                    out.append(TheoremCheck("wall", corner, corner.s, whole, term_parity(result)))
                    if corner.s == corner.t and is_walled_at(region, corner, "t"):
                        even_by_double_wall(region, corner)
                        out.append(TheoremCheck("even", corner, corner.s, whole, 0))
    return out
