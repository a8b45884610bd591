"""End-to-end checks of the holey-square factorization and the parity tables."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from .corners import find_corners
from .counting import count_tilings, parity_tilings
from .errors import InvalidArgumentError, PreconditionError
from .reduce import ReductionTrace, ScriptStep, qualifying_step, reduce_to_trace, theorem_checks
from .region import (
    Region,
    d_region,
    half_region,
    half_region_odd,
    half_region_odd_pruned,
    half_region_pruned,
    holey_square,
    holey_square_odd,
    rectangle,
    t_region,
)


@dataclass
class Case:
    name: str
    params: str
    expected: object
    got: object
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CASE {self.name} {self.params} expected={self.expected} got={self.got} {status}"

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Report:
    cases: list[Case]

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        n = len(self.cases)
        f = len(self.failures)
        return f"SUMMARY cases={n} pass={n - f} fail={f}"

    def text(self) -> str:
        return "\n".join([c.line() for c in self.cases] + [self.summary()])


def run_cases(fn: Callable, args: Iterable, jobs: int = 1) -> list:
    """Map ``fn`` over ``args``; results come back in argument order."""
    args = list(args)
    if jobs <= 1 or len(args) < 2:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, [(fn, a) for a in args]))


def _star(item):
    fn, a = item
    return fn(*a)


# -- holey squares -----------------------------------------------------------


@dataclass
class HoleyReport:
    m: int
    n: int
    whole: int
    half: int
    pruned: int
    odd_variant: bool = False

    @property
    def odd_factor(self) -> int:
        return self.half

    @property
    def k(self) -> int:
        return (self.half - 1) // 2

    @property
    def passed(self) -> bool:
        return (
            self.whole == 2 ** (self.n - self.m) * self.half**2
            and self.half % 2 == 1
            and self.half == self.pruned
        )

    def case(self) -> Case:
        name = "holey-odd" if self.odd_variant else "holey"
        return Case(
            name,
            f"m={self.m},n={self.n}",
            f"2^{self.n - self.m}*odd^2",
            f"{self.whole}=2^{self.n - self.m}*{self.half}^2" if self.passed else
            f"{self.whole},half={self.half},pruned={self.pruned}",
            self.passed,
        )


def verify_holey(m: int, n: int) -> HoleyReport:
    return HoleyReport(
        m,
        n,
        count_tilings(holey_square(m, n)),
        count_tilings(half_region(m, n)),
        count_tilings(half_region_pruned(m, n)),
    )


def verify_holey_odd(m: int, n: int) -> HoleyReport:
    return HoleyReport(
        m,
        n,
        count_tilings(holey_square_odd(m, n)),
        count_tilings(half_region_odd(m, n)),
        count_tilings(half_region_odd_pruned(m, n)),
        odd_variant=True,
    )


def holey_report(max_n: int = 5, odd: bool = False, jobs: int = 1) -> Report:
    pairs = [(m, n) for n in range(1, max_n + 1) for m in range(n)]
    fn = verify_holey_odd if odd else verify_holey
    return Report([r.case() for r in run_cases(fn, pairs, jobs)])


# -- rectangles ---------------------------------------------------------------


@dataclass(frozen=True)
class ScheduleRow:
    index: int
    first: tuple[str, int]
    second: tuple[str, int]

    @property
    def short(self) -> tuple[str, int]:
        return min(self.first, self.second, key=lambda side: side[1])

    @property
    def long(self) -> tuple[str, int]:
        return max(self.first, self.second, key=lambda side: side[1])


def rect_schedule(k: int, n: int) -> list[ScheduleRow]:
    """Strip removals reducing N(kn,(k+1)n) to N(k(n-1),(k+1)(n-1)).

    Each row names the two sides a strip runs along and how many cells it
    takes from each, for applications 1..2k in blocks of four.
    """
    if k < 1 or n < 1:
        raise InvalidArgumentError(f"schedule needs k, n >= 1, got k={k}, n={n}")
    if n == 1:
        return []
    rows = []
    for index in range(1, 2 * k + 1):
        j = (index + 3) // 4
        phase = index - 4 * (j - 1)
        if phase == 1:
            a = (k - 2 * j + 2) * n
            rows.append(ScheduleRow(index, ("Left", a), ("Top", a + 1)))
        elif phase == 2:
            a = (2 * j - 1) * (n - 1)
            rows.append(ScheduleRow(index, ("Top", a), ("Right", a + 1)))
        elif phase == 3:
            a = (k - 2 * j + 1) * n
            rows.append(ScheduleRow(index, ("Right", a), ("Bottom", a + 1)))
        else:
            a = 2 * j * (n - 1)
            rows.append(ScheduleRow(index, ("Left", a + 1), ("Bottom", a)))
    return rows


# Direction along each side, walking away from the corner the strip starts at.
_LEG_DIRECTION = {
    ("Left", "Top"): ((0, -1), (1, 0)),
    ("Top", "Right"): ((-1, 0), (0, -1)),
    ("Right", "Bottom"): ((0, 1), (-1, 0)),
    ("Bottom", "Left"): ((1, 0), (0, 1)),
}


def _schedule_step(region: Region, row: ScheduleRow) -> ScriptStep:
    sides = {row.first[0], row.second[0]}
    for pair, (d1, d2) in _LEG_DIRECTION.items():
        if set(pair) == sides:
            dirs = {pair[0]: d1, pair[1]: d2}
            break
    short_side, a = row.short
    long_side, _ = row.long
    want = (dirs[short_side], dirs[long_side])
    for base in find_corners(region):
        for corner in (base, base.swapped()):
            if corner.p != 1 or corner.s != a:
                continue
            if (corner.frame.s_direction, corner.frame.t_direction) == want:
                kind = "wall" if corner.s <= corner.t and _walled(region, corner) else "open"
                return ScriptStep(kind, corner.apex, corner.orientation, 1, a)
    raise PreconditionError(f"schedule row {row.index}: no {short_side}/{long_side} corner with leg {a}")


def _walled(region, corner) -> bool:
    from .corners import is_walled_at

    return is_walled_at(region, corner, "s")


def rect_script(k: int, n: int) -> list[ScriptStep]:
    """Script steps for one schedule level, located on the evolving region."""
    region = rectangle(k * n, (k + 1) * n)
    steps = []
    for row in rect_schedule(k, n):
        step = _schedule_step(region, row)
        steps.append(step)
        partial = reduce_to_trace(region, "scripted", [step])
        region = partial.terminal
    return steps


def chain_script(k: int) -> list[ScriptStep]:
    """N(k,k+1) -> N(k-1,k) -> ... -> N(1,2) by wall steps at the top-left."""
    steps = []
    region = rectangle(k, k + 1)
    while len(region) > 2:
        kind, corner = qualifying_step(region)
        steps.append(ScriptStep(kind, corner.apex, corner.orientation, corner.p, corner.s))
        region = reduce_to_trace(region, "scripted", [steps[-1]]).terminal
    return steps


@dataclass
class RectReport:
    k: int
    n: int
    trace: ReductionTrace
    remainder_ok: bool
    oracle_parity: int | None

    @property
    def passed(self) -> bool:
        return self.remainder_ok and self.trace.claimed_parity == 1 and self.oracle_parity in (None, 1)

    def case(self) -> Case:
        got = f"claimed={self.trace.claimed_parity},remainder={'ok' if self.remainder_ok else 'bad'}"
        if self.oracle_parity is not None:
            got += f",oracle={self.oracle_parity}"
        return Case("rect", f"k={self.k},n={self.n}", "parity=1", got, self.passed)


def rect_oracle_in_range(k: int, n: int) -> bool:
    return k * n <= 6 and (k + 1) * n <= 12


def verify_rect(k: int, n: int, oracle: bool | None = None) -> RectReport:
    """Replay the schedule (or, for n = 1, the N(k,k+1) chain) and check the end state."""
    start = rectangle(k * n, (k + 1) * n)
    if n >= 2:
        trace = reduce_to_trace(start, "scripted", rect_script(k, n), source=f"gen:rect:{k * n},{(k + 1) * n}")
        want = rectangle(k * (n - 1), (k + 1) * (n - 1))
        remainder_ok = trace.terminal == want and len(trace.steps) == 2 * k
    else:
        trace = reduce_to_trace(start, "scripted", chain_script(k), source=f"gen:rect:{k},{k + 1}")
        remainder_ok = trace.terminal == rectangle(1, 2)
    if oracle is None:
        oracle = rect_oracle_in_range(k, n)
    return RectReport(k, n, trace, remainder_ok, parity_tilings(start) if oracle else None)


def rect_report(max_k: int = 3, max_n: int = 3, jobs: int = 1) -> Report:
    pairs = [(k, n) for k in range(1, max_k + 1) for n in range(1, max_n + 1)]
    cases = [r.case() for r in run_cases(verify_rect, pairs, jobs)]
    # The oracle sweep covers every rectangle within the counting bounds.
    for k in range(1, 7):
        for n in range(1, 7):
            if rect_oracle_in_range(k, n) and (k > max_k or n > max_n):
                got = parity_tilings(rectangle(k * n, (k + 1) * n))
                cases.append(Case("rect-oracle", f"k={k},n={n}", 1, got, got == 1))
    return Report(cases)


# -- T and D tables -----------------------------------------------------------

T_ITEMS = {
    1: lambda k: k,
    2: lambda k: k + 1,
    3: lambda k: k + 2,
    4: lambda k: 2 * k - 1,
    5: lambda k: 2 * k,
    6: lambda k: 2 * k + 1,
    7: lambda k: 2 * k + 2,
}
D_ITEMS = {
    1: lambda k: k,
    2: lambda k: k + 1,
    3: lambda k: k + 2,
    4: lambda k: 2 * k - 1,
    5: lambda k: 2 * k + 1,
}


def _check_args(k: int, p: int, variant: int, items: dict) -> None:
    if variant not in items:
        raise InvalidArgumentError(f"variant must be one of {sorted(items)}, got {variant}")
    if k < 1 or p < 1:
        raise InvalidArgumentError(f"k and p must be positive, got k={k}, p={p}")


def t_parity_claim(k: int, p: int, variant: int) -> int:
    """Closed-form parity of T(k, j, p) for the j selected by ``variant``."""
    _check_args(k, p, variant, T_ITEMS)
    if variant == 1:
        return 0
    if variant == 2:
        return 1 if p == 1 or k % 2 == 1 else 0
    if variant == 3:
        return 1 if k % 2 == 0 else 0
    if variant in (4, 6):
        return 0
    return 1


def d_parity_claim(k: int, p: int, variant: int) -> int:
    _check_args(k, p, variant, D_ITEMS)
    if variant == 2:
        return 1
    if variant == 4:
        return 1 if k % 2 == 0 else 0
    return 0


def family_region(which: str, k: int, p: int, variant: int) -> Region:
    if which == "T":
        return t_region(k, T_ITEMS[variant](k), p)
    if which == "D":
        return d_region(k, D_ITEMS[variant](k), p)
    raise InvalidArgumentError(f"family must be 'T' or 'D', got {which!r}")


def _family_case(which: str, k: int, p: int, variant: int) -> Case:
    claim = t_parity_claim if which == "T" else d_parity_claim
    j = (T_ITEMS if which == "T" else D_ITEMS)[variant](k)
    region = family_region(which, k, p, variant)
    expected = claim(k, p, variant)
    got = parity_tilings(region)
    passed = got == expected and (len(region) % 2 == 0 or got == 0)
    return Case(f"{which.lower()}family", f"item={variant},k={k},j={j},p={p}", expected, got, passed)


def verify_family(which: str, max_k: int = 4, max_p: int = 3, jobs: int = 1) -> Report:
    items = T_ITEMS if which == "T" else D_ITEMS
    args = [
        (which, k, p, v)
        for v in sorted(items)
        for k in range(1, max_k + 1)
        for p in range(1, max_p + 1)
        if items[v](k) >= 1
    ]
    cases = run_cases(_family_case, args, jobs)
    for p in range(1, max_p + 1):
        if which == "T":
            got = count_tilings(t_region(1, 2, p))
            cases.append(Case("tfamily-fact", f"#T(1,2,{p})", 1, got, got == 1))
            for k in range(2, max_k + 1):
                if p >= 2:
                    lhs = parity_tilings(t_region(k, k + 1, p))
                    rhs = parity_tilings(t_region(k - 1, k + 1, p - 1))
                    cases.append(
                        Case("tfamily-step", f"T({k},{k + 1},{p})~T({k - 1},{k + 1},{p - 1})", lhs, rhs, lhs == rhs)
                    )
        else:
            got = parity_tilings(d_region(2, 3, p))
            cases.append(Case("dfamily-fact", f"#2D(2,3,{p})", 1, got, got == 1))
    return Report(cases)


# -- randomized theorem sweep -------------------------------------------------


def theorem_report(trials: int = 500, seed: int = 7, max_cells: int = 26) -> Report:
    from .corpus import corpus_with_corners

    cases = []
    for index, region in enumerate(corpus_with_corners(seed, trials, max_cells)):
        checks = theorem_checks(region)
        bad = [c for c in checks if not c.ok]
        cases.append(
            Case(
                "theorem",
                f"trial={index},cells={len(region)},applications={len(checks)}",
                "all-hold",
                "all-hold" if not bad else f"{len(bad)}-fail",
                not bad,
            )
        )
    return Report(cases)
