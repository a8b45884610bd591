"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

from __future__ import annotations

import math
import time

from tilingparity.corners import find_corners
from tilingparity.corpus import corpus_with_corners
from tilingparity.counting import count_tilings, count_via_matching, enumerate_tilings, parity_tilings
from tilingparity.errors import PreconditionError
from tilingparity.families import (
    holey_report,
    rect_oracle_in_range,
    verify_family,
    verify_rect,
)
from tilingparity.reduce import even_by_double_wall, theorem_checks
from tilingparity.region import holey_square, rectangle


def report(number: int, ok: bool, detail: str) -> None:
    print(f"CRITERION {number}: {'PASS' if ok else 'FAIL'} {detail}")


def test_criterion_1_holey_base_case():
    start = time.perf_counter()
    counts = [count_tilings(holey_square(m, m + 1)) for m in range(1, 5)]
    elapsed = time.perf_counter() - start
    ok = counts == [2, 2, 2, 2] and elapsed < 1.0
    report(1, ok, f"counts={counts} time={elapsed:.3f}s")
    assert counts == [2, 2, 2, 2]
    assert elapsed < 1.0


def test_criterion_2_holey_factorization():
    start = time.perf_counter()
    rep = holey_report(5)
    elapsed = time.perf_counter() - start
    pairs = {tuple(int(v.split("=")[1]) for v in c.params.split(",")) for c in rep.cases}
    want = {(m, n) for n in range(1, 6) for m in range(n)}
    ok = rep.ok and pairs == want and elapsed < 60
    report(2, ok, f"{rep.summary()} time={elapsed:.2f}s")
    assert pairs == want
    assert rep.ok, [c.line() for c in rep.failures]
    assert elapsed < 60


def test_criterion_3_odd_holey_factorization():
    rep = holey_report(4, odd=True)
    pairs = {tuple(int(v.split("=")[1]) for v in c.params.split(",")) for c in rep.cases}
    want = {(m, n) for n in range(1, 5) for m in range(n)}
    ok = rep.ok and pairs == want
    report(3, ok, rep.summary())
    assert pairs == want
    assert rep.ok, [c.line() for c in rep.failures]


def test_criterion_4_near_square_rectangles():
    bad = []
    checked = 0
    for k in range(1, 7):
        for n in range(1, 13):
            if rect_oracle_in_range(k, n):
                checked += 1
                if parity_tilings(rectangle(k * n, (k + 1) * n)) != 1:
                    bad.append((k, n))
    replays = [verify_rect(k, n, oracle=False) for k in range(1, 4) for n in range(1, 4)]
    bad_replays = [(r.k, r.n) for r in replays if not r.passed]
    ok = not bad and not bad_replays
    report(4, ok, f"oracle_cases={checked} odd_failures={bad} schedule_failures={bad_replays}")
    assert not bad
    assert not bad_replays


def test_criterion_5_theorem_soundness():
    start = time.perf_counter()
    corpus = corpus_with_corners(7, 500, max_cells=26)
    applications = 0
    failing = 0
    for region in corpus:
        checks = theorem_checks(region)
        applications += len(checks)
        failing += any(not c.ok for c in checks)
    elapsed = time.perf_counter() - start
    ok = len(corpus) == 500 and failing == 0 and elapsed < 120
    report(5, ok, f"regions={len(corpus)} applications={applications} failing_regions={failing} time={elapsed:.1f}s")
    assert len(corpus) == 500
    assert all(len(r) <= 26 for r in corpus)
    assert failing == 0
    assert elapsed < 120


def test_criterion_6_double_wall_evenness():
    certified = 0
    bad = []
    for region in corpus_with_corners(11, 500, max_cells=26):
        for corner in find_corners(region):
            for c in (corner, corner.swapped()):
                try:
                    even_by_double_wall(region, c)
                except PreconditionError:
                    continue
                certified += 1
                if parity_tilings(region) != 0:
                    bad.append(region)
    ok = certified > 0 and not bad
    report(6, ok, f"certificates={certified} odd_regions={len(bad)}")
    assert certified > 0
    assert not bad


def test_criterion_7_family_tables():
    t_rep = verify_family("T", 4, 3)
    d_rep = verify_family("D", 4, 3)
    failures = t_rep.failures + d_rep.failures
    ok = not failures
    report(7, ok, f"T {t_rep.summary()} D {d_rep.summary()}")
    for case in failures:
        print(f"  {case.line()}")
    assert {c.params for c in t_rep.cases if c.name == "tfamily-fact"} == {f"#T(1,2,{p})" for p in (1, 2, 3)}
    assert {c.params for c in d_rep.cases if c.name == "dfamily-fact"} == {f"#2D(2,3,{p})" for p in (1, 2, 3)}
    assert not failures, [c.line() for c in failures]


def test_criterion_8_oracle_triangle():
    mismatches = []
    small = [r for r in corpus_with_corners(3, 300, max_cells=24)]
    for region in small:
        a = count_tilings(region)
        b = count_via_matching(region)
        c = len(enumerate_tilings(region))
        if not a == b == c:
            mismatches.append((len(region), a, b, c))
    f = [count_tilings(rectangle(2, n)) for n in range(1, 13)]
    recurrence = all(f[i] == f[i - 1] + f[i - 2] for i in range(2, len(f)))
    ok = not mismatches and recurrence and f[:2] == [1, 2]
    report(8, ok, f"regions={len(small)} mismatches={len(mismatches)} fib_ok={recurrence}")
    assert not mismatches
    assert f[:2] == [1, 2] and recurrence


def _square_or_twice(value: int) -> bool:
    r = math.isqrt(value)
    if r * r == value:
        return True
    if value % 2 == 0:
        r = math.isqrt(value // 2)
        return 2 * r * r == value
    return False


def test_criterion_9_square_or_twice_square():
    values = {(m, n): count_tilings(holey_square(m, n)) for n in range(1, 5) for m in range(n)}
    bad = {key: v for key, v in values.items() if not _square_or_twice(v)}
    report(9, not bad, f"cases={len(values)} bad={bad}")
    assert not bad
