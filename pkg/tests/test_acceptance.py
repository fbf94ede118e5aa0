"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or as a
script: ``python3 tests/test_acceptance.py``. The full corpus sweeps take
several minutes each on one core.
"""

from __future__ import annotations

import sys
import time

import pytest

from shiftedq.amenability import (
    checklist_context,
    checklist_failures,
    is_k_amenable_checklist,
    is_k_amenable_word,
)
from shiftedq.canonical import canonical_tableau
from shiftedq.classification import staircase_reduce
from shiftedq.expansion import amenable_tableaux, expand
from shiftedq.shapes import SkewShape, StrictPartition, partition_difference
from shiftedq.sweep import (
    CheckResult,
    check_checklist,
    check_checklist_literal,
    check_classification,
    check_oracle,
    check_ot,
    check_row_strip,
    check_strict_content,
    check_symmetry,
)
from shiftedq.tableaux import content, format_tableau, parse_tableau, reading_word

pytestmark = pytest.mark.slow

EXAMPLE = """\
. . . . . 1' 1 2
. . . 2' 2 2 4
. . . 2 4 5 5
. . . 4 6' 6
. . . . 6 7"""

CANONICAL = """\
. . . . 1' 1
. . 1' 1 1 2
. . 1 2' 2
. . . 2 3"""

CHECKLIST = """\
. . . . . . . . 1' 1 1
. . . . . . . 1' 2' 2
. . . . . . . 1
. . . . . . . 2'
. . . . . 1' 1 2
. . . . . 1 2'
. . . . . . 2"""


def report(number: int, results: list[CheckResult]) -> bool:
    ok = all(r.passed for r in results)
    detail = "; ".join(r.line() for r in results)
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}", flush=True)
    return ok


def _goldens() -> CheckResult:
    result = CheckResult("worked examples")
    start = time.perf_counter()

    def expect(name, got, want):
        result.checked += 1
        if got != want:
            result.fail(f"{name}: got {got!r}, want {want!r}")

    t = parse_tableau(EXAMPLE)
    expect("example shape", t.cells, SkewShape((8, 6, 5, 3, 2), (5, 2, 1)).cells)
    expect("example content", content(t).total, (2, 5, 0, 3, 2, 3, 1))

    canon = canonical_tableau(SkewShape((6, 5, 3, 2), (4, 1)))
    expect("canonical filling", format_tableau(canon.tableau), CANONICAL)

    c = parse_tableau(CHECKLIST)
    expect("checklist shape", c.cells, SkewShape((11, 9, 6, 5, 4, 2, 1), (8, 6, 5, 4, 1)).cells)
    ctx = checklist_context(c, 2)
    counts = [(ctx.s_box(b, 1), ctx.s_box(b, 2)) for b in [(2, 10), (5, 8), (7, 7)]]
    expect("checklist counts", counts, [(2, 1), (3, 2), (4, 3)])
    expect("checklist d", ctx.d, 1)
    expect("checklist verdict", (checklist_failures(c, 2), is_k_amenable_checklist(c, 2)), ([], True))
    expect("checklist word", is_k_amenable_word(reading_word(c), 2), True)

    shape = SkewShape((6, 4, 3, 2, 1), (5,))
    nu = StrictPartition((5, 3, 2, 1))
    expect("expansion", dict(expand(shape).terms), {nu: 2})
    expect("tableaux of that content", len(list(amenable_tableaux(shape, nu))), 2)

    expect("staircase reduction", staircase_reduce(SkewShape((5, 4, 3, 2, 1), (5, 3, 2))), (4, 1))
    expect("partition difference", partition_difference((9, 7, 5, 4, 3, 1), (5, 3, 1)), (9, 7, 4))
    result.seconds = time.perf_counter() - start
    return result


def criterion_1():
    r = _goldens()
    return [r] + ([] if r.seconds < 1.0 else [_slow(r)])


def _slow(r: CheckResult) -> CheckResult:
    out = CheckResult("worked examples time", checked=1)
    out.fail(f"took {r.seconds:.2f}s, limit 1s")
    return out


def criterion_2():
    return [check_oracle(max_cells=8, max_first=7)]


def criterion_3():
    return [
        check_checklist(max_cells=8),
        check_checklist_literal(max_cells=4, max_k=8),
    ]


def criterion_4():
    return [check_classification(max_cells=9)]


def criterion_5():
    return [check_symmetry(max_size=8)]


def criterion_6():
    return [check_row_strip(max_size=9)]


def criterion_7():
    return [check_ot(max_cells=8)]


def criterion_8():
    return [check_strict_content(max_cells=8, max_first=7)]


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    results = CRITERIA[number]()
    with capsys.disabled():
        ok = report(number, results)
    assert ok, [r.failures[:3] for r in results if not r.passed]


def main() -> int:
    ok = True
    for number in sorted(CRITERIA):
        ok = report(number, CRITERIA[number]()) and ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
