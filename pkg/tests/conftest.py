from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import strategies as st

from boxhelly.geometry import Box, BoxFamily, Interval, RPoint, point_in_box

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


# Small coordinates in halves so that shared and touching endpoints are common.
coords = st.integers(0, 12).map(lambda x: Fraction(x, 2))


@st.composite
def intervals(draw):
    a, b = sorted((draw(coords), draw(coords)))
    if a == b:
        return Interval.closed(a, a)
    return Interval.make(a, b, draw(st.booleans()), draw(st.booleans()))


@st.composite
def families(draw, dim=None, min_n=0, max_n=8):
    d = dim if dim is not None else draw(st.integers(1, 3))
    n = draw(st.integers(min_n, max_n))
    boxes = [Box(tuple(draw(intervals()) for _ in range(d))) for _ in range(n)]
    return BoxFamily(d, tuple(boxes))


def grid_depth(f: BoxFamily) -> int:
    """Max depth by testing every combination of endpoint values and midpoints."""
    axes = []
    for axis in range(f.dim):
        vals = sorted({iv.lo.value for iv in f.projection(axis)} | {iv.hi.value for iv in f.projection(axis)})
        cands = list(vals) + [(a + b) / 2 for a, b in zip(vals, vals[1:])]
        axes.append(cands)
    best = 0
    for p in product(*axes):
        pt = RPoint(p)
        best = max(best, sum(point_in_box(pt, b) for b in f.boxes))
    return best
