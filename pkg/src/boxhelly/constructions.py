"""Generators: the Turan-graph family, the interval staircase, seeded random families."""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import Box, BoxFamily, Interval, Rational, as_rational

GRID = 2**20


def class_sizes(n: int, m: int) -> list[int]:
    """Balanced part sizes of n into m classes, larger classes first."""
    q, r = divmod(n, m)
    return [q + 1] * r + [q] * (m - r)


def gen_turan_family(n: int, d: int) -> BoxFamily:
    """n open boxes in R^d whose intersection graph is the Turan graph T(n, d).

    Class i is cut into unit slabs along axis i and spans the whole ambient box
    (0, M)^d, M = ceil(n/d), on every other axis. Boxes of one class are
    pairwise disjoint; boxes of different classes always meet.
    """
    if not (isinstance(n, int) and isinstance(d, int)) or d < 1 or n < d:
        raise ValueError(f"need n >= d >= 1, got n={n}, d={d}")
    sizes = class_sizes(n, d)
    M = sizes[0]
    boxes = []
    for axis, size in enumerate(sizes):
        for j in range(1, size + 1):
            bounds = [(0, M)] * d
            bounds[axis] = (j - 1, j)
            boxes.append(Box.open(*bounds))
    return BoxFamily(d, tuple(boxes), label=f"turan n={n} d={d}")


def gen_staircase_family(n: int, k: int) -> BoxFamily:
    """Open intervals (i, i+k), i = 1..n: depth k with (k-1)n - C(k,2) pairs."""
    if not (isinstance(n, int) and isinstance(k, int)) or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    boxes = [Box((Interval.open(i, i + k),)) for i in range(1, n + 1)]
    return BoxFamily(1, tuple(boxes), label=f"staircase n={n} k={k}")


def _snap(x: Fraction) -> Fraction:
    return Fraction(round(x * GRID), GRID)


def _uniform(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.getrandbits(53), 2**53)


def gen_random_family(
    n: int,
    d: int,
    seed: int,
    extent: Rational = 1,
    side_min: Rational = Fraction(1, 10),
    side_max: Rational = Fraction(1, 2),
    closed: bool = False,
) -> BoxFamily:
    """n random boxes on the dyadic grid of spacing 2^-20.

    Each axis interval has its centre uniform in [0, extent] and its length
    uniform in [side_min, side_max]. The stream comes from ``random.Random(seed)``
    and only uses ``getrandbits``, so families are reproducible bit for bit.
    """
    extent, side_min, side_max = (as_rational(x) for x in (extent, side_min, side_max))
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    if not 0 < side_min <= side_max <= extent:
        raise ValueError(f"need 0 < side_min <= side_max <= extent, got {side_min}, {side_max}, {extent}")
    rng = random.Random(seed)
    step = Fraction(1, GRID)
    boxes = []
    for _ in range(n):
        axes = []
        for _ in range(d):
            center = _uniform(rng, Fraction(0), extent)
            half = _uniform(rng, side_min, side_max) / 2
            lo, hi = _snap(center - half), _snap(center + half)
            if hi <= lo:
                hi = lo + step
            axes.append(Interval.make(lo, hi, not closed, not closed))
        boxes.append(Box(tuple(axes)))
    kind = "closed" if closed else "open"
    return BoxFamily(d, tuple(boxes), label=f"random n={n} d={d} seed={seed} {kind}")
