"""Intersection-graph statistics: pair counts, alpha, degrees, edge lists."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from .geometry import BoxFamily, DimensionError, boxes_intersect, compress, compress_axis


@dataclass(frozen=True)
class PairReport:
    n: int
    pairs: int
    alpha: Optional[Fraction]
    degrees: tuple[int, ...]


def _report(n: int, degrees) -> PairReport:
    degrees = tuple(int(x) for x in degrees)
    total = sum(degrees)
    assert total % 2 == 0
    pairs = total // 2
    alpha = Fraction(pairs, comb(n, 2)) if n >= 2 else None
    return PairReport(n, pairs, alpha, degrees)


def count_pairs_naive(f: BoxFamily) -> PairReport:
    """Test every unordered pair with :func:`boxes_intersect`. O(n^2 d)."""
    n = len(f)
    deg = [0] * n
    boxes = f.boxes
    for i in range(n):
        for j in range(i + 1, n):
            if boxes_intersect(boxes[i], boxes[j]):
                deg[i] += 1
                deg[j] += 1
    return _report(n, deg)


def count_pairs_sweep_1d(f: BoxFamily) -> PairReport:
    """Same report as :func:`count_pairs_naive` for d=1, in O(n log n).

    After compression every interval is an integer atom range [s, e]; two
    ranges meet unless one ends strictly before the other starts.
    """
    if f.dim != 1:
        raise DimensionError(f"sweep counting needs d=1, got d={f.dim}")
    ax = compress_axis(f.projection(0))
    s_sorted = sorted(ax.starts)
    e_sorted = sorted(ax.ends)
    n = len(f)
    deg = []
    for s, e in zip(ax.starts, ax.ends):
        before = bisect_left(e_sorted, s)  # ranges ending before s starts
        after = n - bisect_right(s_sorted, e)  # ranges starting after e
        deg.append(n - 1 - before - after)
    return _report(n, deg)


def intersection_matrix(f: BoxFamily) -> np.ndarray:
    """Boolean n x n adjacency matrix of the intersection graph (zero diagonal)."""
    n = len(f)
    adj = np.ones((n, n), dtype=bool)
    for ax in compress(f).axes:
        s = np.asarray(ax.starts, dtype=np.int64)
        e = np.asarray(ax.ends, dtype=np.int64)
        adj &= (s[None, :] <= e[:, None]) & (s[:, None] <= e[None, :])
    np.fill_diagonal(adj, False)
    return adj


def count_pairs(f: BoxFamily) -> PairReport:
    """Pair report by the fastest exact route for the family's dimension."""
    if f.dim == 1:
        return count_pairs_sweep_1d(f)
    return _report(len(f), intersection_matrix(f).sum(axis=1))


def edge_list(f: BoxFamily) -> list[tuple[int, int]]:
    adj = intersection_matrix(f)
    ii, jj = np.nonzero(np.triu(adj, k=1))
    return [(int(i), int(j)) for i, j in zip(ii, jj)]


def degree_histogram(report: PairReport) -> dict[int, int]:
    hist: dict[int, int] = {}
    for deg in report.degrees:
        hist[deg] = hist.get(deg, 0) + 1
    return dict(sorted(hist.items()))
