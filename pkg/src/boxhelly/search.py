"""Exhaustive extremal search over interval and box order types.

A 1-D order type of n closed intervals with distinct endpoints is a perfect
matching of the positions 1..2n into (lo, hi) pairs. There are (2n-1)!! of
them once the intervals are labelled by their left endpoints.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .analytics import count_pairs_naive
from .depth import LimitError, max_depth
from .geometry import Box, BoxFamily, Interval

MAX_N_1D = 7
MAX_N_D = 4
SEARCH_DIMS = (2, 3)


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")


def iter_order_types_1d(n: int, k: int):
    """Yield (pairs, lo, hi) for every order type of depth <= k, in DFS order.

    Scanning positions left to right, each position either opens the next
    interval or closes one that is open. Openings beyond k simultaneously open
    intervals are cut off: every interval seen while the k-th is open contains
    its start point. A new interval meets exactly the ones open when it starts.
    """
    lo = [0] * n
    hi = [0] * n
    open_ids: list[int] = []

    def rec(pos: int, opened: int, pairs: int):
        if pos > 2 * n:
            yield pairs, tuple(lo), tuple(hi)
            return
        if opened < n and len(open_ids) < k:
            lo[opened] = pos
            open_ids.append(opened)
            yield from rec(pos + 1, opened + 1, pairs + len(open_ids) - 1)
            open_ids.pop()
        for idx in range(len(open_ids)):
            i = open_ids.pop(idx)
            hi[i] = pos
            yield from rec(pos + 1, opened, pairs)
            open_ids.insert(idx, i)

    yield from rec(1, 0, 0)


def _family_1d(lo, hi, label: str) -> BoxFamily:
    return BoxFamily(1, tuple(Box((Interval.closed(a, b),)) for a, b in zip(lo, hi)), label)


@lru_cache(maxsize=None)
def _search_1d(n: int, k: int) -> tuple[int, tuple, tuple]:
    best, best_lo, best_hi = -1, (), ()
    for pairs, lo, hi in iter_order_types_1d(n, k):
        if pairs > best:
            best, best_lo, best_hi = pairs, lo, hi
    return best, best_lo, best_hi


def search_extremal_1d(n: int, k: int) -> tuple[int, BoxFamily]:
    """Maximum intersecting pairs among n intervals with no k+1 sharing a point."""
    _check_nk(n, k)
    if n > MAX_N_1D:
        raise LimitError(f"1-D search is limited to n <= {MAX_N_1D}, got n={n}")
    best, lo, hi = _search_1d(n, min(k, n))
    witness = _family_1d(lo, hi, f"extremal n={n} k={k} d=1")
    _revalidate(witness, best, k)
    return best, witness


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: t for t, p in enumerate(combinations(range(n), 2))}


@lru_cache(maxsize=None)
def _labelled_axis_graphs(n: int) -> tuple[tuple[int, tuple, tuple], ...]:
    """Distinct labelled interval graphs on n vertices as (edge mask, lo, hi).

    Each graph is reported with its first realisation in enumeration order:
    canonical order types first, relabelled by permutations in lexicographic order.
    """
    index = _pair_index(n)
    seen: dict[int, tuple[tuple, tuple]] = {}
    for _, lo, hi in iter_order_types_1d(n, n):
        for perm in permutations(range(n)):
            plo = [0] * n
            phi = [0] * n
            for src, dst in enumerate(perm):
                plo[dst], phi[dst] = lo[src], hi[src]
            mask = 0
            for (i, j), t in index.items():
                if plo[i] < phi[j] and plo[j] < phi[i]:
                    mask |= 1 << t
            if mask not in seen:
                seen[mask] = (tuple(plo), tuple(phi))
    return tuple((mask, lo, hi) for mask, (lo, hi) in seen.items())


@lru_cache(maxsize=None)
def _clique_numbers(n: int) -> tuple[int, ...]:
    """Clique number of every graph on n labelled vertices, indexed by edge mask."""
    index = _pair_index(n)
    subsets = []
    for size in range(1, n + 1):
        for sub in combinations(range(n), size):
            need = 0
            for p in combinations(sub, 2):
                need |= 1 << index[p]
            subsets.append((size, need))
    table = []
    for mask in range(1 << len(index)):
        table.append(max(size for size, need in subsets if mask & need == need))
    return tuple(table)


def search_extremal_d(n: int, k: int, d: int) -> tuple[int, BoxFamily]:
    """Best pair count found over all per-axis order-type combinations.

    Boxes meet iff every axis projection meets, so the intersection graph is the
    edge-wise AND of the per-axis interval graphs, and by the Helly property of
    boxes the depth is that graph's clique number. The witness is re-checked
    geometrically afterwards.
    """
    _check_nk(n, k)
    if d not in SEARCH_DIMS:
        raise LimitError(f"box search supports d in {SEARCH_DIMS}, got d={d}")
    if n > MAX_N_D:
        raise LimitError(f"box search is limited to n <= {MAX_N_D}, got n={n}")
    graphs = _labelled_axis_graphs(n)
    omega = _clique_numbers(n)
    best, best_combo = -1, None
    for combo in product(range(len(graphs)), repeat=d):
        mask = -1
        for g in combo:
            mask &= graphs[g][0]
        if omega[mask] > k:
            continue
        pairs = mask.bit_count()
        if pairs > best:
            best, best_combo = pairs, combo
    boxes = []
    for i in range(n):
        boxes.append(Box(tuple(Interval.closed(graphs[g][1][i], graphs[g][2][i]) for g in best_combo)))
    witness = BoxFamily(d, tuple(boxes), f"extremal n={n} k={k} d={d}")
    _revalidate(witness, best, k)
    return best, witness


def _revalidate(witness: BoxFamily, pairs: int, k: int) -> None:
    if count_pairs_naive(witness).pairs != pairs or max_depth(witness).depth > k:
        raise AssertionError(f"search witness failed revalidation: {witness}")
