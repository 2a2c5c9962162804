"""Maximum point depth of a box family, with a witness point.

Boxes have Helly number 2, so the maximum depth equals the clique number of
the intersection graph; :func:`max_clique_bruteforce` is kept as an
independent oracle for that fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import (
    BoxFamily,
    EmptyFamilyError,
    Interval,
    RPoint,
    boxes_intersect,
    compress,
    compress_axis,
    point_in_box,
)

CLIQUE_LIMIT = 16


class LimitError(ValueError):
    """Input exceeds the size an exhaustive routine is allowed to handle."""


@dataclass(frozen=True)
class DepthWitness:
    point: RPoint
    depth: int
    members: tuple[int, ...]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _start_atom_masks(starts: Sequence[int], ends: Sequence[int]) -> list[tuple[int, int]]:
    """(atom, membership bitset) for every atom at which some interval begins.

    A deepest point can always be slid down an axis until it reaches the start
    atom of one of its boxes without losing any box, so these atoms suffice.
    The lexicographically first deepest atom combination also lies on them.
    """
    out = []
    for atom in sorted(set(starts)):
        mask = 0
        for i, (s, e) in enumerate(zip(starts, ends)):
            if s <= atom <= e:
                mask |= 1 << i
        out.append((atom, mask))
    return out


def max_depth(f: BoxFamily) -> DepthWitness:
    """Deepest point of ``f`` by a pruned scan over per-axis arrangement atoms.

    Atom combinations are visited in lexicographic order and only strict
    improvements are kept, so ties resolve to the first combination.
    """
    if len(f) == 0:
        raise EmptyFamilyError("max depth of an empty family is undefined")
    cf = compress(f)
    per_axis = [_start_atom_masks(ax.starts, ax.ends) for ax in cf.axes]
    d = f.dim
    n = len(f)
    best = 0
    best_atoms: list[int] = []
    best_mask = 0
    chosen = [0] * d

    def scan(axis: int, cur: int) -> bool:
        nonlocal best, best_atoms, best_mask
        for atom, mask in per_axis[axis]:
            m = cur & mask
            c = m.bit_count()
            if c <= best:
                continue
            chosen[axis] = atom
            if axis == d - 1:
                best, best_atoms, best_mask = c, chosen.copy(), m
                if best == n:
                    return True
            elif scan(axis + 1, m):
                return True
        return False

    scan(0, (1 << n) - 1)
    return DepthWitness(cf.point(best_atoms), best, _bits(best_mask))


def max_depth_1d(intervals: Sequence[Interval]) -> DepthWitness:
    """Deepest point of a list of intervals by an endpoint-event sweep.

    Returns the first atom (left to right) at which the active count peaks.
    """
    intervals = list(intervals)
    if not intervals:
        raise EmptyFamilyError("max depth of an empty interval list is undefined")
    ax = compress_axis(intervals)
    delta = [0] * (ax.n_atoms + 1)
    for s, e in zip(ax.starts, ax.ends):
        delta[s] += 1
        delta[e + 1] -= 1
    best, best_atom, active = 0, 0, 0
    for atom in range(ax.n_atoms):
        active += delta[atom]
        if active > best:
            best, best_atom = active, atom
    members = tuple(i for i, (s, e) in enumerate(zip(ax.starts, ax.ends)) if s <= best_atom <= e)
    return DepthWitness(RPoint((ax.representative(best_atom),)), best, members)


def members_at(f: BoxFamily, point: RPoint) -> tuple[int, ...]:
    return tuple(i for i, b in enumerate(f.boxes) if point_in_box(point, b))


def validate_witness(f: BoxFamily, w: DepthWitness) -> bool:
    """Re-test every box against the witness point."""
    members = members_at(f, w.point)
    return members == tuple(w.members) and len(members) == w.depth


def max_clique_bruteforce(f: BoxFamily, limit: int = CLIQUE_LIMIT) -> int:
    """Clique number of the intersection graph by branch and bound."""
    n = len(f)
    if n > limit:
        raise LimitError(f"family has {n} boxes, clique search is limited to {limit}")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if boxes_intersect(f.boxes[i], f.boxes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, (1 << n) - 1)
    return best
