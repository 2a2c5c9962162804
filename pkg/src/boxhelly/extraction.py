"""Constructive deep point from per-axis stabbing.

Each axis is stabbed independently at its deepest 1-D point c_i; the result
is the point (c_1, ..., c_d) together with every box containing it. If an
alpha fraction of pairs intersect, each axis misses at most sqrt(1-alpha) n
boxes, so the point lies in at least (1 - d sqrt(1-alpha)) n of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .analytics import count_pairs
from .bounds import SLACK, required_count, thm4_size, thm4_threshold
from .depth import DepthWitness, max_depth, max_depth_1d
from .geometry import BoxFamily, EmptyFamilyError, RPoint


@dataclass(frozen=True)
class Extraction:
    witness: DepthWitness
    axis_stabs: tuple[DepthWitness, ...]
    miss_sets: tuple[tuple[int, ...], ...]

    @property
    def miss_sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.miss_sets)


def extract(f: BoxFamily) -> Extraction:
    n = len(f)
    if n == 0:
        raise EmptyFamilyError("cannot extract a point from an empty family")
    stabs = tuple(max_depth_1d(f.projection(axis)) for axis in range(f.dim))
    everyone = set(range(n))
    misses = tuple(tuple(sorted(everyone - set(s.members))) for s in stabs)
    missed = set().union(*misses)
    members = tuple(i for i in range(n) if i not in missed)
    point = RPoint(tuple(s.point.coords[0] for s in stabs))
    return Extraction(DepthWitness(point, len(members), members), stabs, misses)


def extract_deep_point(f: BoxFamily) -> DepthWitness:
    return extract(f).witness


def extraction_gap(f: BoxFamily) -> tuple[int, int]:
    """(depth of the constructive point, true maximum depth)."""
    return extract(f).witness.depth, max_depth(f).depth


@dataclass(frozen=True)
class GuaranteeCheck:
    hypothesis: bool
    required: Optional[int] = None
    guarantee: Optional[bool] = None
    axis_bound: Optional[float] = None
    axis_ok: Optional[bool] = None


def check_guarantee(f: BoxFamily, ex: Optional[Extraction] = None, alpha=None) -> GuaranteeCheck:
    """Compare an extraction against the deep-point lower bound for the measured alpha.

    With alpha at or below 1 - 1/d^2 the bound says nothing and only
    ``hypothesis=False`` is reported.
    """
    n, d = len(f), f.dim
    if alpha is None:
        alpha = count_pairs(f).alpha
    if alpha is None or not alpha > thm4_threshold(d):
        return GuaranteeCheck(False)
    if ex is None:
        ex = extract(f)
    required = required_count(thm4_size(n, d, alpha))
    axis_bound = math.sqrt(1 - alpha) * n + SLACK * n
    return GuaranteeCheck(
        True,
        required=required,
        guarantee=ex.witness.depth >= required,
        axis_bound=axis_bound,
        axis_ok=all(size <= axis_bound for size in ex.miss_sizes),
    )
