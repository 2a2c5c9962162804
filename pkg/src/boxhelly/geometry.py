"""Exact axis-parallel boxes: endpoints, intervals, boxes, families, points.

All coordinates are :class:`fractions.Fraction`. Boundary handling is decided
by open/closed flags, never by a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence, Union

Rational = Union[int, Fraction, str]


class DimensionError(ValueError):
    """Objects of different dimension were combined."""


class EmptyFamilyError(ValueError):
    """An operation that needs at least one box got none."""


def as_rational(x: Rational) -> Fraction:
    """Coerce an int, Fraction or rational/decimal string to an exact Fraction.

    Floats and bools are rejected: a float has usually lost the value the
    caller meant before it gets here.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"expected an exact rational, got {type(x).__name__} {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


@dataclass(frozen=True)
class Endpoint:
    value: Fraction
    open: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_rational(self.value))


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint

    def __post_init__(self) -> None:
        if self.lo.value > self.hi.value or (
            self.lo.value == self.hi.value and (self.lo.open or self.hi.open)
        ):
            raise ValueError(f"empty interval {self}")

    @classmethod
    def make(cls, lo: Rational, hi: Rational, lo_open: bool = False, hi_open: bool = False) -> "Interval":
        return cls(Endpoint(lo, lo_open), Endpoint(hi, hi_open))

    @classmethod
    def open(cls, lo: Rational, hi: Rational) -> "Interval":
        return cls.make(lo, hi, True, True)

    @classmethod
    def closed(cls, lo: Rational, hi: Rational) -> "Interval":
        return cls.make(lo, hi, False, False)

    def contains(self, x: Fraction) -> bool:
        lo, hi = self.lo, self.hi
        if x < lo.value or x > hi.value:
            return False
        if x == lo.value and lo.open:
            return False
        if x == hi.value and hi.open:
            return False
        return True

    def __str__(self) -> str:
        left = "(" if self.lo.open else "["
        right = ")" if self.hi.open else "]"
        return f"{left}{self.lo.value}, {self.hi.value}{right}"


@dataclass(frozen=True)
class Box:
    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not self.intervals:
            raise ValueError("a box needs at least one axis")

    @property
    def dim(self) -> int:
        return len(self.intervals)

    @classmethod
    def open(cls, *bounds: tuple[Rational, Rational]) -> "Box":
        """``Box.open((0, 1), (2, 3))`` is the open box (0,1)x(2,3)."""
        return cls(tuple(Interval.open(a, b) for a, b in bounds))

    @classmethod
    def closed(cls, *bounds: tuple[Rational, Rational]) -> "Box":
        return cls(tuple(Interval.closed(a, b) for a, b in bounds))

    def __str__(self) -> str:
        return " x ".join(str(iv) for iv in self.intervals)


@dataclass(frozen=True)
class BoxFamily:
    dim: int
    boxes: tuple[Box, ...] = ()
    label: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", tuple(self.boxes))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        for i, b in enumerate(self.boxes):
            if b.dim != self.dim:
                raise DimensionError(f"box {i} has dimension {b.dim}, family has {self.dim}")

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __getitem__(self, i: int) -> Box:
        return self.boxes[i]

    def projection(self, axis: int) -> list[Interval]:
        return [b.intervals[axis] for b in self.boxes]

    def extended(self, *boxes: Box) -> "BoxFamily":
        return BoxFamily(self.dim, self.boxes + tuple(boxes), self.label)


@dataclass(frozen=True)
class RPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)


def intervals_intersect(a: Interval, b: Interval) -> bool:
    # overlap is (max lo, min hi); a touching boundary counts only if both sides are closed
    if a.lo.value > b.lo.value or (a.lo.value == b.lo.value and a.lo.open):
        lo = a.lo
    else:
        lo = b.lo
    if a.hi.value < b.hi.value or (a.hi.value == b.hi.value and a.hi.open):
        hi = a.hi
    else:
        hi = b.hi
    if lo.value < hi.value:
        return True
    return lo.value == hi.value and not lo.open and not hi.open


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"dimension mismatch: {a} vs {b}")


def boxes_intersect(a: Box, b: Box) -> bool:
    """True iff the two boxes share a point, i.e. every axis projection overlaps."""
    _check_dims(a.dim, b.dim)
    return all(intervals_intersect(x, y) for x, y in zip(a.intervals, b.intervals))


def point_in_box(p: RPoint, b: Box) -> bool:
    _check_dims(p.dim, b.dim)
    return all(iv.contains(x) for x, iv in zip(p.coords, b.intervals))


def intersection_box(subfamily: Sequence[Box]) -> Optional[Box]:
    """Common intersection of ``subfamily`` as a box, or ``None`` if it is empty."""
    if not subfamily:
        raise EmptyFamilyError("intersection of an empty list of boxes is undefined")
    dim = subfamily[0].dim
    for b in subfamily:
        _check_dims(dim, b.dim)
    axes = []
    for axis in range(dim):
        lo = max((b.intervals[axis].lo for b in subfamily), key=lambda e: (e.value, e.open))
        hi = min((b.intervals[axis].hi for b in subfamily), key=lambda e: (e.value, not e.open))
        if lo.value > hi.value or (lo.value == hi.value and (lo.open or hi.open)):
            return None
        axes.append(Interval(lo, hi))
    return Box(tuple(axes))


def interior_point(b: Box) -> RPoint:
    """A point of ``b``: the centre, which is inside even when boundaries are open."""
    return RPoint(tuple((iv.lo.value + iv.hi.value) / 2 for iv in b.intervals))


# --- coordinate compression -------------------------------------------------
#
# On one axis with sorted distinct endpoint values v_0 < ... < v_{m-1} the line
# splits into 2m+1 atoms, numbered left to right:
#   0 -> (-inf, v_0),  2t+1 -> {v_t},  2t+2 -> (v_t, v_{t+1}),  2m -> (v_{m-1}, inf)
# Every interval covers a contiguous run of atoms [start, end].


@dataclass(frozen=True)
class AxisAtoms:
    values: tuple[Fraction, ...]
    starts: tuple[int, ...]
    ends: tuple[int, ...]

    @property
    def n_atoms(self) -> int:
        return 2 * len(self.values) + 1

    def representative(self, atom: int) -> Fraction:
        vals = self.values
        if atom % 2 == 1:
            return vals[atom // 2]
        t = atom // 2
        if t == 0:
            return vals[0] - 1
        if t == len(vals):
            return vals[-1] + 1
        return (vals[t - 1] + vals[t]) / 2


def compress_axis(intervals: Iterable[Interval]) -> AxisAtoms:
    intervals = list(intervals)
    # exact integer keys over a common denominator; far cheaper than Fraction comparisons
    dens = {iv.lo.value.denominator for iv in intervals} | {iv.hi.value.denominator for iv in intervals}
    scale = lcm(*dens) if dens else 1
    lo_keys = [iv.lo.value.numerator * (scale // iv.lo.value.denominator) for iv in intervals]
    hi_keys = [iv.hi.value.numerator * (scale // iv.hi.value.denominator) for iv in intervals]
    keys = sorted(set(lo_keys) | set(hi_keys))
    rank = {key: t for t, key in enumerate(keys)}
    starts, ends = [], []
    for iv, a, b in zip(intervals, lo_keys, hi_keys):
        t, u = rank[a], rank[b]
        starts.append(2 * t + 2 if iv.lo.open else 2 * t + 1)
        ends.append(2 * u if iv.hi.open else 2 * u + 1)
    values = tuple(Fraction(key, scale) for key in keys)
    return AxisAtoms(values, tuple(starts), tuple(ends))


@dataclass(frozen=True)
class CompressedFamily:
    n: int
    axes: tuple[AxisAtoms, ...] = field(default=())

    def point(self, atoms: Sequence[int]) -> RPoint:
        return RPoint(tuple(ax.representative(a) for ax, a in zip(self.axes, atoms)))


def compress(f: BoxFamily) -> CompressedFamily:
    return CompressedFamily(len(f), tuple(compress_axis(f.projection(i)) for i in range(f.dim)))
