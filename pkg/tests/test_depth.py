from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from boxhelly.constructions import gen_random_family, gen_staircase_family, gen_turan_family
from boxhelly.depth import (
    LimitError,
    max_clique_bruteforce,
    max_depth,
    max_depth_1d,
    validate_witness,
)
from boxhelly.geometry import (
    Box,
    BoxFamily,
    EmptyFamilyError,
    Endpoint,
    Interval,
    RPoint,
    boxes_intersect,
    point_in_box,
)

from conftest import families, grid_depth


def clique_by_subsets(f):
    """Largest pairwise-intersecting subset, by trying every subset from the top."""
    for size in range(len(f), 0, -1):
        for sub in combinations(f.boxes, size):
            if all(boxes_intersect(a, b) for a, b in combinations(sub, 2)):
                return size
    return 0


def test_max_depth_examples():
    w = max_depth(gen_turan_family(6, 3))
    assert w.depth == 3
    assert max_depth(gen_staircase_family(5, 2)).depth == 2
    disjoint = BoxFamily(2, tuple(Box.open((i, i + 1), (i, i + 1)) for i in range(5)))
    assert max_depth(disjoint).depth == 1
    with pytest.raises(EmptyFamilyError):
        max_depth(BoxFamily(2))


def test_max_depth_1d_examples():
    w = max_depth_1d(gen_staircase_family(7, 3).projection(0))
    assert w.depth == 3
    w = max_depth_1d([Interval.open(2, 5)])
    assert w.depth == 1 and Interval.open(2, 5).contains(w.point.coords[0])
    with pytest.raises(EmptyFamilyError):
        max_depth_1d([])


def test_open_touching_is_not_deep():
    f = BoxFamily(1, (Box.open((0, 1)), Box.open((1, 2)), Box.closed((1, 1))))
    w = max_depth(f)
    # the degenerate [1,1] meets neither open neighbour
    assert w.depth == 1
    f = BoxFamily(1, (Box.closed((0, 1)), Box.closed((1, 2)), Box.closed((1, 1))))
    assert max_depth(f).depth == 3
    assert max_depth(f).point == RPoint((1,))


def test_tie_break_is_first_in_scan_order():
    f = BoxFamily(2, (Box.open((0, 1), (0, 1)), Box.open((5, 6), (5, 6))))
    w = max_depth(f)
    assert w.members == (0,) and w.point == RPoint((Fraction(1, 2), Fraction(1, 2)))


@pytest.mark.parametrize(
    "family, expected",
    [
        (gen_turan_family(6, 2), 2),
        (BoxFamily(2, (Box.closed((0, 1), (0, 1)),) * 5), 5),
        (gen_staircase_family(6, 3), 3),
    ],
)
def test_clique_examples(family, expected):
    assert clique_by_subsets(family) == expected
    assert max_clique_bruteforce(family) == expected


def test_clique_limit():
    with pytest.raises(LimitError):
        max_clique_bruteforce(gen_staircase_family(17, 2))


@given(families(min_n=1, max_n=6))
@settings(max_examples=50, deadline=None)
def test_depth_matches_grid_scan_and_witness_validates(f):
    w = max_depth(f)
    assert w.depth == grid_depth(f)
    assert validate_witness(f, w)


@given(families(min_n=1, max_n=10))
def test_helly_equivalence(f):
    assert max_depth(f).depth == max_clique_bruteforce(f) == clique_by_subsets(f)


@given(families(dim=1, min_n=1, max_n=12))
def test_1d_agreement(f):
    a = max_depth_1d(f.projection(0))
    b = max_depth(f)
    assert a.depth == b.depth
    assert validate_witness(f, a) and validate_witness(f, b)


@pytest.mark.parametrize("seed", range(10))
def test_1d_sweep_matches_grid_scan_random(seed):
    f = gen_random_family(100, 1, seed, side_min=Fraction(1, 50), side_max=Fraction(1, 4), closed=seed % 2 == 1)
    assert max_depth_1d(f.projection(0)).depth == grid_depth(f)


@given(families(min_n=1, max_n=6), families(min_n=1, max_n=1))
@settings(max_examples=60)
def test_monotone_under_append(f, g):
    if f.dim != g.dim:
        return
    assert max_depth(f.extended(*g.boxes)).depth >= max_depth(f).depth


@given(families(min_n=1, max_n=8))
def test_scaling_keeps_depth_and_maps_witness(f):
    scales, shifts = (3, 1, 5), (Fraction(1, 3), -2, 7)

    def rescale_iv(iv, s, t):
        return Interval(Endpoint(iv.lo.value * s + t, iv.lo.open), Endpoint(iv.hi.value * s + t, iv.hi.open))

    g = BoxFamily(f.dim, tuple(Box(tuple(rescale_iv(iv, s, t) for iv, s, t in zip(b.intervals, scales, shifts))) for b in f))
    w = max_depth(f)
    assert max_depth(g).depth == w.depth
    moved = RPoint(tuple(x * s + t for x, s, t in zip(w.point.coords, scales, shifts)))
    assert sum(point_in_box(moved, b) for b in g) == w.depth
