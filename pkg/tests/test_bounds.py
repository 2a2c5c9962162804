from fractions import Fraction
from itertools import combinations

import mpmath
import pytest

from boxhelly.bounds import (
    HypothesisError,
    Verdict,
    bounds_report,
    corollary_size,
    effective_k,
    example_threshold,
    kalai_beta,
    required_count,
    t_exact_1d,
    t_upper_bound,
    thm4_size,
    turan_edges,
    verify_corollary,
    verify_turan_bound,
)
from boxhelly.constructions import class_sizes, gen_staircase_family, gen_turan_family
from boxhelly.geometry import Box, BoxFamily

mpmath.mp.dps = 50


def multipartite_edges(n, m):
    return sum(a * b for a, b in combinations(class_sizes(n, m), 2))


def identical(n, d):
    return BoxFamily(d, (Box.closed(*[(0, 1)] * d),) * n)


def test_turan_edges_examples():
    assert turan_edges(6, 3) == 12
    assert turan_edges(7, 3) == 16
    assert turan_edges(9, 1) == 0
    with pytest.raises(ValueError):
        turan_edges(3, 4)


def test_turan_edges_against_part_products_and_limit():
    for n in range(1, 201):
        for m in range(1, n + 1):
            t = turan_edges(n, m)
            assert t == multipartite_edges(n, m)
            cap = (1 - Fraction(1, m)) * n * n / 2
            assert t <= cap
            assert (t == cap) == (n % m == 0)


def test_t_upper_bound_examples():
    assert t_upper_bound(6, 2, 2) == 18
    assert t_upper_bound(5, 2, 1) == Fraction(25, 2)
    with pytest.raises(ValueError):
        t_upper_bound(5, 1, 2)
    with pytest.raises(ValueError):
        t_upper_bound(3, 4, 1)


def test_t_exact_1d_examples():
    assert t_exact_1d(5, 2) == 4
    assert t_exact_1d(7, 1) == 0
    assert t_exact_1d(4, 2) == 3
    with pytest.raises(ValueError):
        t_exact_1d(3, 0)


def test_bound_ordering_grid():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert t_exact_1d(n, k) < t_upper_bound(n, k, 1)
            for d in range(1, k + 1):
                assert turan_edges(n, d) < t_upper_bound(n, k, d)


def test_kalai_beta_examples_and_accuracy():
    assert kalai_beta(1, 3) == 1.0
    assert kalai_beta(Fraction(3, 4), 1) == pytest.approx(0.5, rel=1e-15)
    assert kalai_beta(1e-300, 2) > 0
    assert kalai_beta(1e-300, 2) == pytest.approx(1e-300 / 3, rel=1e-12)
    for alpha in ("1e-12", "1e-6", "0.001", "0.3", "0.5", "0.9", "0.999999"):
        for d in (1, 2, 3, 7):
            exact = 1 - mpmath.power(1 - mpmath.mpf(alpha), mpmath.mpf(1) / (d + 1))
            got = kalai_beta(Fraction(alpha), d)
            assert abs(got - float(exact)) <= 1e-12 * float(exact)
    with pytest.raises(ValueError):
        kalai_beta(0, 2)
    with pytest.raises(ValueError):
        kalai_beta(Fraction(3, 2), 2)


def test_kalai_beta_monotone():
    grid = [Fraction(i, 50) for i in range(1, 51)]
    for d in range(1, 6):
        vals = [kalai_beta(a, d) for a in grid]
        assert vals == sorted(vals) and len(set(vals)) == len(vals)
    for a in grid[:-1]:
        vals = [kalai_beta(a, d) for d in range(1, 6)]
        assert all(x > y for x, y in zip(vals, vals[1:]))


def test_corollary_size_examples():
    assert corollary_size(10, 2, Fraction(1, 4)) == 5
    n = 7
    # d n eps - d/2 + 1 with d=1, eps=1/(2n): 1/2 - 1/2 + 1
    assert corollary_size(n, 1, Fraction(1, 2 * n)) == 1
    with pytest.raises(ValueError):
        corollary_size(10, 2, 0)


def test_thm4_size_examples_and_accuracy():
    assert thm4_size(17, 3, 1) == 17
    assert thm4_size(100, 2, Fraction(99, 100)) == pytest.approx(80, rel=1e-12)
    assert thm4_size(40, 1, Fraction(3, 4)) == pytest.approx(20, rel=1e-12)
    for alpha in ("0.95", "0.99", "0.999"):
        exact = (1 - 2 * mpmath.sqrt(1 - mpmath.mpf(alpha))) * 100
        assert abs(thm4_size(100, 2, Fraction(alpha)) - float(exact)) <= 1e-12 * float(exact)
    with pytest.raises(ValueError):
        thm4_size(10, 2, Fraction(3, 4))


def test_example_threshold():
    assert example_threshold(1) == 0
    assert example_threshold(3) == Fraction(2, 3)


def test_required_count_is_conservative():
    assert required_count(3.0) == 3
    assert required_count(3.0000000000001) == 3
    assert required_count(3.2) == 4


def test_effective_k():
    assert effective_k(10, 1, 3) == 3
    assert effective_k(10, 12, 3) == 10
    assert effective_k(2, 1, 3) is None


def test_verify_turan_bound_examples():
    assert verify_turan_bound(gen_turan_family(12, 3), 3) is Verdict.PASS
    assert turan_edges(12, 3) == 48 and t_upper_bound(12, 3, 3) == 66
    assert verify_turan_bound(gen_staircase_family(10, 3), 3) is Verdict.PASS
    assert t_exact_1d(10, 3) == 17 and t_upper_bound(10, 3, 1) == 35
    with pytest.raises(HypothesisError):
        verify_turan_bound(gen_staircase_family(10, 3), 2)


def test_verify_corollary_examples():
    d, n = 2, 12
    # C(n,2) >= (1/2 - t) n^2 needs t >= 1/(2n)
    eps = Fraction(1, 2 * d) - Fraction(1, 2 * n)
    assert verify_corollary(identical(n, d), eps) is Verdict.PASS
    assert verify_corollary(identical(n, d), eps + Fraction(1, 10**6)) is Verdict.VACUOUS
    for eps in (Fraction(1, 100), Fraction(1, 20)):
        assert verify_corollary(gen_turan_family(12, 3), eps) is Verdict.VACUOUS
    with pytest.raises(ValueError):
        verify_corollary(identical(3, 1), 0)


def test_bounds_report_defaults_k_to_depth():
    b = bounds_report(gen_staircase_family(10, 3), eps=Fraction(1, 100))
    assert b.k == 3 and b.depth == 3 and b.pairs == 17
    assert b.t_upper == 35 and b.t_exact_1d == 17
    assert b.verdicts["theorem1_pairs_bound"] is Verdict.PASS
    assert not b.failed
    with pytest.raises(HypothesisError):
        bounds_report(gen_staircase_family(10, 3), k=1)
