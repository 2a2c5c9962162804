"""Closed-form fractional-Helly-type bounds for boxes, and verdicts against measured families.

Integer and rational bounds are exact. The two irrational bounds (``kalai_beta``
and ``thm4_size``) are floats; whenever one is compared with a measured count it
goes through :func:`required_count`, which only ever errs towards passing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .analytics import count_pairs
from .constructions import class_sizes
from .depth import max_depth
from .geometry import BoxFamily, Rational, as_rational

Real = Union[Rational, float]

SLACK = 1e-9


class HypothesisError(ValueError):
    """The caller's claim about the family (e.g. its depth bound k) is false."""


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


def _real(x: Real) -> Union[Fraction, float]:
    return float(x) if isinstance(x, float) else as_rational(x)


def turan_edges(n: int, m: int) -> int:
    """Edge count t(n, m) of the Turan graph T(n, m)."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")
    return comb(n, 2) - sum(comb(s, 2) for s in class_sizes(n, m))


def t_upper_bound(n: int, k: int, d: int) -> Fraction:
    """Strict upper bound on T(n,k,d): (d-1)/(2d) n^2 + (2k+d)/(2d) n."""
    if not n >= k >= d >= 1:
        raise ValueError(f"need n >= k >= d >= 1, got n={n}, k={k}, d={d}")
    return Fraction((d - 1) * n * n + (2 * k + d) * n, 2 * d)


def t_exact_1d(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return (k - 1) * n - comb(k, 2)


def example_threshold(d: int) -> Fraction:
    """Pair fraction 1 - 1/d at or below which no deep point is guaranteed."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return Fraction(d - 1, d)


def kalai_beta(alpha: Real, d: int) -> float:
    """1 - (1 - alpha)^(1/(d+1)), via expm1/log1p to keep relative accuracy near 0."""
    a = _real(alpha)
    if not 0 < a <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if a == 1:
        return 1.0
    return -math.expm1(math.log1p(-float(a)) / (d + 1))


def corollary_size(n: int, d: int, eps: Rational) -> Fraction:
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return d * n * eps - Fraction(d, 2) + 1


def thm4_threshold(d: int) -> Fraction:
    return 1 - Fraction(1, d * d)


def thm4_size(n: int, d: int, alpha: Real) -> float:
    """(1 - d sqrt(1 - alpha)) n, defined for alpha in (1 - 1/d^2, 1]."""
    a = _real(alpha)
    if not thm4_threshold(d) < a <= 1:
        raise ValueError(f"alpha must lie in (1 - 1/d^2, 1] = ({thm4_threshold(d)}, 1], got {alpha}")
    return (1 - d * math.sqrt(1 - a)) * n


def required_count(bound: float) -> int:
    """Smallest integer a measured count must reach to honour a float lower bound."""
    return math.ceil(bound - SLACK)


def effective_k(n: int, k: int, d: int) -> Optional[int]:
    """Depth parameter at which the pair bound is evaluated, or None if n < d.

    A family with no k+1 boxes sharing a point also has none for any larger k,
    and depth never exceeds n, so k is clamped into [d, n].
    """
    if n < d:
        return None
    return min(max(k, d), n)


def pair_bound_for(n: int, k: int, d: int) -> Optional[Fraction]:
    k_eff = effective_k(n, k, d)
    return None if k_eff is None else t_upper_bound(n, k_eff, d)


def verify_turan_bound(
    f: BoxFamily, k: int, *, pairs: Optional[int] = None, depth: Optional[int] = None
) -> Verdict:
    """Check measured pairs < t_upper_bound(n, k, d) for a family of depth <= k.

    ``pairs`` and ``depth`` may be passed in when already measured.
    """
    n, d = len(f), f.dim
    if n == 0:
        return Verdict.VACUOUS
    if depth is None:
        depth = max_depth(f).depth
    if depth > k:
        raise HypothesisError(f"family has depth {depth} > k = {k}")
    bound = pair_bound_for(n, k, d)
    if bound is None:
        return Verdict.VACUOUS
    if pairs is None:
        pairs = count_pairs(f).pairs
    return Verdict.PASS if pairs < bound else Verdict.FAIL


def corollary_hypothesis(n: int, d: int, pairs: int, eps: Rational) -> bool:
    return pairs >= (Fraction(d - 1, 2 * d) + as_rational(eps)) * n * n


def verify_corollary(
    f: BoxFamily, eps: Rational, *, pairs: Optional[int] = None, depth: Optional[int] = None
) -> Verdict:
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n, d = len(f), f.dim
    if pairs is None:
        pairs = count_pairs(f).pairs
    if n == 0 or not corollary_hypothesis(n, d, pairs, eps):
        return Verdict.VACUOUS
    if depth is None:
        depth = max_depth(f).depth
    return Verdict.PASS if depth >= corollary_size(n, d, eps) else Verdict.FAIL


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    d: int
    pairs: int
    depth: int
    alpha: Optional[Fraction]
    t_upper: Optional[Fraction]
    t_exact_1d: Optional[int]
    kalai_beta: Optional[float]
    corollary_size: Optional[Fraction]
    thm4_size: Optional[float]
    example_threshold: Fraction
    eps: Optional[Fraction] = None
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(v is Verdict.FAIL for v in self.verdicts.values())


def bounds_report(f: BoxFamily, k: Optional[int] = None, eps: Optional[Rational] = None) -> BoundsReport:
    """Evaluate every bound for ``f`` and the verdicts that apply to it.

    ``k`` defaults to the measured depth. A ``k`` below the measured depth
    raises :class:`HypothesisError`.
    """
    n, d = len(f), f.dim
    rep = count_pairs(f)
    depth = max_depth(f).depth if n else 0
    if k is None:
        k = depth
    if depth > k:
        raise HypothesisError(f"family has depth {depth} > k = {k}")
    eps_q = as_rational(eps) if eps is not None else None
    alpha = rep.alpha

    verdicts: dict[str, Verdict] = {}
    verdicts["theorem1_pairs_bound"] = verify_turan_bound(f, k, pairs=rep.pairs, depth=depth)
    if eps_q is not None:
        verdicts["corollary_deep_point"] = verify_corollary(f, eps_q, pairs=rep.pairs, depth=depth)
    t_exact = None
    if d == 1 and 1 <= k <= n:
        t_exact = t_exact_1d(n, k)
        verdicts["exact_1d_pairs"] = Verdict.PASS if rep.pairs <= t_exact else Verdict.FAIL
    thm4 = None
    if alpha is not None and alpha > thm4_threshold(d):
        thm4 = thm4_size(n, d, alpha)
        verdicts["theorem4_deep_point"] = Verdict.PASS if depth >= required_count(thm4) else Verdict.FAIL
    else:
        verdicts["theorem4_deep_point"] = Verdict.VACUOUS
    return BoundsReport(
        n=n,
        k=k,
        d=d,
        pairs=rep.pairs,
        depth=depth,
        alpha=alpha,
        t_upper=pair_bound_for(n, k, d) if n else None,
        t_exact_1d=t_exact,
        kalai_beta=kalai_beta(alpha, d) if alpha else None,
        corollary_size=corollary_size(n, d, eps_q) if eps_q is not None else None,
        thm4_size=thm4,
        example_threshold=example_threshold(d),
        eps=eps_q,
        verdicts=verdicts,
    )
