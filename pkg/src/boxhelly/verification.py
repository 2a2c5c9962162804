"""Corpus sweeps: run every applicable theorem check over many families."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .analytics import count_pairs
from .bounds import Verdict, verify_corollary, verify_turan_bound
from .constructions import gen_random_family, gen_staircase_family, gen_turan_family
from .depth import max_depth
from .extraction import GuaranteeCheck, check_guarantee, extract
from .geometry import BoxFamily

EPS_GRID = (Fraction(1, 100), Fraction(1, 20), Fraction(1, 8), Fraction(1, 4))

# (side_min, side_max) as fractions of the extent; from sparse to nearly full
REGIMES = (
    (Fraction(1, 100), Fraction(1, 10)),
    (Fraction(1, 10), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1)),
    (Fraction(4, 5), Fraction(1)),
    (Fraction(19, 20), Fraction(1)),
)
DENSE_REGIMES = REGIMES[2:]


def worker_count() -> int:
    """Worker cap from BOXHELLY_THREADS (default 1)."""
    raw = os.environ.get("BOXHELLY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def random_corpus(
    count: int,
    seed: int,
    *,
    max_n: int = 200,
    dims: Sequence[int] = (1, 2, 3),
    regimes: Sequence[tuple[Fraction, Fraction]] = REGIMES,
) -> Iterator[BoxFamily]:
    """``count`` seeded random families with varied size, dimension and density."""
    meta = random.Random(seed)
    for _ in range(count):
        n = meta.randint(1, max_n)
        d = dims[meta.randrange(len(dims))]
        side_min, side_max = regimes[meta.randrange(len(regimes))]
        closed = meta.getrandbits(1) == 1
        yield gen_random_family(
            n, d, meta.getrandbits(32), side_min=side_min, side_max=side_max, closed=closed
        )


def construction_corpus(max_n: int = 60, dims: Iterable[int] = (1, 2, 3, 4)) -> Iterator[BoxFamily]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield gen_staircase_family(n, k)
    for d in dims:
        for n in range(d, max_n + 1):
            yield gen_turan_family(n, d)


@dataclass(frozen=True)
class FamilyCheck:
    label: Optional[str]
    n: int
    d: int
    pairs: int
    alpha: Optional[Fraction]
    depth: int
    theorem1: Verdict
    corollary: dict[Fraction, Verdict] = field(default_factory=dict)
    extracted: Optional[int] = None
    theorem4: Optional[GuaranteeCheck] = None

    @property
    def failures(self) -> list[str]:
        out = []
        if self.theorem1 is Verdict.FAIL:
            out.append("theorem1")
        out += [f"corollary eps={e}" for e, v in self.corollary.items() if v is Verdict.FAIL]
        t4 = self.theorem4
        if t4 is not None and t4.hypothesis and not (t4.guarantee and t4.axis_ok):
            out.append("theorem4")
        if self.extracted is not None and self.extracted > self.depth:
            out.append("extraction dominance")
        return out


def check_family(f: BoxFamily, eps_grid: Sequence[Fraction] = EPS_GRID) -> FamilyCheck:
    rep = count_pairs(f)
    n = len(f)
    depth = max_depth(f).depth if n else 0
    t1 = verify_turan_bound(f, depth, pairs=rep.pairs, depth=depth)
    cor = {eps: verify_corollary(f, eps, pairs=rep.pairs, depth=depth) for eps in eps_grid}
    extracted = t4 = None
    if n:
        ex = extract(f)
        extracted = ex.witness.depth
        t4 = check_guarantee(f, ex, alpha=rep.alpha)
    return FamilyCheck(f.label, n, f.dim, rep.pairs, rep.alpha, depth, t1, cor, extracted, t4)


def run_checks(families: Iterable[BoxFamily], workers: Optional[int] = None) -> list[FamilyCheck]:
    """Check every family; results come back in input order regardless of ``workers``."""
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [check_family(f) for f in families]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check_family, families, chunksize=8))
