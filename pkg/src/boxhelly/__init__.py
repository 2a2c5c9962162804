"""Exact analytics for finite families of axis-parallel boxes in R^d."""

__version__ = "0.1.0"

from .analytics import PairReport, count_pairs, count_pairs_naive, count_pairs_sweep_1d, edge_list
from .bounds import (
    BoundsReport,
    HypothesisError,
    Verdict,
    bounds_report,
    corollary_size,
    example_threshold,
    kalai_beta,
    t_exact_1d,
    t_upper_bound,
    thm4_size,
    turan_edges,
    verify_corollary,
    verify_turan_bound,
)
from .constructions import gen_random_family, gen_staircase_family, gen_turan_family
from .depth import DepthWitness, LimitError, max_clique_bruteforce, max_depth, max_depth_1d
from .extraction import extract, extract_deep_point, extraction_gap
from .geometry import (
    Box,
    BoxFamily,
    DimensionError,
    EmptyFamilyError,
    Endpoint,
    Interval,
    RPoint,
    boxes_intersect,
    intersection_box,
    intervals_intersect,
    point_in_box,
)
from .search import search_extremal_1d, search_extremal_d
