"""``boxhelly`` command line: gen, analyze, extract, verify, search, corpus.

Exit codes: 0 success, 1 a theorem check FAILED (or an I/O error), 2 usage,
parse, hypothesis or size-limit errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .analytics import count_pairs, degree_histogram, edge_list
from .bounds import BoundsReport, HypothesisError, Verdict, bounds_report, pair_bound_for, t_exact_1d
from .constructions import gen_random_family, gen_staircase_family, gen_turan_family
from .depth import max_depth
from .extraction import check_guarantee, extract
from .geometry import BoxFamily
from .search import search_extremal_1d, search_extremal_d
from .serialize import dumps_family, family_to_dict, rational_str, read_family
from .verification import EPS_GRID, random_corpus, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class TheoremFailure(Exception):
    """A theorem verdict came out FAIL; carries the already-rendered report."""

    def __init__(self, text: str, message: str):
        super().__init__(message)
        self.text = text


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return rational_str(x)
    if isinstance(x, Verdict):
        return x.value
    if isinstance(x, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _flatten(prefix: str, x: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(x, dict) and x and not prefix.endswith("family"):
        for k, v in x.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(x, (list, dict)):
        rows.append((prefix, json.dumps(x, separators=(",", ":"))))
    elif x is None:
        rows.append((prefix, ""))
    else:
        rows.append((prefix, str(x).lower() if isinstance(x, bool) else str(x)))


def render(report: dict[str, Any], fmt: str) -> str:
    data = _jsonable(report)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    rows: list[tuple[str, str]] = []
    _flatten("", data, rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in rows)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _rational_arg(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {s!r}")


def _witness_dict(w) -> dict[str, Any]:
    return {"point": list(w.point.coords), "depth": w.depth, "members": list(w.members)}


# --- subcommands --------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "turan":
        f = gen_turan_family(args.n, args.d)
    elif args.kind == "staircase":
        f = gen_staircase_family(args.n, args.k)
    else:
        f = gen_random_family(
            args.n,
            args.d,
            args.seed,
            extent=args.extent,
            side_min=args.side_min,
            side_max=args.side_max,
            closed=args.closed,
        )
    _emit(dumps_family(f), args.output)
    return EXIT_OK


def analyze_report(f: BoxFamily, with_edges: bool = False) -> dict[str, Any]:
    rep = count_pairs(f)
    report: dict[str, Any] = {
        "label": f.label,
        "n": rep.n,
        "d": f.dim,
        "pairs": rep.pairs,
        "alpha": rep.alpha,
        "degree_histogram": degree_histogram(rep),
    }
    if len(f):
        w = max_depth(f)
        report.update(max_depth=w.depth, witness_point=list(w.point.coords), members=list(w.members))
    else:
        report.update(max_depth=0, witness_point=None, members=[])
    if with_edges:
        report["edges"] = [list(e) for e in edge_list(f)]
    return report


def cmd_analyze(args) -> int:
    f = read_family(args.input)
    if args.edges_only:
        edges = edge_list(f)
        if args.format == "json":
            text = json.dumps([list(e) for e in edges]) + "\n"
        else:
            text = "".join(f"{i} {j}\n" for i, j in edges)
        _emit(text, args.output)
        return EXIT_OK
    _emit(render(analyze_report(f, args.edges), args.format), args.output)
    return EXIT_OK


def extract_report(f: BoxFamily) -> dict[str, Any]:
    ex = extract(f)
    rep = count_pairs(f)
    g = check_guarantee(f, ex, alpha=rep.alpha)
    return {
        "label": f.label,
        "n": len(f),
        "d": f.dim,
        "alpha": rep.alpha,
        "point": list(ex.witness.point.coords),
        "extracted_depth": ex.witness.depth,
        "optimal_depth": max_depth(f).depth,
        "members": list(ex.witness.members),
        "axis_miss_sizes": list(ex.miss_sizes),
        "hypothesis": g.hypothesis,
        "required_depth": g.required,
        "guarantee": g.guarantee,
        "axis_miss_bound": g.axis_bound,
        "axis_bound_ok": g.axis_ok,
    }


def cmd_extract(args) -> int:
    f = read_family(args.input)
    if not len(f):
        raise ValueError("cannot extract from an empty family")
    report = extract_report(f)
    text = render(report, args.format)
    if report["hypothesis"] and not (report["guarantee"] and report["axis_bound_ok"]):
        raise TheoremFailure(text, f"deep-point guarantee FAILED for {args.input}")
    _emit(text, args.output)
    return EXIT_OK


def bounds_dict(b: BoundsReport) -> dict[str, Any]:
    return {
        "n": b.n,
        "k": b.k,
        "d": b.d,
        "pairs": b.pairs,
        "depth": b.depth,
        "alpha": b.alpha,
        "eps": b.eps,
        "t_upper": b.t_upper,
        "t_exact_1d": b.t_exact_1d,
        "kalai_beta": b.kalai_beta,
        "corollary_size": b.corollary_size,
        "thm4_size": b.thm4_size,
        "example_threshold": b.example_threshold,
        "verdicts": dict(b.verdicts),
    }


def cmd_verify(args) -> int:
    f = read_family(args.input)
    b = bounds_report(f, k=args.k, eps=args.eps)
    text = render(bounds_dict(b), args.format)
    if b.failed:
        failed = [name for name, v in b.verdicts.items() if v is Verdict.FAIL]
        raise TheoremFailure(text, f"FAIL ({', '.join(failed)}) on family file {args.input}")
    _emit(text, args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    n, k, d = args.n, args.k, args.d
    if d == 1:
        best, witness = search_extremal_1d(n, k)
    else:
        best, witness = search_extremal_d(n, k, d)
    report: dict[str, Any] = {"n": n, "k": k, "d": d, "max_pairs": best}
    failed = False
    if d == 1:
        expected = t_exact_1d(n, min(k, n))
        report["t_exact_1d"] = expected
        report["equality"] = Verdict.PASS if best == expected else Verdict.FAIL
        failed = best != expected
    bound = pair_bound_for(n, k, d)
    report["t_upper"] = bound
    if bound is not None:
        report["below_upper_bound"] = Verdict.PASS if best < bound else Verdict.FAIL
        failed = failed or best >= bound
    report["witness_family"] = family_to_dict(witness)
    text = render(report, args.format)
    if failed:
        raise TheoremFailure(text, f"search result contradicts a bound for n={n} k={k} d={d}")
    _emit(text, args.output)
    return EXIT_OK


def cmd_corpus(args) -> int:
    dims = tuple(int(x) for x in args.dims.split(","))
    families = random_corpus(args.count, args.seed, max_n=args.max_n, dims=dims)
    checks = run_checks(families)
    failures = [(c.label, c.failures) for c in checks if c.failures]
    report = {
        "count": len(checks),
        "seed": args.seed,
        "theorem1_checked": sum(c.theorem1 is Verdict.PASS for c in checks),
        "corollary_checked": sum(
            v is not Verdict.VACUOUS for c in checks for v in c.corollary.values()
        ),
        "eps_grid": list(EPS_GRID),
        "theorem4_checked": sum(bool(c.theorem4 and c.theorem4.hypothesis) for c in checks),
        "extraction_optimal": sum(c.extracted == c.depth for c in checks if c.n),
        "failures": [{"label": label, "checks": fails} for label, fails in failures],
    }
    text = render(report, args.format)
    if failures:
        raise TheoremFailure(text, f"{len(failures)} corpus families FAILED a theorem check")
    _emit(text, args.output)
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def _add_output(p: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxhelly", description="Exact analytics for families of axis-parallel boxes."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    p = gsub.add_parser("turan", help="open boxes with Turan-graph intersection pattern")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_output(p, formats=False)
    p = gsub.add_parser("staircase", help="open intervals (i, i+k), i = 1..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_output(p, formats=False)
    p = gsub.add_parser("random", help="seeded random boxes on a dyadic grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extent", type=_rational_arg, default=Fraction(1))
    p.add_argument("--side-min", type=_rational_arg, default=Fraction(1, 10))
    p.add_argument("--side-max", type=_rational_arg, default=Fraction(1, 2))
    p.add_argument("--closed", action="store_true", help="closed boxes (default open)")
    _add_output(p, formats=False)
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="pairs, alpha, degrees, max depth")
    p.add_argument("input")
    p.add_argument("--edges", action="store_true", help="include the edge list in the report")
    p.add_argument(
        "--edges-only", action="store_true", help="emit only the edge list (JSON array, or 'i j' lines)"
    )
    _add_output(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extract", help="constructive deep point by per-axis stabbing")
    p.add_argument("input")
    _add_output(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="evaluate every bound and theorem verdict")
    p.add_argument("input")
    p.add_argument("--k", type=int, help="claimed depth bound (default: measured depth)")
    p.add_argument("--eps", type=_rational_arg, help="epsilon for the deep-subfamily corollary")
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive extremal search over small order types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("corpus", help="theorem checks over seeded random families")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--dims", default="1,2,3", help="comma-separated dimensions")
    _add_output(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremFailure as exc:
        _emit(exc.text, getattr(args, "output", None))
        print(f"boxhelly: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except HypothesisError as exc:
        print(f"boxhelly: hypothesis error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"boxhelly: I/O error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"boxhelly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
