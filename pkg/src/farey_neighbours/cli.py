"""Command line front end: ``count``, ``plot-arcs``, ``witness`` and ``verify``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance
from . import bianchi as bz
from .quadratic import QuadField, class_group, class_index
from .series import REGIMES, count_series, parse_grid
from .svg import DEFAULT_HEIGHT, plot_arcs_svg

WITNESS_SCHEMA = "farey-neighbours/witness"
WITNESS_VERSION = 1
MAX_ABS_F = 97

DEFAULT_GRIDS = {
    "q": "10,100,1000,10000",
    "field": "1,1/2,1/4,1/8,1/16",
    "quat": "1,1/2,1/4",
    "symbols": "0,2,4,6,8,10",
    "symbols-rec": "0,2,4,6,8,10",
}
GRID_KIND = {"q": "int", "field": "fraction", "quat": "fraction",
             "symbols": "float", "symbols-rec": "float"}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _field(f: int) -> QuadField:
    if abs(f) > MAX_ABS_F:
        raise ValueError(f"|f| = {abs(f)} is outside the supported range 1..{MAX_ABS_F}")
    return QuadField(f)


def witness_document(f: int, search_bound: int = bz.DEFAULT_SEARCH_BOUND) -> dict:
    """One construction witness per ideal class, plus matching explicit families."""
    F = _field(f)
    h, _ = class_group(F)
    families = []
    for fam in ("ex1", "ex2", "ex3"):
        try:
            families.append(bz.example_family(F, fam))
        except ValueError:
            pass
    records = []
    for k, x in enumerate(bz.class_points(F)):
        w = bz.construct_k_farey(x, search_bound=search_bound)
        rec = {"class_index": k, "witness": w.to_dict(), "examples": []}
        for ex in families:
            if class_index(ex.alpha.ideal) == k:
                rec["examples"].append(ex.to_dict())
        records.append(rec)
    return {
        "schema": WITNESS_SCHEMA,
        "version": WITNESS_VERSION,
        "field": {"f": F.f, "D": F.D, "omega": F.omega_kind, "units": F.unit_count},
        "class_number": h,
        "basis": "coordinates are [x, y] for x + y*omega; matrices are row-major",
        "witnesses": records,
    }


def cmd_count(args) -> int:
    if args.format != "csv":
        raise ValueError("count writes csv")
    grid = parse_grid(args.grid or DEFAULT_GRIDS[args.regime], GRID_KIND[args.regime])
    series = count_series(args.regime, grid, f=args.f, level=args.level, threads=args.threads)
    _emit(series.to_csv(), args.out)
    return 0


def cmd_plot_arcs(args) -> int:
    if args.format != "svg":
        raise ValueError("plot-arcs writes svg")
    _emit(plot_arcs_svg(args.max_denom, Fraction(args.height)), args.out)
    return 0


def cmd_witness(args) -> int:
    if args.format != "json":
        raise ValueError("witness writes json")
    doc = witness_document(args.f, args.search_bound)
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def write_verify_artifacts(out: Path, cfg: acceptance.VerifyConfig) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / "arcs-19.svg").write_text(plot_arcs_svg(19), encoding="utf-8")
    (out / "counts-q.csv").write_text(count_series("q", [10, 100, 1000], threads=cfg.threads).to_csv(),
                                      encoding="utf-8")
    (out / "witness-f-5.json").write_text(json.dumps(witness_document(-5), indent=2, sort_keys=True) + "\n",
                                          encoding="utf-8")


def cmd_verify(args) -> int:
    cfg = acceptance.VerifyConfig(seed=args.seed, threads=args.threads, fault=args.inject_fault,
                                  samples=args.samples)
    results = []
    for fn in acceptance.CRITERIA:
        r = fn(cfg)
        results.append(r)
        print(acceptance.report_lines([r])[0], flush=True)
    for r in results:
        for note in r.notes:
            print(f"      {note}")
    if args.out:
        out = Path(args.out)
        write_verify_artifacts(out, cfg)
        (out / "report.json").write_text(acceptance.report_json(results, cfg), encoding="utf-8")
    failed = [r.number for r in results if not r.passed]
    print("verify: " + ("all criteria passed" if not failed else f"FAILED criteria {failed}"))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farey-neighbours",
                                     description="Counting and constructing Farey neighbours.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt):
        p.add_argument("--out", help="output path (stdout when omitted)")
        p.add_argument("--format", choices=("csv", "json", "svg"), default=fmt)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("count", help="empirical counts against both model variants")
    p.add_argument("--regime", choices=REGIMES, default="q")
    p.add_argument("--grid", help="comma separated thresholds (N, epsilon or T)")
    p.add_argument("--f", type=int, default=-1)
    p.add_argument("--level", type=int)
    common(p, "csv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("plot-arcs", help="SVG of Farey arcs and Ford circles")
    p.add_argument("--max-denom", type=int, default=19)
    p.add_argument("--height", default=str(DEFAULT_HEIGHT))
    common(p, "svg")
    p.set_defaults(func=cmd_plot_arcs)

    p = sub.add_parser("witness", help="neighbour witnesses for every ideal class")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--search-bound", type=int, default=bz.DEFAULT_SEARCH_BOUND)
    common(p, "json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--inject-fault", choices=acceptance.FAULTS,
                   help="corrupt a model constant to check that verify fails")
    common(p, "json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
