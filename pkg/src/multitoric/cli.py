"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 work bound
exceeded.  Machine output goes to stdout (or ``--out``); diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import analysis
from .errors import TooLarge, ToricError
from .finite_field import build_field
from .generators import all_generators
from .graph import PartitionSpec, build_graph, parse_partition
from .groebner import buchberger, hilbert_profile
from .toric_set import enumerate_X

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _doc(spec: PartitionSpec, q: int, **fields) -> dict:
    return {"schema": SCHEMA, "parts": list(spec.alphas), "q": q, **fields}


def _spec(args) -> PartitionSpec:
    spec = parse_partition(args.parts)
    return spec.sorted_descending() if getattr(args, "sort_parts", False) else spec


def _methods(text: str, allowed: tuple[str, ...]) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in allowed]
    if bad or not methods:
        raise UsageError(f"unknown method(s) {bad or text!r}; choose from {','.join(allowed)}")
    return methods


# -- subcommands ----------------------------------------------------------------

def cmd_graph(args) -> int:
    spec = _spec(args)
    g = build_graph(spec)
    edges = [{"index": i + 1, "u": u, "v": v} for i, (u, v) in enumerate(g.edges)]
    doc = {"schema": SCHEMA, "parts": list(spec.alphas), "n": g.n, "r": g.r, "s": g.s,
           "bipartite": g.is_bipartite, "edges": edges}
    _emit(doc, args.out)
    return EXIT_OK


def cmd_points(args) -> int:
    spec = _spec(args)
    X = enumerate_X(build_graph(spec), build_field(args.q))
    # the points file is a bare JSON array of coordinate arrays
    _emit(X.to_json(), args.out)
    return EXIT_OK


def cmd_generators(args) -> int:
    spec = _spec(args)
    types = _methods(args.types, ("I", "II", "III"))
    gens = all_generators(build_graph(spec), args.q, types, args.pairwise_type_i)
    counts = {t: sum(1 for x in gens if x.type == t) for t in types}
    _emit(_doc(spec, args.q, counts=counts, generators=[x.to_json() for x in gens]), args.out)
    return EXIT_OK


def cmd_groebner(args) -> int:
    spec = _spec(args)
    F = build_field(args.q)
    g = build_graph(spec)
    gb = buchberger(analysis.named_ideal(args.ideal, g, F))
    _emit(_doc(spec, args.q, ideal=args.ideal, **gb.to_json()), args.out)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    spec = _spec(args)
    q = args.q
    top = args.max_degree if args.max_degree is not None else analysis.regularity_formula(spec, q) + 2
    F = build_field(q)
    g = build_graph(spec)
    if args.method == "oracle":
        X = enumerate_X(g, F)
        values = [analysis.hilbert_oracle(X, d) for d in range(top + 1)]
        doc = _doc(spec, q, method="oracle", values=values, cardinality=len(X))
    else:
        prof = hilbert_profile(buchberger(analysis.named_ideal(args.ideal, g, F)), max_degree=top)
        values = [prof.hf(d) for d in range(top + 1)]
        doc = _doc(spec, q, method="groebner", ideal=args.ideal, values=values, profile=prof.to_json())
    _emit(doc, args.out)
    return EXIT_OK


def cmd_regularity(args) -> int:
    spec = _spec(args)
    q = args.q
    out = {}
    for m in _methods(args.method, ("formula", "oracle", "groebner")):
        if m == "formula":
            out[m] = analysis.regularity_formula(spec, q)
        elif m == "oracle":
            out[m] = analysis.regularity_oracle(enumerate_X(build_graph(spec), build_field(q)))
        else:
            F = build_field(q)
            prof = hilbert_profile(buchberger(analysis.generation_ideal(build_graph(spec), F)))
            out[m] = prof.regularity
    _emit(_doc(spec, q, regularity=out), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec(args)
    rep = analysis.verify_generation(spec, args.q, with_saturation=args.with_saturation)
    _emit({"schema": SCHEMA, **rep.to_json()}, args.out)
    if rep.skipped:
        for msg in rep.skipped:
            print(f"skipped: {msg}", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_witness(args) -> int:
    spec = _spec(args)
    rep = analysis.verify_regularity_witness(spec, args.q, with_oracle=not args.no_oracle)
    _emit({"schema": SCHEMA, **rep.to_json()}, args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_code(args) -> int:
    spec = _spec(args)
    params = analysis.code_params(spec, args.q, args.degree, args.min_distance)
    _emit(_doc(spec, args.q, code=params.to_json()), args.out)
    return EXIT_OK


def _load_manifest(path: str | None) -> list[tuple[tuple[int, ...], int]]:
    if path is None:
        return list(analysis.ACCEPTANCE_GRID)
    items = json.loads(Path(path).read_text())
    out = []
    for item in items:
        parts = item["parts"]
        if isinstance(parts, str):
            parts = parse_partition(parts).alphas
        out.append((tuple(PartitionSpec(tuple(parts)).alphas), int(item["q"])))
    return out


def _grid_worker(job):
    parts, q, with_saturation = job
    try:
        return analysis.run_instance(parts, q, with_saturation).to_json()
    except TooLarge as exc:
        rep = analysis.VerificationReport(instance={"parts": list(parts), "q": q})
        rep.skipped.append(str(exc))
        return rep.to_json()


def cmd_grid(args) -> int:
    jobs = [(p, q, args.with_saturation) for p, q in _load_manifest(args.manifest)]
    workers = args.jobs or os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_grid_worker, jobs))
    else:
        records = [_grid_worker(j) for j in jobs]
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for rec in records:
            name = "K" + "-".join(map(str, rec["instance"]["parts"])) + f"_q{rec['instance']['q']}.json"
            (out_dir / name).write_text(json.dumps({"schema": SCHEMA, **rec}, indent=2) + "\n")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=analysis.CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        rep = analysis.VerificationReport(**{k: v for k, v in rec.items() if k not in ("ok", "status")})
        writer.writerow(analysis.csv_row(rep))
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    statuses = [r["status"] for r in records]
    if "fail" in statuses:
        return EXIT_FAIL
    if "skipped" in statuses:
        return EXIT_BOUND
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitoric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p, with_q=True):
        p.add_argument("--parts", required=True, help="part sizes, e.g. 2,2,1")
        if with_q:
            p.add_argument("--q", type=int, required=True, help="field order (prime power <= 4096)")
        p.add_argument("--sort-parts", action="store_true", help="sort part sizes in decreasing order first")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("graph", help="vertex/edge data of the graph")
    instance(p, with_q=False)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("points", help="enumerate the toric set X")
    instance(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("generators", help="emit the type I/II/III binomials")
    instance(p)
    p.add_argument("--types", default="I,II,III")
    p.add_argument("--pairwise-type-i", action="store_true", help="all pairs i<j instead of differences with t_1")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("groebner", help="reduced Groebner basis of a named ideal")
    instance(p)
    p.add_argument("--ideal", choices=analysis.IDEAL_NAMES, default="J")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("hilbert", help="Hilbert function values")
    instance(p)
    p.add_argument("--method", choices=("oracle", "groebner"), default="groebner")
    p.add_argument("--ideal", choices=analysis.IDEAL_NAMES, default="J")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("regularity", help="regularity of S/I(X)")
    instance(p)
    p.add_argument("--method", default="formula,oracle,groebner", help="comma-separated subset")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("verify", help="full generation/regularity verification report")
    instance(p)
    p.add_argument("--with-saturation", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="Artinian-reduction witness test")
    instance(p)
    p.add_argument("--no-oracle", action="store_true", help="skip the point-evaluation regularity cross-check")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("code", help="evaluation code parameters")
    instance(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--min-distance", action="store_true")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("grid", help="verify a manifest of instances, CSV summary")
    p.add_argument("--manifest", help='JSON list of {"parts": "2,2,1", "q": 3}; default is the acceptance grid')
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")
    p.add_argument("--out-dir", help="directory for per-instance JSON reports")
    p.add_argument("--out", help="CSV summary path (default stdout)")
    p.add_argument("--with-saturation", action="store_true")
    p.set_defaults(func=cmd_grid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: work bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, ToricError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
