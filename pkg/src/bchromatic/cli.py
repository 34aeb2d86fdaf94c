"""Command-line front end: gen, solve, exact, verify, bench, repro.

JSON goes to stdout and human-readable logging to stderr. Exit codes:
0 success, 1 solver failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Sequence

from bchromatic.coloring import Coloring, ColoringError, verify_b_coloring
from bchromatic.exact import BudgetExceeded, exact_b_chromatic
from bchromatic.extension import (
    FInit,
    Mode,
    SolveError,
    Strategy,
    c4free_bound,
    general_bound,
    solve_b_coloring,
)
from bchromatic.graph import (
    BudgetExhausted,
    Graph,
    GraphError,
    degree_if_regular,
    gen_random_regular,
    gen_random_regular_c4free,
    girth,
    has_c4,
    named_graph,
    parse_dimacs,
    write_dimacs,
)

log = logging.getLogger("bchromatic")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_HEADER = ["d", "n", "seed", "mode", "strategy", "success", "rotations", "ms"]


class UsageError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """Read a DIMACS file, or build a named graph given as ``named:<name>``."""
    if spec.startswith("named:"):
        return named_graph(spec[len("named:"):])
    try:
        return parse_dimacs(Path(spec).read_bytes())
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from exc


def graph_stats(g: Graph) -> dict[str, Any]:
    gi = girth(g)
    return {
        "n": g.n,
        "m": g.m,
        "d": degree_if_regular(g),
        "girth": None if math.isinf(gi) else int(gi),
        "has_c4": has_c4(g),
    }


def _emit(payload: dict[str, Any]) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.c4free:
        g = gen_random_regular_c4free(args.n, args.d, args.seed, budget=args.budget)
    else:
        g = gen_random_regular(args.n, args.d, args.seed)
    text = write_dimacs(g)
    stats = {"seed": args.seed, "c4free": args.c4free, **graph_stats(g)}
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        Path(str(out) + ".json").write_text(json.dumps(stats, indent=2) + "\n")
        log.info("wrote %s (%d vertices, %d edges)", out, g.n, g.m)
        _emit(stats)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_solve(g: Graph, mode: str, strategy: str, f_init: str, seed: int) -> dict[str, Any]:
    report: dict[str, Any] = {"mode": mode, "strategy": strategy, "f_init": f_init, "seed": seed}
    start = time.perf_counter()
    try:
        result = solve_b_coloring(g, mode, strategy, f_init, seed)
    except SolveError as exc:
        report.update(outcome="failure", error=str(exc), snapshot=exc.snapshot)
    else:
        # Success is only reported off the verifier's verdict, re-run here.
        verdict = verify_b_coloring(g, result.coloring, (degree_if_regular(g) or 0) + 1)
        report.update(
            outcome="success" if verdict.is_b_coloring else "failure",
            dominants=[list(p) for p in result.dominants],
            rotations=result.rotations,
            steps=[s.to_dict() for s in result.steps],
            checks=dict(sorted(result.checks.items())),
            warnings=result.warnings,
            coloring=list(result.coloring.colors),
            verdict=verdict.to_dict(),
        )
    report["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if degree_if_regular(g) is None:
        raise UsageError("input graph is not regular")
    report = {"command": ["solve", *args.argv], "graph": {"source": args.graph, **graph_stats(g)}}
    try:
        report.update(run_solve(g, args.mode, args.strategy, args.f_init, args.seed))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if report["outcome"] != "success":
        log.error("solve failed: %s", report.get("error"))
        if args.snapshot:
            Path(args.snapshot).write_text(json.dumps(report["snapshot"], indent=2) + "\n")
    _emit(report)
    return EXIT_OK if report["outcome"] == "success" else EXIT_FAIL


def cmd_exact(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    try:
        result = exact_b_chromatic(g, budget=args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except BudgetExceeded as exc:
        _emit({"command": ["exact", *args.argv], "error": str(exc)})
        return EXIT_FAIL
    verdict = verify_b_coloring(g, result.witness, result.b)
    _emit({"command": ["exact", *args.argv], **result.to_dict(), "witness_verified": verdict.is_b_coloring})
    return EXIT_OK if verdict.is_b_coloring else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    try:
        text = Path(args.coloring).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.coloring}: {exc}") from exc
    try:
        c = Coloring.parse(text, g.n, args.k)
    except (ColoringError, ValueError) as exc:
        raise UsageError(f"bad coloring file: {exc}") from exc
    verdict = verify_b_coloring(g, c, args.k)
    _emit({"command": ["verify", *args.argv], "k": args.k, **verdict.to_dict()})
    return EXIT_OK if verdict.is_b_coloring else EXIT_FAIL


def parse_seeds(tokens: Sequence[str]) -> list[int]:
    seeds: list[int] = []
    for tok in tokens:
        for part in tok.split(","):
            if not part:
                continue
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                seeds.extend(range(int(lo), int(hi) + 1))
            else:
                seeds.append(int(part))
    return seeds


def bench_size(d: int, mult: float, mode: str) -> int:
    bound = c4free_bound(d) if mode == Mode.C4FREE.value else general_bound(d)
    n = max(int(round(mult * bound)), d + 1)
    return n + 1 if (n * d) % 2 else n


def bench_row(d: int, n: int, seed: int, mode: str, strategy: str, f_init: str) -> dict[str, Any]:
    start = time.perf_counter()
    rotations = 0
    success = False
    try:
        if mode == Mode.C4FREE.value:
            g = gen_random_regular_c4free(n, d, seed)
        else:
            g = gen_random_regular(n, d, seed)
        result = solve_b_coloring(g, mode, strategy, f_init, seed)
        rotations = result.rotations
        success = verify_b_coloring(g, result.coloring, d + 1).is_b_coloring
    except (SolveError, GraphError, ValueError) as exc:
        log.info("row d=%d n=%d seed=%d failed: %s", d, n, seed, exc)
    ms = (time.perf_counter() - start) * 1000
    return {
        "d": d, "n": n, "seed": seed, "mode": mode, "strategy": strategy,
        "success": int(success), "rotations": rotations, "ms": f"{ms:.3f}",
    }


def _bench_task(job: tuple) -> dict[str, Any]:
    return bench_row(*job)


def cmd_bench(args: argparse.Namespace) -> int:
    if args.strategy == Strategy.MATCHING.value and args.mode != Mode.C4FREE.value:
        raise UsageError("the matching strategy is only available in c4free mode")
    seeds = parse_seeds(args.seeds)
    jobs = [
        (d, bench_size(d, mult, args.mode), seed, args.mode, args.strategy, args.f_init)
        for d in args.d
        for mult in args.n_multipliers
        for seed in seeds
    ]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_bench_task, jobs))
    else:
        rows = [_bench_task(job) for job in jobs]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    sys.stdout.write(buf.getvalue())
    ok = sum(r["success"] for r in rows)
    log.info("%d/%d rows succeeded", ok, len(rows))
    return EXIT_OK


def cmd_repro(args: argparse.Namespace) -> int:
    try:
        snap = json.loads(Path(args.snapshot).read_text())
        g = Graph.from_edges(snap["graph"]["n"], [tuple(e) for e in snap["graph"]["edges"]])
        params = (snap["mode"], snap["strategy"], snap["f_init"], snap["seed"])
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"unusable snapshot: {exc}") from exc
    report = {"command": ["repro", *args.argv], "graph": graph_stats(g), **run_solve(g, *params)}
    replayed = report.get("snapshot", {})
    report["reproduced"] = (
        report["outcome"] == "failure"
        and replayed.get("error_type") == snap.get("error_type")
        and replayed.get("state") == snap.get("state")
    )
    _emit(report)
    return EXIT_OK if report["outcome"] == "success" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bchromatic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random d-regular graph as DIMACS")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--c4free", action="store_true", help="remove all 4-cycles")
    p.add_argument("--budget", type=int, default=20_000, help="swap attempts per candidate (C4-free)")
    p.add_argument("-o", "--out", help="output path; a .json stats sidecar is written next to it")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="build a verified b-coloring with d+1 colors")
    p.add_argument("graph", help="DIMACS path or named:<graph>")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.GENERAL.value)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.ROTATION.value)
    p.add_argument("--f-init", choices=[f.value for f in FInit], default=FInit.MATCHING.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--snapshot", help="write the failure snapshot here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exact b-chromatic number (small graphs)")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=10**8, help="search node limit")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a coloring is a b-coloring with k colors")
    p.add_argument("graph")
    p.add_argument("coloring", help="JSON array or 'v:c' pairs")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="success-rate sweep, CSV on stdout")
    p.add_argument("--d", type=int, nargs="+", required=True)
    p.add_argument("--n-multipliers", type=float, nargs="+", default=[1.0])
    p.add_argument("--seeds", nargs="*", required=True, help="e.g. 1 2 3 or 1-20")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.C4FREE.value)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.ROTATION.value)
    p.add_argument("--f-init", choices=[f.value for f in FInit], default=FInit.MATCHING.value)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--out", help="also write the CSV here")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("repro", help="replay a failure snapshot")
    p.add_argument("snapshot")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.INFO, format="%(levelname)s %(message)s", force=True
    )
    args.argv = argv[argv.index(args.command) + 1:]
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        log.error("%s", exc)
        return EXIT_FAIL
    except (UsageError, GraphError, ColoringError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
