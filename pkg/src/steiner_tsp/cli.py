"""Command-line front end.

    steiner-tsp solve GRAPH [--tree FILE] [--strategy S] [--oracle] ...
    steiner-tsp analyze GRAPH [--tree FILE] [--subset "u v w"]
    steiner-tsp bench DIR [--oracle] [--csv OUT]
    steiner-tsp gen {named,planted,random,cubic,suite} ...

Exit codes: 0 success, 2 parse error, 3 precondition failed (for example a
graph that is not 2-connected), 4 budget exceeded.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
from fractions import Fraction
import json
import os
from pathlib import Path
import statistics
import sys

from . import generators, io
from .dfs_circulation import dfs_tree, select_back_edges
from .errors import (
    BadParameter,
    BudgetExceeded,
    NotBiconnected,
    ParseError,
    PreconditionViolated,
    SteinerTSPError,
    SubsetTooLarge,
    TooLarge,
)
from .graph import is_biconnected, vertex_connectivity
from .oracle import HELD_KARP_MAX_N
from .report import run_instance, validate_report
from .spanning import TreeStrategy, build_spanning_tree, tree_from_edges
from .steiner import SearchBudget, cyclability_predicates
from .tour import SolveConfig, corollary_bound, corollary_check, corollary_threshold

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _u64(text):
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _strategies(name):
    if name == "all":
        return tuple(TreeStrategy)
    return (TreeStrategy.parse(name),)


def _load_graph(path):
    try:
        return io.read_graph(path)
    except (OSError, ParseError) as exc:
        raise CliError(f"cannot read graph {path}: {exc}", EXIT_PARSE) from exc


def _load_tree(g, path):
    try:
        n, edges = io.read_tree_edges(path)
    except (OSError, ParseError) as exc:
        raise CliError(f"cannot read tree {path}: {exc}", EXIT_PARSE) from exc
    if n != g.n:
        raise CliError(f"tree has {n} vertices, graph has {g.n}", EXIT_PRECONDITION)
    try:
        return tree_from_edges(g, edges, strategy="given")
    except PreconditionViolated as exc:
        raise CliError(f"invalid spanning tree: {exc}", EXIT_PRECONDITION) from exc


def _emit_json(payload, dest):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if dest == "-":
        print(text)
    else:
        Path(dest).write_text(text + "\n")


# --------------------------------------------------------------------- solve


def cmd_solve(args):
    g = _load_graph(args.graph)
    if not is_biconnected(g):
        raise CliError("graph is not 2-connected", EXIT_PRECONDITION)
    tree = _load_tree(g, args.tree) if args.tree else None
    if args.oracle and g.n > HELD_KARP_MAX_N:
        raise CliError(f"--oracle needs n <= {HELD_KARP_MAX_N}, graph has n = {g.n}", EXIT_BUDGET)
    config = SolveConfig(
        strategies=_strategies(args.strategy),
        seed=args.seed,
        tree=tree,
        search_budget=SearchBudget(args.budget),
    )
    report, sol = run_instance(Path(args.graph).stem, g, config, oracle=args.oracle)
    out = report.to_dict()
    cert = sol.certificate
    out["attempts"] = [a.__dict__ for a in sol.attempts]
    out["tour"] = list(sol.tour.order)
    if sol.cycle is not None:
        out["cycle"] = io.format_cycle(sol.cycle.sequence)
    if args.lower_bound_alpha is not None:
        alpha = args.lower_bound_alpha
        if not 0 <= alpha <= 1:
            raise CliError("--lower-bound-alpha must lie in [0, 1]", EXIT_PARSE)
        holds = sol.cycle is not None and corollary_check(alpha, sol.cycle)
        out["corollary"] = {
            "alpha": str(alpha),
            "threshold": str(corollary_threshold(alpha)),
            "holds": holds,
            "bound": str(corollary_bound(alpha, g.n)) if holds else None,
        }
    problems = validate_report(out)
    if problems:
        raise CliError("inconsistent report: " + "; ".join(problems), 1)

    print(f"instance {report.instance}: n={g.n} m={g.m}")
    print(f"case {cert.case.value} via {cert.tree_strategy} tree"
          + (f", {cert.cycle_method} cycle |C|={cert.cycle_unique} l(C)={cert.cycle_length}" if cert.cycle_unique else ""))
    print(f"achieved {cert.achieved} <= bound {cert.bound} (theorem bound {cert.theorem_bound})")
    if cert.proven_absent:
        print("no simple Steiner cycle exists for any tried tree (proven)")
    for r in report.results[1:]:
        print(f"baseline {r.algorithm}: {r.achieved}")
    if report.opt is not None:
        print(f"optimum {report.opt} (Held-Karp)")
    if "corollary" in out:
        c = out["corollary"]
        print(f"corollary at alpha={c['alpha']}: {'holds, tour <= ' + c['bound'] if c['holds'] else 'does not hold'}")
    if args.json:
        _emit_json(out, args.json)
    return EXIT_OK


# ------------------------------------------------------------------- analyze


def cmd_analyze(args):
    g = _load_graph(args.graph)
    bic = is_biconnected(g)
    out = {"instance": Path(args.graph).stem, "n": g.n, "m": g.m, "biconnected": bic}
    try:
        out["kappa"] = vertex_connectivity(g)
    except SteinerTSPError:
        out["kappa"] = 0
    print(f"instance {out['instance']}: n={g.n} m={g.m} biconnected={bic} kappa={out['kappa']}")

    def predicates(x):
        if not bic:
            return None
        try:
            f = cyclability_predicates(g, x)
        except SubsetTooLarge:
            f = cyclability_predicates_partial(g, x)
        return f

    if args.subset is not None:
        x = sorted({int(t) for t in args.subset.replace(",", " ").split()})
        flags = predicates(x)
        out["subset"] = {"vertices": x, "predicates": flags}
        print(f"subset {x}: {_flags_text(flags)}")

    if args.tree:
        trees = [_load_tree(g, args.tree)]
    else:
        trees = [build_spanning_tree(g, s, seed=args.seed) for s in _strategies(args.strategy)]
    out["trees"] = []
    for t in trees:
        flags = predicates(t.odd_set)
        out["trees"].append({
            "strategy": t.strategy,
            "odd_count": len(t.odd_set),
            "leaf_count": t.leaf_count,
            "predicates": flags,
        })
        print(f"tree {t.strategy}: |odd|={len(t.odd_set)} leaves={t.leaf_count} {_flags_text(flags)}")

    if bic:
        cert = select_back_edges(g, dfs_tree(g, args.root))
        out["dfs_circulation"] = cert.to_dict()
        print(f"dfs tree (root {args.root}): k={cert.k} circulation cost={cert.total_cost} "
              f"bound 4n/3+2k/3={cert.bound}")
    if args.json:
        payload = json.loads(json.dumps(out, default=_jsonable))
        _emit_json(payload, args.json)
    return EXIT_OK


def cyclability_predicates_partial(g, x):
    """Dirac and Shi flags when the set is too large for the exact independence number."""
    from .graph import sigma2

    kappa = vertex_connectivity(g)
    return {"dirac": len(x) <= kappa, "shi": sigma2(g, x) >= g.n, "fournier": None}


def _flags_text(flags):
    if flags is None:
        return "predicates n/a (not 2-connected)"
    if not isinstance(flags, dict):
        flags = {"dirac": flags.dirac, "shi": flags.shi, "fournier": flags.fournier}
    return " ".join(f"{k}={'n/a' if v is None else str(v).lower()}" for k, v in flags.items())


def _jsonable(obj):
    if hasattr(obj, "dirac"):
        return {"dirac": obj.dirac, "shi": obj.shi, "fournier": obj.fournier}
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"not serialisable: {type(obj).__name__}")


# --------------------------------------------------------------------- bench

CSV_FIELDS = [
    "instance", "n", "m", "algorithm", "status", "case", "achieved", "bound_num", "bound_den",
    "bound_ok", "opt", "achieved_over_opt", "achieved_over_bound", "wall_time",
]


def _bench_one(job):
    path, tree_path, strategies, seed, budget, oracle, oracle_max_n = job
    name = Path(path).stem
    try:
        g = io.read_graph(path)
        tree = None
        if tree_path is not None:
            n, edges = io.read_tree_edges(tree_path)
            tree = tree_from_edges(g, edges, strategy="given")
        config = SolveConfig(strategies=strategies, seed=seed, tree=tree, search_budget=SearchBudget(budget))
        report, _ = run_instance(name, g, config, oracle=oracle, oracle_max_n=oracle_max_n)
    except (SteinerTSPError, OSError) as exc:
        return [{"instance": name, "algorithm": "steiner", "status": f"failed: {type(exc).__name__}"}]
    rows = []
    for r in report.results:
        bound = r.bound
        rows.append({
            "instance": name,
            "n": report.n,
            "m": report.m,
            "algorithm": r.algorithm,
            "status": "ok",
            "case": (r.certificate or {}).get("case", ""),
            "achieved": r.achieved,
            "bound_num": r.bound_num,
            "bound_den": r.bound_den,
            "bound_ok": r.bound_ok,
            "opt": report.opt,
            "achieved_over_opt": None if report.opt is None else round(r.achieved / report.opt, 6),
            "achieved_over_bound": None if bound is None else round(r.achieved / float(bound), 6),
            "wall_time": round(r.wall_time, 6),
        })
    return rows


def _threads(args):
    if args.threads:
        return args.threads
    env = os.environ.get("STEINER_TSP_THREADS")
    return int(env) if env else 1


def _quantiles(values):
    if not values:
        return {}
    values = sorted(values)
    if len(values) == 1:
        q = [values[0]] * 3
    else:
        q = statistics.quantiles(values, n=4, method="inclusive")
    return {k: round(v, 6) for k, v in zip(("min", "q1", "median", "q3", "max"), (values[0], *q, values[-1]))}


def cmd_bench(args):
    root = Path(args.dir)
    if not root.is_dir():
        raise CliError(f"{root} is not a directory", EXIT_PARSE)
    graphs = sorted(p for p in root.iterdir() if p.suffix in (".txt", ".edges") and p.is_file())
    jobs = []
    for p in graphs:
        tp = p.with_suffix(".tree")
        jobs.append((str(p), str(tp) if tp.exists() else None, _strategies(args.strategy),
                     args.seed, args.budget, args.oracle, args.oracle_max_n))
    workers = _threads(args)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_bench_one, jobs))  # map keeps instance order
    else:
        results = [_bench_one(j) for j in jobs]
    rows = [row for rs in results for row in rs]

    out = open(args.csv, "w", newline="") if args.csv and args.csv != "-" else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    finally:
        if out is not sys.stdout:
            out.close()

    summary = {"instances": len(jobs), "algorithms": {}}
    for alg in sorted({r["algorithm"] for r in rows}):
        mine = [r for r in rows if r["algorithm"] == alg]
        ok = [r for r in mine if r["status"] == "ok"]
        summary["algorithms"][alg] = {
            "rows": len(mine),
            "failed": len(mine) - len(ok),
            "bound_violations": sum(1 for r in ok if not r["bound_ok"]),
            "opt_violations": sum(1 for r in ok if r["opt"] is not None and r["achieved"] < r["opt"]),
            "achieved_over_opt": _quantiles([r["achieved_over_opt"] for r in ok if r["achieved_over_opt"] is not None]),
            "achieved_over_bound": _quantiles([r["achieved_over_bound"] for r in ok if r["achieved_over_bound"] is not None]),
        }
    print(json.dumps(summary, indent=2), file=sys.stderr if args.csv in (None, "-") else sys.stdout)
    if args.json:
        _emit_json(summary, args.json)
    violations = sum(a["bound_violations"] + a["opt_violations"] for a in summary["algorithms"].values())
    return EXIT_OK if violations == 0 else 1


# ----------------------------------------------------------------------- gen


def cmd_gen(args):
    out = Path(args.output) if getattr(args, "output", None) else None
    if args.kind == "named":
        g = generators.named(args.spec)
        _write(out, g, f"named {args.spec}")
    elif args.kind == "planted":
        inst = generators.planted_ham_path(args.n, args.extra, args.seed)
        _write(out, inst.graph, f"planted Hamiltonian path n={args.n} extra={args.extra} seed={args.seed}")
        if out is not None:
            from .spanning import path_tree

            io.write_tree(out.with_suffix(".tree"), path_tree(inst.graph, inst.path), comment="planted path")
    elif args.kind == "random":
        g = generators.random_biconnected(args.n, args.m, args.seed)
        _write(out, g, f"random 2-connected n={args.n} m={args.m} seed={args.seed}")
    elif args.kind == "cubic":
        g = generators.random_cubic(args.n, args.seed)
        _write(out, g, f"random cubic n={args.n} seed={args.seed}")
    elif args.kind == "suite":
        write_suite(Path(args.dir), args.family, args.count, args.seed, args.max_n)
    return EXIT_OK


def _write(out, g, comment):
    if out is None:
        sys.stdout.write(io.format_edge_list(g.n, g.edges(), comment=comment))
    else:
        io.write_graph(out, g, comment=comment)


def write_suite(directory, family, count, seed, max_n):
    """Write a reproducible instance family into ``directory``."""
    import random

    from .spanning import path_tree

    directory.mkdir(parents=True, exist_ok=True)
    rng = random.Random(f"suite:{family}:{seed}")
    for i in range(count):
        name = directory / f"{family}_{i:04d}.txt"
        if family == "random":
            n = rng.randint(5, max_n)
            m = rng.randint(n, min(n * (n - 1) // 2, 2 * n + 4))
            io.write_graph(name, generators.random_biconnected(n, m, rng.getrandbits(64)), comment=f"random n={n} m={m}")
        elif family == "planted":
            n = rng.choice([50, 100, 200, 500, 1000])
            n = min(n, max_n) if max_n >= 10 else n
            inst = generators.planted_ham_path(n, max(2, n // 20), rng.getrandbits(64))
            io.write_graph(name, inst.graph, comment=f"planted n={n}")
            io.write_tree(name.with_suffix(".tree"), path_tree(inst.graph, inst.path))
        elif family == "kbip":
            r = 3 + i
            io.write_graph(name, generators.complete_bipartite(2, r), comment=f"K_2,{r}")
        else:
            raise BadParameter(f"unknown suite family {family!r}")


# ---------------------------------------------------------------------- main


def build_parser():
    p = argparse.ArgumentParser(prog="steiner-tsp", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--strategy", default="all", choices=["bfs", "dfs", "random", "fewodd", "all"])
        sp.add_argument("--seed", type=_u64, default=0)
        sp.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")

    s = sub.add_parser("solve", help="certified tour for one instance")
    s.add_argument("graph")
    s.add_argument("--tree", metavar="FILE", help="use this spanning tree instead of building one")
    s.add_argument("--oracle", action="store_true", help="also compute the optimum (n <= 18)")
    s.add_argument("--budget", type=int, default=18, metavar="N", help="exhaustive cycle search up to n = N")
    s.add_argument("--lower-bound-alpha", type=_fraction, metavar="P/Q", help="assume OPT >= (1 + alpha) n")
    common(s)
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("analyze", help="connectivity, cyclability flags, DFS certificate")
    a.add_argument("graph")
    a.add_argument("--tree", metavar="FILE")
    a.add_argument("--subset", metavar="VERTICES", help="also test this vertex set, e.g. '2 3 4'")
    a.add_argument("--root", type=int, default=0, help="DFS root for the circulation certificate")
    common(a)
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bench", help="run every instance of a directory, CSV out")
    b.add_argument("dir")
    b.add_argument("--csv", metavar="PATH", help="CSV destination (default stdout)")
    b.add_argument("--oracle", action="store_true")
    b.add_argument("--oracle-max-n", type=int, default=HELD_KARP_MAX_N)
    b.add_argument("--budget", type=int, default=18, metavar="N")
    b.add_argument("--threads", type=int, default=0, help="worker processes (default $STEINER_TSP_THREADS or 1)")
    common(b)
    b.set_defaults(func=cmd_bench)

    gp = sub.add_parser("gen", help="write instances as edge lists")
    gsub = gp.add_subparsers(dest="kind", required=True)
    g1 = gsub.add_parser("named")
    g1.add_argument("spec", help="e.g. petersen, wheel:6, complete_bipartite:2,3, theta:6,3")
    g2 = gsub.add_parser("planted")
    g2.add_argument("--n", type=int, required=True)
    g2.add_argument("--extra", type=int, required=True)
    g3 = gsub.add_parser("random")
    g3.add_argument("--n", type=int, required=True)
    g3.add_argument("--m", type=int, required=True)
    g4 = gsub.add_parser("cubic")
    g4.add_argument("--n", type=int, required=True)
    for sp in (g1, g2, g3, g4):
        sp.add_argument("-o", "--output", metavar="FILE")
        sp.add_argument("--seed", type=_u64, default=0)
    g5 = gsub.add_parser("suite")
    g5.add_argument("dir")
    g5.add_argument("--family", choices=["random", "planted", "kbip"], default="random")
    g5.add_argument("--count", type=int, default=200)
    g5.add_argument("--max-n", type=int, default=12)
    g5.add_argument("--seed", type=_u64, default=0)
    gp.set_defaults(func=cmd_gen)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotBiconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (BudgetExceeded, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, BadParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
