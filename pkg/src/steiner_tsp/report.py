"""Run reports: per-algorithm results for one instance, JSON-ready."""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
import time

from .graph import shortest_path_metric
from .oracle import HELD_KARP_MAX_N, held_karp_opt
from .spanning import build_spanning_tree
from .tour import christofides_exact, double_tree_baseline, solve

SCHEMA_VERSION = 1


@dataclass
class AlgorithmResult:
    algorithm: str
    achieved: int
    bound_num: int | None = None
    bound_den: int | None = None
    wall_time: float = 0.0
    certificate: dict | None = None

    @property
    def bound(self):
        if self.bound_num is None:
            return None
        return Fraction(self.bound_num, self.bound_den)

    @property
    def bound_ok(self):
        return self.bound is None or self.achieved <= self.bound


@dataclass
class RunReport:
    instance: str
    n: int
    m: int
    results: list = field(default_factory=list)
    opt: int | None = None

    def to_dict(self):
        out = {"schema": SCHEMA_VERSION, "instance": self.instance, "n": self.n, "m": self.m, "opt": self.opt}
        out["results"] = []
        for r in self.results:
            d = asdict(r)
            d["bound_ok"] = r.bound_ok
            d["opt_ok"] = self.opt is None or self.opt <= r.achieved
            out["results"].append(d)
        return out


def validate_report(d):
    """Recompute every flag of a report dict from its raw numbers.

    Returns a list of problems; empty means the report is consistent.
    """
    problems = []
    for key in ("schema", "instance", "n", "m", "opt", "results"):
        if key not in d:
            problems.append(f"missing key {key!r}")
    if problems:
        return problems
    opt = d["opt"]
    for r in d["results"]:
        name = r.get("algorithm", "?")
        achieved = r["achieved"]
        if r["bound_num"] is not None:
            ok = Fraction(achieved) <= Fraction(r["bound_num"], r["bound_den"])
            if not ok:
                problems.append(f"{name}: achieved {achieved} exceeds bound {r['bound_num']}/{r['bound_den']}")
            if r.get("bound_ok") is not ok:
                problems.append(f"{name}: bound_ok flag disagrees with the numbers")
        if opt is not None:
            if opt > achieved:
                problems.append(f"{name}: achieved {achieved} below the optimum {opt}")
            if r.get("opt_ok") is not (opt <= achieved):
                problems.append(f"{name}: opt_ok flag disagrees with the numbers")
        cert = r.get("certificate")
        if cert and cert.get("achieved") is not None and cert["achieved"] != achieved:
            problems.append(f"{name}: certificate achieved {cert['achieved']} != {achieved}")
    return problems


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def run_instance(name, g, config, *, oracle=False, oracle_max_n=HELD_KARP_MAX_N, extra=True):
    """Run the pipeline (and baselines when ``extra``) on one instance."""
    metric = shortest_path_metric(g)
    report = RunReport(name, g.n, g.m)
    if oracle and g.n <= oracle_max_n:
        report.opt = held_karp_opt(metric).opt_length
    sol, dt = _timed(solve, g, config)
    cert = sol.certificate
    cd = cert.to_dict()
    if report.opt is not None:
        cd["opt"] = report.opt
    report.results.append(
        AlgorithmResult("steiner", sol.tour.length, cert.bound.numerator, cert.bound.denominator, dt, cd)
    )
    if extra:
        tour, dt = _timed(double_tree_baseline, g, metric)
        report.results.append(AlgorithmResult("double_tree", tour.length, 2 * (g.n - 1), 1, dt))
        tree = config.tree or build_spanning_tree(g, "bfs")
        if len(tree.odd_set) <= 16:
            tour, dt = _timed(christofides_exact, g, metric, tree)
            report.results.append(AlgorithmResult("christofides_exact", tour.length, wall_time=dt))
    return report, sol
