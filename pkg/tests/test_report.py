import json

from steiner_tsp import generators
from steiner_tsp.report import run_instance, validate_report
from steiner_tsp.tour import SolveConfig


def test_report_round_trips_and_validates():
    report, sol = run_instance("pet", generators.petersen(), SolveConfig(), oracle=True)
    d = json.loads(json.dumps(report.to_dict()))
    assert validate_report(d) == []
    assert [r["algorithm"] for r in d["results"]] == ["steiner", "double_tree", "christofides_exact"]
    assert d["results"][0]["achieved"] == sol.tour.length
    assert d["opt"] == d["results"][0]["certificate"]["opt"]


def test_validate_catches_tampering():
    report, _ = run_instance("w", generators.wheel(6), SolveConfig(), oracle=True)
    d = report.to_dict()
    d["results"][0]["achieved"] = d["results"][0]["bound_num"] + 1
    problems = validate_report(d)
    assert any("exceeds bound" in p for p in problems)
    assert any("certificate" in p for p in problems)
    d["opt"] = 10**6
    assert any("below the optimum" in p for p in validate_report(d))
    assert validate_report({}) != []
