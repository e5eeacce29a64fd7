"""Graphic TSP tours from spanning trees and Steiner cycles through their odd vertices."""

from .errors import SteinerCycleNotFound, SteinerTSPError
from .graph import Graph, Metric, from_edge_list, shortest_path_metric
from .kernels import BACKEND
from .spanning import SpanningTree, TreeStrategy, build_spanning_tree
from .steiner import find_steiner_cycle
from .tour import Case, Certificate, SolveConfig, Solution, Tour, build_tour, solve
from .walks import ClosedWalk, SteinerCycle

__all__ = [
    "BACKEND",
    "Case",
    "Certificate",
    "ClosedWalk",
    "Graph",
    "Metric",
    "Solution",
    "SolveConfig",
    "SpanningTree",
    "SteinerCycle",
    "SteinerCycleNotFound",
    "SteinerTSPError",
    "Tour",
    "TreeStrategy",
    "build_spanning_tree",
    "build_tour",
    "find_steiner_cycle",
    "from_edge_list",
    "shortest_path_metric",
    "solve",
]
