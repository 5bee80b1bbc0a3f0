"""Route planning for multi-radio vehicle networks with frequency-matched links."""

from .harness import (
    ORACLE_MAX_VEHICLES,
    CompareReport,
    CrossCheckReport,
    MetricCheck,
    SweepRow,
    compare_routes,
    cross_check,
    cross_check_batch,
    lowest_connected_pair,
    run_sweep,
    run_sweep_fixed,
    summarize_sweep,
    sweep_csv,
)
from .metrics import Metric, PathAccumulator, RouteStats, f_value, route_stats
from .model import (
    GenSpec,
    Radio,
    Scenario,
    ScenarioError,
    ScenarioFormatError,
    ScenarioValidationError,
    Vehicle,
    generate_scenario,
    load_scenario,
    save_scenario,
    validate_scenario,
)
from .oracle import PathSet, best_route, best_routes_from, enumerate_paths
from .router import (
    Hop,
    Route,
    SearchNode,
    astar,
    expand,
    route_from_sequence,
    select_radio_pair,
)
from .topology import Link, LinkGraph, build_link_graph, euclid, shared_frequency_pairs

__version__ = "0.1.0"

__all__ = [
    "ORACLE_MAX_VEHICLES",
    "CompareReport",
    "CrossCheckReport",
    "GenSpec",
    "Hop",
    "Link",
    "LinkGraph",
    "Metric",
    "MetricCheck",
    "PathAccumulator",
    "PathSet",
    "Radio",
    "Route",
    "RouteStats",
    "Scenario",
    "ScenarioError",
    "ScenarioFormatError",
    "ScenarioValidationError",
    "SearchNode",
    "SweepRow",
    "Vehicle",
    "astar",
    "best_route",
    "best_routes_from",
    "build_link_graph",
    "compare_routes",
    "cross_check",
    "cross_check_batch",
    "enumerate_paths",
    "euclid",
    "expand",
    "f_value",
    "generate_scenario",
    "load_scenario",
    "lowest_connected_pair",
    "route_from_sequence",
    "route_stats",
    "run_sweep",
    "run_sweep_fixed",
    "save_scenario",
    "select_radio_pair",
    "shared_frequency_pairs",
    "summarize_sweep",
    "sweep_csv",
    "validate_scenario",
]
