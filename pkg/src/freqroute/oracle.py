"""Exhaustive ground truth: enumerate simple routes on small graphs, take the true optimum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .metrics import Metric
from .model import Scenario
from .router import Route, route_from_sequence, select_radio_pair
from .topology import LinkGraph


@dataclass(frozen=True)
class PathSet:
    """Every simple path answering one (source, dest, max_hops) query, in order."""

    routes: tuple[Route, ...]
    source: int
    destination: int
    max_hops: int


def edge_cost_table(scenario: Scenario, graph: LinkGraph) -> dict[int, list[tuple[int, float, float]]]:
    """Per vehicle: (neighbor id, link distance, chosen receiving bandwidth) triples."""
    table: dict[int, list[tuple[int, float, float]]] = {}
    for u in graph.vehicle_ids:
        rows = []
        for link in graph.neighbors(u):
            _, bw = select_radio_pair(scenario, link)
            rows.append((link.to_vehicle, link.distance, bw))
        table[u] = rows
    return table


def _walk_simple_paths(
    adj: dict[int, list[tuple[int, float, float]]],
    source: int,
    max_hops: int,
    visit: Callable[[list[int], float, float], None],
) -> None:
    """Depth-first sweep over every simple path from `source` with 1..max_hops edges.

    Neighbors are taken in ascending id order and shorter prefixes are visited
    before their extensions, so over the whole sweep the paths arrive in
    lexicographic vehicle-sequence order. `visit` receives the live path list
    (source included) plus the distance and bandwidth sums; copy the list
    before keeping it.
    """
    path = [source]
    on_path = {source}

    def descend(u: int, dist_sum: float, bw_sum: float) -> None:
        for w, d, bw in adj[u]:
            if w in on_path:
                continue
            nd = dist_sum + d
            nb = bw_sum + bw
            path.append(w)
            on_path.add(w)
            visit(path, nd, nb)
            if len(path) - 1 < max_hops:
                descend(w, nd, nb)
            on_path.discard(w)
            path.pop()

    descend(source, 0.0, 0.0)


def enumerate_paths(
    scenario: Scenario,
    graph: LinkGraph,
    source: int,
    dest: int,
    max_hops: int,
) -> PathSet:
    """All simple channel-feasible paths from source to dest within the hop cap.

    Paths come out lexicographically ordered by vehicle-id sequence. A
    disconnected pair yields an empty set; source == dest yields the single
    zero-hop route.
    """
    if max_hops < 1:
        raise ValueError(f"max_hops must be >= 1, got {max_hops}")
    for vid in (source, dest):
        if vid not in graph:
            raise ValueError(f"unknown vehicle id: {vid}")
    if source == dest:
        return PathSet((Route(source, dest, ()),), source, dest, max_hops)

    sequences: list[tuple[int, ...]] = []

    def visit(path: list[int], dist_sum: float, bw_sum: float) -> None:
        if path[-1] == dest:
            sequences.append(tuple(path))

    _walk_simple_paths(edge_cost_table(scenario, graph), source, max_hops, visit)
    routes = tuple(route_from_sequence(scenario, graph, seq) for seq in sequences)
    return PathSet(routes, source, dest, max_hops)


def best_route(paths: PathSet, metric: Metric) -> Route | None:
    """The true optimum in a path set, or None when the set is empty.

    Ties on cost go to the lexicographically smaller vehicle sequence.
    """
    if not paths.routes:
        return None
    if paths.source == paths.destination:
        return paths.routes[0]
    if metric is Metric.DISTANCE:
        def key(r: Route):
            return (r.stats.total_distance, r.vehicle_sequence)
    else:
        def key(r: Route):
            return (r.stats.p_value, r.vehicle_sequence)
    return min(paths.routes, key=key)


def best_routes_from(
    scenario: Scenario,
    graph: LinkGraph,
    source: int,
    max_hops: int,
) -> dict[int, dict[Metric, Route]]:
    """True optima from `source` to every reachable vehicle, in one exhaustive sweep.

    For each destination the distance-minimal and ratio-minimal routes are
    tracked incrementally instead of materializing every enumerated path, so
    this is the form the batch cross-checks use. Tie-breaking matches
    best_route: equal costs go to the smaller vehicle sequence.
    """
    if max_hops < 1:
        raise ValueError(f"max_hops must be >= 1, got {max_hops}")
    if source not in graph:
        raise ValueError(f"unknown vehicle id: {source}")

    best: dict[int, dict[Metric, tuple[float, tuple[int, ...]]]] = {}

    def visit(path: list[int], dist_sum: float, bw_sum: float) -> None:
        slot = best.setdefault(path[-1], {})
        for metric, cost in (
            (Metric.DISTANCE, dist_sum),
            (Metric.BANDWIDTH, dist_sum / bw_sum),
        ):
            cur = slot.get(metric)
            if cur is None or cost < cur[0]:
                slot[metric] = (cost, tuple(path))
            elif cost == cur[0]:
                seq = tuple(path)
                if seq < cur[1]:
                    slot[metric] = (cost, seq)

    _walk_simple_paths(edge_cost_table(scenario, graph), source, max_hops, visit)
    return {
        dest: {
            metric: route_from_sequence(scenario, graph, seq)
            for metric, (_, seq) in slots.items()
        }
        for dest, slots in best.items()
    }
