"""Best-first route search over the link graph with open/closed bookkeeping."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property

from .metrics import Metric, PathAccumulator, RouteStats, f_value, route_stats
from .model import Scenario
from .topology import Link, LinkGraph


@dataclass(frozen=True)
class Hop:
    """One traversed edge: the vehicle entered, the radio pair used, its cost terms."""

    vehicle_id: int
    radio_pair: tuple[int, int]  # (transmit radio on the previous vehicle, receive radio here)
    distance: float
    bandwidth: float  # receiving radio's bandwidth, kb/s


@dataclass(frozen=True)
class Route:
    source: int
    destination: int
    hops: tuple[Hop, ...]

    @property
    def hop_count(self) -> int:
        return len(self.hops)

    @property
    def vehicle_sequence(self) -> tuple[int, ...]:
        return (self.source, *(h.vehicle_id for h in self.hops))

    @cached_property
    def stats(self) -> RouteStats:
        return route_stats(self)


@dataclass(frozen=True)
class SearchNode:
    """A frontier entry: where we stand, the sums behind us, and how we got here."""

    vehicle_id: int
    acc: PathAccumulator
    f: float
    parent: int | None = None
    radio_pair: tuple[int, int] | None = None  # pair used to enter this vehicle


def select_radio_pair(scenario: Scenario, link: Link) -> tuple[tuple[int, int], float]:
    """Choose which radio pair carries a hop over `link`.

    Highest receiving-side bandwidth wins; ties go to the lowest receiving
    radio id, then the lowest transmitting id. Returns the (tx, rx) pair and
    the receiving bandwidth.
    """
    receiver = scenario.vehicle(link.to_vehicle)
    best = None
    best_key = None
    for tx, rx in link.radio_pairs:
        bw = receiver.radio(rx).bandwidth
        key = (-bw, rx, tx)
        if best_key is None or key < best_key:
            best_key = key
            best = ((tx, rx), bw)
    if best is None:
        raise ValueError(f"link {link.from_vehicle}-{link.to_vehicle} has no radio pairs")
    return best


def expand(
    node: SearchNode,
    scenario: Scenario,
    graph: LinkGraph,
    dest: int,
    metric: Metric,
) -> list[SearchNode]:
    """Children of a just-closed node, one per link-graph neighbor.

    Each child extends the running sums by the link distance and the chosen
    receiving radio's bandwidth, and carries a freshly computed ordering value.
    Children come out in ascending vehicle-id order (the neighbor list order);
    filtering against the closed set is the caller's job.
    """
    goal = scenario.vehicle(dest).position
    children = []
    for link in graph.neighbors(node.vehicle_id):
        pair, bw = select_radio_pair(scenario, link)
        acc = node.acc.extend(link.distance, bw)
        pos = scenario.vehicle(link.to_vehicle).position
        f = f_value(metric, acc, pos, goal)
        children.append(SearchNode(link.to_vehicle, acc, f, node.vehicle_id, pair))
    return children


def astar(
    scenario: Scenario,
    graph: LinkGraph,
    source: int,
    dest: int,
    metric: Metric,
) -> Route | None:
    """Search the link graph for a route from source to dest under `metric`.

    Frontier discipline: pop the entry with the smallest ordering value (ties
    pop the lower vehicle id), close it, expand. Children already closed are
    dropped; children already on the frontier keep whichever state has the
    smaller value, back pointer included. Closed vehicles are never reopened.

    Under DISTANCE the straight-line estimate never overshoots the true
    remaining cost, so the returned route is exactly the shortest. Under
    BANDWIDTH the ratio is not additive and closing can be premature; the
    result is best-effort, and the exhaustive oracle measures how often it is
    exactly optimal.

    Returns None when the frontier drains without reaching dest (out of range,
    or no chain of matching channels). Unknown vehicle ids raise ValueError.
    A query with source == dest returns a zero-hop route.
    """
    for vid in (source, dest):
        if vid not in graph:
            raise ValueError(f"unknown vehicle id: {vid}")
    if source == dest:
        return Route(source, dest, ())

    goal = scenario.vehicle(dest).position
    start_acc = PathAccumulator()
    start = SearchNode(
        source, start_acc, f_value(metric, start_acc, scenario.vehicle(source).position, goal)
    )
    best: dict[int, SearchNode] = {source: start}
    closed: set[int] = set()
    frontier: list[tuple[float, int]] = [(start.f, source)]
    while frontier:
        f, vid = heapq.heappop(frontier)
        if vid in closed:
            continue
        node = best[vid]
        if f != node.f:
            continue  # stale heap entry, superseded by a cheaper rediscovery
        closed.add(vid)
        if vid == dest:
            return _reconstruct(scenario, graph, best, node, source, dest)
        for child in expand(node, scenario, graph, dest, metric):
            cvid = child.vehicle_id
            if cvid in closed:
                continue
            known = best.get(cvid)
            if known is None or child.f < known.f:
                best[cvid] = child
                heapq.heappush(frontier, (child.f, cvid))
    return None


def _reconstruct(scenario, graph, best, node, source, dest) -> Route:
    hops: list[Hop] = []
    while node.parent is not None:
        link = graph.link(node.parent, node.vehicle_id)
        tx, rx = node.radio_pair
        bw = scenario.vehicle(node.vehicle_id).radio(rx).bandwidth
        hops.append(Hop(node.vehicle_id, (tx, rx), link.distance, bw))
        node = best[node.parent]
    hops.reverse()
    return Route(source, dest, tuple(hops))


def route_from_sequence(scenario: Scenario, graph: LinkGraph, sequence) -> Route:
    """Materialize a route from a vehicle-id sequence using the standard radio choice.

    Raises ValueError if consecutive vehicles are not linked.
    """
    seq = tuple(sequence)
    if not seq:
        raise ValueError("sequence must contain at least the source vehicle")
    hops: list[Hop] = []
    for prev, cur in zip(seq, seq[1:]):
        link = graph.link(prev, cur)
        if link is None:
            raise ValueError(f"vehicles {prev} and {cur} are not linked")
        pair, bw = select_radio_pair(scenario, link)
        hops.append(Hop(cur, pair, link.distance, bw))
    return Route(seq[0], seq[-1], tuple(hops))
