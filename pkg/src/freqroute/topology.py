"""Link graph construction: which vehicles can actually talk to each other."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .model import Scenario, Vehicle


def euclid(p: tuple[float, float], q: tuple[float, float]) -> float:
    """Straight-line distance between two (x, y) points, in meters."""
    return math.hypot(p[0] - q[0], p[1] - q[1])


def shared_frequency_pairs(a: Vehicle, b: Vehicle) -> list[tuple[int, int]]:
    """All (a-radio, b-radio) id pairs tuned to the same channel.

    Ordered by a's radio list then b's. An empty result means these two
    vehicles cannot link no matter how close they are.
    """
    return [
        (ra.radio_id, rb.radio_id)
        for ra in a.radios
        for rb in b.radios
        if ra.frequency == rb.frequency
    ]


@dataclass(frozen=True)
class Link:
    """A usable hop: the two vehicles are in range and share at least one channel."""

    from_vehicle: int
    to_vehicle: int
    distance: float
    radio_pairs: tuple[tuple[int, int], ...]  # (from-side radio, to-side radio)


class LinkGraph:
    """Adjacency over vehicles that are within range and share a frequency.

    Neighbor lists are sorted by vehicle id so traversals are reproducible.
    The graph is symmetric: link(a, b) exists iff link(b, a) does, with the
    same distance and mirrored radio pairs.
    """

    def __init__(self, adjacency: dict[int, list[Link]]):
        self._adj: dict[int, tuple[Link, ...]] = {
            vid: tuple(links) for vid, links in adjacency.items()
        }

    def __contains__(self, vehicle_id: int) -> bool:
        return vehicle_id in self._adj

    @property
    def vehicle_ids(self) -> tuple[int, ...]:
        return tuple(self._adj)

    def neighbors(self, vehicle_id: int) -> tuple[Link, ...]:
        return self._adj[vehicle_id]

    def link(self, from_vehicle: int, to_vehicle: int) -> Link | None:
        for l in self._adj[from_vehicle]:
            if l.to_vehicle == to_vehicle:
                return l
        return None

    def link_count(self) -> int:
        """Number of undirected links."""
        return sum(len(links) for links in self._adj.values()) // 2

    def reachable(self, vehicle_id: int) -> set[int]:
        """Every vehicle connected to `vehicle_id`, itself included."""
        seen = {vehicle_id}
        queue = deque([vehicle_id])
        while queue:
            u = queue.popleft()
            for l in self._adj[u]:
                if l.to_vehicle not in seen:
                    seen.add(l.to_vehicle)
                    queue.append(l.to_vehicle)
        return seen

    def components(self) -> list[set[int]]:
        """Connected components, ordered by their smallest vehicle id."""
        out: list[set[int]] = []
        done: set[int] = set()
        for vid in sorted(self._adj):
            if vid in done:
                continue
            comp = self.reachable(vid)
            done |= comp
            out.append(comp)
        return out


def build_link_graph(scenario: Scenario) -> LinkGraph:
    """Derive the link graph from vehicle positions, range, and channel plans.

    A link between a and b exists iff euclid(a, b) <= comm_range (equality
    counts as connected) and shared_frequency_pairs(a, b) is non-empty. Every
    vehicle appears as a vertex even when isolated.
    """
    order = sorted(scenario.vehicles, key=lambda v: v.vehicle_id)
    adjacency: dict[int, list[Link]] = {v.vehicle_id: [] for v in order}
    for i, a in enumerate(order):
        for b in order[i + 1 :]:
            d = euclid(a.position, b.position)
            if d > scenario.comm_range:
                continue
            pairs = shared_frequency_pairs(a, b)
            if not pairs:
                continue
            adjacency[a.vehicle_id].append(
                Link(a.vehicle_id, b.vehicle_id, d, tuple(pairs))
            )
            adjacency[b.vehicle_id].append(
                Link(b.vehicle_id, a.vehicle_id, d, tuple(shared_frequency_pairs(b, a)))
            )
    return LinkGraph(adjacency)
