"""Shortest-path queries over the air network.

Dijkstra over one airplane type's subgraph, by flight time or flight cost.
Ties on total weight break toward the lexicographically smallest node
sequence so results are stable across runs and platforms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .model import AirNetwork, AirplaneType

METRIC_TIME = "time"
METRIC_COST = "cost"


@dataclass(frozen=True)
class PathResult:
    nodes: tuple[str, ...]     # airport ids, source first; length 1 means no movement
    total: float               # summed metric over the hops

    @property
    def hops(self) -> int:
        return len(self.nodes) - 1


def shortest_path(net: AirNetwork, plane_type: str, from_id: str, to_id: str,
                  metric: str = METRIC_TIME, available_only: bool = True,
                  hop_penalty: float = 0.0) -> PathResult | None:
    """Minimum-total path for one airplane type, or None when unreachable.

    ``hop_penalty`` is added per edge and subtracted from the reported total,
    which prices intermediate stopovers (e.g. mandatory turnaround time)
    without charging the final arrival.
    """
    if from_id not in net.airports or to_id not in net.airports:
        return None
    if from_id == to_id:
        return PathResult((from_id,), 0.0)
    weight = (lambda r: float(r.flight_time)) if metric == METRIC_TIME \
        else (lambda r: r.flight_cost)
    done: set[str] = set()
    # Heap entries carry the whole node sequence so equal totals pop in
    # lexicographic order, which fixes the tie-break.
    heap: list[tuple[float, tuple[str, ...]]] = [(0.0, (from_id,))]
    while heap:
        total, path = heapq.heappop(heap)
        node = path[-1]
        if node in done:
            continue
        done.add(node)
        if node == to_id:
            return PathResult(path, total - hop_penalty)
        for route in net.neighbors(node, plane_type, available_only=available_only):
            if route.to_id in done:
                continue
            heapq.heappush(heap, (total + weight(route) + hop_penalty,
                                  path + (route.to_id,)))
    return None


def fastest_delivery_time(net: AirNetwork, types: dict[str, AirplaneType],
                          from_id: str, to_id: str) -> int | None:
    """Quickest single-plane door-to-door time over all types, or None.

    Counts the flight legs, one mandatory turnaround (processing plus the
    landing step) per intermediate stop, and processing at both the pickup
    and the delivery airport. Computed on the static network, ignoring
    temporary availability.
    """
    best: int | None = None
    for ptype in types.values():
        path = shortest_path(net, ptype.id, from_id, to_id, metric=METRIC_TIME,
                             available_only=False,
                             hop_penalty=float(ptype.processing_time))
        if path is None:
            continue
        total = int(round(path.total)) + 2 * ptype.processing_time
        if best is None or total < best:
            best = total
    return best


def min_flight_cost(net: AirNetwork, types: dict[str, AirplaneType],
                    from_id: str, to_id: str) -> float | None:
    """Cheapest one-way flight cost over all types on the static network."""
    best: float | None = None
    for ptype in types.values():
        path = shortest_path(net, ptype.id, from_id, to_id, metric=METRIC_COST,
                             available_only=False)
        if path is None:
            continue
        if best is None or path.total < best:
            best = path.total
    return best


def cargo_cost_bound(net: AirNetwork, types: dict[str, AirplaneType],
                     from_id: str, to_id: str) -> float:
    """Reference flight budget for one cargo: twice the cheapest one-way
    cost, allowing a repositioning leg. Unreachable pairs contribute 0."""
    one_way = min_flight_cost(net, types, from_id, to_id)
    return 0.0 if one_way is None else 2.0 * one_way
