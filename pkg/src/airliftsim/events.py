"""Stochastic disruption schedules: route malfunctions and dynamic cargo.

Everything random is sampled up front when the scenario is generated, so
stepping an episode never touches an RNG and replays are exact. The engine
consumes the schedules through an EventSchedule, which exposes per-time-step
availability toggles and cargo spawns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import Cargo, RouteKey


@dataclass(frozen=True)
class MalfunctionEvent:
    """A route outage over the half-open interval [start, start + duration)."""

    route: RouteKey
    start: int
    duration: int

    @property
    def end(self) -> int:
        return self.start + self.duration


@dataclass(frozen=True)
class CargoSpawnEvent:
    time: int
    cargo: Cargo


def merge_intervals(events: list[MalfunctionEvent]) -> list[MalfunctionEvent]:
    """Merge overlapping or abutting outages per route key.

    Keeps availability toggles well nested: each route alternates strictly
    between going down and coming back up.
    """
    by_route: dict[RouteKey, list[MalfunctionEvent]] = {}
    for ev in events:
        by_route.setdefault(ev.route, []).append(ev)
    merged: list[MalfunctionEvent] = []
    for route in sorted(by_route):
        spans = sorted(by_route[route], key=lambda e: e.start)
        cur_start, cur_end = spans[0].start, spans[0].end
        for ev in spans[1:]:
            if ev.start <= cur_end:
                cur_end = max(cur_end, ev.end)
            else:
                merged.append(MalfunctionEvent(route, cur_start, cur_end - cur_start))
                cur_start, cur_end = ev.start, ev.end
        merged.append(MalfunctionEvent(route, cur_start, cur_end - cur_start))
    merged.sort(key=lambda e: (e.start, e.route))
    return merged


def sample_malfunctions(rate: float, horizon: int, routes: list[RouteKey],
                        duration_range: tuple[int, int],
                        rng: np.random.Generator) -> list[MalfunctionEvent]:
    """Poisson(rate) malfunction onsets per time step over the horizon.

    Each onset strikes a uniformly chosen route and lasts a uniform integer
    number of steps from ``duration_range`` (inclusive both ends). Intervals
    on the same route are merged.
    """
    if rate < 0:
        raise ValueError("malfunction rate must be >= 0")
    if rate == 0 or not routes:
        return []
    counts = rng.poisson(rate, horizon)
    total = int(counts.sum())
    if total == 0:
        return []
    times = np.repeat(np.arange(horizon), counts)
    keys = sorted(routes)
    idx = rng.integers(0, len(keys), size=total)
    lo, hi = duration_range
    durations = rng.integers(lo, hi + 1, size=total)
    events = [MalfunctionEvent(keys[i], int(t), int(d))
              for t, i, d in zip(times, idx, durations)]
    return merge_intervals(events)


def sample_cargo_spawns(rate: float, horizon: int, sample_one,
                        rng: np.random.Generator) -> list[CargoSpawnEvent]:
    """Poisson(rate) cargo arrivals per step; ``sample_one(spawn_time, rng)``
    draws the cargo itself (see generation.sample_cargo)."""
    if rate < 0:
        raise ValueError("cargo rate must be >= 0")
    if rate == 0:
        return []
    counts = rng.poisson(rate, horizon)
    spawns: list[CargoSpawnEvent] = []
    for t in np.flatnonzero(counts):
        for _ in range(int(counts[t])):
            spawns.append(CargoSpawnEvent(int(t), sample_one(int(t), rng)))
    return spawns


@dataclass
class EventSchedule:
    """Materialized event streams plus per-step lookup tables."""

    malfunctions: list[MalfunctionEvent] = field(default_factory=list)
    spawns: list[CargoSpawnEvent] = field(default_factory=list)
    _starts: dict[int, list[RouteKey]] = field(default_factory=dict, repr=False)
    _ends: dict[int, list[RouteKey]] = field(default_factory=dict, repr=False)
    _spawn_at: dict[int, list[Cargo]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for ev in self.malfunctions:
            self._starts.setdefault(ev.start, []).append(ev.route)
            self._ends.setdefault(ev.end, []).append(ev.route)
        for sp in self.spawns:
            self._spawn_at.setdefault(sp.time, []).append(sp.cargo)

    def outages_starting(self, time: int) -> list[RouteKey]:
        return sorted(self._starts.get(time, ()))

    def outages_ending(self, time: int) -> list[RouteKey]:
        return sorted(self._ends.get(time, ()))

    def cargo_spawning(self, time: int) -> list[Cargo]:
        return sorted(self._spawn_at.get(time, ()), key=lambda c: c.id)

    def last_spawn_time(self) -> int:
        return max((sp.time for sp in self.spawns), default=-1)


def apply_events(state, time: int) -> None:
    """Fire scheduled route toggles and cargo spawns for one time step.

    Must be called once per step with consecutive times. Outage ends apply
    before new starts so back-to-back intervals leave the route down.
    The engine logs the resulting changes itself.
    """
    schedule: EventSchedule = state.schedule
    for key in schedule.outages_ending(time):
        route = state.network.routes.get(key)
        if route is not None:
            route.available = True
    for key in schedule.outages_starting(time):
        route = state.network.routes.get(key)
        if route is not None:
            route.available = False
    for cargo in schedule.cargo_spawning(time):
        state.add_cargo(cargo)
