"""Core domain types for the airlift simulation.

Everything here is a plain value object: airplane types, airports, routes,
the combined multigraph network, cargo items, airplanes, and the consolidated
per-agent action. The simulation engine owns all mutation; these types only
enforce local invariants and provide pure accessors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

# Airplane states
WAITING = "waiting"
PROCESSING = "processing"
READY = "ready_for_takeoff"
MOVING = "moving"
PLANE_STATES = (WAITING, PROCESSING, READY, MOVING)

# Cargo lifecycle
CARGO_WAITING = "waiting"
CARGO_ONBOARD = "onboard"
DELIVERED_ONTIME = "delivered_ontime"
DELIVERED_LATE = "delivered_late"
MISSED = "missed"
RESOLVED_STATUSES = (DELIVERED_ONTIME, DELIVERED_LATE, MISSED)

# Airport zones
ZONE_PICKUP = "pickup"
ZONE_DROPOFF = "dropoff"
ZONE_NEUTRAL = "neutral"
ZONES = (ZONE_PICKUP, ZONE_DROPOFF, ZONE_NEUTRAL)

# (from airport, to airport, airplane type)
RouteKey = tuple[str, str, str]


class AirliftError(Exception):
    """Base class for all errors raised by this package."""


class ModelError(AirliftError):
    """A domain object violates one of its invariants."""


@dataclass(frozen=True)
class AirplaneType:
    """Static parameters shared by every airplane of one type."""

    id: str
    speed: float                   # distance units per time step
    max_range: float               # longest traversable route
    max_capacity: float            # summed cargo weight limit
    processing_time: int = 1       # steps spent in the processing state
    cost_per_distance: float = 1.0

    def __post_init__(self):
        if self.speed <= 0 or self.max_range <= 0 or self.max_capacity <= 0:
            raise ModelError(f"airplane type {self.id}: speed, max_range and "
                             "max_capacity must be strictly positive")
        if self.processing_time < 1:
            raise ModelError(f"airplane type {self.id}: processing_time must be >= 1")
        if self.cost_per_distance < 0:
            raise ModelError(f"airplane type {self.id}: cost_per_distance must be >= 0")


@dataclass(frozen=True)
class Airport:
    id: str
    position: tuple[float, float]
    working_capacity: int = 1      # planes processable simultaneously
    zone: str = ZONE_NEUTRAL

    def __post_init__(self):
        if self.working_capacity < 1:
            raise ModelError(f"airport {self.id}: working_capacity must be >= 1")
        if self.zone not in ZONES:
            raise ModelError(f"airport {self.id}: unknown zone {self.zone!r}")


def euclidean(a: tuple[float, float], b: tuple[float, float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def flight_time_for(distance: float, speed: float) -> int:
    """Whole time steps for a leg; every hop costs at least one step."""
    return max(1, math.ceil(distance / speed))


def flight_cost_for(distance: float, cost_per_distance: float) -> float:
    return distance * cost_per_distance


@dataclass
class Route:
    """One directed edge of the multigraph, tied to a single airplane type."""

    from_id: str
    to_id: str
    plane_type: str
    distance: float
    flight_time: int
    flight_cost: float
    available: bool = True

    @property
    def key(self) -> RouteKey:
        return (self.from_id, self.to_id, self.plane_type)


def make_route(from_ap: Airport, to_ap: Airport, ptype: AirplaneType) -> Route:
    dist = euclidean(from_ap.position, to_ap.position)
    return Route(
        from_id=from_ap.id,
        to_id=to_ap.id,
        plane_type=ptype.id,
        distance=dist,
        flight_time=flight_time_for(dist, ptype.speed),
        flight_cost=flight_cost_for(dist, ptype.cost_per_distance),
    )


@dataclass
class AirNetwork:
    """Airports plus per-type directed routes, keyed by (from, to, type).

    Parallel edges between the same airport pair are distinguished by the
    airplane type that may traverse them; the reverse direction is stored
    as its own Route so availability can differ per direction.
    """

    airports: dict[str, Airport] = field(default_factory=dict)
    routes: dict[RouteKey, Route] = field(default_factory=dict)

    def add_airport(self, airport: Airport) -> None:
        self.airports[airport.id] = airport

    def add_route(self, route: Route) -> None:
        if route.key in self.routes:
            raise ModelError(f"duplicate route {route.key}")
        self.routes[route.key] = route

    def route(self, from_id: str, to_id: str, plane_type: str) -> Route | None:
        return self.routes.get((from_id, to_id, plane_type))

    def neighbors(self, airport_id: str, plane_type: str,
                  available_only: bool = True) -> list[Route]:
        """Outgoing routes of one type, sorted by destination airport id."""
        out = [r for r in self.routes.values()
               if r.from_id == airport_id and r.plane_type == plane_type
               and (r.available or not available_only)]
        out.sort(key=lambda r: r.to_id)
        return out

    def airports_in_zone(self, zone: str) -> list[Airport]:
        return sorted((a for a in self.airports.values() if a.zone == zone),
                      key=lambda a: a.id)

    def copy(self) -> AirNetwork:
        return AirNetwork(
            airports=dict(self.airports),
            routes={k: replace(r) for k, r in self.routes.items()},
        )


@dataclass
class Cargo:
    id: str
    weight: float
    source: str                    # airport in the pickup zone
    destination: str               # airport in the dropoff zone
    spawn_time: int
    soft_deadline: int
    hard_deadline: int
    status: str = CARGO_WAITING
    location: str = ""             # airport id while on ground, airplane id while onboard
    delivery_time: int | None = None

    def __post_init__(self):
        if self.weight <= 0:
            raise ModelError(f"cargo {self.id}: weight must be positive")
        if not (self.spawn_time <= self.soft_deadline < self.hard_deadline):
            raise ModelError(f"cargo {self.id}: require spawn_time <= soft_deadline "
                             "< hard_deadline")
        if not self.location:
            self.location = self.source

    @property
    def resolved(self) -> bool:
        return self.status in RESOLVED_STATUSES


@dataclass
class FlightLeg:
    """Progress of one airborne hop.

    ``elapsed`` counts completed movement steps; the airplane lands on the
    step after ``elapsed`` reaches ``total``, so ``elapsed == total`` is
    observable for exactly one step boundary (arrival pending).
    """

    from_id: str
    to_id: str
    plane_type: str
    elapsed: int
    total: int

    @property
    def route_key(self) -> RouteKey:
        return (self.from_id, self.to_id, self.plane_type)


@dataclass
class Airplane:
    id: str
    type: str                      # AirplaneType id
    state: str = WAITING
    location: str | FlightLeg = ""
    manifest: set[str] = field(default_factory=set)
    priority: int = 0
    processing_remaining: int = 0
    arrival_time: int = 0          # time of the most recent landing
    # Consolidated-action intents, applied by the engine at the right phase.
    pending_load: set[str] = field(default_factory=set)
    pending_unload: set[str] = field(default_factory=set)
    pending_destination: str | None = None

    @property
    def moving(self) -> bool:
        return isinstance(self.location, FlightLeg)

    @property
    def airport(self) -> str | None:
        """Current airport id, or None while airborne."""
        return None if self.moving else self.location

    def manifest_weight(self, cargo: dict[str, Cargo]) -> float:
        return sum(cargo[c].weight for c in self.manifest)


@dataclass(frozen=True)
class Action:
    """Consolidated per-agent command.

    Any field may be omitted; omitted agents keep their queued intents.
    ``priority`` reorders the airport waiting queue, ``load``/``unload``
    execute at the next processing completion, ``destination`` is consumed
    at the next takeoff opportunity.
    """

    priority: int | None = None
    load: frozenset[str] = frozenset()
    unload: frozenset[str] = frozenset()
    destination: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "load", frozenset(self.load))
        object.__setattr__(self, "unload", frozenset(self.unload))


def cargo_status_at(c: Cargo, delivery_time: int | None, now: int) -> str:
    """Classify a cargo item against its deadlines.

    Delivered at or before the soft deadline is on time; after the soft but
    at or before the hard deadline is late; anything else past the hard
    deadline is missed. Undelivered cargo keeps its current status until the
    hard deadline has passed.
    """
    if delivery_time is not None:
        if delivery_time <= c.soft_deadline:
            return DELIVERED_ONTIME
        if delivery_time <= c.hard_deadline:
            return DELIVERED_LATE
        return MISSED
    if now > c.hard_deadline:
        return MISSED
    return c.status


def validate_network(net: AirNetwork, types) -> list[str]:
    """Check every route and network invariant; return violation messages.

    ``types`` may be any iterable of AirplaneType or a mapping id -> type.
    An empty list means the network is well formed.
    """
    if isinstance(types, dict):
        by_id = dict(types)
    else:
        by_id = {t.id: t for t in types}
    violations: list[str] = []
    for key, route in sorted(net.routes.items()):
        name = f"route {key}"
        if route.from_id == route.to_id:
            violations.append(f"{name}: from and to airports are identical")
        for end in (route.from_id, route.to_id):
            if end not in net.airports:
                violations.append(f"{name}: unknown airport {end!r}")
        ptype = by_id.get(route.plane_type)
        if ptype is None:
            violations.append(f"{name}: unknown airplane type {route.plane_type!r}")
            continue
        if route.distance > ptype.max_range:
            violations.append(
                f"{name}: distance {route.distance:.3f} exceeds max_range "
                f"{ptype.max_range:.3f} of type {ptype.id}")
        expected_time = flight_time_for(route.distance, ptype.speed)
        if route.flight_time != expected_time:
            violations.append(
                f"{name}: flight_time {route.flight_time} != derived {expected_time}")
        if route.flight_time < 1:
            violations.append(f"{name}: flight_time must be >= 1")
        expected_cost = flight_cost_for(route.distance, ptype.cost_per_distance)
        if route.flight_cost != expected_cost:
            violations.append(
                f"{name}: flight_cost {route.flight_cost} != derived {expected_cost}")
        if (route.to_id, route.from_id, route.plane_type) not in net.routes:
            violations.append(f"{name}: reverse direction is not stored")
    return violations
