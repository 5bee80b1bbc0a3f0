"""Domain model: radios, vehicles, scenarios, plus generation and JSON persistence."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property


class ScenarioError(Exception):
    """Base class for anything wrong with a scenario document."""


class ScenarioFormatError(ScenarioError):
    """The document does not conform to the scenario schema."""


class ScenarioValidationError(ScenarioError):
    """The document parsed, but the scenario violates model invariants."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class Radio:
    """A transceiver: the channel it operates on and its bandwidth rating.

    Frequencies are opaque channel identifiers; two radios can talk iff their
    channels compare equal. Bandwidth is in kb/s and must be positive.
    """

    radio_id: int
    frequency: int
    bandwidth: float


@dataclass(frozen=True)
class Vehicle:
    vehicle_id: int
    position: tuple[float, float]
    radios: tuple[Radio, ...]

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(self.position))
        object.__setattr__(self, "radios", tuple(self.radios))

    def radio(self, radio_id: int) -> Radio:
        for r in self.radios:
            if r.radio_id == radio_id:
                return r
        raise KeyError(f"vehicle {self.vehicle_id} has no radio {radio_id}")


@dataclass(frozen=True)
class Scenario:
    """The whole world: area bounds, communication range, and the vehicles.

    Immutable after construction, so a single instance is safe to share
    between concurrent searches.
    """

    area: tuple[float, float]
    comm_range: float
    vehicles: tuple[Vehicle, ...]

    def __post_init__(self):
        object.__setattr__(self, "area", tuple(self.area))
        object.__setattr__(self, "vehicles", tuple(self.vehicles))

    @cached_property
    def _by_id(self) -> dict[int, Vehicle]:
        return {v.vehicle_id: v for v in self.vehicles}

    def __contains__(self, vehicle_id: int) -> bool:
        return vehicle_id in self._by_id

    def vehicle(self, vehicle_id: int) -> Vehicle:
        try:
            return self._by_id[vehicle_id]
        except KeyError:
            raise KeyError(f"unknown vehicle id: {vehicle_id}") from None

    @property
    def vehicle_ids(self) -> tuple[int, ...]:
        return tuple(v.vehicle_id for v in self.vehicles)


def validate_scenario(scenario: Scenario) -> list[str]:
    """Collect every invariant violation; an empty list means the scenario is valid.

    Violations are reported as data rather than raised so callers can show all
    of them at once. Checks: positive area and range, unique vehicle ids,
    non-empty radio lists with unique per-vehicle radio ids, positive
    bandwidths, and positions inside the area bounds.
    """
    problems: list[str] = []
    w, h = scenario.area
    if not (w > 0 and h > 0):
        problems.append(f"area dimensions must be > 0, got {w} x {h}")
    if not scenario.comm_range > 0:
        problems.append(f"comm_range must be > 0, got {scenario.comm_range}")
    seen: set[int] = set()
    for v in scenario.vehicles:
        if v.vehicle_id in seen:
            problems.append(f"duplicate vehicle_id {v.vehicle_id}")
        seen.add(v.vehicle_id)
        x, y = v.position
        if not (0 <= x <= w and 0 <= y <= h):
            problems.append(
                f"vehicle {v.vehicle_id}: position ({x}, {y}) outside area {w} x {h}"
            )
        if not v.radios:
            problems.append(f"vehicle {v.vehicle_id}: empty radio list")
        radio_seen: set[int] = set()
        for r in v.radios:
            if r.radio_id in radio_seen:
                problems.append(f"vehicle {v.vehicle_id}: duplicate radio_id {r.radio_id}")
            radio_seen.add(r.radio_id)
            if not r.bandwidth > 0:
                problems.append(
                    f"vehicle {v.vehicle_id} radio {r.radio_id}: bandwidth must be > 0,"
                    f" got {r.bandwidth}"
                )
    return problems


@dataclass(frozen=True)
class GenSpec:
    """Parameters for seeded random scenario generation."""

    seed: int
    vehicle_count: int
    area: tuple[float, float]
    comm_range: float
    radios_per_vehicle: int
    frequency_pool: tuple[int, ...]
    bandwidth_range: tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "area", tuple(self.area))
        object.__setattr__(self, "frequency_pool", tuple(self.frequency_pool))
        object.__setattr__(self, "bandwidth_range", tuple(self.bandwidth_range))


def _check_genspec(spec: GenSpec) -> None:
    if spec.vehicle_count < 1:
        raise ValueError(f"vehicle_count must be >= 1, got {spec.vehicle_count}")
    if spec.radios_per_vehicle < 1:
        raise ValueError(f"radios_per_vehicle must be >= 1, got {spec.radios_per_vehicle}")
    if not spec.frequency_pool:
        raise ValueError("frequency_pool must not be empty")
    w, h = spec.area
    if not (w > 0 and h > 0):
        raise ValueError(f"area dimensions must be > 0, got {w} x {h}")
    if not spec.comm_range > 0:
        raise ValueError(f"comm_range must be > 0, got {spec.comm_range}")
    lo, hi = spec.bandwidth_range
    if not (0 < lo <= hi):
        raise ValueError(f"bandwidth_range must satisfy 0 < min <= max, got ({lo}, {hi})")


def generate_scenario(spec: GenSpec) -> Scenario:
    """Deterministically generate a scenario: equal specs yield identical scenarios.

    Positions are uniform over the area. Each vehicle gets the same number of
    radios, channels drawn uniformly from the pool and bandwidths uniform over
    `bandwidth_range`, rounded to one decimal. Draw order is fixed (per vehicle:
    x, y, then per radio: channel, bandwidth), so results are stable across runs.
    """
    _check_genspec(spec)
    rng = random.Random(spec.seed)
    w, h = spec.area
    lo, hi = spec.bandwidth_range
    vehicles = []
    for vid in range(1, spec.vehicle_count + 1):
        x = rng.uniform(0.0, w)
        y = rng.uniform(0.0, h)
        radios = []
        for rid in range(1, spec.radios_per_vehicle + 1):
            freq = rng.choice(spec.frequency_pool)
            bw = round(rng.uniform(lo, hi), 1)
            if bw <= 0:
                bw = 0.1  # rounding can land on 0.0 when the range min is tiny
            radios.append(Radio(rid, freq, bw))
        vehicles.append(Vehicle(vid, (x, y), tuple(radios)))
    return Scenario((w, h), spec.comm_range, tuple(vehicles))


# --- JSON persistence ------------------------------------------------------
#
# The on-disk document mirrors the model with short field names:
#   {"area": {"width", "height"}, "comm_range",
#    "vehicles": [{"id", "x", "y", "radios": [{"id", "freq", "bw"}]}]}
# Unknown fields are rejected rather than ignored so typos surface early.


def save_scenario(scenario: Scenario) -> str:
    """Serialize to the JSON document format (trailing newline included)."""
    doc = {
        "area": {"width": float(scenario.area[0]), "height": float(scenario.area[1])},
        "comm_range": float(scenario.comm_range),
        "vehicles": [
            {
                "id": v.vehicle_id,
                "x": float(v.position[0]),
                "y": float(v.position[1]),
                "radios": [
                    {"id": r.radio_id, "freq": r.frequency, "bw": float(r.bandwidth)}
                    for r in v.radios
                ],
            }
            for v in scenario.vehicles
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document.

    Raises ScenarioFormatError for malformed JSON, missing or unknown fields,
    and wrong types (with the offending field named), and
    ScenarioValidationError when the parsed scenario breaks model invariants.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"invalid JSON: {exc}") from exc
    scenario = _scenario_from_raw(raw)
    problems = validate_scenario(scenario)
    if problems:
        raise ScenarioValidationError(problems)
    return scenario


def _fields(obj, path: str, required: tuple[str, ...]) -> None:
    if not isinstance(obj, dict):
        raise ScenarioFormatError(f"{path}: expected an object")
    for name in required:
        if name not in obj:
            raise ScenarioFormatError(f"{path}: missing field '{name}'")
    for name in obj:
        if name not in required:
            raise ScenarioFormatError(f"{path}: unknown field '{name}'")


def _number(value, path: str) -> float:
    # bool is an int subclass; it is never a valid number here
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFormatError(f"{path}: expected a number")
    return float(value)


def _integer(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioFormatError(f"{path}: expected an integer")
    return value


def _scenario_from_raw(raw) -> Scenario:
    _fields(raw, "scenario", ("area", "comm_range", "vehicles"))
    _fields(raw["area"], "area", ("width", "height"))
    width = _number(raw["area"]["width"], "area.width")
    height = _number(raw["area"]["height"], "area.height")
    comm_range = _number(raw["comm_range"], "comm_range")
    if not isinstance(raw["vehicles"], list):
        raise ScenarioFormatError("vehicles: expected a list")
    vehicles = []
    for i, rv in enumerate(raw["vehicles"]):
        vpath = f"vehicles[{i}]"
        _fields(rv, vpath, ("id", "x", "y", "radios"))
        vid = _integer(rv["id"], f"{vpath}.id")
        x = _number(rv["x"], f"{vpath}.x")
        y = _number(rv["y"], f"{vpath}.y")
        if not isinstance(rv["radios"], list):
            raise ScenarioFormatError(f"{vpath}.radios: expected a list")
        radios = []
        for j, rr in enumerate(rv["radios"]):
            rpath = f"{vpath}.radios[{j}]"
            _fields(rr, rpath, ("id", "freq", "bw"))
            radios.append(
                Radio(
                    _integer(rr["id"], f"{rpath}.id"),
                    _integer(rr["freq"], f"{rpath}.freq"),
                    _number(rr["bw"], f"{rpath}.bw"),
                )
            )
        vehicles.append(Vehicle(vid, (x, y), tuple(radios)))
    return Scenario((width, height), comm_range, tuple(vehicles))
