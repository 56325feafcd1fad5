# Convfix Lab
# Scenario documents: defaults, parsing and validation
# October 2026

import json
import os
from dataclasses import asdict, dataclass, field

from config.vars import (
    CESARO_EPS, DECAY_TOL, DEFAULT_GROUPS, DRAWS_PER_GROUP, IDEM_TOL, N_MAX, RANK_TOL,
    SEED, SUITES, SUPPORT_CAP, WINDOW, WORKERS, Z_TOL,
)
from src.errors import GroupSpecError, ScenarioError
from src.groups.cayley import build_group


@dataclass(frozen=True)
class Tolerances:
    rank_tol: float = RANK_TOL
    idem_tol: float = IDEM_TOL
    z_tol: float = Z_TOL
    cesaro_eps: float = CESARO_EPS
    decay_tol: float = DECAY_TOL


@dataclass(frozen=True)
class Limits:
    n_max: int = N_MAX
    window: int = WINDOW
    support_cap: int = SUPPORT_CAP
    workers: int = WORKERS


@dataclass(frozen=True)
class ScenarioConfig:
    """One run of the lab: which groups, how many draws, which suites."""
    groups: tuple[str, ...] = tuple(DEFAULT_GROUPS)
    draws_per_group: int = DRAWS_PER_GROUP
    seed: int = SEED
    tolerances: Tolerances = field(default_factory=Tolerances)
    limits: Limits = field(default_factory=Limits)
    suites: tuple[str, ...] = SUITES

    def to_json(self) -> dict:
        data = asdict(self)
        data["groups"] = list(self.groups)
        data["suites"] = list(self.suites)
        return data


def default_scenario() -> dict:
    return ScenarioConfig().to_json()


def _check_keys(data: dict, allowed: set, path: str) -> None:
    for key in data:
        if key not in allowed:
            raise ScenarioError(f"{path}.{key}" if path else key, "unknown key")


def _number(value, path: str, kind: type, positive: bool = True):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(path, f"expected a number, got {value!r}")
    if kind is int and value != int(value):
        raise ScenarioError(path, f"expected an integer, got {value!r}")
    value = kind(value)
    if positive and value <= 0:
        raise ScenarioError(path, f"must be positive, got {value}")
    return value


def _section(data: dict, name: str, cls: type, kind: type) -> object:
    raw = data.get(name, {})
    if not isinstance(raw, dict):
        raise ScenarioError(name, "expected an object")
    defaults = asdict(cls())
    _check_keys(raw, set(defaults), name)
    values = {key: _number(raw.get(key, default), f"{name}.{key}", kind) for key, default in defaults.items()}
    return cls(**values)


def scenario_from_dict(data: dict) -> ScenarioConfig:
    """
    Validate a decoded scenario; missing keys take their defaults.

    Raises:
        ScenarioError: naming the dotted field path of the first problem.
    """
    if not isinstance(data, dict):
        raise ScenarioError("<root>", "a scenario must be a JSON object")
    _check_keys(data, {"groups", "draws_per_group", "seed", "tolerances", "limits", "suites"}, "")

    groups = data.get("groups", list(DEFAULT_GROUPS))
    if not isinstance(groups, list) or not groups:
        raise ScenarioError("groups", "expected a nonempty list of group specs")
    for i, spec in enumerate(groups):
        if not isinstance(spec, str):
            raise ScenarioError(f"groups[{i}]", f"expected a string, got {spec!r}")
        try:
            build_group(spec)
        except GroupSpecError as e:
            raise ScenarioError(f"groups[{i}]", str(e)) from e

    suites = data.get("suites", list(SUITES))
    if not isinstance(suites, list) or not suites:
        raise ScenarioError("suites", "expected a nonempty list of suite names")
    for i, name in enumerate(suites):
        if name not in SUITES:
            raise ScenarioError(f"suites[{i}]", f"unknown suite {name!r}; known: {', '.join(SUITES)}")

    draws = _number(data.get("draws_per_group", DRAWS_PER_GROUP), "draws_per_group", int)
    seed = _number(data.get("seed", SEED), "seed", int, positive=False)
    if seed < 0:
        raise ScenarioError("seed", f"must be >= 0, got {seed}")
    tolerances = _section(data, "tolerances", Tolerances, float)
    limits = _section(data, "limits", Limits, int)
    return ScenarioConfig(tuple(groups), draws, seed, tolerances, limits, tuple(dict.fromkeys(suites)))


def parse_scenario(text: str) -> ScenarioConfig:
    """Parse a scenario document; JSON syntax errors report line and column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"line {e.lineno}, column {e.colno}", e.msg) from e
    return scenario_from_dict(data)


def load_scenario(file_path: str) -> ScenarioConfig:
    with open(file_path, "r", encoding="utf-8") as f:
        return parse_scenario(f.read())


def init_config(file_path: str) -> bool:
    """
    Write the default scenario to file_path if it does not exist.

    Returns:
        bool: True if the file was created, False if it was already there.
    """
    if os.path.isfile(file_path):
        return False
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(default_scenario(), f, indent=4)
    return True
