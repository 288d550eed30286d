#!/usr/bin/env python3
"""
Scenario config parser

Line-oriented format: `[section]` headers, `key = value` lines and `#`
comments. The grammar is documented in docs/config.md.
"""

import logging
import re
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import ValidationError

from dynamics import Boundary, Interior, StatePoint, action_registry, expression_symbol, named_symbol
from dynamics.orbits import PulledBackFamily
from phasespace import ActionError, ConfigError, OrbitSpecError, parse_constant
from .models import Scenario

logger = logging.getLogger(__name__)

RawConfig = Dict[str, Tuple[str, Optional[int]]]

_SECTION_RE = re.compile(r"^\[\s*([A-Za-z_][\w-]*)\s*\]$")
_POINT_RE = re.compile(r"^([A-Za-z][\w*-]*)?\s*\((.*)\)$")
_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


# ---------------------------------------------------------------------------
# Value converters
# ---------------------------------------------------------------------------

def _text(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    return value


def _real(value: str) -> float:
    return parse_constant(value)


def _integer(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"expected an integer, got '{value}'")


def _boolean(value: str) -> bool:
    lowered = value.lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigError(f"expected true or false, got '{value}'")


def _real_list(value: str) -> List[float]:
    return [parse_constant(item) for item in value.split(",") if item.strip()]


def _word_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _frequency(value: str) -> Dict[str, List[List[float]]]:
    rows = [_real_list(row) for row in value.split(";") if row.strip()]
    return {"frequency": rows}


def _ladder(value: str) -> List[Tuple[float, int]]:
    rungs = []
    for item in _word_list(value):
        if ":" not in item:
            raise ConfigError(f"ladder rung must be L:N, got '{item}'")
        L, N = item.split(":", 1)
        rungs.append((parse_constant(L), _integer(N.strip())))
    return rungs


def _zeta(value: str) -> Tuple[float, float]:
    try:
        z = complex(value.replace(" ", ""))
    except ValueError:
        raise ConfigError(f"expected a complex number such as 0.5+0.1j, got '{value}'")
    return (z.real, z.imag)


def _points(value: str) -> List[str]:
    points = [re.sub(r"\s+", "", item) for item in value.split(";") if item.strip()]
    for item in points:
        parse_point(item)
    return points


# config key -> (Scenario field, converter)
KNOWN_KEYS: Dict[str, Tuple[str, Callable]] = {
    "action.id": ("action", _text),
    "action.frequency": ("action_params", _frequency),
    "symbol.expr": ("expression", _text),
    "symbol.name": ("symbol_name", _text),
    "symbol.partner": ("partner", _text),
    "symbol.bound": ("symbol_bound", _real),
    "symbol.smooth": ("smooth", _boolean),
    "grid.L": ("L", _real),
    "grid.N": ("N", _integer),
    "grid.ladder": ("ladder", _ladder),
    "run.name": ("name", _text),
    "run.hbar": ("hbar_schedule", _real_list),
    "run.base_points": ("base_points", _points),
    "run.experiments": ("experiments", _word_list),
    "run.seed": ("seed", _integer),
    "run.output": ("output_path", _text),
    "run.count": ("count", _integer),
    "run.zeta": ("zeta", _zeta),
    "run.gap": ("gap", _real),
    "run.resolution": ("resolution", _real),
    "run.boundary_samples": ("boundary_samples", _integer),
    "run.quadrature_points": ("quadrature_points", _integer),
}
SECTIONS = ("action", "symbol", "grid", "run")
_FIELD_TO_KEY = {field: key for key, (field, _) in KNOWN_KEYS.items()}


# ---------------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------------

def _coordinate(text: str) -> float:
    lowered = text.strip().lower()
    if lowered in ("inf", "+inf"):
        return float("inf")
    if lowered == "-inf":
        return float("-inf")
    return parse_constant(text)


def parse_point(text: str) -> StatePoint:
    """
    Parse '(x,xi)' as an interior point or 'tag(c1,...)' as a boundary point

    Raises:
        ConfigError: If the text is not in point syntax
    """
    match = _POINT_RE.match(text.strip())
    if not match:
        raise ConfigError(f"'{text}' is not a point; use (x,xi) or tag(c1,...)")
    tag, body = match.group(1), match.group(2)
    try:
        coords = [_coordinate(c) for c in body.split(",")] if body.strip() else []
    except OrbitSpecError as e:
        raise ConfigError(f"bad coordinate in '{text}': {e}")
    if tag is None:
        if len(coords) != 2:
            raise ConfigError(f"interior point '{text}' needs 2 coordinates")
        if not all(np.isfinite(coords)):
            raise ConfigError(f"interior point '{text}' must be finite")
        return Interior.at(*coords)
    return Boundary(tag, tuple(coords))


# ---------------------------------------------------------------------------
# Text -> raw key/value map
# ---------------------------------------------------------------------------

def parse_config_text(text: str) -> RawConfig:
    """
    Split config text into 'section.key' -> (value, line number)

    Raises:
        ConfigError: On malformed lines, unknown sections or keys, duplicates
    """
    raw: RawConfig = {}
    section = None
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        header = _SECTION_RE.match(line)
        if header:
            section = header.group(1)
            if section not in SECTIONS:
                raise ConfigError(f"unknown section [{section}]", line=number)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got '{line}'", line=number)
        if section is None:
            raise ConfigError("key outside of any [section]", line=number)
        key, value = (part.strip() for part in line.split("=", 1))
        dotted = f"{section}.{key}"
        if dotted not in KNOWN_KEYS:
            raise ConfigError(f"unknown key '{key}' in [{section}]", line=number, field=dotted)
        if dotted in raw:
            raise ConfigError(f"duplicate key '{key}'", line=number, field=dotted)
        if not value:
            raise ConfigError("empty value", line=number, field=dotted)
        raw[dotted] = (value, number)
    return raw


def apply_overrides(raw: RawConfig, overrides: Sequence[str]) -> RawConfig:
    """
    Apply dotted 'section.key=value' overrides

    Raises:
        ConfigError: If an override is malformed or names an unknown key
    """
    merged = dict(raw)
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override must be section.key=value, got '{item}'")
        key, value = (part.strip() for part in item.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError(f"override names an unknown key '{key}'", field=key)
        merged[key] = (value, None)
    return merged


# ---------------------------------------------------------------------------
# Raw map -> validated Scenario
# ---------------------------------------------------------------------------

def _convert(raw: RawConfig) -> Dict[str, object]:
    fields: Dict[str, object] = {}
    for key, (value, line) in raw.items():
        field, converter = KNOWN_KEYS[key]
        try:
            fields[field] = converter(value)
        except ConfigError as e:
            raise ConfigError(e.message, line=line, field=key)
        except OrbitSpecError as e:
            raise ConfigError(str(e), line=line, field=key)
    return fields


def _from_validation_error(error: ValidationError, raw: RawConfig) -> ConfigError:
    first = error.errors()[0]
    loc = first.get("loc") or ("",)
    field = str(loc[0])
    key = _FIELD_TO_KEY.get(field)
    line = raw[key][1] if key in raw else None
    message = str(first.get("msg", "invalid value")).removeprefix("Value error, ")
    return ConfigError(message, line=line, field=key or field or None)


def check_scenario(scenario: Scenario, raw: Optional[RawConfig] = None) -> Scenario:
    """
    Cross-field checks: action exists, base points belong to it, symbols are
    compatible with its state space

    Raises:
        ConfigError: Naming the offending field
    """
    raw = raw or {}

    def fail(message: str, key: str) -> ConfigError:
        return ConfigError(message, line=raw[key][1] if key in raw else None, field=key)

    try:
        action = action_registry.create(scenario.action, **scenario.action_params)
    except ActionError as e:
        known = scenario.action in action_registry.actions
        key = "action.frequency" if scenario.action_params and known else "action.id"
        raise fail(str(e), key)

    try:
        symbol = (named_symbol(scenario.symbol_name) if scenario.symbol_name
                  else expression_symbol(scenario.expression, bound=scenario.symbol_bound))
    except OrbitSpecError as e:
        raise fail(str(e), "symbol.name" if scenario.symbol_name else "symbol.expr")

    if scenario.partner is not None:
        try:
            expression_symbol(scenario.partner)
        except OrbitSpecError as e:
            raise fail(str(e), "symbol.partner")

    family = PulledBackFamily(symbol, action)
    for text in scenario.base_points:
        try:
            family.at(parse_point(text))
        except (ActionError, ConfigError) as e:
            raise fail(f"base point {text}: {e}", "run.base_points")

    if scenario.ladder is not None:
        for (L0, N0), (L1, N1) in zip(scenario.ladder, scenario.ladder[1:]):
            if L1 <= L0 or N1 <= N0:
                raise fail(f"ladder rungs must grow: {L0:g}:{N0} -> {L1:g}:{N1}", "grid.ladder")
    return scenario


def _default_point(action_id: str, params: Dict) -> str:
    action = action_registry.create(action_id, **params)
    first = next(iter(action.quasi_orbit_table().values()))
    return str(first.generating_point)


def load_scenario(text: str, overrides: Sequence[str] = ()) -> Scenario:
    """
    Parse and validate a scenario config

    Args:
        text: Config text
        overrides: Dotted 'section.key=value' overrides applied before validation

    Returns:
        Validated Scenario

    Raises:
        ConfigError: Parse error with its line number, or validation error naming the field
    """
    raw = apply_overrides(parse_config_text(text), overrides)
    for required in ("action.id", "grid.L", "grid.N"):
        if required not in raw:
            raise ConfigError("missing required key", field=required)
    fields = _convert(raw)
    fields.setdefault("name", "scenario")
    if not fields.get("base_points"):
        try:
            fields["base_points"] = [_default_point(fields["action"], fields.get("action_params", {}))]
        except ActionError as e:
            known = fields["action"] in action_registry.actions
            key = "action.frequency" if known and "action.frequency" in raw else "action.id"
            raise ConfigError(str(e), line=raw[key][1], field=key)
    try:
        scenario = Scenario(**fields)
    except ValidationError as e:
        raise _from_validation_error(e, raw)
    logger.debug("loaded scenario %s (%s)", scenario.name, scenario.action)
    return check_scenario(scenario, raw)


def load_scenario_file(path: Union[str, Path], overrides: Sequence[str] = ()) -> Scenario:
    """
    Read and load a config file

    Raises:
        ConfigError: If the file cannot be read (the message names the path) or is invalid
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file '{path}': {e.strerror or e}")
    return load_scenario(text, overrides)


# ---------------------------------------------------------------------------
# Scenario -> text
# ---------------------------------------------------------------------------

def _number(value: float) -> str:
    return f"{value:.17g}" if value != int(value) else f"{int(value)}"


def scenario_to_config(scenario: Scenario) -> str:
    """Render a Scenario in the config grammar; load_scenario reads it back"""
    lines = ["[action]", f"id = {scenario.action}"]
    frequency = scenario.action_params.get("frequency")
    if frequency is not None:
        rows = np.asarray(frequency, dtype=float)
        lines.append("frequency = " + "; ".join(",".join(_number(v) for v in row) for row in rows))

    lines += ["", "[symbol]"]
    if scenario.symbol_name is not None:
        lines.append(f"name = {scenario.symbol_name}")
    else:
        lines.append(f"expr = {scenario.expression}")
    if scenario.partner is not None:
        lines.append(f"partner = {scenario.partner}")
    if scenario.symbol_bound is not None:
        lines.append(f"bound = {_number(scenario.symbol_bound)}")
    if not scenario.smooth:
        lines.append("smooth = false")

    lines += ["", "[grid]", f"L = {_number(scenario.L)}", f"N = {scenario.N}"]
    if scenario.ladder is not None:
        lines.append("ladder = " + ", ".join(f"{_number(L)}:{N}" for L, N in scenario.ladder))

    lines += [
        "",
        "[run]",
        f"name = {scenario.name}",
        "hbar = " + ", ".join(_number(h) for h in scenario.hbar_schedule),
        "base_points = " + "; ".join(scenario.base_points),
        "experiments = " + ", ".join(e.value for e in scenario.experiments),
        f"seed = {scenario.seed}",
    ]
    if scenario.output_path is not None:
        lines.append(f"output = {scenario.output_path}")
    if scenario.count != Scenario.model_fields["count"].default:
        lines.append(f"count = {scenario.count}")
    if scenario.zeta is not None:
        re_, im = scenario.zeta
        lines.append(f"zeta = {complex(re_, im)}".replace("(", "").replace(")", ""))
    if scenario.gap != Scenario.model_fields["gap"].default:
        lines.append(f"gap = {_number(scenario.gap)}")
    if scenario.resolution is not None:
        lines.append(f"resolution = {_number(scenario.resolution)}")
    if scenario.boundary_samples != Scenario.model_fields["boundary_samples"].default:
        lines.append(f"boundary_samples = {scenario.boundary_samples}")
    if scenario.quadrature_points != Scenario.model_fields["quadrature_points"].default:
        lines.append(f"quadrature_points = {scenario.quadrature_points}")
    return "\n".join(lines) + "\n"
