"""Experiment configuration: JSON documents, dotted overrides, validation."""
from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Tuple, Union

from .agent import AgentConfig
from .environment import InterfaceState, LayeredMedium, check_state

BUNDLED_CONFIGS = ("paper_default.json", "paper_alt.json")


class ConfigError(ValueError):
    """Invalid configuration; ``field`` is the dotted path of the culprit."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "runs/default"
    round_csv: bool = True
    summary: bool = True
    qtable: bool = True
    path_svg: bool = True
    convergence_svg: bool = True
    # episodes drawn in the figures; None means every 10th plus the last
    figure_episodes: Tuple[int, ...] | None = None
    # episode whose path evolution is drawn; None means the last one
    path_episode: int | None = None


@dataclass(frozen=True)
class RunConfig:
    medium: LayeredMedium
    s_ini: InterfaceState
    agent: AgentConfig = AgentConfig()
    reward_scale_mode: Union[str, float] = "normalized"
    outputs: OutputConfig = field(default_factory=OutputConfig)

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "s_ini", check_state(self.medium, self.s_ini))
        except ValueError as exc:
            raise ConfigError("s_ini", str(exc)) from None
        mode = self.reward_scale_mode
        if isinstance(mode, str):
            if mode != "normalized":
                raise ConfigError("reward_scale_mode", 'must be "normalized" or a positive number')
        elif isinstance(mode, bool) or not (mode > 0 and math.isfinite(mode)):
            raise ConfigError("reward_scale_mode", "explicit scale must be positive and finite")

    def log_scale(self, t_init: float) -> float:
        """Natural log of the R-score prefactor."""
        if self.reward_scale_mode == "normalized":
            return t_init
        return math.log(float(self.reward_scale_mode))

    def replace(self, **changes: Any) -> "RunConfig":
        return config_from_dict(_deep_update(config_to_dict(self), changes))


_MEDIUM_KEYS = ("indices", "slab_width", "height", "start", "end")
_AGENT_KEYS = ("epsilon", "alpha", "gamma", "episodes", "rounds_per_episode", "seed")
_OUTPUT_KEYS = tuple(OutputConfig.__dataclass_fields__)
_TOP_KEYS = ("medium", "s_ini", "agent", "reward_scale_mode", "outputs")


def _deep_update(base: dict, changes: dict) -> dict:
    out = copy.deepcopy(base)
    for k, v in changes.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _deep_update(out[k], v)
        else:
            out[k] = v
    return out


def _check_keys(section: dict, allowed: Iterable[str], prefix: str) -> None:
    if not isinstance(section, dict):
        raise ConfigError(prefix or "<root>", "expected an object")
    for key in section:
        if key not in allowed:
            raise ConfigError(f"{prefix}.{key}" if prefix else key, "unknown key")


def _number(value: Any, name: str, integer: bool = False) -> Any:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(name, f"expected a number, got {value!r}")
    if integer:
        if int(value) != value:
            raise ConfigError(name, f"expected an integer, got {value!r}")
        return int(value)
    return value


def _bool(value: Any, name: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(name, f"expected true/false, got {value!r}")
    return value


def config_from_dict(data: dict) -> RunConfig:
    """Build a RunConfig, rejecting unknown keys and naming the bad field."""
    _check_keys(data, _TOP_KEYS, "")
    for key in ("medium", "s_ini"):
        if key not in data:
            raise ConfigError(key, "missing")

    med = data["medium"]
    _check_keys(med, _MEDIUM_KEYS, "medium")
    for key in _MEDIUM_KEYS:
        if key not in med:
            raise ConfigError(f"medium.{key}", "missing")
    indices = med["indices"]
    if not isinstance(indices, list) or not indices:
        raise ConfigError("medium.indices", "expected a non-empty list")
    indices = [_number(n, "medium.indices") for n in indices]
    points = {}
    for key in ("start", "end"):
        pt = med[key]
        if not isinstance(pt, list) or len(pt) != 2:
            raise ConfigError(f"medium.{key}", "expected [x, y]")
        points[key] = tuple(_number(v, f"medium.{key}") for v in pt)
    try:
        medium = LayeredMedium(
            tuple(indices),
            _number(med["slab_width"], "medium.slab_width", integer=True),
            _number(med["height"], "medium.height", integer=True),
            points["start"],
            points["end"],
        )
    except ValueError as exc:
        # LayeredMedium messages start with the offending field name
        name = str(exc).split(":", 1)[0]
        raise ConfigError(f"medium.{name}", str(exc).split(": ", 1)[-1]) from None

    s_ini = data["s_ini"]
    if not isinstance(s_ini, list):
        raise ConfigError("s_ini", "expected a list of integers")
    s_ini = tuple(_number(y, "s_ini", integer=True) for y in s_ini)

    agent_data = data.get("agent", {})
    _check_keys(agent_data, _AGENT_KEYS, "agent")
    kwargs = {}
    for key, value in agent_data.items():
        integer = key in ("episodes", "rounds_per_episode", "seed")
        kwargs[key] = _number(value, f"agent.{key}", integer=integer)
    try:
        agent = AgentConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"agent.{str(exc).split(':', 1)[0]}", str(exc).split(": ", 1)[-1]) from None

    out_data = data.get("outputs", {})
    _check_keys(out_data, _OUTPUT_KEYS, "outputs")
    out_kwargs: dict = {}
    for key, value in out_data.items():
        name = f"outputs.{key}"
        if key == "directory":
            if not isinstance(value, str) or not value:
                raise ConfigError(name, "expected a non-empty path string")
            out_kwargs[key] = value
        elif key == "figure_episodes":
            if value is not None:
                if not isinstance(value, list):
                    raise ConfigError(name, "expected a list of episode numbers or null")
                value = tuple(_number(v, name, integer=True) for v in value)
            out_kwargs[key] = value
        elif key == "path_episode":
            out_kwargs[key] = None if value is None else _number(value, name, integer=True)
        else:
            out_kwargs[key] = _bool(value, name)

    mode = data.get("reward_scale_mode", "normalized")
    if not isinstance(mode, str):
        mode = _number(mode, "reward_scale_mode")
    return RunConfig(medium, s_ini, agent, mode, OutputConfig(**out_kwargs))


def config_to_dict(config: RunConfig) -> dict:
    m, a, o = config.medium, config.agent, config.outputs
    return {
        "medium": {
            "indices": list(m.indices),
            "slab_width": m.slab_width,
            "height": m.height,
            "start": list(m.start),
            "end": list(m.end),
        },
        "s_ini": list(config.s_ini),
        "agent": {k: getattr(a, k) for k in _AGENT_KEYS},
        "reward_scale_mode": config.reward_scale_mode,
        "outputs": {
            k: (list(v) if isinstance(v, tuple) else v)
            for k, v in ((k, getattr(o, k)) for k in _OUTPUT_KEYS)
        },
    }


def _parse_value(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def apply_overrides(data: dict, overrides: Iterable[str]) -> dict:
    """Apply ``a.b=value`` strings to a config document (returns a copy).

    Values are read as JSON where possible (numbers, lists, booleans, null)
    and as bare strings otherwise; type checks happen in config_from_dict.
    """
    out = copy.deepcopy(data)
    for item in overrides:
        if "=" not in item:
            raise ConfigError(item, "override must look like key=value")
        path, raw = item.split("=", 1)
        keys = path.strip().split(".")
        node = out
        for depth, key in enumerate(keys[:-1]):
            sub = node.get(key)
            if sub is None and key in ("agent", "outputs") and depth == 0:
                sub = node[key] = {}
            if not isinstance(sub, dict):
                raise ConfigError(".".join(keys[: depth + 1]), "unknown section")
            node = sub
        node[keys[-1]] = _parse_value(raw.strip())
    return out


def resolve_config_path(path: Union[str, Path]) -> Path:
    """Existing file paths win; otherwise bundled config names are looked up."""
    p = Path(path)
    if p.exists():
        return p
    if p.name in BUNDLED_CONFIGS:
        return Path(str(resources.files("fermatrl") / "configs" / p.name))
    raise FileNotFoundError(f"config file not found: {path}")


def load_config_dict(path: Union[str, Path]) -> dict:
    with open(resolve_config_path(path), encoding="utf-8") as fh:
        return json.load(fh)


def load_config(path: Union[str, Path], overrides: Iterable[str] = ()) -> RunConfig:
    return config_from_dict(apply_overrides(load_config_dict(path), overrides))


def paper_default(**overrides: Any) -> RunConfig:
    """The air/water/glass experiment, optionally with section overrides."""
    return config_from_dict(_deep_update(load_config_dict("paper_default.json"), overrides))


def paper_alt(**overrides: Any) -> RunConfig:
    """The n = (3, 1, 2) experiment starting from (50, 50)."""
    return config_from_dict(_deep_update(load_config_dict("paper_alt.json"), overrides))
