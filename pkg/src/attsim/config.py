"""Flat key=value experiment configuration with validated defaults."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .mechanisms import MechanismParams, MechanismSchedule, Mode
from .netgen import GenParams


class ConfigError(ValueError):
    """Bad configuration file or invalid parameter value."""


@dataclass
class SimulationConfig:
    """Every knob of a full experiment; one replication seed is base_seed + r."""

    n: int = 1000
    m: int = 3
    p_close: float = 0.67
    p_mutual: float = 0.5
    contagion_weight: float = 0.05
    homophily_threshold: float = 0.8
    confounding_weight: float = 0.5
    mode: str = "PureContagion"
    mix_contagion: float = 0.0
    mix_homophily: float = 0.0
    mix_confounding: float = 0.0
    iterations: int = 50000
    snapshot_every: int = 500
    replications: int = 100
    base_seed: int = 42
    output_dir: str = "results"

    def validate(self) -> None:
        try:
            self.gen_params(self.base_seed)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        try:
            self.mechanism_params()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        try:
            self.schedule()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.replications < 1:
            raise ConfigError(f"replications must be >= 1, got {self.replications}")
        if not 0 <= self.base_seed < 2**64:
            raise ConfigError(f"base_seed must be a 64-bit unsigned integer, got {self.base_seed}")

    def gen_params(self, seed: int) -> GenParams:
        return GenParams(
            n=self.n, m=self.m, p_close=self.p_close, p_mutual=self.p_mutual, seed=seed
        )

    def mechanism_params(self) -> MechanismParams:
        return MechanismParams(
            contagion_weight=self.contagion_weight,
            homophily_threshold=self.homophily_threshold,
            confounding_weight=self.confounding_weight,
        )

    def schedule(self) -> MechanismSchedule:
        try:
            mode = Mode(self.mode)
        except ValueError:
            names = ", ".join(m.value for m in Mode)
            raise ConfigError(f"mode must be one of {names}, got {self.mode!r}") from None
        mix = None
        if mode is Mode.MIXED:
            mix = (self.mix_contagion, self.mix_homophily, self.mix_confounding)
        return MechanismSchedule(
            mode=mode,
            mix=mix,
            iterations=self.iterations,
            snapshot_every=self.snapshot_every,
        )


def _coerce(name: str, kind: type, raw: str):
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
        return raw
    except ValueError:
        raise ConfigError(f"{name}: cannot parse {raw!r} as {kind.__name__}") from None


def load_config(path) -> SimulationConfig:
    """Parse a key = value file; unset keys take their defaults.

    Blank lines and lines starting with # are ignored. Unknown keys, values of
    the wrong type, and invariant violations raise ConfigError naming the key.
    """
    known = {f.name: f.type for f in fields(SimulationConfig)}
    # dataclass field types arrive as strings under from __future__ import annotations
    kinds = {"int": int, "float": float, "str": str}
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise ConfigError(f"{path}:{lineno}: expected key = value, got {text!r}")
            key, _, raw = text.partition("=")
            key = key.strip()
            raw = raw.strip()
            if key not in known:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            kind = kinds.get(known[key], str) if isinstance(known[key], str) else known[key]
            values[key] = _coerce(key, kind, raw)
    config = SimulationConfig(**values)
    config.validate()
    return config


def save_config(config: SimulationConfig, path) -> None:
    """Write the config as one key = value per line; load_config round-trips it."""
    with open(path, "w", encoding="utf-8") as fh:
        for f in fields(config):
            value = getattr(config, f.name)
            text = repr(value) if isinstance(value, float) else str(value)
            fh.write(f"{f.name} = {text}\n")
