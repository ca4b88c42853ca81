"""Run configuration: key registry, config-file parsing, flag merging.

A run is described by flat ``key = value`` pairs; the same keys are accepted
as command-line flags (``--alpha``, ``--n-max``, ...) and in a config file
passed with ``--config``.  Flags override file values; unset keys fall back
to the standard defaults.  ``STENOFLOW_OUT`` supplies the default output
directory and nothing else.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from .artery import FlowParams
from .errors import ConfigError

#: physical/numerical keys, typed; these map onto FlowParams
PARAM_KEYS: dict[str, type] = {
    "alpha": float,
    "hematocrit": float,
    "beta": float,
    "m": int,
    "hartmann": float,
    "permeability": float,
    "l": float,
    "d": float,
    "length": float,
    "severity": float,
    "tol": float,
    "n_max": int,
}

#: command/output keys
RUN_KEYS: dict[str, type] = {
    "z": float,
    "z_from": float,
    "z_to": float,
    "steps": int,
    "samples": int,
    "preset": str,
    "out": str,
    "format": str,
    "workers": int,
    "n": int,
}

#: config keys whose FlowParams field has a different name
KEY_TO_FIELD = {"l": "spacing", "d": "onset"}

VALID_FORMATS = ("csv", "csv+plot")

OUT_ENV_VAR = "STENOFLOW_OUT"


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one CLI invocation."""

    command: str
    params: FlowParams
    out: Path
    fmt: str = "csv"
    workers: int | None = None
    z: float | None = None
    z_from: float = 0.0
    z_to: float | None = None
    steps: int = 351
    samples: int | None = None
    preset: str = "all"
    oracle_n: int = 801


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse flat ``key = value`` lines; reject unknown keys."""
    known = PARAM_KEYS.keys() | RUN_KEYS.keys()
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", ";")):
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"{source}:{lineno}: unknown config key: {key}")
        out[key] = value.strip()
    return out


def _cast(key: str, value, kind: type):
    if isinstance(value, kind):
        return value
    try:
        return kind(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad value for key {key}: {value!r} ({exc})") from exc


def resolve(command: str, file_values: dict, flag_values: dict) -> RunConfig:
    """Merge config-file values and CLI flags into a RunConfig.

    ``flag_values`` entries that are None count as unset.  Raises
    :class:`ConfigError` on bad values or mutually inconsistent settings,
    always naming the offending key.
    """
    merged: dict[str, object] = {}
    for key, kind in {**PARAM_KEYS, **RUN_KEYS}.items():
        if key in file_values:
            merged[key] = _cast(key, file_values[key], kind)
        if flag_values.get(key) is not None:
            merged[key] = _cast(key, flag_values[key], kind)

    param_kwargs = {
        KEY_TO_FIELD.get(k, k): merged[k] for k in PARAM_KEYS if k in merged
    }
    try:
        params = FlowParams(**param_kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    fmt = merged.get("format", "csv")
    if fmt not in VALID_FORMATS:
        raise ConfigError(f"bad value for key format: {fmt!r} (expected csv or csv+plot)")

    workers = merged.get("workers")
    if workers is not None and workers < 1:
        raise ConfigError(f"bad value for key workers: {workers} (must be >= 1)")

    z_to = merged.get("z_to", params.length)
    z_from = merged.get("z_from", 0.0)
    if z_to < z_from:
        raise ConfigError(f"bad value for key z_to: {z_to} (below z_from={z_from})")
    steps = merged.get("steps", 351)
    if steps < 2:
        raise ConfigError(f"bad value for key steps: {steps} (must be >= 2)")

    samples = merged.get("samples")
    if samples is not None and samples < 2:
        raise ConfigError(f"bad value for key samples: {samples} (must be >= 2)")

    z = merged.get("z")
    if command == "profile" and z is None:
        raise ConfigError("profile requires key z (a single axial station)")

    oracle_n = merged.get("n", 801)
    if oracle_n < 33 or oracle_n % 2 == 0:
        raise ConfigError(f"bad value for key n: {oracle_n} (must be odd and >= 33)")

    out = merged.get("out") or os.environ.get(OUT_ENV_VAR) or "."

    return RunConfig(
        command=command,
        params=params,
        out=Path(out),
        fmt=fmt,
        workers=workers,
        z=z,
        z_from=z_from,
        z_to=z_to,
        steps=steps,
        samples=samples,
        preset=merged.get("preset", "all"),
        oracle_n=oracle_n,
    )


def to_text(config: RunConfig) -> str:
    """Serialize a RunConfig to config-file syntax; re-parsing reproduces the run."""
    lines = [f"# stenoflow {config.command} configuration"]
    field_to_key = {v: k for k, v in KEY_TO_FIELD.items()}
    for f in fields(FlowParams):
        key = field_to_key.get(f.name, f.name)
        lines.append(f"{key} = {getattr(config.params, f.name)!r}")
    lines.append(f"out = {config.out}")
    lines.append(f"format = {config.fmt}")
    if config.workers is not None:
        lines.append(f"workers = {config.workers}")
    if config.z is not None:
        lines.append(f"z = {config.z!r}")
    lines.append(f"z_from = {config.z_from!r}")
    lines.append(f"z_to = {config.z_to!r}")
    lines.append(f"steps = {config.steps}")
    if config.samples is not None:
        lines.append(f"samples = {config.samples}")
    lines.append(f"preset = {config.preset}")
    lines.append(f"n = {config.oracle_n}")
    return "\n".join(lines) + "\n"
