#!/usr/bin/env python3
"""
Run configuration for the line engine tools.

Values come from command-line flags first, then a JSON file passed with
--config, then LINES_* environment variables, then the defaults below.
"""
import json
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from lines_core import InvalidArgumentError

# Environment variable to config field
ENV_VARS = {
    "LINES_SEED": "seed",
    "LINES_WORKERS": "workers",
    "LINES_LOG_LEVEL": "log_level",
    "LINES_CHECKPOINT": "checkpoint",
}

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"

_handler: Optional[logging.Handler] = None


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 10_000
    workers: int = 1
    checkpoint: Optional[str] = None
    checkpoint_every: int = 4096
    sandwich_trials: int = 100
    span_samples: int = 1000
    bernstein_max_n: int = 60
    log_level: str = "WARNING"

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise InvalidArgumentError(f"unknown config keys: {', '.join(unknown)}", kind="invalid-config")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _coerce(name: str, raw: str) -> Any:
    if name in ("seed", "workers"):
        try:
            return int(raw)
        except ValueError:
            raise InvalidArgumentError(f"{name} must be an integer, got {raw!r}", kind="invalid-config")
    return raw


def from_environment(environ=None) -> Dict[str, Any]:
    environ = os.environ if environ is None else environ
    values = {}
    for var, name in ENV_VARS.items():
        if environ.get(var):
            values[name] = _coerce(name, environ[var])
    return values


def from_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r') as f:
            values = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidArgumentError(f"cannot read config {path}: {e}", kind="invalid-config")
    if not isinstance(values, dict):
        raise InvalidArgumentError(f"config {path} must hold a JSON object", kind="invalid-config")
    return values


def load_config(config_path: Optional[str] = None, flags: Optional[Dict[str, Any]] = None,
                environ=None) -> RunConfig:
    """Defaults < environment < config file < flags."""
    config = RunConfig().merged(from_environment(environ))
    if config_path:
        config = config.merged(from_file(config_path))
    if flags:
        config = config.merged(flags)
    if config.workers < 1:
        raise InvalidArgumentError("workers must be at least 1", kind="invalid-config")
    return config


def configure_logging(level: str = "WARNING") -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise InvalidArgumentError(f"unknown log level {level!r}", kind="invalid-config")
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    root.addHandler(_handler)
    root.setLevel(numeric)
