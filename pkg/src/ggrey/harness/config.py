"""Run configuration: defaults, optional `key = value` file, command-line flags.

Precedence is flag > config file > default. The config file path comes from
``--config`` or, failing that, the GGREY_CONFIG environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

import numpy as np

from ..errors import DomainError, UsageError
from ..processes import ModelParams, TimeGrid

ENV_VAR = "GGREY_CONFIG"
SUITES = ("specfun", "measure", "processes", "timechange", "governing", "all")


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    n: int
    spacing: str = "uniform"

    @classmethod
    def parse(cls, text):
        parts = str(text).strip().split(":")
        if len(parts) not in (3, 4):
            raise UsageError(f"grid spec must be start:stop:n[:geom], got {text!r}")
        try:
            start, stop, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise UsageError(f"bad grid spec {text!r}: {exc}") from None
        spacing = "uniform"
        if len(parts) == 4:
            if parts[3] not in ("geom", "uniform"):
                raise UsageError(f"grid spacing must be 'geom' or 'uniform', got {parts[3]!r}")
            spacing = "geometric" if parts[3] == "geom" else "uniform"
        spec = cls(start, stop, n, spacing)
        spec.validate()
        return spec

    def validate(self):
        if self.n < 2:
            raise UsageError(f"grid needs at least 2 points, got {self.n}")
        if not self.stop > self.start:
            raise UsageError("grid stop must exceed start")
        if self.spacing == "geometric" and self.start <= 0:
            raise UsageError("geometric grid needs start > 0")

    def points(self):
        if self.spacing == "geometric":
            return np.geomspace(self.start, self.stop, self.n)
        return np.linspace(self.start, self.stop, self.n)

    def time_grid(self):
        try:
            return TimeGrid(self.points())
        except DomainError as exc:
            raise UsageError(f"invalid time grid: {exc}") from None

    def __str__(self):
        tail = ":geom" if self.spacing == "geometric" else ""
        return f"{self.start:g}:{self.stop:g}:{self.n}{tail}"


@dataclass(frozen=True)
class RunConfig:
    alpha: float = 0.8
    rho: float = 0.5
    theta: float = 1.0
    grid: GridSpec = GridSpec(0.1, 1.0, 10)
    paths: int = 4
    seed: int = 12345
    out: str | None = None
    suite: str = "all"
    tol_scale: float = 1.0
    workers: int | None = None
    method: str = "cholesky"

    def validate(self):
        try:
            ModelParams(self.alpha, self.rho, self.theta)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        self.grid.validate()
        if self.paths < 1:
            raise UsageError("paths must be at least 1")
        if self.seed < 0:
            raise UsageError("seed must be nonnegative")
        if self.suite not in SUITES:
            raise UsageError(f"unknown suite {self.suite!r}; choose from {SUITES}")
        if not self.tol_scale > 0:
            raise UsageError("tol-scale must be positive")
        if self.workers is not None and self.workers < 1:
            raise UsageError("workers must be at least 1")
        if self.method not in ("cholesky", "circulant"):
            raise UsageError(f"unknown path method {self.method!r}")
        return self

    @property
    def params(self):
        return ModelParams(self.alpha, self.rho, self.theta)


_CASTS = {
    "alpha": float, "rho": float, "theta": float, "grid": GridSpec.parse, "paths": int,
    "seed": int, "out": str, "suite": str, "tol_scale": float, "workers": int, "method": str,
}
assert set(_CASTS) == {f.name for f in fields(RunConfig)}


def parse_config_text(text, source="<config>"):
    """Parse `key = value` lines; `#` starts a comment. Keys may use '-' or '_'."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{source}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CASTS:
            raise UsageError(f"{source}:{lineno}: unknown key {key!r}")
        out[key] = _cast(key, value, f"{source}:{lineno}")
    return out


def _cast(key, value, where):
    try:
        return _CASTS[key](value)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(f"{where}: bad value for {key}: {exc}") from None


def load_config_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    return parse_config_text(text, source=str(path))


def build_config(flags=None, config_path=None, environ=None):
    """Merge defaults, the config file and explicit flags (None values are unset)."""
    environ = os.environ if environ is None else environ
    path = config_path or environ.get(ENV_VAR) or None
    values = load_config_file(path) if path else {}
    for key, value in (flags or {}).items():
        if value is not None:
            values[key] = GridSpec.parse(value) if key == "grid" and isinstance(value, str) else value
    return replace(RunConfig(), **values).validate()
