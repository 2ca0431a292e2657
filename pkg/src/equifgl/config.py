"""Run configuration: defaults, flat key=value files, CLI overrides.

The config file named by the EQUIFGL_CONFIG environment variable (or
passed explicitly) holds one ``key = value`` pair per line; ``#`` starts
a comment.  Command-line flags override file values.  Identical
configurations produce byte-identical output everywhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from .poly import SymbolicError


class ConfigError(SymbolicError):
    pass


@dataclass
class RunConfig:
    cutoff: int = 8           # truncation N
    u_window: int = 8         # u-support window W >= N
    lattice_bound: int = 12   # top topological degree for lattice work
    variant: str = "proof,b+,bp+,include"
    format: str = "text"      # or json
    seed: int = 0

    def validate(self):
        if self.cutoff < 2:
            raise ConfigError("cutoff must be >= 2")
        if self.u_window < self.cutoff:
            raise ConfigError("u_window must be >= cutoff")
        if self.format not in ("text", "json"):
            raise ConfigError("format must be text or json")
        return self

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]


def _coerce(name, raw):
    if name in ("cutoff", "u_window", "lattice_bound", "seed"):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError("%s must be an integer, got %r" % (name, raw))
    return raw


def load_config(path=None, overrides=None):
    cfg = RunConfig()
    path = path or os.environ.get("EQUIFGL_CONFIG")
    if path:
        try:
            with open(path) as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise ConfigError("cannot read config %s: %s" % (path, exc))
        for lineno, line in enumerate(lines, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError("%s:%d: expected key = value" % (path, lineno))
            key, _, raw = line.partition("=")
            key, raw = key.strip(), raw.strip()
            if key not in RunConfig.field_names():
                raise ConfigError("%s:%d: unknown key %r" % (path, lineno, key))
            setattr(cfg, key, _coerce(key, raw))
    for key, val in (overrides or {}).items():
        if val is not None:
            setattr(cfg, key, _coerce(key, val))
    return cfg.validate()
