"""Runtime configuration.

A single optional JSON file, named by ``ULRICH_CHERN_CONFIG``, may set
``n_max``, the largest quadric dimension the spinor engine accepts.  The
environment variable ``ULRICH_CHERN_N_MAX`` overrides it.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

DEFAULT_N_MAX = 16


@dataclass(frozen=True)
class Config:
    n_max: int = DEFAULT_N_MAX


def load_config(path: str | os.PathLike | None = None) -> Config:
    path = path or os.environ.get("ULRICH_CHERN_CONFIG")
    n_max = DEFAULT_N_MAX
    if path:
        data = json.loads(Path(path).read_text())
        unknown = set(data) - {"n_max"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        n_max = data.get("n_max", n_max)
    env = os.environ.get("ULRICH_CHERN_N_MAX")
    if env:
        n_max = int(env)
    if not isinstance(n_max, int) or n_max < 2:
        raise ValueError(f"n_max must be an integer >= 2, got {n_max!r}")
    return Config(n_max=n_max)
