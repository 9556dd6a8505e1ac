"""Frozen suite constants.

Asymptotic bounds are checked against explicit constants fitted once on the
seeded corpora (scripts/calibrate.py) and stored in calibration.json.
Tests read the frozen file; they never refit.
"""
from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

PATH = Path(__file__).with_name("calibration.json")


@lru_cache(maxsize=None)
def _load(path=PATH):
    with open(path) as fh:
        return json.load(fh)


def constants():
    return dict(_load()["constants"])


def constant(name: str) -> float:
    c = _load()["constants"]
    if name not in c:
        raise KeyError(f"no calibrated constant {name!r}")
    return c[name]


def record():
    """The full calibration record, including the fitted raw values."""
    return _load()
