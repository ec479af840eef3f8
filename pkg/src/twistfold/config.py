"""Enumeration bounds, overridable through environment variables."""

from __future__ import annotations

import os

DEFAULTS = {
    "TWISTFOLD_WEYL_CAP": 10**6,
    "TWISTFOLD_COXETER_CAP": 20000,
}


def bound(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive")
    return value
