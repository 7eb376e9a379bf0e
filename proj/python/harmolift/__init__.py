"""Harmonic lifts of eta powers: Python access to the C++ core."""

import json

from ._core import (
    AccuracyRegionError,
    cli,
    dedekind_sum,
    eta_power_at,
    inc_gamma,
    j_invariant,
    kummer_1f1,
    lift_at_zero,
    lift_derivative,
    m_func,
    sigma,
)
from ._core import lift_json as _lift_json
from ._core import verify as _verify


def lift(derivative=False, trunc=64):
    return json.loads(_lift_json(derivative, trunc))


def verify(suite="all", seed=None):
    args = (suite,) if seed is None else (suite, seed)
    return json.loads(_verify(*args))


__all__ = [
    "AccuracyRegionError",
    "cli",
    "dedekind_sum",
    "eta_power_at",
    "inc_gamma",
    "j_invariant",
    "kummer_1f1",
    "lift",
    "lift_at_zero",
    "lift_derivative",
    "m_func",
    "sigma",
    "verify",
]
