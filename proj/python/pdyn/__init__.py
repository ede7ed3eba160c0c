"""Exact arithmetic for commuting polynomial endomorphisms of the plane."""

import json

from ._pdyn import (
    PdynError,
    PlaneEndo,
    chebyshev,
    disjoint_iterates,
    ex4_descend,
    recognize,
    search,
    smooth_critical_conic,
)
from ._pdyn import run as _run


def run(command, args=None, **session):
    """Run a CLI command in-process; returns (report dict, exit code)."""
    text, code = _run(command, dict(args or {}), **session)
    return json.loads(text), code


__all__ = [
    "PdynError",
    "PlaneEndo",
    "chebyshev",
    "disjoint_iterates",
    "ex4_descend",
    "recognize",
    "run",
    "search",
    "smooth_critical_conic",
]
