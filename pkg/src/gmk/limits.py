"""Default size caps for exhaustive operations.

The caps keep accidental exponential blow-ups at bay; the GMK_MAX_N
environment variable overrides all of them at once.
"""
from __future__ import annotations

import os

from .errors import LimitExceeded

ENUMERATION_CAP = 8        # canonical Gauss codes with n chords
GENUS_ORACLE_CAP = 10      # 2^n rotation assignments
MEANDER_ORACLE_CAP = 12    # (N/2)!^2 visitation candidates

ENV_VAR = "GMK_MAX_N"


def effective_cap(default: int) -> int:
    """Return the cap to enforce, honouring the GMK_MAX_N override."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def check_cap(value: int, default: int, what: str) -> None:
    cap = effective_cap(default)
    if value > cap:
        raise LimitExceeded(
            f"{what} = {value} exceeds the cap {cap}; set {ENV_VAR} to raise it"
        )
