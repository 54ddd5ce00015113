"""Size guards for the combinatorial search routines.

The exhaustive enumerations (facet minimality, chain covers, diagram bases)
grow quickly with n; the cap below keeps accidental huge inputs from
hanging a session.  Set the TILTNULL_MAX_N environment variable to raise it
deliberately.
"""

from __future__ import annotations

import os

DEFAULT_MAX_N = 8
_ENV_VAR = "TILTNULL_MAX_N"


def max_n() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None


def check_size(n: int, what: str = "n") -> int:
    limit = max_n()
    if n > limit:
        raise ValueError(
            f"{what}={n} exceeds the search limit {limit}; "
            f"set {_ENV_VAR} to override"
        )
    return n
