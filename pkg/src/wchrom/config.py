"""Shared limits and error types."""

from __future__ import annotations

import os

DEFAULT_CAP = 30
BRUTE_BUDGET = 10**8
LIST_BUDGET = 10**7


class CapExceeded(RuntimeError):
    """A computation would exceed the configured enumeration cap or work budget."""


class InvariantFailure(RuntimeError):
    """An internal consistency check failed."""


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get("WCHROM_CAP")
    return int(env) if env else DEFAULT_CAP


def check_cap(e: int, cap: int | None = None) -> None:
    limit = enumeration_cap(cap)
    if e > limit:
        raise CapExceeded(
            f"graph has {e} edges, above the enumeration cap of {limit}; "
            "raise the cap (--cap or WCHROM_CAP) or use a closed-form family "
            "or transfer-matrix path"
        )


def default_threads() -> int:
    return os.cpu_count() or 1
