"""Search-size guards shared by every exhaustive routine.

All algorithms in this package are exact and exponential in the worst case.
Each enumeration checks its size against the active :class:`Limits` before
starting and raises :class:`GuardExceeded` instead of running away.
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from dataclasses import dataclass

ENV_VAR = "COVERALG_GUARDS"


class GuardExceeded(RuntimeError):
    """An exhaustive search would exceed a configured size limit."""

    def __init__(self, limit: str, value: int, allowed: int, what: str = ""):
        self.limit = limit
        self.value = value
        self.allowed = allowed
        self.what = what
        msg = f"{limit} exceeded: {value} > {allowed}"
        if what:
            msg += f" ({what})"
        super().__init__(msg)

    def to_dict(self) -> dict:
        return {
            "error": "guard_exceeded",
            "limit": self.limit,
            "value": self.value,
            "allowed": self.allowed,
            "what": self.what,
        }


@dataclass(frozen=True)
class Limits:
    max_vertices: int = 24           # minimal vertex cover enumeration
    max_facets: int = 24
    search_size: int = 5_000_000     # grid / product / search-node budget
    max_ideal_generators: int = 20_000
    strong_peo_vertices: int = 10
    mseq_variables: int = 8
    unimodular_dim: int = 8
    koenig_size: int = 10

    def replace(self, **changes) -> "Limits":
        unknown = set(changes) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise ValueError(f"unknown guard(s): {', '.join(sorted(unknown))}")
        return dataclasses.replace(self, **{k: int(v) for k, v in changes.items()})


def parse_overrides(text: str) -> dict[str, int]:
    """Parse ``"name=value,name=value"`` into a dict of integer overrides."""
    out: dict[str, int] = {}
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"malformed guard override {item!r}, expected name=value")
        out[name.strip()] = int(float(value))
    return out


def _initial() -> Limits:
    text = os.environ.get(ENV_VAR, "")
    return Limits().replace(**parse_overrides(text)) if text else Limits()


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("coveralg_limits", default=_initial())


def get_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides):
    """Temporarily override guards, e.g. ``with limits(search_size=10**7): ...``."""
    token = _current.set(get_limits().replace(**overrides))
    try:
        yield get_limits()
    finally:
        _current.reset(token)


def check(limit: str, value: int, what: str = "") -> None:
    allowed = getattr(get_limits(), limit)
    if value > allowed:
        raise GuardExceeded(limit, value, allowed, what)


class Budget:
    """Counts search nodes against ``search_size``."""

    __slots__ = ("left", "what")

    def __init__(self, what: str = ""):
        self.left = get_limits().search_size
        self.what = what

    def tick(self, n: int = 1) -> None:
        self.left -= n
        if self.left < 0:
            allowed = get_limits().search_size
            raise GuardExceeded("search_size", allowed + 1, allowed, self.what)
