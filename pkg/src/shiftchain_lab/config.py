"""Size caps, overridable from a plain ``key=value`` file.

Recognised keys: ``exhaustive_cap``, ``enumerate_max_n``, ``construct_max_m``.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .coloring import EXHAUSTIVE_CAP
from .constructions import MAX_CONSTRUCT_M, MAX_ENUMERATE_N
from .errors import FormatError


@dataclass(frozen=True)
class Limits:
    exhaustive_cap: int = EXHAUSTIVE_CAP
    enumerate_max_n: int = MAX_ENUMERATE_N
    construct_max_m: int = MAX_CONSTRUCT_M


def parse_limits(text: str, base: Limits = Limits()) -> Limits:
    known = {f.name for f in fields(Limits)}
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or key not in known:
            raise FormatError(f"unknown or malformed setting {raw.strip()!r}", lineno)
        try:
            updates[key] = int(value)
        except ValueError:
            raise FormatError(f"{key} needs an integer, got {value!r}", lineno) from None
    return replace(base, **updates)


def load_limits(path: str | Path | None) -> Limits:
    if path is None:
        return Limits()
    return parse_limits(Path(path).read_text())
