"""Plain-text file formats.

``SHIFTCHAIN v1`` / ``ORDEREDHG v1``::

    SHIFTCHAIN v1
    m=3 n=8 t=6
    1 2 4
    ...

``COLORING v1``::

    COLORING v1
    n=8 k=3
    1 2 1 ...

All output uses LF line endings and no trailing spaces, so emitting a parsed
file reproduces it byte for byte.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import TYPE_CHECKING

from .core import OrderedHypergraph, ShiftChain, validate_shift_chain
from .errors import FormatError, ShiftChainError

if TYPE_CHECKING:
    from .coloring import Coloring
    from .constructions import ConstructionTrace

CHAIN_HEADER = "SHIFTCHAIN v1"
HYPERGRAPH_HEADER = "ORDEREDHG v1"
COLORING_HEADER = "COLORING v1"

_HG_SIZE = re.compile(r"m=(\d+) n=(\d+) t=(\d+)")
_COL_SIZE = re.compile(r"n=(\d+) k=(\d+)")


def dumps_hypergraph(h: OrderedHypergraph) -> str:
    header = CHAIN_HEADER if isinstance(h, ShiftChain) else HYPERGRAPH_HEADER
    lines = [header, f"m={h.m} n={h.n} t={len(h.edges)}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def _int_row(text: str, lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(" "))
    except ValueError:
        raise FormatError(f"expected space-separated integers, got {text!r}", lineno) from None


def loads_hypergraph(text: str) -> OrderedHypergraph:
    """Parse either header; ``SHIFTCHAIN v1`` yields a validated :class:`ShiftChain`.

    Chain files must list their edges in chain order.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty input")
    header = lines[0].rstrip("\r")
    if header not in (CHAIN_HEADER, HYPERGRAPH_HEADER):
        raise FormatError(f"unknown header {header!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing size line", 2)
    size = _HG_SIZE.fullmatch(lines[1].rstrip("\r"))
    if not size:
        raise FormatError(f"bad size line {lines[1]!r}", 2)
    m, n, t = map(int, size.groups())
    body = lines[2:]
    if len(body) != t:
        raise FormatError(f"declared t={t} but found {len(body)} edge lines")
    edges = [_int_row(line.rstrip("\r"), i + 3) for i, line in enumerate(body)]
    try:
        if header == HYPERGRAPH_HEADER:
            return OrderedHypergraph(m, n, tuple(edges))
        chain = validate_shift_chain(m, n, edges)
    except ShiftChainError as exc:
        raise FormatError(str(exc)) from exc
    if list(chain.edges) != edges:
        raise FormatError("SHIFTCHAIN edges are not listed in chain order")
    return chain


def dumps_coloring(c: Coloring) -> str:
    return f"{COLORING_HEADER}\nn={c.n} k={c.k}\n{' '.join(map(str, c.colors))}\n"


def loads_coloring(text: str) -> Coloring:
    from .coloring import Coloring

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 3:
        raise FormatError(f"expected 3 lines, got {len(lines)}")
    if lines[0].rstrip("\r") != COLORING_HEADER:
        raise FormatError(f"unknown header {lines[0]!r}", 1)
    size = _COL_SIZE.fullmatch(lines[1].rstrip("\r"))
    if not size:
        raise FormatError(f"bad size line {lines[1]!r}", 2)
    n, k = map(int, size.groups())
    colors = _int_row(lines[2].rstrip("\r"), 3)
    if len(colors) != n:
        raise FormatError(f"declared n={n} but found {len(colors)} colors", 3)
    try:
        return Coloring(colors, k)
    except ShiftChainError as exc:
        raise FormatError(str(exc), 3) from exc


def dumps_trace(trace: ConstructionTrace) -> str:
    return "".join(f"{lv.m} {lv.n} {lv.t}\n" for lv in trace.levels)


def read_hypergraph(path: str | Path) -> OrderedHypergraph:
    return loads_hypergraph(Path(path).read_text())


def write_hypergraph(path: str | Path, h: OrderedHypergraph) -> None:
    Path(path).write_bytes(dumps_hypergraph(h).encode())


def read_coloring(path: str | Path) -> Coloring:
    return loads_coloring(Path(path).read_text())


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_bytes(dumps_coloring(c).encode())
