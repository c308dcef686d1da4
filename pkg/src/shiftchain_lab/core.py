"""Ordered hypergraphs, the dominance order on edges, and shift-chains.

Vertices are 1-based integers in ``[1, n]``. An edge is a plain tuple of
strictly increasing vertex ids; all containers are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BoundViolation,
    DuplicateEdge,
    IncomparablePair,
    MalformedEdge,
    ShiftChainError,
    UniformityError,
)

Edge = tuple[int, ...]


class Comparison(enum.Enum):
    EQUAL = "equal"
    A_BEFORE_B = "a_before_b"
    B_BEFORE_A = "b_before_a"
    INCOMPARABLE = "incomparable"


def compare(a: Sequence[int], b: Sequence[int]) -> Comparison:
    """Compare two edges coordinatewise.

    ``A_BEFORE_B`` means ``a[i] <= b[i]`` for every position and ``a != b``.

    >>> compare((1, 4), (2, 3))
    <Comparison.INCOMPARABLE: 'incomparable'>
    """
    if len(a) != len(b):
        raise UniformityError(f"cannot compare edges of length {len(a)} and {len(b)}")
    a_le = b_le = True
    for x, y in zip(a, b):
        if x > y:
            a_le = False
        elif y > x:
            b_le = False
    if a_le and b_le:
        return Comparison.EQUAL
    if a_le:
        return Comparison.A_BEFORE_B
    if b_le:
        return Comparison.B_BEFORE_A
    return Comparison.INCOMPARABLE


def comparable(a: Sequence[int], b: Sequence[int]) -> bool:
    return compare(a, b) is not Comparison.INCOMPARABLE


def edge_count_bound(m: int, n: int) -> int:
    """Largest possible number of edges of an m-uniform shift-chain on [n]."""
    return m * (n - m) + 1


def _check_edge(index: int, edge: Sequence[int], m: int, n: int) -> Edge:
    try:
        coords = tuple(int(x) for x in edge)
    except (TypeError, ValueError):
        raise MalformedEdge(index, "coordinates must be integers") from None
    if len(coords) != m:
        raise MalformedEdge(index, f"expected {m} coordinates, got {len(coords)}")
    for x in coords:
        if not 1 <= x <= n:
            raise MalformedEdge(index, f"vertex {x} outside [1, {n}]")
    for x, y in zip(coords, coords[1:]):
        if x >= y:
            raise MalformedEdge(index, "coordinates not strictly increasing")
    return coords


def _check_shape(m: int, n: int) -> None:
    if m < 1:
        raise ShiftChainError(f"uniformity must be positive, got m={m}")
    if n < m:
        raise ShiftChainError(f"need n >= m, got n={n}, m={m}")


def _normalize_edges(m: int, n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    out = tuple(_check_edge(i, e, m, n) for i, e in enumerate(edges))
    seen: dict[Edge, int] = {}
    for i, e in enumerate(out):
        if e in seen:
            raise DuplicateEdge(seen[e], i)
        seen[e] = i
    return out


@dataclass(frozen=True)
class OrderedHypergraph:
    """An m-uniform hypergraph on ``[n]`` whose edges are increasing tuples.

    No comparability between edges is required. Edges are kept in the order
    given; duplicates are rejected.
    """

    m: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        _check_shape(self.m, self.n)
        object.__setattr__(self, "edges", _normalize_edges(self.m, self.n, self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def t(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def is_shift_chain(self) -> bool:
        try:
            validate_shift_chain(self.m, self.n, self.edges)
        except ShiftChainError:
            return False
        return True


@dataclass(frozen=True)
class ShiftChain(OrderedHypergraph):
    """An ordered hypergraph whose edges are pairwise comparable.

    Edges must already be in chain order, ``edges[i] ⪯ edges[i+1]``. Use
    :func:`validate_shift_chain` to build one from edges in arbitrary order.
    """

    def __post_init__(self):
        super().__post_init__()
        bound = edge_count_bound(self.m, self.n)
        if len(self.edges) > bound:
            raise BoundViolation(len(self.edges), bound)
        for i in range(len(self.edges) - 1):
            if compare(self.edges[i], self.edges[i + 1]) is not Comparison.A_BEFORE_B:
                raise IncomparablePair(i, i + 1)


def validate_shift_chain(m: int, n: int, edges: Iterable[Sequence[int]]) -> ShiftChain:
    """Check that ``edges`` form a shift-chain and return it in chain order.

    Raises :class:`MalformedEdge`, :class:`DuplicateEdge`,
    :class:`BoundViolation` or :class:`IncomparablePair`; error indices refer
    to positions in the input sequence.
    """
    _check_shape(m, n)
    checked = _normalize_edges(m, n, edges)
    bound = edge_count_bound(m, n)
    if len(checked) > bound:
        raise BoundViolation(len(checked), bound)
    # On a chain, lexicographic order coincides with dominance order, so
    # comparing lex-neighbours is enough (⪯ is transitive).
    order = sorted(range(len(checked)), key=checked.__getitem__)
    for i, j in zip(order, order[1:]):
        if compare(checked[i], checked[j]) is Comparison.INCOMPARABLE:
            raise IncomparablePair(min(i, j), max(i, j))
    return ShiftChain(m, n, tuple(checked[i] for i in order))


def edge_bound(h: ShiftChain) -> tuple[int, int, bool]:
    """Return ``(edge count, m(n-m)+1, count <= bound)``."""
    bound = edge_count_bound(h.m, h.n)
    return len(h.edges), bound, len(h.edges) <= bound


def restrict(h: ShiftChain, coords: Sequence[int]) -> ShiftChain:
    """Project every edge onto the given 1-based coordinate positions.

    Projections that coincide are merged. Projection preserves ⪯, so the
    result is again a shift-chain, on the same vertex set.
    """
    coords = tuple(coords)
    if not coords:
        raise ShiftChainError("restriction needs at least one coordinate")
    if any(not 1 <= c <= h.m for c in coords):
        raise ShiftChainError(f"coordinates {coords} outside [1, {h.m}]")
    if any(a >= b for a, b in zip(coords, coords[1:])):
        raise ShiftChainError(f"coordinates {coords} not strictly increasing")
    projected: list[Edge] = []
    for e in h.edges:
        p = tuple(e[c - 1] for c in coords)
        # chain order survives projection, so duplicates are adjacent
        if not projected or projected[-1] != p:
            projected.append(p)
    return ShiftChain(len(coords), h.n, tuple(projected))


def union(h1: OrderedHypergraph, h2: OrderedHypergraph) -> OrderedHypergraph:
    """Deduplicated union of two edge sets on the same vertex set.

    The result lists edges in lexicographic order and need not be a
    shift-chain.
    """
    if h1.m != h2.m:
        raise UniformityError(f"uniformity mismatch: {h1.m} vs {h2.m}")
    if h1.n != h2.n:
        raise ShiftChainError(f"vertex count mismatch: {h1.n} vs {h2.n}")
    return OrderedHypergraph(h1.m, h1.n, tuple(sorted(set(h1.edges) | set(h2.edges))))


def incomparable_pairs(h: OrderedHypergraph) -> list[tuple[int, int]]:
    """All index pairs ``(i, j)``, ``i < j``, of incomparable edges."""
    return [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(h.edges), 2)
        if compare(a, b) is Comparison.INCOMPARABLE
    ]
