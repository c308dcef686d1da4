"""Coloring verifiers, the degeneracy greedy 3-coloring, and complete searches."""

from __future__ import annotations

import enum
import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .core import OrderedHypergraph, ShiftChain, restrict
from .errors import CapExceeded, ColoringError, NoProperColoring, UniformityError

EXHAUSTIVE_CAP = 10**8


class Mode(str, enum.Enum):
    PROPER = "proper"
    POLYCHROMATIC = "polychromatic"


@dataclass(frozen=True)
class Coloring:
    """Colors ``colors[v-1]`` in ``[1, k]`` for vertices ``v = 1..n``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if self.k < 1:
            raise ColoringError(f"k must be positive, got {self.k}")
        if not colors:
            raise ColoringError("a coloring needs at least one vertex")
        bad = [c for c in colors if not 1 <= c <= self.k]
        if bad:
            raise ColoringError(f"colors {sorted(set(bad))} outside [1, {self.k}]")
        object.__setattr__(self, "colors", colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, vertex: int) -> int:
        """Color of the 1-based ``vertex``."""
        if vertex < 1:
            raise IndexError(vertex)
        return self.colors[vertex - 1]

    def used_colors(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class SearchOutcome:
    witness: Coloring | None
    nodes_explored: int
    mode: Mode
    k: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _check_sizes(h: OrderedHypergraph, c: Coloring) -> None:
    if c.n != h.n:
        raise ColoringError(f"coloring has {c.n} vertices, hypergraph has {h.n}")


def is_proper(h: OrderedHypergraph, c: Coloring) -> bool:
    """True iff no edge is monochromatic. A one-vertex edge always is."""
    _check_sizes(h, c)
    return all(len({c.colors[v - 1] for v in e}) > 1 for e in h.edges)


def is_polychromatic(h: OrderedHypergraph, c: Coloring) -> bool:
    """True iff every edge sees all ``c.k`` colors (never when ``m < k``)."""
    _check_sizes(h, c)
    return all(len({c.colors[v - 1] for v in e}) == c.k for e in h.edges)


def verify(h: OrderedHypergraph, c: Coloring, mode: Mode) -> bool:
    return is_proper(h, c) if Mode(mode) is Mode.PROPER else is_polychromatic(h, c)


def degeneracy_order(g: OrderedHypergraph) -> tuple[list[int], int]:
    """Min-degree elimination order of a graph and its degeneracy.

    Repeatedly removes a vertex of minimum remaining degree, smallest id
    first on ties. Returns the removal order and the largest degree any
    vertex had at its removal.
    """
    if g.m != 2:
        raise UniformityError(f"degeneracy needs a 2-uniform hypergraph, got m={g.m}")
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    degree = [len(s) for s in adj]
    heap = [(degree[v], v) for v in range(1, g.n + 1)]
    heapq.heapify(heap)
    removed = [False] * (g.n + 1)
    order: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in adj[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return order, degeneracy


def _maximal_walk(g: ShiftChain) -> list[tuple[int, int]]:
    """Extend a 2-uniform chain to a maximal one, from (1, 2) to (n-1, n).

    Each step moves one coordinate up by one; the original edges all lie on
    the walk.
    """
    x, y = 1, 2
    walk = [(x, y)]
    for a, b in list(g.edges) + [(g.n - 1, g.n)]:
        while y < b:
            y += 1
            walk.append((x, y))
        while x < a:
            x += 1
            walk.append((x, y))
    return walk


def level_coloring_3(g: ShiftChain) -> Coloring:
    """Proper 3-coloring of a 2-uniform shift-chain in linear time.

    Works on the maximal chain containing ``g``. There every vertex ``w > 1``
    has the consecutive left neighbours ``[p_w, q_w]``, with ``p_w`` and
    ``q_w`` nondecreasing, so levels ``level(w) = level(p_w) + 1`` are
    contiguous blocks, edges join equal or adjacent levels, and edges inside
    a level all touch its last vertex. Each level gets one color for its last
    vertex and one for the rest, chosen level by level. Given any choice for
    level ``l-1`` some valid pair exists for level ``l``: the last vertex of
    ``l`` and some other vertex of ``l`` cannot see respectively a non-last
    and the last vertex of ``l-1`` at the same time.
    """
    if g.m != 2:
        raise UniformityError(f"level coloring needs a 2-uniform chain, got m={g.m}")
    n = g.n
    if n == 2 and not g.edges:
        return Coloring((1, 1), 3)
    walk = _maximal_walk(g)
    first_left = [0] * (n + 1)
    for a, b in walk:
        if not first_left[b]:
            first_left[b] = a
    level = [0] * (n + 1)
    for w in range(2, n + 1):
        level[w] = level[first_left[w]] + 1
    depth = level[n] + 1
    last = [0] * depth
    for v in range(1, n + 1):
        last[level[v]] = v

    def slot(v):
        return level[v], int(v == last[level[v]])

    # constraints[l]: slot pairs (slot in level l-1 or l, slot in level l)
    constraints: list[set] = [set() for _ in range(depth)]
    for a, b in walk:
        (la, sa), (lb, sb) = slot(a), slot(b)
        if lb - la not in (0, 1) or (la, sa) == (lb, sb):
            raise AssertionError(f"edge ({a}, {b}) breaks the level structure")
        constraints[lb].add((la < lb, sa, sb))

    pairs = [(base, end) for base in (1, 2, 3) for end in (1, 2, 3)]
    chosen: list[tuple[int, int]] = []
    for lv in range(depth):
        prev = chosen[-1] if chosen else None
        for pair in pairs:
            if all(
                (prev[sa] if cross else pair[sa]) != pair[sb]
                for cross, sa, sb in constraints[lv]
            ):
                chosen.append(pair)
                break
        else:
            raise AssertionError(f"no color pair for level {lv}")
    colors = tuple(chosen[level[v]][int(v == last[level[v]])] for v in range(1, n + 1))
    return Coloring(colors, 3)


def greedy_proper_3(h: ShiftChain) -> Coloring:
    """Proper coloring with at most 3 colors via the first two coordinates.

    Any proper coloring of the projection onto positions (1, 2), a 2-uniform
    shift-chain, is proper for ``h``. The projection is colored greedily in
    reverse min-degree elimination order, smallest color first. Such chains
    can be 3-degenerate (the triangular prism is one), and then the greedy
    may need a fourth color; in that case :func:`level_coloring_3` is used.
    """
    if not isinstance(h, ShiftChain):
        raise ColoringError("greedy_proper_3 needs a validated ShiftChain")
    if h.m < 2:
        raise NoProperColoring(f"{h.m}-uniform edges are always monochromatic")
    graph = restrict(h, (1, 2))
    order, _ = degeneracy_order(graph)
    adj: list[set[int]] = [set() for _ in range(h.n + 1)]
    for a, b in graph.edges:
        adj[a].add(b)
        adj[b].add(a)
    colors = [0] * (h.n + 1)
    for v in reversed(order):
        taken = {colors[u] for u in adj[v]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    if max(colors) > 3:
        return level_coloring_3(graph)
    return Coloring(tuple(colors[1:]), 3)


def _flat(h: OrderedHypergraph) -> list[int]:
    return [v for e in h.edges for v in e]


def _outcome(h, k, mode, colors, nodes) -> SearchOutcome:
    witness = None if colors is None else Coloring(colors, k)
    if witness is not None and not verify(h, witness, mode):
        raise AssertionError(f"search returned a coloring that is not {mode.value}")
    return SearchOutcome(witness, nodes, mode, k)


def exhaustive_search(
    h: OrderedHypergraph, k: int, mode: Mode | str, cap: int = EXHAUSTIVE_CAP
) -> SearchOutcome:
    """Try all ``k**n`` colorings in lexicographic order (vertex 1 most significant).

    ``nodes_explored`` is the number of colorings tested, including the
    witness if one is found.
    """
    mode = Mode(mode)
    if k < 1:
        raise ColoringError(f"k must be positive, got {k}")
    if k**h.n > cap:
        raise CapExceeded(f"{k}^{h.n} colorings exceed the exhaustive cap {cap}")
    colors, nodes = kernels.exhaustive(h.n, k, h.m, _flat(h), mode is Mode.POLYCHROMATIC)
    return _outcome(h, k, mode, colors, nodes)


def _run_shard(args):
    n, k, m, flat, poly, first = args
    return kernels.backtrack(n, k, m, flat, poly, first)


def backtracking_search(
    h: OrderedHypergraph,
    k: int,
    mode: Mode | str,
    parallel: bool = False,
    workers: int | None = None,
    symmetry_breaking: bool = False,
) -> SearchOutcome:
    """Depth-first search over vertices 1..n with dead-edge pruning.

    Sequentially, the witness is the lexicographically smallest valid
    coloring. With ``parallel=True`` the colors of vertex 1 are split into
    shards searched in separate processes; the verdict is the same and
    ``nodes_explored`` is the sum over shards. ``symmetry_breaking`` fixes
    vertex 1 to color 1, which is without loss of generality for both modes.
    """
    mode = Mode(mode)
    if k < 1:
        raise ColoringError(f"k must be positive, got {k}")
    poly = mode is Mode.POLYCHROMATIC
    flat = _flat(h)
    first: Sequence[int] = (1,) if symmetry_breaking else tuple(range(1, k + 1))
    if not parallel or len(first) == 1:
        colors, nodes = kernels.backtrack(h.n, k, h.m, flat, poly, first)
        return _outcome(h, k, mode, colors, nodes)
    jobs = [(h.n, k, h.m, flat, poly, (c,)) for c in first]
    with ProcessPoolExecutor(max_workers=workers or len(jobs)) as pool:
        results = list(pool.map(_run_shard, jobs))
    nodes = sum(r[1] for r in results)
    colors = next((r[0] for r in results if r[0] is not None), None)
    return _outcome(h, k, mode, colors, nodes)


def search(h, k, mode, oracle="backtrack", **kw) -> SearchOutcome:
    if oracle == "exhaustive":
        return exhaustive_search(h, k, mode, **kw)
    if oracle == "backtrack":
        return backtracking_search(h, k, mode, **kw)
    raise ValueError(f"unknown oracle {oracle!r}")
