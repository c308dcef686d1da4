"""Generators of shift-chains: the recursive family without polychromatic
3-colorings, seeded random chains, and exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .core import Edge, ShiftChain, edge_count_bound
from .errors import CapExceeded, ShiftChainError, SizeError
from .rng import SplitMix64

MAX_CONSTRUCT_M = 8
MAX_ENUMERATE_N = 10


@dataclass(frozen=True)
class Level:
    """One step of the recursion.

    ``appended`` and ``closing`` index into the edge list of *this* level's
    chain: the edges extending an edge of the previous level by one new
    vertex, and the edges made of those new vertices plus the last vertex.
    Level 1 is the base case and has both ranges empty.
    """

    m: int
    n: int
    t: int
    appended: range
    closing: range


@dataclass(frozen=True)
class ConstructionTrace:
    levels: tuple[Level, ...]


def theorem1_levels(m: int, max_m: int = MAX_CONSTRUCT_M) -> Iterator[tuple[ShiftChain, Level]]:
    """Yield ``(H_j, level record)`` for ``j = 1..m``."""
    if m < 1:
        raise ShiftChainError(f"m must be positive, got {m}")
    if m > max_m:
        raise SizeError(f"m={m} exceeds the construction cap {max_m} (edge count grows as m!)")
    edges: list[Edge] = [(1,)]
    n = 1
    yield ShiftChain(1, 1, tuple(edges)), Level(1, 1, 1, range(0), range(0))
    for j in range(1, m):
        t = len(edges)
        n_next = n + j * t + 1
        # block i (0-based) of new vertices is n + i*j + 1 .. n + i*j + j
        appended = [a + (n + i * j + s,) for i, a in enumerate(edges) for s in range(1, j + 1)]
        closing = [tuple(n + i * j + s for s in range(1, j + 1)) + (n_next,) for i in range(t)]
        edges = appended + closing
        n = n_next
        yield (
            ShiftChain(j + 1, n, tuple(edges)),
            Level(j + 1, n, len(edges), range(len(appended)), range(len(appended), len(edges))),
        )


def construct_theorem1(m: int, max_m: int = MAX_CONSTRUCT_M) -> tuple[ShiftChain, ConstructionTrace]:
    """Build the m-uniform shift-chain ``H_m`` that has no polychromatic 3-coloring.

    ``H_1 = ([1], {(1)})``. From ``H_j`` with chain-ordered edges
    ``A_1 ⪯ ... ⪯ A_t`` on ``n_j`` vertices, ``H_{j+1}`` has
    ``n_j + j*t + 1`` vertices and the edges

    * ``A_i + (n_j + (i-1)*j + s,)`` for ``i = 1..t``, ``s = 1..j``, and
    * ``(n_j + (i-1)*j + 1, ..., n_j + (i-1)*j + j, n_{j+1})`` for ``i = 1..t``,

    listed in that order, which is a chain order.
    """
    chain = None
    levels = []
    for chain, level in theorem1_levels(m, max_m):
        levels.append(level)
    return chain, ConstructionTrace(tuple(levels))


def random_shift_chain(n: int, m: int, target_edges: int, seed: int) -> ShiftChain:
    """Random chain of exactly ``target_edges`` edges, deterministic in ``seed``.

    A walk starts at ``(1, ..., m)`` and repeatedly increments one uniformly
    chosen coordinate that can move without breaking strict increase or
    exceeding ``n``. Every such walk visits exactly ``m(n-m)+1`` tuples before
    reaching ``(n-m+1, ..., n)``; the tuples at ``target_edges`` uniformly
    chosen step indices are recorded.
    """
    if not 1 <= m <= n:
        raise ShiftChainError(f"need 1 <= m <= n, got m={m}, n={n}")
    steps = edge_count_bound(m, n)
    if not 1 <= target_edges <= steps:
        raise ShiftChainError(f"target_edges={target_edges} infeasible, must be in [1, {steps}]")
    rng = SplitMix64(seed)
    keep = set(rng.sample(steps, target_edges))
    cur = list(range(1, m + 1))
    edges: list[Edge] = []
    for step in range(steps):
        if step in keep:
            edges.append(tuple(cur))
        if step == steps - 1:
            break
        movable = [
            i for i in range(m) if cur[i] + 1 < (cur[i + 1] if i + 1 < m else n + 1)
        ]
        cur[movable[rng.below(len(movable))]] += 1
    return ShiftChain(m, n, tuple(edges))


def iter_shift_chains(
    n: int, m: int, max_edges: int, max_n: int = MAX_ENUMERATE_N
) -> Iterator[ShiftChain]:
    """Every shift-chain on ``[n]`` with 1..``max_edges`` edges, exactly once.

    Chains are produced depth-first in lexicographic order of their edge
    sequences (a chain precedes its extensions).
    """
    if n > max_n:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {max_n}")
    if not 1 <= m <= n:
        raise ShiftChainError(f"need 1 <= m <= n, got m={m}, n={n}")
    tuples = list(combinations(range(1, n + 1), m))
    # lex order refines dominance, so successors of i all have index > i
    succ = [
        [j for j in range(i + 1, len(tuples)) if all(x <= y for x, y in zip(tuples[i], tuples[j]))]
        for i in range(len(tuples))
    ]
    stack: list[int] = []

    def extend(last: int) -> Iterator[ShiftChain]:
        yield ShiftChain(m, n, tuple(tuples[i] for i in stack))
        if len(stack) < max_edges:
            for j in succ[last]:
                stack.append(j)
                yield from extend(j)
                stack.pop()

    for i in range(len(tuples)):
        stack.append(i)
        yield from extend(i)
        stack.pop()


def enumerate_shift_chains(
    n: int,
    m: int,
    max_edges: int,
    visitor: Callable[[ShiftChain], object] | None = None,
    max_n: int = MAX_ENUMERATE_N,
) -> int:
    """Call ``visitor`` on every chain from :func:`iter_shift_chains`.

    Returns the number of chains visited. A visitor returning ``True`` stops
    the enumeration early (the stopping chain is counted).
    """
    count = 0
    for chain in iter_shift_chains(n, m, max_edges, max_n):
        count += 1
        if visitor is not None and visitor(chain) is True:
            break
    return count
