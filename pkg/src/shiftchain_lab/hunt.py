"""Search harness for shift-chains without a proper 2-coloring.

Every instance is decided by the backtracking search. A "no coloring"
verdict is only reported as a counterexample after exhaustive search agrees;
when ``2**n`` exceeds the exhaustive cap the instance is counted as
unconfirmed instead.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .coloring import EXHAUSTIVE_CAP, Mode, backtracking_search, exhaustive_search
from .constructions import MAX_ENUMERATE_N, iter_shift_chains, random_shift_chain
from .core import ShiftChain, edge_count_bound, validate_shift_chain
from .errors import ShiftChainError
from .rng import SplitMix64

log = logging.getLogger(__name__)

COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"
UNCONFIRMED = "unconfirmed"


@dataclass(frozen=True)
class Counterexample:
    chain: ShiftChain
    backtrack_nodes: int
    exhaustive_nodes: int


@dataclass
class HuntReport:
    instances_tested: int = 0
    verdicts: Counter = field(default_factory=Counter)
    counterexamples: list[Counterexample] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "instances_tested": self.instances_tested,
            "verdicts": {key: self.verdicts.get(key, 0) for key in (COLORABLE, NOT_COLORABLE, UNCONFIRMED)},
            "counterexamples": [
                {
                    "m": cx.chain.m,
                    "n": cx.chain.n,
                    "edges": [list(e) for e in cx.chain.edges],
                    "backtrack_nodes": cx.backtrack_nodes,
                    "exhaustive_nodes": cx.exhaustive_nodes,
                }
                for cx in self.counterexamples
            ],
        }


def _random_instances(m, n_range, edges_range, seed, budget) -> Iterator[ShiftChain]:
    rng = SplitMix64(seed)
    n_lo, n_hi = max(n_range[0], m), n_range[1]
    for _ in range(budget):
        n = rng.between(n_lo, n_hi)
        hi = min(edges_range[1], edge_count_bound(m, n))
        lo = min(edges_range[0], hi)
        yield random_shift_chain(n, m, rng.between(lo, hi), rng.next_u64())


def _enumerated_instances(m, n_range, edges_range, budget, max_n) -> Iterator[ShiftChain]:
    produced = 0
    for n in range(max(n_range[0], m), n_range[1] + 1):
        for chain in iter_shift_chains(n, m, edges_range[1], max_n):
            if produced >= budget:
                return
            if len(chain.edges) >= edges_range[0]:
                produced += 1
                yield chain


def hunt(
    m: int,
    n_range: tuple[int, int],
    edges_range: tuple[int, int],
    seed: int = 0,
    budget: int = 100,
    strategy: str = "random",
    exhaustive_cap: int = EXHAUSTIVE_CAP,
    max_n: int = MAX_ENUMERATE_N,
    workers: int | None = None,
) -> HuntReport:
    if m < 1:
        raise ShiftChainError(f"m must be positive, got {m}")
    if budget < 0:
        raise ShiftChainError(f"budget must be non-negative, got {budget}")
    if not (1 <= n_range[0] <= n_range[1]) or n_range[1] < m:
        raise ShiftChainError(f"bad n range {n_range} for m={m}")
    if not 1 <= edges_range[0] <= edges_range[1]:
        raise ShiftChainError(f"bad edge-count range {edges_range}")
    if strategy == "random":
        instances = _random_instances(m, n_range, edges_range, seed, budget)
    elif strategy == "enumerate":
        instances = _enumerated_instances(m, n_range, edges_range, budget, max_n)
    else:
        raise ShiftChainError(f"unknown strategy {strategy!r}")

    report = HuntReport()
    parallel = bool(workers and workers > 1)
    for chain in instances:
        report.instances_tested += 1
        bt = backtracking_search(chain, 2, Mode.PROPER, parallel=parallel, workers=workers)
        if bt.found:
            report.verdicts[COLORABLE] += 1
            continue
        if 2**chain.n > exhaustive_cap:
            report.verdicts[UNCONFIRMED] += 1
            continue
        ex = exhaustive_search(chain, 2, Mode.PROPER, cap=exhaustive_cap)
        if ex.found:
            raise AssertionError(f"oracles disagree on {chain}")
        # re-validate from raw edges so the certificate does not trust the generator
        validate_shift_chain(chain.m, chain.n, chain.edges)
        report.verdicts[NOT_COLORABLE] += 1
        report.counterexamples.append(Counterexample(chain, bt.nodes_explored, ex.nodes_explored))
        log.info("certified non-2-colorable instance n=%d t=%d", chain.n, len(chain.edges))
    return report
