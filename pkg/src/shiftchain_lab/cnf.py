"""CNF encodings of proper / polychromatic k-colorability.

Variable ``var(v, c) = (v-1)*k + c`` is true iff vertex ``v`` gets color
``c``. Clauses, in emission order:

1. at least one color per vertex, by ``v``;
2. pairwise at most one color, by ``(v, c, c')`` with ``c < c'``;
3. per edge and color, by ``(edge index, c)``: in proper mode
   ``¬x[v1,c] ∨ ... ∨ ¬x[vm,c]``, in polychromatic mode
   ``x[v1,c] ∨ ... ∨ x[vm,c]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .coloring import Coloring, Mode
from .core import OrderedHypergraph
from .errors import AmbiguousVertex, CapExceeded, FormatError

Clause = tuple[int, ...]


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...]
    # carried into the DIMACS comment line only
    mode: str = "cnf"
    k: int = 0

    def __post_init__(self):
        clauses = tuple(tuple(int(x) for x in cl) for cl in self.clauses)
        for i, cl in enumerate(clauses):
            if not cl:
                raise ValueError(f"clause {i} is empty")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {i}: literal {lit} out of range 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)


def var(v: int, c: int, k: int) -> int:
    return (v - 1) * k + c


def encode(h: OrderedHypergraph, k: int, mode: Mode | str) -> CnfFormula:
    mode = Mode(mode)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n = h.n
    clauses: list[Clause] = [tuple(var(v, c, k) for c in range(1, k + 1)) for v in range(1, n + 1)]
    for v in range(1, n + 1):
        for c, d in combinations(range(1, k + 1), 2):
            clauses.append((-var(v, c, k), -var(v, d, k)))
    sign = -1 if mode is Mode.PROPER else 1
    for edge in h.edges:
        for c in range(1, k + 1):
            clauses.append(tuple(sign * var(v, c, k) for v in edge))
    return CnfFormula(n * k, tuple(clauses), mode.value, k)


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"c shiftchain-lab {f.mode} k={f.k}", f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines.extend(" ".join(map(str, cl)) + " 0" for cl in f.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Inverse of :func:`to_dimacs`; also accepts clauses spanning lines."""
    num_vars = num_clauses = None
    mode, k = "cnf", 0
    clauses: list[Clause] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 4 and parts[1] == "shiftchain-lab" and parts[3].startswith("k="):
                mode, k = parts[2], int(parts[3][2:])
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"bad problem line {line!r}", lineno)
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise FormatError("clause before problem line", lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"bad clause line {line!r}", lineno) from None
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise FormatError("missing problem line")
    if current:
        raise FormatError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise FormatError(f"declared {num_clauses} clauses, found {len(clauses)}")
    try:
        return CnfFormula(num_vars, tuple(clauses), mode, k)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_model(text: str) -> list[int]:
    """Read a solver model: signed integers, ``v`` tokens and ``c``/``s`` lines ignored.

    A ``0`` terminator is dropped.
    """
    lits = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        for tok in line.split():
            if tok == "v":
                continue
            try:
                lit = int(tok)
            except ValueError:
                raise FormatError(f"bad model token {tok!r}") from None
            if lit:
                lits.append(lit)
    return lits


def decode_model(literals: Iterable[int], n: int, k: int) -> Coloring:
    true_vars = {lit for lit in literals if lit > 0}
    colors = []
    for v in range(1, n + 1):
        hits = [c for c in range(1, k + 1) if var(v, c, k) in true_vars]
        if len(hits) != 1:
            raise AmbiguousVertex(v, hits)
        colors.append(hits[0])
    return Coloring(tuple(colors), k)


def one_hot_models_satisfy(f: CnfFormula, n: int, k: int, cap: int = 10**6) -> list[int] | None:
    """Complete satisfiability check restricted to one-hot assignments.

    Every model of an :func:`encode` formula is one-hot per vertex, because
    clause groups 1 and 2 say so; conversely this function evaluates *all*
    clauses literally, so it is a sound and complete SAT check for such
    formulas that does not depend on how edge clauses were built. Returns a
    model as a literal list, or ``None``.
    """
    if f.num_vars != n * k:
        raise ValueError(f"formula has {f.num_vars} vars, expected n*k = {n * k}")
    if k**n > cap:
        raise CapExceeded(f"{k}^{n} one-hot assignments exceed cap {cap}")
    for colors in product(range(k), repeat=n):
        truth = [False] * (n * k + 1)
        for v, c in enumerate(colors):
            truth[v * k + c + 1] = True
        if all(any(truth[lit] if lit > 0 else not truth[-lit] for lit in cl) for cl in f.clauses):
            return [i if truth[i] else -i for i in range(1, n * k + 1)]
    return None


def have_external_solver() -> bool:
    try:
        import pysat.solvers  # noqa: F401
    except ImportError:
        return False
    return True


def solve_external(f: CnfFormula) -> list[int] | None:
    """Solve with an off-the-shelf SAT solver (``python-sat``, CaDiCaL).

    Returns a model or ``None`` if unsatisfiable. Raises ``ImportError`` when
    the optional dependency is missing.
    """
    from pysat.solvers import Solver

    with Solver(name="cadical153", bootstrap_with=[list(cl) for cl in f.clauses]) as s:
        if s.solve():
            return list(s.get_model())
        return None
