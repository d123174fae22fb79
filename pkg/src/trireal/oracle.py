"""Exhaustive search for triangular realisations of small sequences.

The search is independent of the constructors: it decides the adjacency
of one vertex at a time (vertices in non-increasing order of target
degree) and prunes with

* residual feasibility: the residual degrees of the undecided vertices
  must form a graphical sequence;
* edge-level triangle pruning: once an endpoint of an edge is complete,
  the edge needs a common neighbour that is present or still possible.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, Optional

from .errors import BudgetExceeded, TrirealError
from .graph import Graph
from .sequences import DegreeSequence, classify, is_graphical, render_sequence

__all__ = [
    "SearchBudget",
    "SweepEntry",
    "SweepReport",
    "oracle_search",
    "iter_realizations",
    "enumerate_graphical",
    "conjecture_sweep",
]

REALIZED = "realized"
NONE_EXISTS = "none_exists"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 10
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")


class _Search:
    def __init__(self, d, budget: SearchBudget, triangular: bool, prune_isomorphs: bool):
        self.d = list(d)
        self.n = len(self.d)
        self.budget = budget
        self.triangular = triangular
        self.prune_isomorphs = prune_isomorphs
        self.adj: list[set[int]] = [set() for _ in range(self.n)]
        self.res = list(self.d)
        self.nodes = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def _tick(self) -> None:
        self.nodes += 1
        lim = self.budget.node_limit
        if lim is not None and self.nodes > lim:
            raise BudgetExceeded(f"node limit {lim} reached")
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit {self.budget.time_limit}s reached")

    def run(self) -> Iterator[Graph]:
        if not is_graphical(self.d):
            return
        yield from self._place(0)

    def _choices(self, u: int):
        cands = [v for v in range(u + 1, self.n) if self.res[v] > 0]
        k = self.res[u]
        if k > len(cands):
            return
        if not self.prune_isomorphs:
            yield from combinations(cands, k)
            return
        # twins (same target, same neighbours so far) are interchangeable:
        # only ever take a prefix of each twin class
        classes: dict = {}
        for v in cands:
            classes.setdefault((self.d[v], frozenset(self.adj[v])), []).append(v)
        groups = list(classes.values())

        def rec(i, left):
            if i == len(groups):
                if left == 0:
                    yield ()
                return
            g = groups[i]
            for take in range(min(left, len(g)), -1, -1):
                for rest in rec(i + 1, left - take):
                    yield tuple(g[:take]) + rest

        yield from rec(0, k)

    def _feasible(self, u: int) -> bool:
        rest = [self.res[v] for v in range(u + 1, self.n)]
        return not rest or is_graphical(rest)

    def _edge_ok(self, x: int, v: int, u: int) -> bool:
        """Edge (x, v) with x complete: a common neighbour exists or may still appear."""
        adj, res = self.adj, self.res
        for w in adj[x]:
            if w == v:
                continue
            if w in adj[v]:
                return True
            if w > u and res[w] > 0 and res[v] > 0:
                return True
        return False

    def _triangles_ok(self, u: int) -> bool:
        adj = self.adj
        for x in range(u + 1):
            for v in adj[x]:
                if v <= u:
                    if x < v and adj[x].isdisjoint(adj[v]):
                        return False
                elif not self._edge_ok(x, v, u):
                    return False
        return True

    def _place(self, u: int) -> Iterator[Graph]:
        if u == self.n:
            g = Graph(self.n)
            g.adj = [set(s) for s in self.adj]
            yield g
            return
        for nbrs in list(self._choices(u)):
            self._tick()
            for v in nbrs:
                self.adj[u].add(v)
                self.adj[v].add(u)
                self.res[v] -= 1
            saved = self.res[u]
            self.res[u] = 0
            if self._feasible(u) and (not self.triangular or self._triangles_ok(u)):
                yield from self._place(u + 1)
            self.res[u] = saved
            for v in nbrs:
                self.adj[u].discard(v)
                self.adj[v].discard(u)
                self.res[v] += 1


def _check_size(d, budget: SearchBudget) -> None:
    if len(d) > budget.max_vertices:
        raise BudgetExceeded(f"{len(d)} vertices exceed max_vertices={budget.max_vertices}")


def oracle_search(
    d,
    budget: Optional[SearchBudget] = None,
    *,
    prune_isomorphs: bool = False,
) -> Optional[Graph]:
    """First triangular realisation of ``d`` in search order, or None if none exists.

    Raises:
        BudgetExceeded: the node or time limit was hit before a decision,
            or ``d`` has more than ``budget.max_vertices`` terms.
    """
    budget = budget or SearchBudget()
    d = DegreeSequence(d)
    _check_size(d, budget)
    return next(_Search(d, budget, True, prune_isomorphs).run(), None)


def iter_realizations(
    d,
    accept: Optional[Callable[[Graph], bool]] = None,
    budget: Optional[SearchBudget] = None,
    *,
    triangular: bool = False,
) -> Iterator[Graph]:
    """All labelled realisations of ``d`` (vertex i has degree d[i]), optionally filtered."""
    budget = budget or SearchBudget()
    d = DegreeSequence(d)
    _check_size(d, budget)
    for g in _Search(d, budget, triangular, False).run():
        if accept is None or accept(g):
            yield g


def enumerate_graphical(max_n: int, min_degree: int) -> list[DegreeSequence]:
    """Graphical sequences with 1 <= n <= max_n and every term >= min_degree."""
    out = []
    for n in range(1, max_n + 1):
        values = range(n - 1, min_degree - 1, -1)
        for combo in combinations_with_replacement(values, n):
            if is_graphical(combo):
                out.append(DegreeSequence(combo))
    return out


@dataclass
class SweepEntry:
    sequence: DegreeSequence
    status: str
    nodes: int = 0
    constructor: Optional[str] = None  # "ok", an error name, or None when not applicable

    def to_json_dict(self) -> dict:
        out = {"sequence": render_sequence(self.sequence), "status": self.status, "nodes": self.nodes}
        if self.constructor is not None:
            out["constructor"] = self.constructor
        return out


@dataclass
class SweepReport:
    max_n: int
    min_degree: int
    entries: list[SweepEntry] = field(default_factory=list)

    @property
    def sequences_tested(self) -> int:
        return len(self.entries)

    @property
    def counterexamples(self) -> list[DegreeSequence]:
        return [e.sequence for e in self.entries if e.status == NONE_EXISTS]

    @property
    def budget_exceeded(self) -> list[DegreeSequence]:
        return [e.sequence for e in self.entries if e.status == BUDGET_EXCEEDED]

    @property
    def constructor_mismatches(self) -> list[DegreeSequence]:
        return [e.sequence for e in self.entries if e.constructor not in (None, "ok")]

    @property
    def clean(self) -> bool:
        return not (self.counterexamples or self.budget_exceeded or self.constructor_mismatches)

    def to_json_dict(self) -> dict:
        return {
            "n_range": [1, self.max_n],
            "min_degree": self.min_degree,
            "sequences_tested": self.sequences_tested,
            "counterexamples": [render_sequence(s) for s in self.counterexamples],
            "budget_exceeded": [render_sequence(s) for s in self.budget_exceeded],
            "constructor_mismatches": [render_sequence(s) for s in self.constructor_mismatches],
            "entries": [e.to_json_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_table(self) -> str:
        rows = [f"{'sequence':<28} {'status':<16} {'nodes':>8}  constructor"]
        for e in self.entries:
            rows.append(f"{render_sequence(e.sequence):<28} {e.status:<16} {e.nodes:>8}  {e.constructor or '-'}")
        rows.append(
            f"tested={self.sequences_tested} counterexamples={len(self.counterexamples)} "
            f"budget_exceeded={len(self.budget_exceeded)} mismatches={len(self.constructor_mismatches)}"
        )
        return "\n".join(rows)


def _sweep_one(args) -> SweepEntry:
    d, budget, prune = args
    search = _Search(d, budget, True, prune)
    try:
        _check_size(d, budget)
        found = next(search.run(), None)
        status = REALIZED if found is not None else NONE_EXISTS
    except BudgetExceeded:
        status = BUDGET_EXCEEDED
    entry = SweepEntry(d, status, search.nodes)
    cls = classify(d)
    if cls.tag != "General" and min(d) >= 4:
        from .constructors import realize

        try:
            realize(d)
            entry.constructor = "ok"
        except TrirealError as exc:
            entry.constructor = type(exc).__name__
    return entry


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TRIREAL_JOBS", "1")))
    except ValueError:
        return 1


def conjecture_sweep(
    max_n: int,
    min_degree: int,
    budget: Optional[SearchBudget] = None,
    jobs: Optional[int] = None,
    prune_isomorphs: bool = False,
) -> SweepReport:
    """Run the oracle on every graphical sequence with n <= max_n and terms >= min_degree.

    Regular and biregular entries with all terms >= 4 are also passed to
    the constructors, whose outcome is recorded per entry. Results are in
    enumeration order whatever the number of worker processes.
    """
    budget = budget or SearchBudget(max_vertices=max(max_n, 1))
    jobs = default_jobs() if jobs is None else max(1, jobs)
    work = [(d, budget, prune_isomorphs) for d in enumerate_graphical(max_n, min_degree)]
    if jobs == 1:
        entries = [_sweep_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_sweep_one, work, chunksize=8))
    return SweepReport(max_n, min_degree, entries)
