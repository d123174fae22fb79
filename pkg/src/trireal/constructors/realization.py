"""Result types shared by the constructors and the verification gate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from ..errors import InternalInvariantViolation
from ..graph import (
    Graph,
    WitnessCycle,
    complete_graph,
    degree_sequence_of,
    disjoint_union,
    edges_without_triangle,
    is_top_monotone_cycle,
)
from ..graphio import to_json_dict
from ..sequences import DegreeSequence, render_sequence


@dataclass
class ConstructionTrace:
    """How a realisation was produced.

    ``reduction_log`` holds a chain of sequences, each obtained from the
    previous one by a single Havel-Hakimi step (the width-1 recursion or
    the reverse reduction for p >= b). ``attachments`` lists the neighbour
    sets of re-attached vertices in the order they were added.
    """

    route: str
    reduction_log: list[DegreeSequence] = field(default_factory=list)
    attachments: list[tuple[int, ...]] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def nest(self, prefix: str) -> "ConstructionTrace":
        """Copy of this trace with ``prefix`` prepended to the route."""
        return ConstructionTrace(
            route=f"{prefix} > {self.route}",
            reduction_log=list(self.reduction_log),
            attachments=list(self.attachments),
            flags=list(self.flags),
        )


@dataclass
class Realization:
    sequence: DegreeSequence
    graph: Graph
    witness: Optional[WitnessCycle]
    trace: ConstructionTrace

    def to_json_dict(self) -> dict[str, Any]:
        out = {"sequence": render_sequence(self.sequence)}
        out.update(to_json_dict(self.graph, self.witness, include_degrees=False))
        out["route"] = self.trace.route
        out["reduction_log"] = [render_sequence(d) for d in self.trace.reduction_log]
        if self.trace.flags:
            out["flags"] = list(self.trace.flags)
        return out


def certify(
    graph: Graph,
    target: Iterable[int],
    trace: ConstructionTrace,
    witness: Optional[Iterable[int]] = None,
) -> Realization:
    """Run both verifiers (and the witness check) before handing a graph out."""
    target = DegreeSequence(target)
    got = degree_sequence_of(graph)
    if got != target:
        raise InternalInvariantViolation(
            f"{trace.route}: built {render_sequence(got)}, wanted {render_sequence(target)}"
        )
    bad = edges_without_triangle(graph)
    if bad:
        raise InternalInvariantViolation(f"{trace.route}: edges outside triangles {bad[:5]}")
    wc = None
    if witness is not None:
        wc = WitnessCycle(witness)
        if not is_top_monotone_cycle(graph, wc):
            raise InternalInvariantViolation(f"{trace.route}: witness {wc.vertices} is not top monotone")
    return Realization(target, graph, wc, trace)


def with_clique_copies(real: Realization, copies: int, b: int) -> Realization:
    """Disjoint union with ``copies`` extra K_{b+1} blocks, re-certified."""
    if copies == 0:
        return real
    g = real.graph
    for _ in range(copies):
        g = disjoint_union(g, complete_graph(b + 1))
    trace = real.trace.nest(f"strip-K{b + 1}x{copies}")
    target = list(real.sequence) + [b] * (copies * (b + 1))
    return certify(g, target, trace, real.witness)
