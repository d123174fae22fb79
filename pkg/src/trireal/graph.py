"""Simple undirected graphs, circulant graphs and the certifying verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import GraphError, InvalidCirculant, NoSuchCycle
from .sequences import DegreeSequence

__all__ = [
    "Graph",
    "CirculantSpec",
    "WitnessCycle",
    "circulant",
    "complete_graph",
    "complete_minus_edge",
    "complete_bipartite",
    "disjoint_union",
    "attach_vertex",
    "degree_sequence_of",
    "edges_without_triangle",
    "is_triangular",
    "is_cycle",
    "monotone_labeling",
    "is_top_monotone_cycle",
    "hamiltonian_cycle_with_gap",
]


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1`` stored as adjacency sets.

    Constructors mutate a graph while building it and hand it over when
    done; the verifiers never mutate.
    """

    __slots__ = ("adj",)

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return len(self.adj)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.adj):
            raise GraphError(f"vertex {v} out of range 0..{len(self.adj) - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and v in self.adj[u]

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            raise GraphError(f"missing edge ({u}, {v})")
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> int:
        """Append vertex ``n`` joined to ``neighbors``; returns its id."""
        nbrs = list(neighbors)
        if len(set(nbrs)) != len(nbrs):
            raise GraphError(f"duplicate neighbor in {nbrs}")
        for v in nbrs:
            self._check(v)
        new = len(self.adj)
        self.adj.append(set())
        for v in nbrs:
            self.add_edge(new, v)
        return new

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self.adj)) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = [set(s) for s in self.adj]
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class CirculantSpec:
    """Vertex count plus connection set S of residues mod n."""

    n: int
    S: frozenset

    def __init__(self, n: int, S: Iterable[int]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "S", frozenset(s % n for s in S) if n > 0 else frozenset())

    @property
    def closed(self) -> bool:
        """S + S contains S, which makes every edge of the circulant lie in a triangle."""
        return all(any((s - t) % self.n in self.S for t in self.S) for s in self.S)

    def violations(self, require_closure: bool = True) -> list[str]:
        n, S = self.n, self.S
        out = []
        if n <= 0:
            out.append("n must be positive")
            return out
        if 0 in S:
            out.append("0 in S")
        if any((-s) % n not in S for s in S):
            out.append("S is not symmetric")
        if require_closure and not self.closed:
            out.append("S + S does not contain S")
        if len(S) >= n:
            out.append("|S| must be < n")
        return out


@dataclass(frozen=True)
class WitnessCycle:
    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))

    @property
    def m(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def circulant(spec: CirculantSpec, require_closure: bool = False) -> Graph:
    """Graph on Z_n joining i and j when i - j lies in S.

    Plain cycles and other non-closed connection sets are allowed unless
    ``require_closure`` is set; only closed sets guarantee triangularity.

    Raises:
        InvalidCirculant: if S contains 0, is not symmetric or is too
            large, or (with ``require_closure``) S + S does not contain S.
    """
    problems = spec.violations(require_closure)
    if problems:
        raise InvalidCirculant("; ".join(problems))
    return _raw_circulant(spec.n, spec.S)


def _raw_circulant(n: int, S: Iterable[int]) -> Graph:
    g = Graph(n)
    offsets = {s % n for s in S}
    for i in range(n):
        g.adj[i] = {(i + s) % n for s in offsets}
    return g


def complete_graph(n: int) -> Graph:
    g = Graph(n)
    for i in range(n):
        g.adj[i] = set(range(n)) - {i}
    return g


def complete_minus_edge(n: int) -> Graph:
    """K_n without the edge between the two highest-numbered vertices."""
    if n < 2:
        raise GraphError("complete_minus_edge needs n >= 2")
    g = complete_graph(n)
    g.remove_edge(n - 2, n - 1)
    return g


def complete_bipartite(r: int, s: int) -> Graph:
    g = Graph(r + s)
    for u in range(r):
        for v in range(r, r + s):
            g.add_edge(u, v)
    return g


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Copy of g followed by h with its ids shifted by ``g.n``."""
    out = g.copy()
    off = g.n
    out.adj.extend({v + off for v in s} for s in h.adj)
    return out


def attach_vertex(g: Graph, neighbors: Sequence[int]) -> Graph:
    out = g.copy()
    out.add_vertex(neighbors)
    return out


def degree_sequence_of(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


def edges_without_triangle(g: Graph) -> list[tuple[int, int]]:
    """Edges whose endpoints have no common neighbour; empty iff g is triangular."""
    adj = g.adj
    bad = []
    for u in range(len(adj)):
        au = adj[u]
        for v in au:
            if u < v and au.isdisjoint(adj[v]):
                bad.append((u, v))
    bad.sort()
    return bad


def is_triangular(g: Graph) -> bool:
    adj = g.adj
    return all(not adj[u].isdisjoint(adj[v]) for u in range(len(adj)) for v in adj[u] if u < v)


def is_cycle(g: Graph, cycle: Iterable[int]) -> bool:
    vs = list(cycle)
    m = len(vs)
    if m < 3 or len(set(vs)) != m:
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[(i + 1) % m]) for i in range(m))


def monotone_labeling(g: Graph, cycle: Iterable[int]) -> Optional[list[int]]:
    """Relabel a cycle as v_1..v_m with deg(v_i) = d_i, or None if impossible.

    The cycle must be a cycle of g and its vertices must carry exactly the
    m largest degrees of g, in non-increasing order along some rotation
    and direction.
    """
    vs = list(cycle)
    if not is_cycle(g, vs):
        return None
    m = len(vs)
    degs = [g.degree(v) for v in vs]
    top = list(degree_sequence_of(g))[:m]
    if sorted(degs, reverse=True) != top:
        return None
    for order in (vs, vs[::-1]):
        ds = [g.degree(v) for v in order]
        ascents = [i for i in range(m) if ds[i] < ds[(i + 1) % m]]
        if len(ascents) > 1:
            continue
        start = (ascents[0] + 1) % m if ascents else 0
        return order[start:] + order[:start]
    return None


def is_top_monotone_cycle(g: Graph, cycle: Iterable[int]) -> bool:
    return monotone_labeling(g, cycle) is not None


def hamiltonian_cycle_with_gap(p: int, r: int) -> WitnessCycle:
    """Hamiltonian cycle of ``complete_minus_edge(p)`` with its two
    non-adjacent vertices p-2, p-1 exactly r steps apart along one arc.

    Vertex p-2 sits at position 0, vertex p-1 at position r, and the
    remaining vertices fill the other positions in increasing order.

    Raises:
        NoSuchCycle: unless 2 <= r <= p - 2.
    """
    if p < 4 or not 2 <= r <= p - 2:
        raise NoSuchCycle(f"no Hamiltonian cycle of K_{p} minus an edge with gap {r}")
    rest = iter(range(p - 2))
    order = []
    for pos in range(p):
        if pos == 0:
            order.append(p - 2)
        elif pos == r:
            order.append(p - 1)
        else:
            order.append(next(rest))
    return WitnessCycle(order)
