"""Edge-list text, JSON and DOT serialisation of graphs."""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from .errors import GraphError, MalformedInput
from .graph import Graph, degree_sequence_of


def to_edge_list(g: Graph) -> str:
    """``"n m"`` header then one ``"u v"`` line per edge, u < v, 0-based."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise MalformedInput("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise MalformedInput(f"bad edge-list line: {exc}") from None
    if len(edges) != m:
        raise MalformedInput(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise MalformedInput(str(exc)) from None


def to_json_dict(
    g: Graph,
    witness: Optional[Iterable[int]] = None,
    include_degrees: bool = True,
) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if include_degrees:
        out["degree_sequence"] = list(degree_sequence_of(g))
    if witness is not None:
        out["witness_cycle"] = list(witness)
    return out


def from_json_dict(obj: dict[str, Any]) -> tuple[Graph, Optional[list[int]]]:
    """Return the graph and the optional ``witness_cycle`` stored with it."""
    try:
        g = Graph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad graph JSON: {exc}") from None
    witness = obj.get("witness_cycle")
    return g, ([int(v) for v in witness] if witness is not None else None)


def to_dot(g: Graph, name: str = "G", comments: Iterable[str] = ()) -> str:
    lines = [f"// {c}" for c in comments]
    lines.append(f"graph {name} {{")
    lines.extend(f'  {v} [label="{v}"];' for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> tuple[Graph, Optional[list[int]]]:
    """Read either the JSON form or the edge-list form, sniffing the first character."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return from_json_dict(obj)
    return parse_edge_list(text), None
