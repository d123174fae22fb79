"""Deliberately naive reference implementations used only to cross-check the package."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def naive_edges_without_triangle(n, edges):
    es = {frozenset(e) for e in edges}
    bad = []
    for u, v in sorted(tuple(sorted(e)) for e in es):
        if not any(frozenset((u, w)) in es and frozenset((v, w)) in es for w in range(n) if w not in (u, v)):
            bad.append((u, v))
    return bad


def naive_is_top_monotone(n, edges, cycle):
    es = {frozenset(e) for e in edges}
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        return False
    if any(frozenset((cycle[i], cycle[(i + 1) % m])) not in es for i in range(m)):
        return False
    deg = [0] * n
    for u, v in (tuple(e) for e in es):
        deg[u] += 1
        deg[v] += 1
    top = sorted(deg, reverse=True)[:m]
    for order in (list(cycle), list(reversed(cycle))):
        for s in range(m):
            if [deg[order[(s + i) % m]] for i in range(m)] == top:
                return True
    return False


@lru_cache(maxsize=None)
def labelled_triangular_table(n):
    """Map sorted degree tuple -> whether some labelled triangular graph on n vertices has it."""
    pairs = list(combinations(range(n), 2))
    table = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        key = tuple(sorted(deg, reverse=True))
        if table.get(key):
            continue
        table[key] = not naive_edges_without_triangle(n, edges)
    return table
