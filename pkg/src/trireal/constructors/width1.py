"""Circulant realisations of (b^q) and of width-1 sequences ((b+1)^p, b^q).

Every realisation here carries a top monotone m-cycle: a cycle whose
vertices, read in order from a suitable start, have exactly the m largest
degrees of the graph in non-increasing order. Cycles are returned as
labelled lists ``[v_1, ..., v_m]``.
"""

from __future__ import annotations

from typing import Optional

from ..errors import ExcludedCase, InternalInvariantViolation, MOutOfRange, NotGraphical, PreconditionViolated
from ..graph import Graph, _raw_circulant, complete_minus_edge, monotone_labeling
from ..sequences import BiregularSpec, DegreeSequence, is_graphical_biregular
from .realization import ConstructionTrace, Realization, certify

__all__ = ["realize_regular", "realize_width1", "standard_regular"]


def _connection_set(b: int, q: int) -> list[int]:
    c = b // 2
    if b % 2 == 0:
        return [s for i in range(1, c + 1) for s in (i, -i)]
    l = q // 2
    return [1, -1, l] + [s for i in range(1, c) for s in (l + i, l - i)]


def standard_regular(b: int, q: int) -> Graph:
    """The circulant realisation of (b^q) used as the base of every construction.

    For b = 2c the connection set is {±1, ..., ±c}; for b = 2c + 1 (so
    q = 2l) it is {±1, l, l±1, ..., l±(c-1)}.
    """
    return _raw_circulant(q, _connection_set(b, q))


def _regular_cycle(b: int, q: int, m: int) -> list[int]:
    if b % 2 == 0:
        s, odd = divmod(m, 2)
        top = 2 * s if odd else 2 * s - 2
        return list(range(0, top + 1, 2)) + list(range(2 * s - 1, 0, -2))
    l = q // 2
    s = (m + 1) // 2
    # m = 2s: (0..s-1, s+l-1 .. l); m = 2s-1: (0..s-1, s+l-1 .. l+1)
    low = l if m % 2 == 0 else l + 1
    return list(range(s)) + list(range(s + l - 1, low - 1, -1))


def _labelled(g: Graph, cycle: list[int], route: str) -> list[int]:
    lab = monotone_labeling(g, cycle)
    if lab is None:
        raise InternalInvariantViolation(f"{route}: cycle {cycle} is not top monotone")
    return lab


def realize_regular(b: int, q: int, m: Optional[int] = None) -> Realization:
    """Standard circulant realisation of (b^q) with a witness cycle of length m.

    ``m`` defaults to q (a Hamiltonian witness).
    """
    if b < 4:
        raise PreconditionViolated("realize_regular needs b >= 4")
    if not is_graphical_biregular(BiregularSpec.regular(b, q)):
        raise NotGraphical(f"({b}^{q}) is not graphical")
    m = q if m is None else m
    if not 3 <= m <= q:
        raise MOutOfRange(f"m={m} outside 3..{q}")
    g = standard_regular(b, q)
    route = f"regular/circulant/b={b}"
    cyc = _labelled(g, _regular_cycle(b, q, m), route)
    return certify(g, [b] * q, ConstructionTrace(route), cyc)


def realize_width1(b: int, p: int, q: int, m: int) -> Realization:
    """Triangular realisation of ((b+1)^p, b^q) with a top monotone m-cycle.

    Needs b >= 4, q > 0, max(3, p) <= m <= p + q, and
    (p, q, m) != (b, 2, b + 2) (K_{b+2} minus an edge has no such cycle).
    """
    if b < 4 or p < 0 or q <= 0:
        raise PreconditionViolated(f"width-1 construction needs b >= 4, p >= 0, q > 0; got b={b}, p={p}, q={q}")
    if not is_graphical_biregular(BiregularSpec(b + 1, p, b, q)):
        raise NotGraphical(f"(({b + 1})^{p}, {b}^{q}) is not graphical")
    if not max(3, p) <= m <= p + q:
        raise MOutOfRange(f"m={m} outside {max(3, p)}..{p + q}")
    if (p, q, m) == (b, 2, b + 2):
        raise ExcludedCase(f"K_{b + 2} minus an edge has no top monotone Hamiltonian cycle")
    trace = ConstructionTrace("")
    g, cyc = _width1(b, p, q, m, trace)
    return certify(g, [b + 1] * p + [b] * q, trace, cyc)


def _width1(b: int, p: int, q: int, m: int, trace: ConstructionTrace) -> tuple[Graph, list[int]]:
    trace.reduction_log.append(DegreeSequence([b + 1] * p + [b] * q))
    if p == 0:
        trace.route = f"regular/circulant/b={b}"
        g = standard_regular(b, q)
        return g, _labelled(g, _regular_cycle(b, q, m), trace.route)
    if p >= b + 2:
        g, inner = _width1(b, p - b - 2, q + b + 1, m - 1, trace)
        # inner = v_1..v_{m-1}; the new vertex joins v_{p-b-1}..v_{p-1}
        nbrs = inner[p - b - 2 : p - 1]
        u = g.add_vertex(nbrs)
        trace.attachments.append(tuple(nbrs))
        trace.route = f"width1/peel-b+2 > {trace.route}"
        cyc = inner[: p - b - 1] + [u] + inner[p - b - 1 :]
        return g, _labelled(g, cyc, trace.route)
    if b % 2:
        g, cyc, route = _odd_base(b, p, q, m)
    else:
        g, cyc, route = _even_base(b, p, q, m)
    trace.route = route
    return g, _labelled(g, cyc, route)


# --- b odd ------------------------------------------------------------------


def _odd_base(b: int, p: int, q: int, m: int) -> tuple[Graph, list[int], str]:
    c = (b + 1) // 2
    n = p + q
    if q == 2 and m == p + 2:
        if b == 5 and p == 6:
            return _hand_6_6_5_2()
        # standard (2c)^(p+2), drop (0,c) and (1,c+1), add (0,c+1)
        g = _raw_circulant(n, [s for i in range(1, c + 1) for s in (i, -i)])
        g.remove_edge(0, c)
        g.remove_edge(1, c + 1)
        g.add_edge(0, c + 1)
        cyc = [1] + list(range(c, n)) + [0] + list(range(c - 1, 1, -1))
        return g, cyc, f"width1/odd-b/q=2-hamiltonian/b={b}"
    if b >= 7:
        return _odd_general(b, p, q, m)
    return _odd_five(p, q, m)


def _odd_general(b: int, p: int, q: int, m: int) -> tuple[Graph, list[int], str]:
    c = (b + 1) // 2
    n = p + q
    r = q // 2
    g = _raw_circulant(n, [s for i in range(1, c + 1) for s in (i, -i)])
    for i in range(r):
        g.remove_edge(2 * i, 2 * i + 1)
    # path through the degree-(b+1) vertices q..n-1, from -1 to -2
    if p == 1:
        path = [n - 1]
    else:
        path = list(range(q, n, 2))[::-1] + list(range(q + 1, n, 2))
        if path[0] != n - 1:
            path.reverse()
    extra = m - p
    if extra % 2:
        l = extra // 2
        cyc = path + list(range(0, 2 * l + 1, 2)) + list(range(2 * l - 1, 0, -2))
    else:
        l = extra // 2
        if l == 0:
            cyc = path
        elif l == 1:
            cyc = [n - 1, 1, 2] if p == 1 else path + [1, 2]
        else:
            cyc = (
                path
                + list(range(0, 2 * l - 3, 2))
                + [2 * l - 1, 2 * l - 3, 2 * l - 2]
                + list(range(2 * l - 5, 0, -2))
            )
    return g, [v % n for v in cyc], f"width1/odd-b/b={b}"


def _prism(N: int) -> Graph:
    """Two N-cycles i_1 (id i) and i_2 (id N+i) with rungs i_1-i_2 and i_1-(i±1)_2; 5-regular."""
    g = Graph(2 * N)
    for i in range(N):
        j = (i + 1) % N
        g.add_edge(i, j)
        g.add_edge(N + i, N + j)
        g.add_edge(i, N + i)
        g.add_edge(i, N + j)
        g.add_edge(j, N + i)
    return g


def _odd_five(p: int, q: int, m: int) -> tuple[Graph, list[int], str]:
    r = q // 2
    route = f"width1/odd-b/b=5/p={p}"
    if p % 2:
        return _odd_five_odd_p(p, r, m, route)
    return _odd_five_even_p(p, r, m, route)


def _odd_five_odd_p(p: int, r: int, m: int, route: str) -> tuple[Graph, list[int], str]:
    if p == 1:
        N = r
        one = lambda i: i % N  # noqa: E731
        two = lambda i: N + i % N  # noqa: E731
        g = _prism(N)
        ends = []
        for i in range(3):
            g.remove_edge(one(i), two(i + 1))
            ends += [one(i), two(i + 1)]
        u = g.add_vertex(ends)
        l = m // 2
        cyc = [u] + [one(i) for i in range(1, l + 1)] + [two(j) for j in range(m - l - 1, 0, -1)]
        return g, cyc, route
    if p == 3:
        N = r + 1
        one = lambda i: i % N  # noqa: E731
        two = lambda i: N + i % N  # noqa: E731
        g = _prism(N)
        g.remove_edge(one(0), two(1))
        g.remove_edge(one(1), two(2))
        u = g.add_vertex([one(0), two(1), one(1), two(2), one(2), two(3)])
        l, odd = divmod(m, 2)
        if not odd:
            cyc = [u] + [one(i) for i in range(2, l + 2)] + [two(j) for j in range(l + 1, 2, -1)]
        elif l <= r - 1:
            cyc = [u] + [one(i) for i in range(2, l + 2)] + [two(j) for j in range(l + 2, 2, -1)]
        elif l == r + 1:
            cyc = [u] + [one(2 - k) for k in range(N)] + [two(2 - k) for k in range(N)]
        else:
            cyc = [u] + [one(2 + k) for k in range(N)] + [two(0 - k) for k in range(N - 2)]
        return g, cyc, route
    # p == 5
    if r == 1:
        g = complete_minus_edge(7)
        return g, list(range(m)), route + "/K7-minus-edge"
    N = r + 2
    one = lambda i: i % N  # noqa: E731
    two = lambda i: N + i % N  # noqa: E731
    g = _prism(N)
    g.remove_edge(one(2), two(2))
    u = g.add_vertex([one(0), one(1), one(2), two(0), two(1), two(2)])
    if m == 7:
        cyc = [u, one(1), one(0), one(-1), two(-1), two(0), two(1)]
    else:
        # a single run (m-l-2)_2 .. 0_2 on C^2
        l = m // 2
        cyc = [u] + [one(i) for i in range(l)] + [two(j) for j in range(m - l - 2, -1, -1)]
    return g, cyc, route + "/repeated-index-reconstructed"


def _odd_five_even_p(p: int, r: int, m: int, route: str) -> tuple[Graph, list[int], str]:
    s = p // 2
    N = r + s
    one = lambda i: i % N  # noqa: E731
    two = lambda i: N + i % N  # noqa: E731
    if m == p + 2 * r and s == 3:
        if r >= 4:
            g = _prism(N)
            for x, y in ((0, 2), (1, 3), (4, 6)):
                g.add_edge(one(x), one(y))
            first = [one(i) for i in (6, 4, 3, 2, 1, 0)] + [two(j) for j in range(6)] + [one(5), two(6)]
            cyc = first + [two(j) for j in range(7, N)] + [one(i) for i in range(N - 1, 6, -1)]
            return g, cyc, route + "/hamiltonian-chords"
        if r == 3:
            g = _raw_circulant(12, [1, -1, 2, -2, 3, -3])
            for x, y in ((0, 3), (1, 4), (2, 5)):
                g.remove_edge(x, y)
            return g, list(range(12)), route + "/hand-6^6,5^6"
        if r == 2:
            g = _raw_circulant(10, [1, -1, 2, -2, 3, -3])
            for x, y in ((0, 3), (2, 5)):
                g.remove_edge(x, y)
            return g, [4, 6, 7, 8, 9, 1, 0, 2, 3, 5], route + "/hand-6^6,5^4"
        return _hand_6_6_5_2()
    g = _prism(N)
    chords = [(one(0), two(-2)), (one(1), two(-1)), (one(2), two(0))][:s]
    for x, y in chords:
        g.add_edge(x, y)
    if m == p + 2 * r:
        if s == 1:
            cyc = [one(i) for i in range(N)] + [two(-1)] + [two(j) for j in range(N - 1)]
        else:
            cyc = [one(i) for i in range(N)] + [two(j) for j in range(N)]
        return g, cyc, route + "/hamiltonian"
    # C^1 from l_1 down to 0_1, chord to -2_2, C^2 up to t_2, close with (t_2, l_1);
    # t is the last index of the second run, and for the shortest cycles the
    # closing edge is one of the added chords
    l = max((m - 3) // 2, s - 1)
    t = m - 4 - l
    if not (l - t in (0, 1) or (l, t) == (s - 1, s - 3)):
        raise InternalInvariantViolation(f"{route}: no closing edge for m={m}")
    cyc = [one(i) for i in range(l, -1, -1)] + [two(j) for j in range(-2, t + 1)]
    return g, cyc, route


def _hand_6_6_5_2() -> tuple[Graph, list[int], str]:
    # K_8 minus the 2-paths 0-1-2, 3-4-5 and the edge 6-7
    g = Graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    for x, y in ((0, 1), (1, 2), (3, 4), (4, 5), (6, 7)):
        g.remove_edge(x, y)
    return g, [1, 4, 0, 6, 2, 7, 3, 5], "width1/odd-b/b=5/p=6/hand-6^6,5^2"


# --- b even -----------------------------------------------------------------


def _even_base(b: int, p: int, q: int, m: int) -> tuple[Graph, list[int], str]:
    c = b // 2
    r = p // 2
    n = p + q
    route = f"width1/even-b/b={b}/r={r}"
    if q == 2:
        g = complete_minus_edge(n)
        return g, list(range(m)), route + "/K-minus-edge"
    g = _raw_circulant(n, [s for i in range(1, c + 1) for s in (i, -i)])
    if r == 1:
        g.add_edge(0, c + 1)
        if m <= c + 2:
            cyc = list(range(m - 1)) + [c + 1]
        else:
            extra = m - c - 2
            l = extra // 2
            cyc = (
                list(range(1, c + 2))
                + [0]
                + [-2 * k for k in range(1, l + 1)]
                + [1 - 2 * k for k in range(extra - l, 0, -1)]
            )
        return g, [v % n for v in cyc], route
    if r == c and m == n:
        g.add_edge(0, c + 1)
        for i in range(2, c + 1):
            g.add_edge(i, c + 1 + i)
        cyc = (
            [0, c + 1]
            + list(range(c + 3, 2 * c + 2))
            + list(range(c, 1, -1))
            + [c + 2]
            + list(range(2 * c + 2, 2 * c + q))
            + [1]
        )
        return g, cyc, route + "/hamiltonian"
    for i in range(r):
        g.add_edge(i, c + 1 + i)
    if m <= 3 * r + q - c - 1:
        extra = m - 2 * r
        l = extra // 2
        cyc = (
            [0]
            + list(range(c + 1, c + r + 1))
            + list(range(r - 1, 0, -1))
            + [1 - 2 * k for k in range(1, extra - l + 1)]
            + [-2 * k for k in range(l, 0, -1)]
        )
    else:
        extra = m - (3 * r + q - c - 1)
        cyc = (
            [0, c + 1]
            + list(range(c + r, c + 1, -1))
            + list(range(1, r))
            + list(range(c - extra + 1, c + 1))
            + list(range(r + c + 1, n))
        )
    return g, [v % n for v in cyc], route
