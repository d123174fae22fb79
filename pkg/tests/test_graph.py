from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reference import naive_edges_without_triangle, naive_is_top_monotone
from trireal.errors import GraphError, InvalidCirculant, NoSuchCycle
from trireal.graph import (
    CirculantSpec,
    Graph,
    attach_vertex,
    circulant,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    degree_sequence_of,
    disjoint_union,
    edges_without_triangle,
    hamiltonian_cycle_with_gap,
    is_cycle,
    is_top_monotone_cycle,
)


def test_circulant_examples():
    c6 = circulant(CirculantSpec(6, [1, -1]))
    assert c6.num_edges == 6 and set(c6.degrees()) == {2}
    g = circulant(CirculantSpec(12, [1, -1, 2, -2, 3, -3]))
    assert g.num_edges == 36 and set(g.degrees()) == {6}
    assert edges_without_triangle(g) == []
    h = circulant(CirculantSpec(8, [1, -1, 4, 3, 5]))
    assert set(h.degrees()) == {5} and edges_without_triangle(h) == []


@pytest.mark.parametrize("n, S", [(6, [1]), (6, [0, 1, -1]), (3, [1, 2, 3]), (0, [])])
def test_circulant_rejects(n, S):
    with pytest.raises(InvalidCirculant):
        circulant(CirculantSpec(n, S))


def test_circulant_closure_flag():
    spec = CirculantSpec(6, [1, -1])
    assert not spec.closed
    with pytest.raises(InvalidCirculant):
        circulant(spec, require_closure=True)
    assert circulant(CirculantSpec(8, [1, -1, 4, 3, 5]), require_closure=True).num_edges == 20


def test_assembly_examples():
    g = complete_minus_edge(6)
    assert g.num_edges == 14 and degree_sequence_of(g) == (5, 5, 5, 5, 4, 4)
    assert not g.has_edge(4, 5)
    u = disjoint_union(complete_graph(3), complete_graph(3))
    assert (u.n, u.num_edges) == (6, 6) and u.has_edge(3, 4) and not u.has_edge(2, 3)
    a = attach_vertex(complete_graph(4), [0, 1, 2])
    assert degree_sequence_of(a) == (4, 4, 4, 3, 3)
    assert complete_graph(4).n == 4  # attach_vertex does not mutate
    assert degree_sequence_of(complete_bipartite(3, 3)) == (3,) * 6


def test_graph_mutation_errors():
    g = Graph(3, [(0, 1)])
    with pytest.raises(GraphError):
        g.add_edge(0, 1)
    with pytest.raises(GraphError):
        g.add_edge(2, 2)
    with pytest.raises(GraphError):
        g.add_edge(0, 3)
    with pytest.raises(GraphError):
        g.remove_edge(1, 2)


def test_degree_sequence_examples():
    assert degree_sequence_of(complete_graph(5)) == (4,) * 5
    assert degree_sequence_of(Graph(3)) == (0, 0, 0)


def test_triangle_verifier_examples():
    assert edges_without_triangle(complete_graph(3)) == []
    c4 = circulant(CirculantSpec(4, [1, -1]))
    assert len(edges_without_triangle(c4)) == 4
    assert edges_without_triangle(complete_minus_edge(6)) == []


def test_top_monotone_examples():
    assert is_top_monotone_cycle(complete_graph(5), [0, 1, 2, 3, 4])
    g = complete_minus_edge(6)
    assert not is_top_monotone_cycle(g, [0, 4, 1, 5, 2, 3])
    assert is_top_monotone_cycle(g, [0, 1, 2, 3, 4])
    assert is_top_monotone_cycle(g, [0, 1, 4, 2, 3])
    assert not is_top_monotone_cycle(g, [0, 4, 1, 5, 2])  # two degree-4 vertices, not the top five
    assert not is_top_monotone_cycle(g, [0, 1, 2, 3, 5, 4])  # 4-5 is the missing edge

def test_hamiltonian_gap_examples():
    for p, r in [(6, 3), (7, 2)]:
        c = list(hamiltonian_cycle_with_gap(p, r))
        g = complete_minus_edge(p)
        assert sorted(c) == list(range(p)) and is_cycle(g, c)
        i, j = c.index(p - 2), c.index(p - 1)
        assert {(j - i) % p, (i - j) % p} >= {r}
    with pytest.raises(NoSuchCycle):
        hamiltonian_cycle_with_gap(6, 1)


@given(st.integers(4, 20), st.data())
def test_hamiltonian_gap_property(p, data):
    r = data.draw(st.integers(2, p - 2))
    c = list(hamiltonian_cycle_with_gap(p, r))
    assert sorted(c) == list(range(p))
    assert is_cycle(complete_minus_edge(p), c)
    assert (c.index(p - 1) - c.index(p - 2)) % p == r


@settings(max_examples=200)
@given(st.integers(3, 40), st.data())
def test_valid_circulants_are_triangular(n, data):
    gens = data.draw(st.sets(st.integers(1, n - 1), min_size=1, max_size=4))
    S = set()
    for s in gens:
        S |= {s % n, (-s) % n}
    spec = CirculantSpec(n, S)
    if spec.violations():
        return
    g = circulant(spec)
    assert set(g.degrees()) == {len(spec.S)}
    assert edges_without_triangle(g) == []


graphs = st.integers(1, 10).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])).map(
        lambda es: Graph(n, {tuple(sorted(e)) for e in es})
    )
)


@given(graphs)
def test_handshake(g):
    assert sum(degree_sequence_of(g)) == 2 * g.num_edges


@given(graphs)
def test_triangle_verifier_matches_naive(g):
    assert edges_without_triangle(g) == naive_edges_without_triangle(g.n, g.edges())


def test_top_monotone_rotation_reflection_invariant():
    rng = random.Random(7)
    seen = 0
    for _ in range(300):
        n = rng.randint(4, 9)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.75])
        cyc = rng.sample(range(n), rng.randint(3, n))
        base = is_top_monotone_cycle(g, cyc)
        assert base == naive_is_top_monotone(n, g.edges(), cyc)
        seen += base
        for s in range(len(cyc)):
            rot = cyc[s:] + cyc[:s]
            assert is_top_monotone_cycle(g, rot) == base
            assert is_top_monotone_cycle(g, rot[::-1]) == base
    assert seen > 0
