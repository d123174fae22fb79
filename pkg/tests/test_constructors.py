from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reference import naive_edges_without_triangle, naive_is_top_monotone
from trireal.constructors import (
    realize,
    realize_dense,
    realize_exceptional,
    realize_gap_alpha,
    realize_p_ge_b,
    realize_p_lt_b_gap4,
    realize_regular,
    realize_small_regular,
    realize_width1,
    standard_regular,
)
from trireal.errors import (
    ExcludedCase,
    MOutOfRange,
    NotGraphical,
    NoTriangularRealization,
    PreconditionViolated,
    UnsupportedClass,
    UnsupportedSpec,
)
from trireal.graph import (
    CirculantSpec,
    Graph,
    circulant,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    degree_sequence_of,
    is_top_monotone_cycle,
)
from trireal.sequences import BiregularSpec as B
from trireal.sequences import havel_hakimi_reduce, is_graphical_biregular


def assert_sound(r, want=None):
    """Re-check a realisation with the naive verifiers, independent of certify()."""
    g = r.graph
    if want is not None:
        assert list(degree_sequence_of(g)) == sorted(want, reverse=True)
    assert naive_edges_without_triangle(g.n, g.edges()) == []
    if r.witness is not None and not r.trace.flags:
        assert naive_is_top_monotone(g.n, g.edges(), list(r.witness))


def same_cycle(a, b):
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    s = "," + ",".join(map(str, b + b)) + ","
    return any(f",{','.join(map(str, x))}," in s for x in (a, a[::-1]))


# --- regular and width-1 --------------------------------------------------------


def test_regular_examples():
    r = realize_regular(4, 5)
    assert r.graph == complete_graph(5) and r.witness.m == 5
    r = realize_regular(5, 8, 8)
    assert r.graph == circulant(CirculantSpec(8, [1, -1, 3, 4, 5]))
    assert list(r.witness) == [0, 1, 2, 3, 7, 6, 5, 4]
    assert realize_regular(6, 7).graph == complete_graph(7)


def test_regular_errors():
    with pytest.raises(NotGraphical):
        realize_regular(4, 4)
    with pytest.raises(MOutOfRange):
        realize_regular(4, 6, 7)


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 14), st.integers(5, 30), st.data())
def test_regular_every_cycle_length(b, q, data):
    if b * q % 2 or b > q - 1:
        return
    m = data.draw(st.integers(3, q))
    r = realize_regular(b, q, m)
    assert r.witness.m == m
    assert_sound(r, [b] * q)


def test_width1_examples():
    r = realize_width1(5, 6, 6, 12)
    g = standard_regular(6, 12)
    for u, v in [(0, 3), (1, 4), (2, 5)]:
        g.remove_edge(u, v)
    assert r.graph == g
    assert same_cycle(r.witness, range(12))
    r = realize_width1(4, 4, 2, 5)
    assert r.graph == complete_minus_edge(6) and r.witness.m == 5
    with pytest.raises(ExcludedCase):
        realize_width1(4, 4, 2, 6)
    r = realize_width1(5, 1, 6, 4)
    assert r.graph.n == 7 and r.witness.m == 4
    assert_sound(r, [6] + [5] * 6)
    with pytest.raises(MOutOfRange):
        realize_width1(4, 2, 8, 11)
    with pytest.raises(MOutOfRange):
        realize_width1(4, 6, 4, 5)


@settings(max_examples=300, deadline=None)
@given(st.integers(4, 13), st.integers(0, 30), st.integers(1, 30), st.data())
def test_width1_property(b, p, q, data):
    if not is_graphical_biregular(B(b + 1, p, b, q)) or p + q < 3:
        return
    m = data.draw(st.integers(max(3, p), p + q))
    if (p, q, m) == (b, 2, b + 2):
        return
    r = realize_width1(b, p, q, m)
    assert r.witness.m == m
    assert_sound(r, [b + 1] * p + [b] * q)


# --- biregular constructions -----------------------------------------------------


def test_p_ge_b_examples():
    r = realize_p_ge_b(B(6, 4, 4, 3))
    assert r.graph.n == 7 and r.trace.reduction_log[1] == (5, 5, 5, 5, 4, 4)
    assert_sound(r, [6] * 4 + [4] * 3)
    r = realize_p_ge_b(B(6, 6, 4, 2))
    assert r.graph.n == 8 and "exceptional" in r.trace.route and r.trace.flags
    assert r.trace.reduction_log[-1] == (5, 5, 5, 5, 4, 4)
    assert_sound(r, [6] * 6 + [4] * 2)
    r = realize_p_ge_b(B(7, 5, 5, 3))
    assert r.graph.n == 8 and r.trace.reduction_log[1] == (6,) * 5 + (5, 5)
    assert r.trace.attachments[-1] and len(set(r.trace.attachments[-1])) == 5
    assert_sound(r, [7] * 5 + [5] * 3)


def test_reduction_log_is_a_havel_hakimi_chain():
    for spec in [B(6, 4, 4, 3), B(9, 7, 5, 9), B(12, 10, 6, 12), B(8, 8, 4, 6)]:
        log = realize_p_ge_b(spec).trace.reduction_log
        for x, y in zip(log, log[1:]):
            assert havel_hakimi_reduce(x, len(x)) == y
            assert x[0] - x[spec.p - 1] <= 1 or x is log[0]


def test_gap4_examples():
    for spec, c in [(B(7, 1, 5, 7), 4), (B(9, 1, 5, 9), 4), (B(8, 2, 6, 10), 4)]:
        r = realize_p_lt_b_gap4(spec)
        assert r.trace.route.startswith(f"clique-core/c={c}")
        assert_sound(r, spec.expand())
    assert "q1=6" in realize_p_lt_b_gap4(B(8, 2, 6, 10)).trace.route
    with pytest.raises(PreconditionViolated):
        realize_p_lt_b_gap4(B(6, 1, 4, 12))


def test_gap_alpha_examples():
    r = realize_gap_alpha(B(6, 3, 4, 4), 1)
    assert r.graph.n == 7 and r.trace.route.endswith("regular/circulant/b=4")
    r = realize_gap_alpha(B(6, 2, 4, 6), 2)
    assert r.graph.n == 8 and "minus (0,2)" in r.trace.route
    assert r.graph.has_edge(8 - 3, 0) and r.graph.has_edge(8 - 3, 2)
    r = realize_gap_alpha(B(9, 2, 5, 8), 3)
    assert r.graph.n == 10 and "b=5" in r.trace.route
    with pytest.raises(PreconditionViolated):
        realize_gap_alpha(B(9, 2, 5, 8), 2)


def test_exceptional_examples():
    r = realize_exceptional(B(6, 1, 4, 6))
    base = complete_bipartite(3, 3)
    base.add_vertex(range(6))
    assert r.graph == base
    r = realize_exceptional(B(7, 2, 5, 8))
    g = circulant(CirculantSpec(9, [1, -1, 2, -2]))
    g.add_edge(0, 3)
    g.add_edge(0, 6)
    g.add_vertex([v for v in range(9) if v not in (3, 6)])
    assert r.graph == g
    for q in range(6, 11):
        assert_sound(realize_exceptional(B(6, 1, 4, q)), [6] + [4] * q)
    assert_sound(realize_exceptional(B(7, 2, 5, 10)), [7, 7] + [5] * 10)
    assert realize_exceptional(B(6, 1, 4, 7)).trace.flags
    with pytest.raises(UnsupportedSpec):
        realize_exceptional(B(7, 2, 5, 12))


def test_dense_examples():
    r = realize_dense(B(9, 2, 6, 8))
    assert r.graph.n == 10
    assert_sound(r, [9, 9] + [6] * 8)
    assert realize_dense(B(7, 2, 5, 6)).graph.n == 8
    with pytest.raises(NotGraphical):
        realize_dense(B(6, 5, 4, 2))


def test_small_regular():
    r = realize_small_regular(2, 6)
    assert r.graph.n == 6 and r.graph.num_edges == 6
    assert realize_small_regular(3, 8).graph.num_edges == 12
    with pytest.raises(NoTriangularRealization):
        realize_small_regular(2, 5)
    with pytest.raises(NoTriangularRealization):
        realize_small_regular(1, 4)


def test_dispatcher_examples():
    r = realize([6, 6, 6, 6, 6, 6, 4, 4])
    assert r.trace.route.startswith("reverse-hh")
    with pytest.raises(NotGraphical):
        realize([4, 4, 4, 4])
    with pytest.raises(UnsupportedClass):
        realize([6, 5, 4, 4, 4, 4, 4])
    with pytest.raises(UnsupportedClass):
        realize([5, 5, 3, 3, 3, 3])


def test_json_shape():
    obj = realize([6, 6, 6, 6, 6, 6, 4, 4]).to_json_dict()
    assert {"sequence", "n", "edges", "witness_cycle", "route", "reduction_log"} <= set(obj)
    assert obj["sequence"] == "6^6,4^2"


def test_deterministic():
    a, b = realize([7] * 3 + [5] * 9), realize([7] * 3 + [5] * 9)
    assert a.graph == b.graph and a.trace.route == b.trace.route


@settings(max_examples=300, deadline=None)
@given(st.integers(4, 20), st.integers(1, 8), st.integers(1, 25), st.integers(1, 25))
def test_realize_biregular_property(b, extra, p, q):
    spec = B(b + extra, p, b, q)
    if not is_graphical_biregular(spec):
        return
    assert_sound(realize(spec.expand()), spec.expand())
