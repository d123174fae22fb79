from __future__ import annotations

import pytest

from reference import labelled_triangular_table, naive_edges_without_triangle
from trireal.errors import BudgetExceeded
from trireal.graph import complete_graph, degree_sequence_of
from trireal.oracle import (
    BUDGET_EXCEEDED,
    SearchBudget,
    conjecture_sweep,
    enumerate_graphical,
    iter_realizations,
    oracle_search,
)
from trireal.sequences import DegreeSequence


def test_examples():
    assert oracle_search([4] * 5) == complete_graph(5)
    assert oracle_search([2] * 4) is None
    assert oracle_search([3] * 4) == complete_graph(4)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_against_labelled_enumeration(n):
    table = labelled_triangular_table(n)
    for d in enumerate_graphical(n, 0):
        if len(d) != n:
            continue
        g = oracle_search(d)
        assert (g is not None) == table[tuple(d)], d
        if g is not None:
            assert degree_sequence_of(g) == d
            assert naive_edges_without_triangle(g.n, g.edges()) == []


def test_isomorph_pruning_agrees():
    for d in enumerate_graphical(8, 2):
        a = oracle_search(d)
        b = oracle_search(d, prune_isomorphs=True)
        assert (a is None) == (b is None), d


def test_deterministic():
    d = DegreeSequence([5, 5, 5, 4, 4, 4, 4, 3])
    assert oracle_search(d) == oracle_search(d)


def test_budget_is_not_nonexistence():
    with pytest.raises(BudgetExceeded):
        oracle_search([4] * 9, SearchBudget(node_limit=2))
    with pytest.raises(BudgetExceeded):
        oracle_search([4] * 11)
    with pytest.raises(ValueError):
        SearchBudget(max_vertices=0)
    rep = conjecture_sweep(7, 4, budget=SearchBudget(node_limit=1))
    assert rep.budget_exceeded and not rep.counterexamples
    assert all(e.status == BUDGET_EXCEEDED for e in rep.entries if e.nodes > 1)


def test_iter_realizations_filters():
    tri = list(iter_realizations([3] * 6, triangular=True))
    assert tri == []
    all6 = list(iter_realizations([3] * 6))
    assert len(all6) == 70  # labelled cubic graphs on 6 vertices
    assert all(degree_sequence_of(g) == (3,) * 6 for g in all6)


def test_sweep_examples():
    assert conjecture_sweep(7, 4).counterexamples == []
    rep = conjecture_sweep(5, 4)
    assert [list(e.sequence) for e in rep.entries] == [[4] * 5] and rep.clean
    rep = conjecture_sweep(6, 1)
    assert DegreeSequence([1, 1]) in rep.counterexamples


def test_sweep_parallel_matches_serial():
    a = conjecture_sweep(8, 4, jobs=1).to_json_dict()
    b = conjecture_sweep(8, 4, jobs=2).to_json_dict()
    assert a == b


def test_report_formats():
    rep = conjecture_sweep(6, 4)
    obj = rep.to_json_dict()
    assert obj["n_range"] == [1, 6] and obj["sequences_tested"] == len(rep.entries)
    assert "realized" in rep.to_table()
