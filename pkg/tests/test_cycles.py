import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lengthpoly.cycles import (
    CycleInequality,
    DirectedCycle,
    WeakOrder,
    build_weak_list,
    cycle_weight,
    enumerate_cycles,
    weak_compare,
)
from lengthpoly.errors import CycleBudgetExceeded, NotACycle
from lengthpoly.keygraph import BLUE, build_key_graph
from lengthpoly.order import ascent_sequences, from_ascent_sequence, generate_pm

W = CycleInequality.of


def networkx_cycles(G):
    D = nx.DiGraph()
    D.add_nodes_from(G.vertices)
    D.add_edges_from((a.tail, a.head) for a in G.arcs)
    return sorted(DirectedCycle(tuple(c)) for c in nx.simple_cycles(D))


def test_eight_element_cycle_count(eight_graph):
    cs = enumerate_cycles(eight_graph)
    assert len(cs) == 25
    assert sum(1 for c in cs if len(c) == 1) == 4
    assert len(set(cs)) == 25


@pytest.mark.parametrize("m", [1, 2, 3])
def test_exponential_family_cycle_count(m):
    cs = enumerate_cycles(build_key_graph(generate_pm(m)))
    assert len(cs) == 5 ** m + 4 * m + 2


def test_single_loop_cycle():
    G = build_key_graph(from_ascent_sequence([0]))
    assert enumerate_cycles(G) == [DirectedCycle((1,))]
    assert [e.inequality for e in build_weak_list(G)] == [W(0, (), (1,))]


def test_loops_come_first(eight_graph):
    cs = enumerate_cycles(eight_graph)
    k = sum(1 for c in cs if len(c) == 1)
    assert all(len(c) == 1 for c in cs[:k])


def test_matches_networkx_on_corpus():
    for n in range(1, 7):
        for seq in ascent_sequences(n):
            G = build_key_graph(from_ascent_sequence(seq))
            assert sorted(enumerate_cycles(G)) == networkx_cycles(G)


def test_cycle_budget(eight_graph):
    with pytest.raises(CycleBudgetExceeded):
        enumerate_cycles(eight_graph, budget=10)
    assert len(enumerate_cycles(eight_graph, budget=25)) == 25


def test_enumeration_is_deterministic(eight_graph):
    assert enumerate_cycles(eight_graph) == enumerate_cycles(eight_graph)


def test_cycle_weight_examples(eight_graph):
    G = eight_graph
    assert cycle_weight(G, DirectedCycle.of(1)) == W(0, (), (1,))
    assert cycle_weight(G, DirectedCycle.of(1, 2, 7, 4, 8, 6, 5)) == W(3, (2, 7), (5, 6, 8))
    assert cycle_weight(G, DirectedCycle.of(3, 4)) == W(0, (), (3, 4))
    assert str(W(3, (2, 7), (5, 6, 8))) == "3 + ρ2 + ρ7 ≤ ρ5 + ρ6 + ρ8"


def test_cycle_weight_rejects_non_cycles(eight_graph):
    with pytest.raises(NotACycle):
        cycle_weight(eight_graph, DirectedCycle.of(1, 3))
    with pytest.raises(NotACycle):
        DirectedCycle.of(1, 2, 1)


def test_gamma_counts_blue_arcs_and_apex_is_tight():
    for n in range(1, 7):
        for seq in ascent_sequences(n):
            G = build_key_graph(from_ascent_sequence(seq))
            lengths = G.canonical.lengths()
            for C in enumerate_cycles(G):
                V = cycle_weight(G, C)
                assert V.gamma == sum(a.color is BLUE for a in C.arcs(G))
                assert V.B
                lhs, rhs = V.value_at(lengths)
                assert lhs == rhs


def test_rotation_invariance(eight_graph):
    vs = (1, 2, 7, 4, 8, 6, 5)
    ws = {cycle_weight(eight_graph, DirectedCycle(vs[i:] + vs[:i])) for i in range(len(vs))}
    assert len(ws) == 1
    assert DirectedCycle(vs[3:] + vs[:3]).vertices == vs


def test_weak_compare_examples():
    assert weak_compare(W(0, (), (1,)), W(1, (), (8,))) is WeakOrder.LESS
    assert weak_compare(W(2, (2,), (5,)), W(3, (2, 7), (5, 6, 8))) is WeakOrder.LESS
    assert weak_compare(W(3, (2, 6), (5, 7, 8)), W(3, (2, 7), (5, 6, 8))) is WeakOrder.TIE
    assert weak_compare(W(1, (), (8,)), W(0, (), (1,))) is WeakOrder.GREATER
    # more left-hand variables make an inequality smaller
    assert weak_compare(W(3, (2, 6), (5, 7)), W(3, (2,), (5,))) is WeakOrder.LESS


def test_weak_list_eight_element(eight_graph):
    weak = build_weak_list(eight_graph)
    assert len(weak) == 17
    assert sum(len(e.cycles) for e in weak) == 25
    keys = [e.inequality.sort_key() for e in weak]
    assert keys == sorted(keys)
    for a, b in zip(weak, weak[1:]):
        assert weak_compare(a.inequality, b.inequality) in (WeakOrder.LESS, WeakOrder.TIE)
    for e in weak:
        assert all(cycle_weight(eight_graph, C) == e.inequality for C in e.cycles)
    assert [e.inequality for e in weak[:4]] == [W(0, (), (v,)) for v in (1, 2, 3, 4)]


def test_weak_list_family_member():
    G = build_key_graph(generate_pm(1))
    weak = build_weak_list(G)
    assert sum(len(e.cycles) for e in weak) == 11
    loops = [e.inequality for e in weak[:4]]
    assert all(V.gamma == 0 and not V.A and len(V.B) == 1 for V in loops)
    assert not (weak[4].inequality.gamma == 0 and len(weak[4].inequality.B) == 1)


def test_deduplication_is_by_triple(eight_graph):
    weak = build_weak_list(eight_graph)
    assert len({e.inequality for e in weak}) == len(weak)
    assert len({(e.inequality.gamma, e.inequality.A, e.inequality.B) for e in weak}) == len(weak)


@settings(max_examples=200)
@given(st.integers(0, 5), st.sets(st.integers(1, 8), max_size=4), st.sets(st.integers(1, 8), min_size=1, max_size=4))
def test_vector_round_trip(g, A, B):
    A = A - B
    V = W(g, A, B)
    assert CycleInequality.from_vector(V.vector(8)) == V
    assert CycleInequality.from_json(V.to_json()) == V
    assert weak_compare(V, V) is WeakOrder.TIE


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 3), st.sets(st.integers(1, 5), max_size=2),
                          st.sets(st.integers(6, 9), min_size=1, max_size=2)), min_size=3, max_size=3))
def test_weak_order_is_transitive(raw):
    a, b, c = (W(*t) for t in raw)
    le = lambda x, y: weak_compare(x, y) is not WeakOrder.GREATER
    if le(a, b) and le(b, c):
        assert le(a, c)
    assert (weak_compare(a, b) is WeakOrder.LESS) == (weak_compare(b, a) is WeakOrder.GREATER)
