import pytest

from crystalbounds.crystal_graph import (check_external_criterion, enumerate_graph, i_string,
                                         is_external, is_i_external, reduce_weight)
from crystalbounds.errors import NotAMember, VertexNotFound
from crystalbounds.membership import in_P
from crystalbounds.root_system import HighestWeight, defect_of, hub_of, reflect

from oracles import contents_up_to

L21 = HighestWeight.of(2, 1)
CASES = [((2, 1), 14), ((1, 0), 14), ((1, 1), 14), ((1, 1, 1), 9), ((2, 0, 1), 8),
         ((1, 0, 1, 0), 6)]


@pytest.fixture(scope="module", params=CASES, ids=lambda p: f"{p[0]}@{p[1]}")
def graph(request):
    a, depth = request.param
    return enumerate_graph(HighestWeight.of(*a), depth)


def test_enumerate_small():
    g = enumerate_graph(L21, 0)
    assert list(g.vertices) == [(0, 0)] and g.edges == []
    g = enumerate_graph(L21, 2)
    assert list(g.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert defect_of(L21, (0, 2)) == -2
    assert list(enumerate_graph(HighestWeight.of(1, 0), 2).vertices) == [(0, 0), (1, 0), (1, 1)]


def test_enumerate_rejects_negative_depth():
    with pytest.raises(ValueError):
        enumerate_graph(L21, -1)


def test_vertex_set_is_brute_force(graph):
    lam = graph.lam
    assert set(graph.vertices) == {c for c in contents_up_to(lam.e, graph.max_degree)
                                   if in_P(lam, c)}
    assert list(graph.vertices) == sorted(graph.vertices)


def test_vertex_info(graph):
    for c, v in graph.vertices.items():
        assert v.hub == hub_of(graph.lam, c)
        assert v.defect == defect_of(graph.lam, c) >= 0
        assert v.degree == sum(c)


def test_edges_sound_and_complete(graph):
    e = graph.lam.e
    expected = set()
    for c in graph.vertices:
        for i in range(e):
            up = tuple(x + (k == i) for k, x in enumerate(c))
            if up in graph.vertices:
                expected.add((c, i))
    assert set(graph.edges) == expected


def test_connected_upward(graph):
    e = graph.lam.e
    for c in graph.vertices:
        if any(c):
            assert any(tuple(x - (k == i) for k, x in enumerate(c)) in graph.vertices
                       for i in range(e))


def test_strings_palindromic(graph):
    lam = graph.lam
    for c in graph.vertices:
        for i in range(lam.e):
            s = i_string(graph, c, i)
            top = s[0]
            w = hub_of(lam, top)[i]
            assert w >= 0 and len(s) == w + 1
            assert s[-1] == reflect(lam, top, i)
            defects = [defect_of(lam, x) for x in s]
            assert defects == defects[::-1]
            base = defects[0]
            assert defects == [base + k * (w - k) for k in range(w + 1)]
            diffs = [abs(x - y) for x, y in zip(defects, defects[1:])]
            assert diffs == [abs(w - 1 - 2 * k) for k in range(w)]


def test_reflection_closure(graph):
    lam = graph.lam
    for c in graph.vertices:
        for i in range(lam.e):
            r = reflect(lam, c, i)
            assert in_P(lam, r)
            if sum(r) <= graph.max_degree:
                assert r in graph.vertices


def test_externality_agrees_with_edges(graph):
    lam = graph.lam
    edges = set(graph.edges)
    for c, v in graph.vertices.items():
        if v.degree + 1 > graph.max_degree:
            continue
        for i, t in enumerate(v.hub):
            down = tuple(x - (k == i) for k, x in enumerate(c))
            if t > 0:
                assert is_i_external(lam, c, i) == ((down, i) not in edges)
            elif t < 0:
                assert is_i_external(lam, c, i) == ((c, i) not in edges)
            else:
                assert is_i_external(lam, c, i)


def test_criterion_holds(graph):
    assert check_external_criterion(graph) == []


def test_i_string_examples():
    g = enumerate_graph(L21, 4)
    assert i_string(g, (0, 0), 0) == [(0, 0), (1, 0), (2, 0)]
    assert i_string(g, (0, 0), 1) == [(0, 0), (0, 1)]
    # theta_0 = 0 and neither neighbour along 0 is a weight
    assert i_string(g, (1, 0), 0) == [(0, 0), (1, 0), (2, 0)]
    assert hub_of(L21, (2, 1))[0] == 0
    # middle of the 0-string topped by (0,1), whose hub is [4,-1]
    assert i_string(g, (2, 1), 0) == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
    lam = HighestWeight.of(1, 0)
    assert hub_of(lam, (0, 0)) == (1, 0)
    assert i_string(enumerate_graph(lam, 3), (0, 0), 1) == [(0, 0)]
    # theta_1 = 0 here too, but (1,1) is the middle of a 1-string
    assert i_string(enumerate_graph(lam, 3), (1, 1), 1) == [(1, 0), (1, 1), (1, 2)]


def test_i_string_runs_past_cap():
    g = enumerate_graph(L21, 2)
    s = i_string(g, (1, 0), 1)
    assert s == [(1, 0), (1, 1), (1, 2), (1, 3)]


def test_i_string_unknown_vertex():
    with pytest.raises(VertexNotFound):
        i_string(enumerate_graph(L21, 2), (0, 2), 0)


def test_is_i_external_examples():
    assert is_i_external(L21, (0, 0), 0)
    assert hub_of(L21, (2, 1)) == (0, 3) and defect_of(L21, (2, 1)) == 4
    assert not is_i_external(L21, (2, 1), 1)
    assert hub_of(L21, (10, 15)) == (12, -9) and defect_of(L21, (10, 15)) == 10
    assert in_P(L21, (10, 16))
    assert not is_i_external(L21, (10, 15), 1)
    assert is_external(L21, (0, 0))
    with pytest.raises(NotAMember):
        is_i_external(L21, (0, 2), 0)


@pytest.mark.parametrize("a, depth", [((2, 1), 10), ((1, 0), 12), ((1, 1, 1), 8)])
def test_criterion_examples(a, depth):
    assert check_external_criterion(enumerate_graph(HighestWeight.of(*a), depth)) == []


def test_reduce_weight_examples():
    assert reduce_weight(L21, (1, 3)) == ((1, 0), [1])
    assert reduce_weight(L21, (2, 1)) == ((2, 1), [])
    assert reduce_weight(L21, (0, 0)) == ((0, 0), [])
    with pytest.raises(NotAMember):
        reduce_weight(L21, (0, 2))


def test_reduce_weight_properties(graph):
    lam = graph.lam
    for c, v in graph.vertices.items():
        r, word = reduce_weight(lam, c)
        assert defect_of(lam, r) == v.defect
        assert sum(r) <= v.degree
        assert in_P(lam, r)
        assert all(t > -v.defect or t >= 0 for t in hub_of(lam, r))
        x = c
        for i in word:
            nxt = reflect(lam, x, i)
            assert sum(nxt) < sum(x)
            x = nxt
        assert x == r
