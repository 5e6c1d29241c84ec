import pytest

from orderzero.enumeration import enumerate_set, semigroup_id
from orderzero.graph import export_dot, to_dot, zero_divisor_graph
from orderzero.transformations import compose, constant
from utils import words


def test_small_graph():
    graph = zero_divisor_graph(3, 1)
    assert words(graph.vertices) == ['[1,1,1]', '[1,1,2]']
    assert graph.edges == ((0, 0), (0, 1), (1, 1))
    assert graph.loops == (0, 1)


@pytest.mark.parametrize(['n', 'k'], [(3, 2), (4, 1), (4, 2), (5, 3)])
def test_edges_are_zero_products(n, k):
    graph = zero_divisor_graph(n, k)
    pi_k = constant(n, k)
    assert graph.vertices == enumerate_set(semigroup_id('Z', n, k=k))
    expected = set()
    for i, a in enumerate(graph.vertices):
        for j, b in enumerate(graph.vertices):
            if compose(a, b) == pi_k:
                expected.add((min(i, j), max(i, j)))
    assert set(graph.edges) == expected
    assert list(graph.edges) == sorted(graph.edges)


def test_dot_output(tmpdir):
    graph = zero_divisor_graph(3, 1)
    dot = to_dot(graph)
    assert dot.startswith('graph "Z_1" {')
    assert '"0" [label="[1,1,1]", xlabel="pi_1", shape=doublecircle];' in dot
    assert '"1" [label="[1,1,2]"];' in dot
    assert '"0" -- "1";' in dot
    assert '"1" -- "1";' in dot
    assert '->' not in dot
    assert dot.rstrip().endswith('}')

    path = tmpdir.join('z1.gv')
    export_dot(graph, str(path))
    assert path.read_text(encoding='utf8') == dot


def test_graph_is_deterministic():
    assert to_dot(zero_divisor_graph(4, 2)) == to_dot(zero_divisor_graph(4, 2))
