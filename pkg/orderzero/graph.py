"""
Zero-divisor graph of the constant map pi_k and its export to graphviz
DOT format.

The vertices are the elements of Z_k; ``a`` and ``b`` are joined when
``ab = pi_k`` or ``ba = pi_k``. A loop marks ``aa = pi_k``. To plot the
graph run e.g.::

    orderzero export-graph --n 4 --k 1 --out z1.gv
    dot -Tpng -O z1.gv
"""
import logging
from typing import NamedTuple, Tuple

import numpy as np

from orderzero.engine.table import MultiplicationTable
from orderzero.enumeration import enumerate_set, semigroup_id
from orderzero.store import ElementStore
from orderzero.transformations import constant

logger = logging.getLogger(__name__)


class ZeroDivisorGraph(NamedTuple):
    n: int
    k: int
    vertices: ElementStore
    edges: Tuple[Tuple[int, int], ...]

    @property
    def loops(self):
        return tuple(i for i, j in self.edges if i == j)


def zero_divisor_graph(n, k, cap=None):
    """
    Build the zero-divisor graph of pi_k over O_n:

        >>> g = zero_divisor_graph(3, 1)
        >>> [str(t) for t in g.vertices], g.edges
        (['[1,1,1]', '[1,1,2]'], ((0, 0), (0, 1), (1, 1)))
    """
    store = enumerate_set(semigroup_id('Z', n, k=k), cap=cap)
    table = MultiplicationTable(store)
    target = table.encode(np.array(constant(n, k).images, dtype=np.int64) - 1)
    edges = set()
    for i in range(len(table)):
        rows = table.array[:, table.array[i]]
        for j in np.flatnonzero(table.encode(rows) == target):
            j = int(j)
            edges.add((min(i, j), max(i, j)))
    graph = ZeroDivisorGraph(n, k, store, tuple(sorted(edges)))
    logger.debug("zero-divisor graph of pi_%d (n=%d): %d vertices, %d edges, %d loops",
                 k, n, len(store), len(edges), len(graph.loops))
    return graph


def to_dot(graph):
    """ Render ``graph`` as an undirected DOT document """
    pi_k = constant(graph.n, graph.k)
    lines = [
        f'graph "Z_{graph.k}" {{',
        f'\tgraph [label="zero divisors of pi_{graph.k} = {pi_k} in O_{graph.n}"];',
        '\tnode [shape=box];',
    ]
    for i, t in enumerate(graph.vertices):
        if t == pi_k:
            lines.append(f'\t"{i}" [label="{t}", xlabel="pi_{graph.k}", shape=doublecircle];')
        else:
            lines.append(f'\t"{i}" [label="{t}"];')
    for i, j in graph.edges:
        lines.append(f'\t"{i}" -- "{j}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export_dot(graph, file_name):
    with open(file_name, 'w', encoding='utf8') as f:
        f.write(to_dot(graph))
