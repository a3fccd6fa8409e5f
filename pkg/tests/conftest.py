import os
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from turanlab.graph import Graph, complete_graph, cycle_graph, path_graph


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy with nodes 0..n-1 inserted in order"""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def catalog_path(tmp_path, monkeypatch):
    monkeypatch.delenv("TURANLAB_CATALOG", raising=False)
    return str(tmp_path / "catalog.tsv")
