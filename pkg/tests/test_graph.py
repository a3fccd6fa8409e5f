import networkx as nx
import numpy as np
import pytest

from conftest import to_networkx
from turanlab.counting import count_cliques
from turanlab.errors import InvalidArgument, TooLarge
from turanlab.graph import (
    Graph,
    PartSizes,
    add_random_intra_edges,
    balanced_partition,
    blow_up,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    iter_bits,
    mask_of,
    path_graph,
    petersen_graph,
    random_graph,
    random_kk_free_graph,
    turan_graph,
)


def test_from_edges_builds_symmetric_rows():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_from_rows_rejects_invalid_rows():
    with pytest.raises(InvalidArgument):
        Graph.from_rows([0b10, 0b00])
    with pytest.raises(InvalidArgument):
        Graph.from_rows([0b1])
    with pytest.raises(InvalidArgument):
        Graph.from_rows([0b100, 0b0])


def test_size_limits():
    Graph.empty(64)
    with pytest.raises(TooLarge):
        Graph.empty(65)
    with pytest.raises(InvalidArgument):
        Graph.empty(-1)
    with pytest.raises(InvalidArgument):
        Graph.from_edges(3, [(1, 1)])


def test_bit_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert list(iter_bits(0)) == []


def test_balanced_partition():
    assert balanced_partition(7, 3).sizes == (3, 2, 2)
    assert balanced_partition(2, 4).sizes == (1, 1)
    assert balanced_partition(0, 2).sizes == ()
    with pytest.raises(InvalidArgument):
        balanced_partition(5, 0)


def test_part_sizes_must_be_positive():
    with pytest.raises(InvalidArgument):
        PartSizes((2, 0))
    p = PartSizes((3, 2))
    assert p.total == 5 and len(p) == 2 and list(p) == [3, 2]


def test_turan_graph_numbers_classes_in_order():
    t = turan_graph(5, 3)
    assert t.edge_count == 8
    assert not t.has_edge(0, 1)
    assert not t.has_edge(2, 3)
    assert t.has_edge(0, 2) and t.has_edge(1, 4) and t.has_edge(3, 4)


def test_complete_multipartite_edges():
    g = complete_multipartite(PartSizes((3, 2)))
    assert g.edge_count == 6
    assert nx.is_isomorphic(to_networkx(g), nx.complete_bipartite_graph(3, 2))


def test_blow_up_of_edge_is_complete_bipartite():
    g = blow_up(complete_graph(2), 3)
    assert g.n == 6 and g.edge_count == 9
    assert not g.has_edge(0, 2)
    assert g.has_edge(0, 3)


def test_blow_up_keeps_clone_classes_independent(c5):
    g = blow_up(c5, 2)
    assert g.edge_count == 5 * 4
    for v in range(5):
        assert not g.has_edge(2 * v, 2 * v + 1)
    with pytest.raises(TooLarge):
        blow_up(c5, 13)


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_networkx(petersen_graph()), nx.petersen_graph())
    assert nx.is_isomorphic(to_networkx(cycle_graph(7)), nx.cycle_graph(7))
    assert nx.is_isomorphic(to_networkx(path_graph(4)), nx.path_graph(4))
    assert complete_graph(6).edge_count == 15


def test_induced_subgraph_and_relabel():
    g = cycle_graph(5)
    sub = g.induced_subgraph([0, 1, 2])
    assert list(sub.edges()) == [(0, 1), (1, 2)]
    assert g.delete_vertex(0).edge_count == 3
    relabeled = path_graph(3).relabel([1, 0, 2])
    assert relabeled.degrees() == [2, 1, 1]


def test_edge_editing_and_complement():
    g = Graph.empty(3).with_edge(0, 2)
    assert g.edge_count == 1
    assert g.without_edge(0, 2).edge_count == 0
    assert complete_graph(4).complement().edge_count == 0
    assert cycle_graph(5).complement().edge_count == 5


def test_disjoint_union_and_numpy():
    g = complete_graph(3).disjoint_union(complete_graph(2))
    assert g.n == 5 and g.edge_count == 4
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)
    matrix = g.to_numpy()
    assert matrix.shape == (5, 5)
    assert np.array_equal(matrix, matrix.T)
    assert int(matrix.sum()) == 8


def test_random_graph_is_seeded():
    a = random_graph(20, 0.3, seed=11)
    b = random_graph(20, 0.3, seed=11)
    assert a.adj == b.adj
    assert 0 < a.edge_count < 190


def test_random_graph_on_64_vertices_keeps_high_bits():
    g = random_graph(64, 0.5, seed=1)
    assert all(isinstance(row, int) for row in g.adj)
    assert any(row >> 63 & 1 for row in g.adj)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_random_kk_free_graph_avoids_the_clique(k):
    for seed in range(10):
        g = random_kk_free_graph(10, k, seed=seed)
        assert count_cliques(k, g) == 0


def test_greedy_kk_free_graph_is_maximal():
    g = random_kk_free_graph(9, 3, seed=4)
    for u in range(9):
        for v in range(u + 1, 9):
            if not g.has_edge(u, v):
                assert count_cliques(3, g.with_edge(u, v)) > 0


def test_add_random_intra_edges():
    t = turan_graph(10, 2)
    g = add_random_intra_edges(t, balanced_partition(10, 2), 5, seed=2)
    assert g.edge_count == t.edge_count + 5
    for u, v in g.edges():
        if not t.has_edge(u, v):
            assert (u < 5) == (v < 5)
    with pytest.raises(InvalidArgument):
        add_random_intra_edges(t, balanced_partition(10, 2), 21, seed=2)
