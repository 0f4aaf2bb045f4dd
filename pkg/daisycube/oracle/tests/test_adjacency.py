# Third-party
import numpy as np
import pytest
from scipy.sparse.csgraph import shortest_path

# Project
from ..adjacency import (build_adjacency, bfs_distances, distance_dtype,
                         _distance_block, UNREACHABLE)
from ...config import conf
from ...core import hypercube, fibonacci_cube, lucas_cube, CubeSubgraph, popcount


def test_build_adjacency_counts():
    a = build_adjacency(fibonacci_cube(3))
    assert a.vertex_count == 5
    assert a.edge_count == 5
    assert a.matrix.nnz == 10

    a = build_adjacency(hypercube(3))
    assert a.edge_count == 12
    assert np.all(a.degree() == 3)

    a = build_adjacency(CubeSubgraph(0, ['']))
    assert a.edge_count == 0
    assert a.is_connected()


def test_adjacency_is_symmetric():
    a = build_adjacency(fibonacci_cube(6))
    assert (a.matrix != a.matrix.T).nnz == 0
    for i in range(a.vertex_count):
        for j in a.neighbors(i):
            assert i in a.neighbors(j)
        assert a.degree(i) <= 6


def test_neighbors_differ_in_one_coordinate():
    g = lucas_cube(5)
    a = build_adjacency(g)
    v = g.vertices
    for i in range(a.vertex_count):
        nbrs = a.neighbors(i)
        assert np.all(popcount(v[nbrs] ^ v[i]) == 1)


def test_bfs_hypercube_is_popcount():
    g = hypercube(3)
    a = build_adjacency(g)
    d = bfs_distances(a, g.index_of('000'))
    assert d.tolist() == popcount(g.vertices).tolist()


def test_bfs_fibonacci_cube():
    g = fibonacci_cube(3)
    a = build_adjacency(g)
    d = bfs_distances(a, g.index_of('101'))
    assert d[g.index_of('010')] == 3


def test_bfs_star():
    g = lucas_cube(3)
    a = build_adjacency(g)
    d = bfs_distances(a, g.index_of('001'))
    assert d[g.index_of('001')] == 0
    assert d[g.index_of('000')] == 1
    assert d[g.index_of('100')] == 2
    assert d[g.index_of('010')] == 2


def test_bfs_unreachable():
    g = CubeSubgraph(3, ['000', '011'])
    a = build_adjacency(g)
    assert not a.is_connected()
    assert bfs_distances(a, 0).tolist() == [0, UNREACHABLE]

    with pytest.raises(IndexError):
        bfs_distances(a, 2)


def test_distance_dtype():
    assert distance_dtype(1) == np.int8
    assert distance_dtype(128) == np.int8
    assert distance_dtype(129) == np.int16
    assert distance_dtype(40000) == np.int32


@pytest.mark.parametrize('chunk', [1, 5, 512])
def test_frontier_bfs_matches_dijkstra(chunk):
    g = lucas_cube(8)
    a = build_adjacency(g)
    expected = shortest_path(a.matrix, method='D', directed=False,
                             unweighted=True)
    with conf.set_temp('bfs_chunk_size', chunk):
        D = _distance_block(a, np.arange(a.vertex_count))
    assert D.dtype == distance_dtype(a.vertex_count)
    assert np.array_equal(D, expected.astype(np.int64))


def test_frontier_bfs_long_path():
    # induced path 000-100-110-111-011 has diameter 4 > n
    g = CubeSubgraph(3, ['000', '100', '110', '111', '011'])
    a = build_adjacency(g)
    d = bfs_distances(a, g.index_of('000'))
    assert d[g.index_of('011')] == 4
    assert d.dtype == np.int64
