"""
Brute-force Wiener and Mostar indices from breadth-first distances.

Nothing here uses Hamming distances to obtain graph distances: the labels
are only compared with the search results in `is_isometric`.
"""

# Standard library
from typing import NamedTuple

# Third-party
from astropy import log as logger
import numpy as np

# Project
from .adjacency import _distance_block, build_adjacency, bfs_distances
from ..config import conf
from ..core.labels import popcount
from ..invariants.indices import IndexReport

__all__ = ['EdgeSideCount', 'AllPairsSummary', 'all_pairs_summary',
           'wiener_bruteforce', 'mostar_bruteforce', 'is_isometric',
           'edge_side_counts', 'interval', 'oracle_report']

EDGE_CHUNK = 4096


class EdgeSideCount(NamedTuple):
    """
    Vertex counts on either side of an edge ``uv``.

    ``n_uv`` counts vertices strictly closer to ``u``, ``n_vu`` those
    strictly closer to ``v``, and ``ties`` the equidistant ones.
    """
    n_uv: int
    n_vu: int
    ties: int


class AllPairsSummary(NamedTuple):
    """
    Everything the oracle extracts from one pass over all BFS trees.

    Attributes
    ----------
    wiener : int
        Sum of distances over unordered pairs.
    n_lower : `~numpy.ndarray`
        For each edge of ``graph.edges()``, the number of vertices strictly
        closer to the endpoint with coordinate 0.
    n_upper : `~numpy.ndarray`
        Same, for the endpoint with coordinate 1.
    ties : `~numpy.ndarray`
        For each edge, the number of vertices equidistant from both ends.
    isometric : bool
        Whether every BFS distance equals the Hamming distance of the labels.
    """
    wiener: int
    n_lower: np.ndarray
    n_upper: np.ndarray
    ties: np.ndarray
    isometric: bool

    @property
    def mostar(self):
        return int(np.abs(self.n_lower - self.n_upper).sum())


def _matches_hamming(D, source_labels, labels):
    # row blocks keep the uint64 xor temporaries small
    chunk = max(1, int(conf.bfs_chunk_size))
    for start in range(0, D.shape[0], chunk):
        block = source_labels[start:start + chunk, np.newaxis]
        if not np.array_equal(D[start:start + chunk],
                              popcount(block ^ labels[np.newaxis, :])):
            return False
    return True


def _source_blocks(N):
    if N <= conf.dense_distance_limit:
        logger.debug(f"oracle: dense all-pairs matrix for {N} vertices")
        yield np.arange(N)
        return

    chunk = max(1, int(conf.bfs_chunk_size))
    logger.debug(f"oracle: streaming {N} BFS sources in blocks of {chunk}")
    for start in range(0, N, chunk):
        yield np.arange(start, min(start + chunk, N))


def all_pairs_summary(a):
    """
    Run BFS from every vertex and accumulate the Wiener sum, the per-edge
    side counts, and the isometry check in a single pass.

    The result is cached on the view, so `wiener_bruteforce`,
    `mostar_bruteforce` and `is_isometric` on the same view share one pass.

    Parameters
    ----------
    a : `~daisycube.oracle.AdjacencyView`

    Returns
    -------
    summary : `AllPairsSummary`

    Raises
    ------
    DisconnectedGraphError
        If the graph is disconnected.
    """
    if 'summary' in a._cache:
        return a._cache['summary']

    a.require_connected("The all-pairs distance sum")

    labels = a.graph.vertices
    lower, upper, _ = a.edges()
    n_lower = np.zeros(lower.size, dtype=np.int64)
    n_upper = np.zeros(lower.size, dtype=np.int64)
    wiener = 0
    isometric = True

    for sources in _source_blocks(a.vertex_count):
        D = _distance_block(a, sources)

        # ordered pairs; halved at the end
        wiener += int(D.sum(dtype=np.int64))

        if isometric:
            isometric = _matches_hamming(D, labels[sources], labels)

        for start in range(0, lower.size, EDGE_CHUNK):
            d_lower = D[:, lower[start:start + EDGE_CHUNK]]
            d_upper = D[:, upper[start:start + EDGE_CHUNK]]
            n_lower[start:start + EDGE_CHUNK] += np.count_nonzero(
                d_lower < d_upper, axis=0)
            n_upper[start:start + EDGE_CHUNK] += np.count_nonzero(
                d_upper < d_lower, axis=0)
        del D

    ties = a.vertex_count - n_lower - n_upper
    summary = AllPairsSummary(wiener // 2, n_lower, n_upper, ties, isometric)
    a._cache['summary'] = summary
    return summary


def wiener_bruteforce(a):
    """
    Wiener index :math:`\\sum_{\\{u,v\\}} d(u,v)` from BFS distances.

    Parameters
    ----------
    a : `~daisycube.oracle.AdjacencyView`

    Returns
    -------
    W : int
    """
    return all_pairs_summary(a).wiener


def mostar_bruteforce(a):
    """
    Mostar index :math:`\\sum_{uv \\in E} |n_{u,v} - n_{v,u}|` from BFS
    distances.
    """
    return all_pairs_summary(a).mostar


def is_isometric(g, a=None):
    """
    Whether the labelling embeds ``g`` isometrically into :math:`Q_n`, i.e.
    graph distances equal Hamming distances for every pair of vertices.

    Parameters
    ----------
    g : `~daisycube.core.CubeSubgraph`
    a : `~daisycube.oracle.AdjacencyView` (optional)
        Adjacency of ``g``; built if not given.

    Returns
    -------
    isometric : bool

    Raises
    ------
    DisconnectedGraphError
        If the graph is disconnected.
    """
    if a is None:
        a = build_adjacency(g)
    elif a.graph is not g and a.graph != g:
        raise ValueError("The adjacency view was built for a different graph")
    return all_pairs_summary(a).isometric


def edge_side_counts(a, edge):
    """
    Count the vertices closer to each endpoint of one edge.

    Parameters
    ----------
    a : `~daisycube.oracle.AdjacencyView`
    edge : tuple of int
        Vertex indices ``(u, v)`` of adjacent vertices.

    Returns
    -------
    counts : `EdgeSideCount`
    """
    u, v = (int(x) for x in edge)
    if v not in a.neighbors(u):
        raise ValueError(f"Vertices {u} and {v} are not adjacent")

    du = bfs_distances(a, u)
    dv = bfs_distances(a, v)
    n_uv = int(np.count_nonzero(du < dv))
    n_vu = int(np.count_nonzero(dv < du))
    return EdgeSideCount(n_uv, n_vu, a.vertex_count - n_uv - n_vu)


def interval(a, u, v):
    """
    The interval :math:`I_G(u,v)`: vertices on some shortest ``u``-``v``
    path.

    Parameters
    ----------
    a : `~daisycube.oracle.AdjacencyView`
    u, v : int
        Vertex indices.

    Returns
    -------
    idx : `~numpy.ndarray`
        Sorted vertex indices ``w`` with ``d(u,v) = d(u,w) + d(w,v)``.
    """
    a.require_connected("The interval")
    du = bfs_distances(a, int(u))
    dv = bfs_distances(a, int(v))
    return np.flatnonzero(du + dv == du[int(v)])


def oracle_report(g, a=None):
    """
    `~daisycube.invariants.IndexReport` from the brute-force oracle.
    """
    if a is None:
        a = build_adjacency(g)
    summary = all_pairs_summary(a)
    return IndexReport(g.vertex_count, g.edge_count, summary.wiener,
                       summary.mostar, method='oracle')
