# Third-party
import numpy as np
from scipy.sparse import coo_matrix, csr_matrix
from scipy.sparse.csgraph import connected_components

# Project
from ..config import conf
from ..errors import DisconnectedGraphError

__all__ = ['AdjacencyView', 'build_adjacency', 'bfs_distances', 'distance_dtype',
           'UNREACHABLE']

UNREACHABLE = -1


class AdjacencyView:
    """
    Explicit adjacency structure of a `~daisycube.core.CubeSubgraph`.

    Vertex ``k`` of the view is ``graph.vertices[k]``. The neighbour lists
    are stored as a symmetric `~scipy.sparse.csr_matrix`.

    Parameters
    ----------
    graph : `~daisycube.core.CubeSubgraph`
    matrix : `~scipy.sparse.csr_matrix`
        Symmetric 0/1 adjacency matrix.
    """

    def __init__(self, graph, matrix):
        self.graph = graph
        self.matrix = matrix
        self._cache = dict()

    @property
    def vertex_count(self):
        return self.graph.vertex_count

    @property
    def edge_count(self):
        return self.graph.edge_count

    def edges(self):
        """``(lower, upper, direction)`` arrays, see `CubeSubgraph.edges`."""
        return self.graph.edges()

    def neighbors(self, i):
        """Indices adjacent to vertex index ``i``, ascending."""
        start, stop = self.matrix.indptr[i], self.matrix.indptr[i + 1]
        return np.sort(self.matrix.indices[start:stop])

    def degree(self, i=None):
        """Degree of vertex ``i``, or of every vertex when ``i`` is None."""
        degrees = np.diff(self.matrix.indptr)
        if i is None:
            return degrees
        return int(degrees[i])

    def index_of(self, label):
        return self.graph.index_of(label)

    def is_connected(self):
        if 'connected' not in self._cache:
            ncomp, _ = connected_components(self.matrix, directed=False)
            self._cache['connected'] = ncomp == 1
        return self._cache['connected']

    def require_connected(self, what):
        if not self.is_connected():
            raise DisconnectedGraphError(
                f"{what} is undefined: the graph with {self.vertex_count} "
                "vertices is disconnected")

    def __repr__(self):
        return (f"<AdjacencyView {self.vertex_count} vertices, "
                f"{self.edge_count} edges>")


def build_adjacency(g):
    """
    Build the explicit adjacency of ``g``.

    Neighbours are found by flipping each coordinate of each label and
    looking the result up in the sorted vertex array.

    Parameters
    ----------
    g : `~daisycube.core.CubeSubgraph`

    Returns
    -------
    view : `AdjacencyView`
    """
    lower, upper, _ = g.edges()
    N = g.vertex_count
    rows = np.concatenate((lower, upper))
    cols = np.concatenate((upper, lower))
    data = np.ones(rows.size, dtype=np.int32)
    matrix = coo_matrix((data, (rows, cols)), shape=(N, N)).tocsr()
    return AdjacencyView(g, matrix)


def distance_dtype(vertex_count):
    """
    Smallest signed integer dtype holding every distance of a connected
    graph on ``vertex_count`` vertices, and `UNREACHABLE`.
    """
    return np.result_type(np.min_scalar_type(-int(vertex_count)), np.int8)


def _frontier_bfs(matrix, sources, out):
    # level-synchronous BFS from all ``sources`` at once: each frontier is a
    # sparse (sources x vertices) indicator, expanded by one product with
    # the adjacency matrix
    k, N = out.shape
    rows = np.arange(k)
    cols = np.asarray(sources, dtype=np.int64)
    level = 0
    while rows.size:
        out[rows, cols] = level
        frontier = csr_matrix((np.ones(rows.size, dtype=np.int32),
                               (rows, cols)), shape=(k, N))
        reached = (frontier @ matrix).tocoo()
        fresh = out[reached.row, reached.col] == UNREACHABLE
        rows, cols = reached.row[fresh], reached.col[fresh]
        level += 1


def _distance_block(a, sources):
    """
    Unweighted shortest-path distances from each source in ``sources``.

    Returns an array of shape ``(len(sources), |V|)`` and dtype
    `distance_dtype`, with `UNREACHABLE` for vertices in other components.
    Sources are searched ``conf.bfs_chunk_size`` at a time.
    """
    sources = np.asarray(sources, dtype=np.int64)
    D = np.full((sources.size, a.vertex_count), UNREACHABLE,
                dtype=distance_dtype(a.vertex_count))
    chunk = max(1, int(conf.bfs_chunk_size))
    for start in range(0, sources.size, chunk):
        stop = min(start + chunk, sources.size)
        _frontier_bfs(a.matrix, sources[start:stop], D[start:stop])
    return D


def bfs_distances(a, source):
    """
    Breadth-first distances from one vertex.

    Parameters
    ----------
    a : `AdjacencyView`
    source : int
        Vertex index.

    Returns
    -------
    dist : `~numpy.ndarray`
        ``int64`` distances to every vertex, `UNREACHABLE` (-1) where no
        path exists.
    """
    if not 0 <= source < a.vertex_count:
        raise IndexError(f"Source index {source} out of range for "
                         f"{a.vertex_count} vertices")
    return _distance_block(a, [source])[0].astype(np.int64)
