# Third-party
import numpy as np

# Project
from ..core.labels import _bit

__all__ = ['DirectionProfile', 'direction_profile']


class DirectionProfile:
    """
    Per-direction edge and semicube counts of a labelled cube subgraph.

    For each direction :math:`i \\in [n]` this stores :math:`|E_i|`, the
    number of edges whose endpoints differ in coordinate :math:`i`, and the
    sizes of the complementary semicubes :math:`W_{(i,0)}` and
    :math:`W_{(i,1)}`. Entries are Python integers, so all downstream sums
    are exact.

    Parameters
    ----------
    vertex_count : int
    e : sequence of int
        :math:`|E_i|` for ``i = 1..n``.
    w0 : sequence of int
        :math:`|W_{(i,0)}|`.
    w1 : sequence of int
        :math:`|W_{(i,1)}|`.
    """

    def __init__(self, vertex_count, e, w0, w1):
        self.vertex_count = int(vertex_count)
        self.e = tuple(int(x) for x in e)
        self.w0 = tuple(int(x) for x in w0)
        self.w1 = tuple(int(x) for x in w1)

        if not len(self.e) == len(self.w0) == len(self.w1):
            raise ValueError("e, w0 and w1 must have one entry per direction, "
                             f"got lengths {len(self.e)}, {len(self.w0)}, "
                             f"{len(self.w1)}")

        for i, (a, b) in enumerate(zip(self.w0, self.w1), start=1):
            if a < 0 or b < 0 or a + b != self.vertex_count:
                raise ValueError(f"Semicubes of direction {i} are not "
                                 f"complementary: {a} + {b} != "
                                 f"{self.vertex_count}")

    @property
    def n(self):
        return len(self.e)

    @property
    def edge_count(self):
        return sum(self.e)

    def to_dict(self):
        return {'n': self.n, 'e': list(self.e),
                'w0': list(self.w0), 'w1': list(self.w1)}

    def __eq__(self, other):
        if not isinstance(other, DirectionProfile):
            return NotImplemented
        return (self.vertex_count, self.e, self.w0, self.w1) == \
            (other.vertex_count, other.e, other.w0, other.w1)

    def __repr__(self):
        return (f"<DirectionProfile n={self.n}, |V|={self.vertex_count}, "
                f"|E|={self.edge_count}>")


def direction_profile(g):
    """
    Count edges and semicube sizes in every direction of ``g``.

    :math:`|E_i|` is measured from the edges actually present (pairs of
    vertices differing only in coordinate :math:`i`), so equality with
    :math:`|W_{(i,1)}|` remains something to check rather than assume.

    Parameters
    ----------
    g : `~daisycube.core.CubeSubgraph`

    Returns
    -------
    profile : `DirectionProfile`
    """
    v = g.vertices
    _, _, direction = g.edges()
    e = np.bincount(direction, minlength=g.n)[:g.n]
    w1 = [int(np.count_nonzero(v & _bit(i))) for i in range(g.n)]
    w0 = [g.vertex_count - x for x in w1]
    return DirectionProfile(g.vertex_count, e, w0, w1)
