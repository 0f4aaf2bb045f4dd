""" Daisy cubes: downward closures of generator sets under the bitwise order. """

# Third-party
from astropy import log as logger
import numpy as np

# Project
from .labels import CubeSubgraph, _as_label_array, _bit, _check_dimension, popcount
from ..config import conf
from ..errors import LabelError, SizeLimitError

__all__ = ['GeneratorSet', 'maximal_antichain', 'submasks', 'daisy_closure',
           'is_downward_closed']


def maximal_antichain(X):
    """
    The maximal elements of ``X`` under the coordinate-wise order.

    Parameters
    ----------
    X : array_like
        Unsigned integer labels (all of the same dimension).

    Returns
    -------
    maximal : `~numpy.ndarray`
        Sorted ``uint64`` array of the labels of ``X`` that are not strictly
        below another label of ``X``. Duplicates in ``X`` are merged.

    Examples
    --------

        >>> from daisycube.core import VertexLabel
        >>> X = [VertexLabel.from_string(s).bits for s in ('110', '100', '011')]
        >>> [VertexLabel(int(x), 3) for x in maximal_antichain(X)]
        [<VertexLabel '110'>, <VertexLabel '011'>]

    """
    X = np.unique(np.asarray(X, dtype=np.uint64))
    if X.size == 0:
        return X

    # below[a, b] is True when X[a] <= X[b]
    below = (X[:, np.newaxis] & X[np.newaxis, :]) == X[:, np.newaxis]
    np.fill_diagonal(below, False)
    return X[~below.any(axis=1)]


def submasks(x):
    """
    Iterate over every label ``u <= x``, from ``x`` down to 0.

    Uses the decrementing loop ``s = (s - 1) & x``.
    """
    x = int(x)
    s = x
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & x


class GeneratorSet:
    """
    A set :math:`X \\subseteq B^n` generating the daisy cube :math:`Q_n(X)`.

    Parameters
    ----------
    n : int
        Dimension.
    generators : iterable
        Labels of ``X`` as ints, `~daisycube.core.VertexLabel` objects, or
        left-to-right bitstrings. Duplicates are merged.

    Attributes
    ----------
    generators : `~numpy.ndarray`
        Sorted ``uint64`` array of the distinct generators.
    maximal : `~numpy.ndarray`
        The antichain :math:`\\widehat{X}` of maximal generators; it has the
        same closure as ``generators``.
    """

    def __init__(self, n, generators):
        self.n = _check_dimension(n)
        arr = np.unique(_as_label_array(self.n, generators, what='generators'))
        if arr.size == 0:
            raise LabelError("A generator set must contain at least one label")

        arr.setflags(write=False)
        self.generators = arr

        maximal = maximal_antichain(arr)
        maximal.setflags(write=False)
        self.maximal = maximal

    @property
    def closure_size_bound(self):
        """
        Upper bound :math:`\\sum_{x \\in \\widehat{X}} 2^{|x|}` on the number
        of vertices of the closure.
        """
        return sum(2**int(w) for w in popcount(self.maximal))

    def __len__(self):
        return int(self.generators.size)

    def __repr__(self):
        return (f"<GeneratorSet n={self.n}, {len(self)} generators, "
                f"{self.maximal.size} maximal>")


def daisy_closure(gen):
    """
    The daisy cube :math:`Q_n(X)` generated by ``gen``: every label below
    some generator.

    Only the maximal generators are expanded; sub-masks shared between
    generators are merged.

    Parameters
    ----------
    gen : `GeneratorSet`

    Returns
    -------
    graph : `~daisycube.core.CubeSubgraph`

    Raises
    ------
    SizeLimitError
        If the closure could exceed ``conf.max_vertices`` vertices.
    """
    if not isinstance(gen, GeneratorSet):
        raise TypeError("daisy_closure expects a GeneratorSet, not "
                        f"'{gen.__class__.__name__}'")

    bound = gen.closure_size_bound
    if bound > conf.max_vertices:
        raise SizeLimitError(f"Daisy closure may have up to {bound} vertices, "
                             "more than the configured cap max_vertices="
                             f"{conf.max_vertices}")

    found = set()
    for x in gen.maximal:
        found.update(submasks(x))

    logger.debug(f"daisy_closure: {gen.maximal.size} maximal generators, "
                 f"{len(found)} vertices (bound {bound})")
    return CubeSubgraph(gen.n, np.fromiter(found, dtype=np.uint64,
                                           count=len(found)))


def is_downward_closed(g):
    """
    Whether the vertex set is closed under lowering any single coordinate
    from 1 to 0.

    A labelled vertex set is the daisy cube generated by some ``X`` exactly
    when this holds (take ``X`` to be the vertex set itself).

    Parameters
    ----------
    g : `~daisycube.core.CubeSubgraph`

    Returns
    -------
    closed : bool
    """
    v = g.vertices
    for i in range(g.n):
        has_bit = (v & _bit(i)) != 0
        if np.any(g.lookup(v[has_bit] ^ _bit(i)) < 0):
            return False
    return True
