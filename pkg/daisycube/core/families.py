""" Hypercubes, Fibonacci and Lucas cubes, and their generalizations. """

# Third-party
from astropy import log as logger
import numpy as np

# Project
from .labels import CubeSubgraph, _bits_from_string, _check_dimension
from ..config import conf
from ..errors import LabelError, SizeLimitError

__all__ = ['hypercube', 'fibonacci_cube', 'lucas_cube',
           'generalized_fibonacci_cube', 'generalized_lucas_cube',
           'vertex_deleted_cube', 'fibonacci_number']

_UINT64_MAX = 2**64 - 1


def _all_strings(n, family):
    """
    Every label of :math:`B^n` as a ``uint64`` array, after checking the
    configured caps.
    """
    n = _check_dimension(n)
    if n > conf.max_dimension:
        raise SizeLimitError(f"{family}: dimension {n} exceeds the configured "
                             f"cap max_dimension={conf.max_dimension}")
    if 2**n > conf.max_vertices:
        raise SizeLimitError(f"{family}: enumerating 2^{n} labels exceeds the "
                             f"configured cap max_vertices="
                             f"{conf.max_vertices}")
    return n, np.arange(2**n, dtype=np.uint64)


def _finish(n, labels, family):
    logger.debug(f"{family}(n={n}): {labels.size} vertices")
    return CubeSubgraph(n, labels)


def _parse_pattern(f):
    if isinstance(f, str):
        if len(f) == 0:
            raise LabelError("Forbidden pattern must be a nonempty bitstring")
        return _bits_from_string(f), len(f)
    raise LabelError(f"Forbidden pattern must be a bitstring, got {f!r}")


def hypercube(n):
    """
    The hypercube :math:`Q_n` on all :math:`2^n` labels.

    Parameters
    ----------
    n : int
        Dimension. ``n = 0`` gives :math:`K_1` on the empty string.

    Returns
    -------
    graph : `~daisycube.core.CubeSubgraph`
    """
    n, labels = _all_strings(n, 'hypercube')
    return _finish(n, labels, 'hypercube')


def fibonacci_cube(n):
    """
    The Fibonacci cube :math:`\\Gamma_n`: labels with no two adjacent
    coordinates both equal to 1.

    Parameters
    ----------
    n : int
        Dimension.

    Returns
    -------
    graph : `~daisycube.core.CubeSubgraph`
        Has ``fibonacci_number(n + 2)`` vertices.
    """
    n, labels = _all_strings(n, 'fibonacci_cube')
    keep = (labels & (labels >> np.uint64(1))) == 0
    return _finish(n, labels[keep], 'fibonacci_cube')


def lucas_cube(n):
    """
    The Lucas cube :math:`\\Lambda_n`: Fibonacci strings whose first and last
    coordinates are not both 1.

    By convention :math:`\\Lambda_0 = \\Lambda_1 = K_1`, so ``n = 1`` returns
    the single vertex ``'0'`` even though the string ``'1'`` has no adjacent
    pair of ones.
    """
    n, labels = _all_strings(n, 'lucas_cube')
    keep = (labels & (labels >> np.uint64(1))) == 0
    if n == 1:
        keep &= labels == 0
    elif n >= 2:
        wrap = np.uint64(1 | (1 << (n - 1)))
        keep &= (labels & wrap) != wrap
    return _finish(n, labels[keep], 'lucas_cube')


def generalized_fibonacci_cube(n, f):
    """
    The generalized Fibonacci cube :math:`Q_n[f]`, induced by the labels that
    do not contain ``f`` as a contiguous substring.

    Parameters
    ----------
    n : int
        Dimension.
    f : str
        Forbidden pattern, read left to right like the labels. Any nonempty
        bitstring is accepted; the result is a daisy cube when ``f`` is
        ``'1' * s`` with ``s >= 2``, and is in general not one otherwise.

    Returns
    -------
    graph : `~daisycube.core.CubeSubgraph`
        The full hypercube when ``len(f) > n``.
    """
    fbits, m = _parse_pattern(f)
    n, labels = _all_strings(n, 'generalized_fibonacci_cube')
    keep = np.ones(labels.size, dtype=bool)
    if m <= n:
        mask = np.uint64((1 << m) - 1)
        fbits = np.uint64(fbits)
        for k in range(n - m + 1):
            keep &= ((labels >> np.uint64(k)) & mask) != fbits
    return _finish(n, labels[keep], f'generalized_fibonacci_cube[{f}]')


def generalized_lucas_cube(n, f):
    """
    The generalized Lucas cube: labels none of whose circulations contains
    ``f`` as a substring.

    The label is read as the periodic word :math:`u_1 \\ldots u_n u_1 \\ldots`
    and ``f`` may not start at any of the ``n`` positions, so a pattern
    longer than ``n`` can still occur by wrapping around more than once. With
    ``f = '11'`` this gives `lucas_cube` for every ``n``, including the
    :math:`\\Lambda_1 = K_1` convention.

    When ``len(f) > n`` this departs from the literal reading, where a
    rotation of length ``n`` can never contain the longer ``f`` and every
    label would be kept: here :math:`1^n` is excluded for ``f = 1^s``, e.g.
    ``generalized_lucas_cube(2, '111')`` is ``{00, 10, 01}``.
    """
    fbits, m = _parse_pattern(f)
    n, labels = _all_strings(n, 'generalized_lucas_cube')
    keep = np.ones(labels.size, dtype=bool)
    for k in range(n):
        match = np.ones(labels.size, dtype=bool)
        for j in range(m):
            coord = (labels >> np.uint64((k + j) % n)) & np.uint64(1)
            match &= coord == np.uint64((fbits >> j) & 1)
        keep &= ~match
    return _finish(n, labels[keep], f'generalized_lucas_cube[{f}]')


def vertex_deleted_cube(n):
    """
    :math:`Q_n` with the vertex :math:`1^n` removed, for ``n >= 1``.

    This is ``generalized_fibonacci_cube(n, '1' * n)``.
    """
    n = _check_dimension(n)
    if n < 1:
        raise LabelError("vertex_deleted_cube needs n >= 1")
    n, labels = _all_strings(n, 'vertex_deleted_cube')
    return _finish(n, labels[:-1], 'vertex_deleted_cube')


def fibonacci_number(k):
    """
    The Fibonacci number :math:`F_k` with :math:`F_0 = 0, F_1 = 1`.

    Raises
    ------
    OverflowError
        If :math:`F_k` does not fit in an unsigned 64-bit word (``k > 93``).
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"Fibonacci index must be a nonnegative integer, "
                         f"got {k!r}")

    a, b = 0, 1
    for _ in range(int(k)):
        a, b = b, a + b
        if a > _UINT64_MAX:
            raise OverflowError(f"F_{k} does not fit in 64 bits")
    return a
