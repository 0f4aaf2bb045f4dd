# Third-party
import numpy as np
from packaging import version

# Project
from ..errors import LabelError

__all__ = ['VertexLabel', 'CubeSubgraph', 'popcount', 'MAX_LABEL_BITS']

MAX_LABEL_BITS = 64

# TODO: drop the SWAR fallback once numpy >= 2.0 is the minimum version
NUMPY_GE_20 = (
    version.parse(version.parse(np.__version__).base_version) >=
    version.parse('2.0')
)

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0f0f0f0f0f0f0f0f)
_H01 = np.uint64(0x0101010101010101)


def _bit(i):
    return np.uint64(1 << int(i))


def popcount(x):
    """
    Number of set bits of each element of an unsigned 64-bit array.

    Parameters
    ----------
    x : array_like
        Unsigned integers (converted to ``uint64``).

    Returns
    -------
    counts : `~numpy.ndarray`
        ``int64`` array with the same shape as ``x``.
    """
    x = np.asarray(x, dtype=np.uint64)
    if NUMPY_GE_20:
        return np.bitwise_count(x).astype(np.int64)

    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return ((x * _H01) >> np.uint64(56)).astype(np.int64)


def _check_dimension(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise LabelError(f"Dimension must be an integer, got {n!r}")
    n = int(n)
    if not 0 <= n <= MAX_LABEL_BITS:
        raise LabelError(f"Dimension must satisfy 0 <= n <= {MAX_LABEL_BITS}, "
                         f"got {n}")
    return n


def _bits_from_string(s):
    if not isinstance(s, str) or any(c not in '01' for c in s):
        raise LabelError(f"Labels must be strings over {{0, 1}}, got {s!r}")
    bits = 0
    for k, c in enumerate(s):
        if c == '1':
            bits |= 1 << k
    return bits


def _string_from_bits(bits, n):
    return ''.join('1' if (bits >> k) & 1 else '0' for k in range(n))


class VertexLabel:
    """
    One vertex of the hypercube :math:`Q_n`.

    The coordinate :math:`u_i` of the string :math:`u_1 u_2 \\ldots u_n` is
    stored at bit position ``i - 1`` of ``bits``, so the leftmost character
    of the textual form is the least significant bit.

    Parameters
    ----------
    bits : int
        The packed coordinates. Bits at positions ``>= n`` must be zero.
    n : int
        Dimension, ``0 <= n <= 64``.

    Examples
    --------

        >>> u = VertexLabel.from_string('110')
        >>> u.bits, u.n
        (3, 3)
        >>> str(u)
        '110'

    """

    __slots__ = ('_bits', '_n')

    def __init__(self, bits, n):
        n = _check_dimension(n)
        bits = int(bits)
        if bits < 0 or bits >> n:
            raise LabelError(f"Label {bits:#x} does not fit in dimension {n}")
        self._bits = bits
        self._n = n

    @classmethod
    def from_string(cls, s):
        """
        Parse the left-to-right string ``b_1 ... b_n``.
        """
        return cls(_bits_from_string(s), len(s))

    @classmethod
    def zeros(cls, n):
        """The all-zero label :math:`0^n`."""
        return cls(0, n)

    @classmethod
    def ones(cls, n):
        """The all-one label :math:`1^n`."""
        return cls((1 << n) - 1, n)

    @property
    def bits(self):
        return self._bits

    @property
    def n(self):
        return self._n

    @property
    def weight(self):
        """Number of coordinates equal to 1."""
        return bin(self._bits).count('1')

    def coordinate(self, i):
        """The coordinate :math:`u_i`, with ``1 <= i <= n``."""
        if not 1 <= i <= self._n:
            raise IndexError(f"Coordinate {i} out of range for n={self._n}")
        return (self._bits >> (i - 1)) & 1

    def leq(self, other):
        """
        The coordinate-wise partial order: ``u <= v`` iff ``u_i <= v_i``
        for every ``i``.
        """
        self._check_same_dimension(other)
        return self._bits & other._bits == self._bits

    def hamming(self, other):
        """Number of coordinates in which the two labels differ."""
        self._check_same_dimension(other)
        return bin(self._bits ^ other._bits).count('1')

    def flip(self, i):
        """Label with coordinate ``i`` (1-based) complemented."""
        if not 1 <= i <= self._n:
            raise IndexError(f"Coordinate {i} out of range for n={self._n}")
        return self.__class__(self._bits ^ (1 << (i - 1)), self._n)

    def _check_same_dimension(self, other):
        if not isinstance(other, VertexLabel):
            raise TypeError("Can only compare a VertexLabel with another "
                            f"VertexLabel, not '{other.__class__.__name__}'")
        if other._n != self._n:
            raise LabelError(f"Dimension mismatch: {self._n} vs {other._n}")

    def __int__(self):
        return self._bits

    def __index__(self):
        return self._bits

    def __eq__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self._bits == other._bits and self._n == other._n

    def __lt__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return (self._n, self._bits) < (other._n, other._bits)

    def __hash__(self):
        return hash((self._bits, self._n))

    def to_string(self):
        """The left-to-right string ``b_1 ... b_n``."""
        return _string_from_bits(self._bits, self._n)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"<VertexLabel '{self!s}'>"


def _as_label_array(n, labels, what='vertices'):
    """
    Convert ``labels`` (ints, `VertexLabel` objects, bitstrings, or an
    integer array) into a ``uint64`` array, checking the dimension.
    """
    if isinstance(labels, np.ndarray) and labels.dtype.kind in 'ui':
        if labels.dtype.kind == 'i' and np.any(labels < 0):
            raise LabelError(f"Negative label among {what}")
        arr = labels.astype(np.uint64).ravel()
    else:
        values = []
        for lbl in labels:
            if isinstance(lbl, VertexLabel):
                if lbl.n != n:
                    raise LabelError(f"Label '{lbl}' has dimension {lbl.n}, "
                                     f"expected {n}")
                values.append(lbl.bits)
            elif isinstance(lbl, str):
                if len(lbl) != n:
                    raise LabelError(f"Label '{lbl}' has length {len(lbl)}, "
                                     f"expected {n}")
                values.append(_bits_from_string(lbl))
            else:
                v = int(lbl)
                if v < 0:
                    raise LabelError(f"Negative label {v} among {what}")
                values.append(v)
        if any(v >> MAX_LABEL_BITS for v in values):
            raise LabelError(f"Label wider than {MAX_LABEL_BITS} bits")
        arr = np.array(values, dtype=np.uint64)

    if n < MAX_LABEL_BITS and arr.size and np.any(arr >> np.uint64(n)):
        raise LabelError(f"Some {what} have bits set beyond dimension {n}")
    return arr


class CubeSubgraph:
    """
    An induced subgraph of the hypercube :math:`Q_n`, given by its vertex
    labels.

    Edges are implicit: two vertices are adjacent iff their labels differ in
    exactly one coordinate. Instances are immutable; the vertex array is
    sorted by integer value and read-only.

    Parameters
    ----------
    n : int
        Dimension of the host hypercube.
    vertices : iterable
        Vertex labels, as ints, `VertexLabel` objects, left-to-right
        bitstrings, or an unsigned integer array.
    unique : bool (optional)
        If ``True`` (default), duplicate labels raise a `LabelError`. If
        ``False``, duplicates are silently removed; constructions that
        enumerate overlapping sets use this.
    """

    def __init__(self, n, vertices, unique=True):
        self._n = _check_dimension(n)
        arr = _as_label_array(self._n, vertices)

        if arr.size == 0:
            raise LabelError("A cube subgraph needs at least one vertex")

        sorted_arr = np.unique(arr)
        if unique and sorted_arr.size != arr.size:
            raise LabelError(f"Vertex set contains {arr.size - sorted_arr.size}"
                             " duplicate label(s)")

        sorted_arr.setflags(write=False)
        self._vertices = sorted_arr
        self._edges = None

    @property
    def n(self):
        return self._n

    @property
    def vertices(self):
        """Sorted, read-only ``uint64`` array of vertex labels."""
        return self._vertices

    @property
    def vertex_count(self):
        return int(self._vertices.size)

    @property
    def edge_count(self):
        return int(self.edges()[0].size)

    def labels(self):
        """The vertices as a list of `VertexLabel` objects."""
        return [VertexLabel(int(b), self._n) for b in self._vertices]

    def to_strings(self):
        """The vertices as left-to-right bitstrings, in sorted order."""
        return [_string_from_bits(int(b), self._n) for b in self._vertices]

    def lookup(self, labels):
        """
        Find the indices of many labels at once.

        Parameters
        ----------
        labels : array_like
            ``uint64`` labels of dimension ``n``.

        Returns
        -------
        idx : `~numpy.ndarray`
            Index of each label in `vertices`, or ``-1`` if absent.
        """
        labels = np.asarray(labels, dtype=np.uint64)
        pos = np.searchsorted(self._vertices, labels)
        pos_clipped = np.minimum(pos, self._vertices.size - 1)
        found = self._vertices[pos_clipped] == labels
        return np.where(found, pos_clipped, -1).astype(np.int64)

    def index_of(self, label):
        """Index of a single label, raising `KeyError` if absent."""
        bits = self._label_bits(label)
        idx = int(self.lookup(np.array([bits], dtype=np.uint64))[0])
        if idx < 0:
            raise KeyError(f"'{_string_from_bits(bits, self._n)}' is not a "
                           "vertex of this graph")
        return idx

    def _label_bits(self, label):
        if isinstance(label, VertexLabel):
            if label.n != self._n:
                raise LabelError(f"Label '{label}' has dimension {label.n}, "
                                 f"expected {self._n}")
            return label.bits
        return int(_as_label_array(self._n, [label])[0])

    def edges(self):
        """
        All edges, one per pair of labels at Hamming distance 1.

        Returns
        -------
        lower : `~numpy.ndarray`
            Index of the endpoint whose coordinate in the edge direction is 0.
        upper : `~numpy.ndarray`
            Index of the endpoint whose coordinate in the edge direction is 1.
        direction : `~numpy.ndarray`
            0-based direction (bit position) of each edge.
        """
        if self._edges is None:
            lower, upper, direction = [], [], []
            idx = np.arange(self._vertices.size, dtype=np.int64)
            for i in range(self._n):
                has_bit = (self._vertices & _bit(i)) != 0
                partner = self.lookup(self._vertices[has_bit] ^ _bit(i))
                present = partner >= 0
                lower.append(partner[present])
                upper.append(idx[has_bit][present])
                direction.append(np.full(int(present.sum()), i,
                                         dtype=np.int64))

            if lower:
                edges = tuple(np.concatenate(x) for x in
                              (lower, upper, direction))
            else:
                edges = tuple(np.zeros(0, dtype=np.int64) for _ in range(3))

            for arr in edges:
                arr.setflags(write=False)
            self._edges = edges

        return self._edges

    def __len__(self):
        return self.vertex_count

    def __iter__(self):
        for b in self._vertices:
            yield VertexLabel(int(b), self._n)

    def __contains__(self, label):
        try:
            bits = self._label_bits(label)
        except LabelError:
            return False
        return bool(self.lookup(np.array([bits], dtype=np.uint64))[0] >= 0)

    def __eq__(self, other):
        if not isinstance(other, CubeSubgraph):
            return NotImplemented
        return (self._n == other._n and
                np.array_equal(self._vertices, other._vertices))

    def __hash__(self):
        return hash((self._n, self._vertices.tobytes()))

    def __repr__(self):
        return (f"<CubeSubgraph n={self._n}, {self.vertex_count} vertices, "
                f"{self.edge_count} edges>")
