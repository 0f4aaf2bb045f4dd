"""
Wiener and Mostar indices from semicube counts.

For a partial cube isometrically embedded in :math:`Q_n`,

.. math::

    W(G) = \\sum_i |W_{(i,0)}| \\, |W_{(i,1)}|

and for a properly embedded daisy cube

.. math::

    Mo(G) = \\sum_i |W_{(i,1)}| \\, (|W_{(i,0)}| - |W_{(i,1)}|),

which together give :math:`2W(G) - Mo(G) = |V(G)| |E(G)|`.
"""

# Third-party
from astropy import log as logger

# Project
from .profile import direction_profile
from ..core.daisy import is_downward_closed
from ..errors import NotADaisyEmbeddingError

__all__ = ['IndexReport', 'METHODS', 'wiener_semicube', 'mostar_semicube',
           'indices_from_profile', 'verify_relation', 'companion_identity',
           'check_semicube_balance', 'check_edge_semicube_count',
           'check_daisy_embedding',
           'semicube_report', 'corollary_report']

METHODS = ('semicube', 'oracle', 'corollary')


class IndexReport:
    """
    Wiener and Mostar indices of one graph, with the method that produced
    them.

    Parameters
    ----------
    vertex_count : int
    edge_count : int
    wiener : int
    mostar : int
    method : str
        One of ``'semicube'``, ``'oracle'``, ``'corollary'``.
    """

    def __init__(self, vertex_count, edge_count, wiener, mostar, method):
        if method not in METHODS:
            raise ValueError(f"Unknown method '{method}', expected one of "
                             f"{METHODS}")
        if wiener < 0 or mostar < 0:
            raise ValueError(f"Indices must be nonnegative, got W={wiener}, "
                             f"Mo={mostar}")

        self.vertex_count = int(vertex_count)
        self.edge_count = int(edge_count)
        self.wiener = int(wiener)
        self.mostar = int(mostar)
        self.method = method

    @property
    def residual(self):
        """:math:`2W - Mo - |V||E|`, signed."""
        return (2 * self.wiener - self.mostar -
                self.vertex_count * self.edge_count)

    @property
    def relation_holds(self):
        return self.residual == 0

    def same_values(self, other):
        """Whether two reports agree on every count, ignoring the method."""
        return ((self.vertex_count, self.edge_count, self.wiener,
                 self.mostar) ==
                (other.vertex_count, other.edge_count, other.wiener,
                 other.mostar))

    def to_dict(self):
        return {'V': self.vertex_count, 'E': self.edge_count,
                'W': self.wiener, 'Mo': self.mostar, 'method': self.method,
                'residual': self.residual,
                'relation_holds': self.relation_holds}

    def __repr__(self):
        return (f"<IndexReport ({self.method}) |V|={self.vertex_count}, "
                f"|E|={self.edge_count}, W={self.wiener}, Mo={self.mostar}, "
                f"residual={self.residual}>")


def check_semicube_balance(p):
    """
    Raise `~daisycube.errors.NotADaisyEmbeddingError` unless
    :math:`|W_{(i,0)}| \\geq |W_{(i,1)}|` in every direction.
    """
    for i, (a, b) in enumerate(zip(p.w0, p.w1), start=1):
        if a < b:
            raise NotADaisyEmbeddingError(
                'Proposition 3', i, f"|W_(i,0)| = {a} < |W_(i,1)| = {b}")


def check_edge_semicube_count(p):
    """
    Raise `~daisycube.errors.NotADaisyEmbeddingError` unless
    :math:`|E_i| = |W_{(i,1)}|` in every direction.
    """
    for i, (e, b) in enumerate(zip(p.e, p.w1), start=1):
        if e != b:
            raise NotADaisyEmbeddingError(
                'Proposition 4', i, f"|E_i| = {e} != |W_(i,1)| = {b}")


def check_daisy_embedding(g, profile=None):
    """
    Raise `~daisycube.errors.NotADaisyEmbeddingError` unless ``g`` is
    properly embedded: both profile checks pass and the vertex set is closed
    under lowering a coordinate.
    """
    if profile is None:
        profile = direction_profile(g)
    check_semicube_balance(profile)
    check_edge_semicube_count(profile)
    if not is_downward_closed(g):
        raise NotADaisyEmbeddingError(
            'downward closure', None,
            "some vertex has a coordinate that cannot be lowered to 0")


def wiener_semicube(p):
    """
    Wiener index :math:`\\sum_i |W_{(i,0)}| |W_{(i,1)}|`.

    Valid for any graph isometrically embedded in :math:`Q_n`; the caller is
    responsible for the embedding (see `daisycube.oracle.is_isometric`).

    Parameters
    ----------
    p : `DirectionProfile`

    Returns
    -------
    W : int
    """
    return sum(a * b for a, b in zip(p.w0, p.w1))


def mostar_semicube(p):
    """
    Mostar index :math:`\\sum_i |W_{(i,1)}| (|W_{(i,0)}| - |W_{(i,1)}|)` of a
    properly embedded daisy cube.

    Raises
    ------
    NotADaisyEmbeddingError
        If some direction has :math:`|W_{(i,0)}| < |W_{(i,1)}|`; the formula
        is not extended to such profiles.
    """
    check_semicube_balance(p)
    return sum(b * (a - b) for a, b in zip(p.w0, p.w1))


def indices_from_profile(p, vertex_count=None):
    """
    Wiener and Mostar indices of a daisy cube from :math:`|V|` and the edge
    counts :math:`|E_i|` alone:

    .. math::

        W = |V||E| - \\sum_i |E_i|^2, \\qquad
        Mo = |V||E| - 2 \\sum_i |E_i|^2

    Parameters
    ----------
    p : `DirectionProfile`
    vertex_count : int (optional)
        Defaults to ``p.vertex_count``; if given it must match.

    Returns
    -------
    report : `IndexReport`
        With ``method='corollary'``.

    Raises
    ------
    NotADaisyEmbeddingError
        If :math:`|E_i| \\neq |W_{(i,1)}|` in some direction.
    """
    if vertex_count is None:
        vertex_count = p.vertex_count
    elif int(vertex_count) != p.vertex_count:
        raise ValueError(f"vertex_count={vertex_count} does not match the "
                         f"profile (|V|={p.vertex_count})")

    check_edge_semicube_count(p)

    edge_count = p.edge_count
    squares = sum(e * e for e in p.e)
    ve = vertex_count * edge_count
    return IndexReport(vertex_count, edge_count, ve - squares,
                       ve - 2 * squares, method='corollary')


def companion_identity(r, p):
    """
    Both sides of :math:`W - Mo = \\sum_i |W_{(i,1)}|^2`.

    Returns
    -------
    lhs : int
        ``r.wiener - r.mostar``.
    rhs : int
        :math:`\\sum_i |W_{(i,1)}|^2` from ``p``.
    """
    return r.wiener - r.mostar, sum(b * b for b in p.w1)


def verify_relation(r, profile=None):
    """
    Check :math:`2W(G) - Mo(G) = |V(G)||E(G)|` on a report.

    Parameters
    ----------
    r : `IndexReport`
    profile : `DirectionProfile` (optional)
        If given, :math:`W - Mo = \\sum_i |W_{(i,1)}|^2` must hold as well.

    Returns
    -------
    holds : bool
    """
    holds = r.residual == 0
    if profile is not None:
        lhs, rhs = companion_identity(r, profile)
        if lhs != rhs:
            logger.debug(f"W - Mo = {lhs} but sum |W_(i,1)|^2 = {rhs}")
            holds = False
    return holds


def semicube_report(g, profile=None):
    """
    `IndexReport` from `wiener_semicube` and `mostar_semicube`.
    """
    if profile is None:
        profile = direction_profile(g)
    return IndexReport(g.vertex_count, profile.edge_count,
                       wiener_semicube(profile), mostar_semicube(profile),
                       method='semicube')


def corollary_report(g, profile=None):
    """
    `IndexReport` from `indices_from_profile`.
    """
    if profile is None:
        profile = direction_profile(g)
    return indices_from_profile(profile, g.vertex_count)
