__all__ = ['DaisyCubeError', 'LabelError', 'SizeLimitError',
           'NotADaisyEmbeddingError', 'NotIsometricError',
           'DisconnectedGraphError', 'MethodDisagreementError']


class DaisyCubeError(ValueError):
    """Base class for every error raised by `daisycube`."""


class LabelError(DaisyCubeError):
    """
    A vertex label, pattern, or vertex set is malformed: wrong dimension,
    characters other than ``0``/``1``, duplicates, or an empty set.
    """


class SizeLimitError(DaisyCubeError):
    """
    A construction would enumerate more vertices (or a larger dimension)
    than allowed by `daisycube.conf`.
    """


class NotADaisyEmbeddingError(DaisyCubeError):
    """
    A direction profile violates one of the inequalities or equalities that
    hold for every properly embedded daisy cube.

    Parameters
    ----------
    proposition : str
        Short name of the violated property, e.g. ``'Proposition 3'``.
    direction : int or None
        The offending direction, 1-based as in ``u_1 ... u_n``, or None when
        the violation is not tied to one direction.
    detail : str
        Human readable description of the violation.
    """

    def __init__(self, proposition, direction, detail):
        self.proposition = proposition
        self.direction = direction
        where = "" if direction is None else f" in direction {direction}"
        super().__init__(f"{proposition} violated{where}: {detail}")


class DisconnectedGraphError(DaisyCubeError):
    """Distances (and hence W and Mo) are undefined on a disconnected graph."""


class MethodDisagreementError(DaisyCubeError):
    """Two independent index computations returned different values."""


class NotIsometricError(DaisyCubeError):
    """
    The labelling is not an isometric embedding into the hypercube, so the
    semicube formulas do not apply.
    """
