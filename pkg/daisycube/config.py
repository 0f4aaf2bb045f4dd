"""
Run-time configuration for `daisycube`.

The values can be changed for a whole session through the astropy
configuration file (``~/.astropy/config/daisycube.cfg``) or temporarily::

    >>> from daisycube import conf
    >>> with conf.set_temp('max_vertices', 1024):
    ...     pass

"""

from astropy import config as _config

__all__ = ['Conf', 'conf']


class Conf(_config.ConfigNamespace):
    """
    Configuration parameters for `daisycube`.
    """

    max_vertices = _config.ConfigItem(
        2**20,
        'Largest number of vertices that any construction (hypercube, '
        'string families, daisy closure) is allowed to enumerate.')

    max_dimension = _config.ConfigItem(
        20,
        'Largest dimension n for constructions that scan all of B^n.')

    dense_distance_limit = _config.ConfigItem(
        4096,
        'Largest vertex count for which the brute-force oracle keeps the '
        'full all-pairs distance matrix in memory.')

    bfs_chunk_size = _config.ConfigItem(
        512,
        'Number of breadth-first search sources expanded together, and '
        'per block when the oracle streams distances instead of storing '
        'the full matrix.')


conf = Conf()
