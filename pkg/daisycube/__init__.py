# Licensed under an MIT license - see LICENSE
"""
Daisy cubes and related partial cubes as sets of bit-labelled hypercube
vertices, with their Wiener and Mostar indices computed from semicube
counts and checked against a brute-force breadth-first oracle.
"""

from ._astropy_init import *   # noqa

from .config import conf  # noqa
from .errors import *  # noqa
from .core import *  # noqa
from .invariants import *  # noqa
from .oracle import *  # noqa
