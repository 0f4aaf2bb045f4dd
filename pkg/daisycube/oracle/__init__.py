from .adjacency import *  # noqa
from .bruteforce import *  # noqa
