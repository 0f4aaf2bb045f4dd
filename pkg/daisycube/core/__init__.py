from .labels import *  # noqa
from .families import *  # noqa
from .daisy import *  # noqa
