from .profile import *  # noqa
from .indices import *  # noqa
