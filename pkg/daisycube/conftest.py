import os

import pytest
from hypothesis import settings

try:
    from pytest_astropy_header.display import (PYTEST_HEADER_MODULES,
                                               TESTED_VERSIONS)
    ASTROPY_HEADER = True
except ImportError:
    ASTROPY_HEADER = False

# BFS over a few thousand vertices can exceed hypothesis' default deadline
settings.register_profile('default', deadline=None, max_examples=50)
settings.register_profile('thorough', deadline=None, max_examples=500)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'default'))


def pytest_configure(config):
    if ASTROPY_HEADER:
        config.option.astropy_header = True

        PYTEST_HEADER_MODULES.pop('Pandas', None)
        PYTEST_HEADER_MODULES.pop('h5py', None)
        PYTEST_HEADER_MODULES.pop('Matplotlib', None)
        PYTEST_HEADER_MODULES['Scipy'] = 'scipy'
        PYTEST_HEADER_MODULES['hypothesis'] = 'hypothesis'

        from . import __version__
        packagename = os.path.basename(os.path.dirname(__file__))
        TESTED_VERSIONS[packagename] = __version__


C6_STRINGS = ['000', '001', '011', '111', '110', '100']


@pytest.fixture
def c6():
    """The 6-cycle isometrically labelled in Q_3; not downward-closed."""
    from daisycube.core import CubeSubgraph
    return CubeSubgraph(3, C6_STRINGS)
