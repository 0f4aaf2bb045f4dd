# Third-party
from hypothesis import given
import pytest

# Project
from ..profile import DirectionProfile, direction_profile
from ...core import (hypercube, fibonacci_cube, lucas_cube, daisy_closure,
                     CubeSubgraph)
from ...tests.strategies import generator_sets, cube_subgraphs


def test_fibonacci_cube_profile():
    p = direction_profile(fibonacci_cube(3))
    assert p.w1 == (2, 1, 2)
    assert p.w0 == (3, 4, 3)
    assert p.e == (2, 1, 2)
    assert p.vertex_count == 5
    assert p.edge_count == 5
    assert p.to_dict() == {'n': 3, 'e': [2, 1, 2], 'w0': [3, 4, 3],
                           'w1': [2, 1, 2]}


def test_hypercube_profile():
    p = direction_profile(hypercube(3))
    assert p.w0 == p.w1 == (4, 4, 4)
    assert p.e == (4, 4, 4)


def test_lucas_cube_profile():
    p = direction_profile(lucas_cube(3))
    assert p.w1 == (1, 1, 1)
    assert p.w0 == (3, 3, 3)
    assert p.e == (1, 1, 1)


def test_k1_profile():
    p = direction_profile(CubeSubgraph(0, ['']))
    assert p.n == 0
    assert p.edge_count == 0


def test_edges_are_counted_not_assumed(c6):
    p = direction_profile(c6)
    assert p.w1 == (3, 3, 3)
    assert p.e == (2, 2, 2)


def test_profile_rejects_non_complementary():
    with pytest.raises(ValueError):
        DirectionProfile(5, [1], [3], [1])
    with pytest.raises(ValueError):
        DirectionProfile(5, [1, 2], [3], [2])


@given(cube_subgraphs())
def test_complementarity_and_edge_sum(g):
    p = direction_profile(g)
    assert all(a + b == g.vertex_count for a, b in zip(p.w0, p.w1))
    assert sum(p.e) == g.edge_count


@given(generator_sets())
def test_daisy_profile_propositions(gen):
    p = direction_profile(daisy_closure(gen))
    for a, b, e in zip(p.w0, p.w1, p.e):
        assert a >= b
        assert e == b
