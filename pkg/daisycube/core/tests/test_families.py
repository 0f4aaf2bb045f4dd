# Third-party
import pytest

# Project
from ..families import (hypercube, fibonacci_cube, lucas_cube,
                        generalized_fibonacci_cube, generalized_lucas_cube,
                        vertex_deleted_cube, fibonacci_number)
from ..daisy import is_downward_closed
from ...config import conf
from ...errors import LabelError, SizeLimitError


def test_hypercube():
    assert hypercube(0).to_strings() == ['']
    assert hypercube(2).to_strings() == ['00', '10', '01', '11']
    assert len(hypercube(10)) == 1024
    assert hypercube(4).edge_count == 4 * 2**3


def test_hypercube_cap():
    with pytest.raises(SizeLimitError):
        hypercube(21)

    with conf.set_temp('max_vertices', 64):
        assert len(hypercube(6)) == 64
        with pytest.raises(SizeLimitError):
            hypercube(7)


def test_fibonacci_cube():
    assert sorted(fibonacci_cube(3).to_strings()) == \
        ['000', '001', '010', '100', '101']
    assert fibonacci_cube(0).to_strings() == ['']
    assert len(fibonacci_cube(10)) == 144


@pytest.mark.parametrize('n', range(0, 21))
def test_fibonacci_cube_order(n):
    assert len(fibonacci_cube(n)) == fibonacci_number(n + 2)


def test_lucas_cube():
    assert sorted(lucas_cube(3).to_strings()) == ['000', '001', '010', '100']
    assert lucas_cube(0).to_strings() == ['']
    assert lucas_cube(1).to_strings() == ['0']
    assert sorted(lucas_cube(2).to_strings()) == ['00', '01', '10']
    assert [len(lucas_cube(n)) for n in range(2, 8)] == [3, 4, 7, 11, 18, 29]


def test_generalized_fibonacci_cube():
    assert generalized_fibonacci_cube(3, '11') == fibonacci_cube(3)
    g = generalized_fibonacci_cube(3, '111')
    assert len(g) == 7
    assert '111' not in g
    assert generalized_fibonacci_cube(2, '111') == hypercube(2)

    # 0^n is the only string avoiding '1'
    assert generalized_fibonacci_cube(4, '1').to_strings() == ['0000']

    g = generalized_fibonacci_cube(4, '10')
    assert sorted(g.to_strings()) == ['0000', '0001', '0011', '0111', '1111']


def test_generalized_fibonacci_cube_bad_pattern():
    with pytest.raises(LabelError):
        generalized_fibonacci_cube(3, '')
    with pytest.raises(LabelError):
        generalized_fibonacci_cube(3, '12')
    with pytest.raises(LabelError):
        generalized_fibonacci_cube(3, 3)


@pytest.mark.parametrize('n', range(0, 9))
def test_generalized_lucas_cube_matches_lucas(n):
    assert generalized_lucas_cube(n, '11') == lucas_cube(n)


def test_generalized_lucas_cube():
    g = generalized_lucas_cube(4, '111')
    assert len(g) == 11
    for s in ('1110', '0111', '1011', '1101', '1111'):
        assert s not in g
    assert sorted(generalized_lucas_cube(2, '111').to_strings()) == \
        ['00', '01', '10']
    assert generalized_lucas_cube(0, '11').to_strings() == ['']


def test_vertex_deleted_cube():
    assert len(vertex_deleted_cube(3)) == 7
    assert vertex_deleted_cube(1).to_strings() == ['0']
    assert sorted(vertex_deleted_cube(2).to_strings()) == ['00', '01', '10']
    assert vertex_deleted_cube(5) == generalized_fibonacci_cube(5, '11111')
    with pytest.raises(LabelError):
        vertex_deleted_cube(0)


@pytest.mark.parametrize('family', [
    hypercube, fibonacci_cube, lucas_cube, vertex_deleted_cube,
    lambda n: generalized_fibonacci_cube(n, '11'),
    lambda n: generalized_fibonacci_cube(n, '111'),
    lambda n: generalized_fibonacci_cube(n, '1111'),
    lambda n: generalized_lucas_cube(n, '111'),
])
def test_families_are_downward_closed(family):
    for n in range(1, 10):
        assert is_downward_closed(family(n))


def test_non_daisy_pattern_is_not_downward_closed():
    assert not is_downward_closed(generalized_fibonacci_cube(3, '101'))


def test_fibonacci_number():
    assert fibonacci_number(0) == 0
    assert fibonacci_number(1) == 1
    assert fibonacci_number(12) == 144
    assert fibonacci_number(93) == 12200160415121876738
    with pytest.raises(OverflowError):
        fibonacci_number(94)
    with pytest.raises(ValueError):
        fibonacci_number(-1)
