# Third-party
from hypothesis import given
import numpy as np
import pytest

# Project
from ..daisy import (GeneratorSet, maximal_antichain, submasks, daisy_closure,
                     is_downward_closed)
from ..families import hypercube, fibonacci_cube
from ..labels import CubeSubgraph, VertexLabel
from ...config import conf
from ...errors import LabelError, SizeLimitError
from ...tests.strategies import generator_sets


def _bits(*strings):
    return [VertexLabel.from_string(s).bits for s in strings]


def _strings(arr, n):
    return sorted(str(VertexLabel(int(x), n)) for x in arr)


def test_maximal_antichain():
    assert _strings(maximal_antichain(_bits('110', '100', '011')), 3) == \
        ['011', '110']
    assert _strings(maximal_antichain(_bits('101')), 3) == ['101']
    assert _strings(maximal_antichain(_bits('001', '010', '100')), 3) == \
        ['001', '010', '100']
    assert _strings(maximal_antichain(_bits('110', '110', '000')), 3) == \
        ['110']
    assert maximal_antichain([]).size == 0


def test_submasks():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert list(submasks(0)) == [0]
    assert len(list(submasks(2**12 - 1))) == 2**12


def test_daisy_closure():
    g = daisy_closure(GeneratorSet(3, ['110', '011']))
    assert sorted(g.to_strings()) == \
        sorted(['000', '100', '010', '110', '001', '011'])

    assert daisy_closure(GeneratorSet(4, ['0000'])).to_strings() == ['0000']
    assert daisy_closure(GeneratorSet(3, ['111'])) == hypercube(3)


def test_fibonacci_cube_is_a_daisy_closure():
    # maximal Fibonacci strings of length 4
    gen = GeneratorSet(4, ['1010', '0101', '1001'])
    assert daisy_closure(gen) == fibonacci_cube(4)


def test_generator_set():
    gen = GeneratorSet(3, ['110', '100', '011', '110'])
    assert len(gen) == 3
    assert _strings(gen.maximal, 3) == ['011', '110']
    assert gen.closure_size_bound == 8

    with pytest.raises(LabelError):
        GeneratorSet(3, [])
    with pytest.raises(LabelError):
        GeneratorSet(2, ['111'])


def test_daisy_closure_cap():
    gen = GeneratorSet(12, [2**12 - 1])
    with conf.set_temp('max_vertices', 1000):
        with pytest.raises(SizeLimitError):
            daisy_closure(gen)


def test_is_downward_closed(c6):
    assert is_downward_closed(fibonacci_cube(4))
    assert is_downward_closed(hypercube(3))
    assert not is_downward_closed(c6)
    assert is_downward_closed(CubeSubgraph(0, ['']))
    assert not is_downward_closed(CubeSubgraph(2, ['11']))


@given(generator_sets())
def test_closure_matches_brute_force_order_filter(gen):
    g = daisy_closure(gen)

    everything = np.arange(2**gen.n, dtype=np.uint64)
    below = np.zeros(everything.size, dtype=bool)
    for x in gen.generators:
        below |= (everything & x) == everything
    assert np.array_equal(g.vertices, everything[below])


@given(generator_sets())
def test_closure_of_antichain_is_closure(gen):
    g = daisy_closure(gen)
    assert g == daisy_closure(GeneratorSet(gen.n, gen.maximal))
    assert is_downward_closed(g)


@given(generator_sets())
def test_maximal_is_antichain(gen):
    m = gen.maximal
    for i, x in enumerate(m):
        for j, y in enumerate(m):
            if i != j:
                assert (x & y) != x
    # every generator lies below some maximal element
    for x in gen.generators:
        assert any((x & y) == x for y in m)
