# Standard library
import json

# Third-party
import pytest

# Project
from ..core import fibonacci_cube, CubeSubgraph, GeneratorSet
from ..errors import LabelError
from ..io import (graph_to_dict, graph_from_dict, read_graph, write_graph,
                  generators_to_dict, generators_from_dict, read_generators,
                  dumps)


def test_graph_dict():
    g = fibonacci_cube(3)
    doc = graph_to_dict(g)
    assert doc == {'n': 3,
                   'vertices': ['000', '100', '010', '001', '101']}
    assert graph_from_dict(doc) == g

    shuffled = {'n': 3, 'vertices': ['101', '000', '001', '010', '100']}
    assert graph_from_dict(shuffled) == g


def test_graph_file(tmp_path):
    g = fibonacci_cube(5)
    path = tmp_path / 'gamma5.json'
    write_graph(g, path)
    assert read_graph(path) == g
    assert path.read_text().endswith("\n")


def test_generators(tmp_path):
    gen = GeneratorSet(3, ['110', '011'])
    doc = generators_to_dict(gen)
    assert doc['n'] == 3
    assert sorted(doc['generators']) == ['011', '110']
    assert generators_from_dict(doc).n == 3

    path = tmp_path / 'gens.json'
    path.write_text(dumps(doc))
    assert len(read_generators(path).generators) == 2


@pytest.mark.parametrize('doc', [
    {'n': 2, 'vertices': ['00', '00']},
    {'n': 2, 'vertices': ['00', '012']},
    {'n': 2, 'vertices': ['00', '1']},
    {'n': 2, 'vertices': []},
    {'n': '2', 'vertices': ['00']},
    {'n': True, 'vertices': ['0']},
    {'vertices': ['00']},
    {'n': 2},
    {'n': 2, 'vertices': '00'},
    ['00', '01'],
])
def test_malformed_graph(doc):
    with pytest.raises(LabelError):
        graph_from_dict(doc)


def test_malformed_generators():
    with pytest.raises(LabelError):
        generators_from_dict({'n': 3, 'generators': []})
    with pytest.raises(LabelError):
        generators_from_dict({'n': 3})


def test_bad_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"n": 3, "vertices": [')
    with pytest.raises(LabelError):
        read_graph(path)


def test_dumps_is_json():
    g = CubeSubgraph(0, [''])
    assert json.loads(dumps(graph_to_dict(g))) == {'n': 0, 'vertices': ['']}
