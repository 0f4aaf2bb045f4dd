""" Reading and writing graph and generator-set JSON documents. """

# Standard library
import json

# Project
from .core import CubeSubgraph, GeneratorSet
from .errors import LabelError

__all__ = ['graph_to_dict', 'graph_from_dict', 'read_graph', 'write_graph',
           'generators_to_dict', 'generators_from_dict', 'read_generators',
           'dumps']


def _require(doc, key, kind):
    if not isinstance(doc, dict):
        raise LabelError(f"Expected a JSON object, got {type(doc).__name__}")
    if key not in doc:
        raise LabelError(f"Missing key '{key}' in {kind} document")
    return doc[key]


def _dimension(doc, kind):
    n = _require(doc, 'n', kind)
    if isinstance(n, bool) or not isinstance(n, int):
        raise LabelError(f"'n' must be an integer in {kind} document, got "
                         f"{n!r}")
    return n


def _strings(doc, key, kind):
    values = _require(doc, key, kind)
    if not isinstance(values, list) or not all(isinstance(s, str)
                                               for s in values):
        raise LabelError(f"'{key}' must be a list of bitstrings in {kind} "
                         "document")
    return values


def graph_to_dict(g):
    """
    Represent a graph as ``{"n": ..., "vertices": [...]}`` with the vertices
    as left-to-right bitstrings sorted by integer value.

    Parameters
    ----------
    g : `~daisycube.core.CubeSubgraph`

    Returns
    -------
    doc : dict
    """
    return {'n': g.n, 'vertices': g.to_strings()}


def graph_from_dict(doc):
    """
    Inverse of `graph_to_dict`. Vertex order in the document is not
    significant, but duplicates are rejected.

    Raises
    ------
    LabelError
        If the document is malformed.
    """
    n = _dimension(doc, 'graph')
    return CubeSubgraph(n, _strings(doc, 'vertices', 'graph'))


def generators_to_dict(gen):
    """
    Represent a generator set as ``{"n": ..., "generators": [...]}``.
    """
    strings = CubeSubgraph(gen.n, gen.generators).to_strings()
    return {'n': gen.n, 'generators': strings}


def generators_from_dict(doc):
    """
    Inverse of `generators_to_dict`.
    """
    n = _dimension(doc, 'generator')
    return GeneratorSet(n, _strings(doc, 'generators', 'generator'))


def dumps(doc):
    """Serialize a document the way every writer in this package does."""
    return json.dumps(doc, indent=2) + "\n"


def _load(path):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise LabelError(f"{path} is not valid JSON: {e}") from e


def read_graph(path):
    """
    Read a `~daisycube.core.CubeSubgraph` from a JSON file.
    """
    return graph_from_dict(_load(path))


def write_graph(g, path):
    """
    Write a `~daisycube.core.CubeSubgraph` to a JSON file.
    """
    with open(path, 'w') as f:
        f.write(dumps(graph_to_dict(g)))


def read_generators(path):
    """
    Read a `~daisycube.core.GeneratorSet` from a JSON file.
    """
    return generators_from_dict(_load(path))
