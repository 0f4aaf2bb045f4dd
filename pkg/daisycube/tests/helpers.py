# Third-party
import numpy as np

# Project
from ..core import is_downward_closed
from ..invariants import (direction_profile, wiener_semicube,
                          mostar_semicube, indices_from_profile,
                          verify_relation)
from ..oracle import build_adjacency, all_pairs_summary, oracle_report


def assert_daisy_identities(g):
    """
    Assert every identity that holds on a properly embedded daisy cube,
    checking each closed form against the BFS oracle.

    Returns the oracle `~daisycube.invariants.IndexReport`.
    """
    a = build_adjacency(g)
    p = direction_profile(g)
    summary = all_pairs_summary(a)
    V, E = g.vertex_count, g.edge_count

    assert is_downward_closed(g)
    assert summary.isometric

    # semicube sizes
    for x0, x1, e in zip(p.w0, p.w1, p.e):
        assert x0 + x1 == V
        assert x0 >= x1
        assert e == x1
    assert p.edge_count == E

    # edge sides are exactly the semicubes of the edge direction
    _, _, direction = g.edges()
    w0 = np.array(p.w0, dtype=np.int64)
    w1 = np.array(p.w1, dtype=np.int64)
    assert np.array_equal(summary.n_lower, w0[direction])
    assert np.array_equal(summary.n_upper, w1[direction])
    assert np.all(summary.ties == 0)

    W = wiener_semicube(p)
    Mo = mostar_semicube(p)
    assert W == summary.wiener
    assert Mo == summary.mostar

    corollary = indices_from_profile(p)
    assert (corollary.wiener, corollary.mostar) == (W, Mo)

    assert 2 * W - Mo == V * E
    assert W - Mo == sum(x * x for x in p.w1)

    report = oracle_report(g, a)
    assert report.residual == 0
    assert verify_relation(report, p)
    return report
