"""Shared fixtures: hand-built diagrams with desk-checked expectations."""
from __future__ import annotations

import pytest

from sfh.diagram import (ALPHA, BD, BETA, CROSSING, MARKER, Diagram, Edge,
                         Region, Vertex)


def make_grid2() -> Diagram:
    """2x2 grid on a twice-punctured torus.

    Two generators (1,4) and (2,3); the two interior squares are rectangles
    connecting them with all four crossings as corners, so the differential
    is 2 = 0 mod 2 and both generators survive.  Periodic lattice is spanned
    by the difference of the interior squares.
    """
    vertices = [Vertex(1, CROSSING), Vertex(2, CROSSING),
                Vertex(3, CROSSING), Vertex(4, CROSSING),
                Vertex(5, MARKER), Vertex(6, MARKER)]
    edges = [
        Edge(1, ALPHA, 1, 1, 2), Edge(2, ALPHA, 1, 2, 1),
        Edge(3, ALPHA, 2, 3, 4), Edge(4, ALPHA, 2, 4, 3),
        Edge(5, BETA, 1, 1, 3), Edge(6, BETA, 1, 3, 1),
        Edge(7, BETA, 2, 2, 4), Edge(8, BETA, 2, 4, 2),
        Edge(9, BD, 1, 5, 5), Edge(10, BD, 2, 6, 6),
    ]
    regions = [
        Region(1, 0, ((1, 7, -3, -5),)),
        Region(2, 0, ((4, 6, -2, -8),)),
        Region(3, 0, ((2, 5, -4, -7), (9,))),
        Region(4, 0, ((3, 8, -1, -6), (10,))),
    ]
    d = Diagram(vertices, edges, regions, name="grid2")
    d.validate()
    return d


def make_s1s2_two_punctures() -> Diagram:
    """The double-bigon torus diagram with a second puncture in the big
    region, so product-arc cuts have two boundary circles to work with."""
    vertices = [Vertex(1, CROSSING), Vertex(2, CROSSING),
                Vertex(3, MARKER), Vertex(4, MARKER)]
    edges = [
        Edge(1, ALPHA, 1, 2, 1), Edge(2, ALPHA, 1, 1, 2),
        Edge(3, BETA, 1, 2, 1), Edge(4, BETA, 1, 1, 2),
        Edge(5, BD, 1, 3, 3), Edge(6, BD, 2, 4, 4),
    ]
    regions = [
        Region(1, 0, ((1, -3),)),
        Region(2, 0, ((4, -2),)),
        Region(3, 0, ((3, 2), (-1, -4), (5,), (6,))),
    ]
    d = Diagram(vertices, edges, regions, name="s1s2-2p")
    d.validate()
    return d


@pytest.fixture
def grid2() -> Diagram:
    return make_grid2()


@pytest.fixture
def s1s2_two_punctures() -> Diagram:
    return make_s1s2_two_punctures()
