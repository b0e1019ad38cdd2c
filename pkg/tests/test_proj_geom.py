# coding=utf-8
"""Tests for :mod:`holocodes.proj_geom`."""
import itertools

import pytest

from holocodes import proj_geom
from holocodes.errors import MalformedInput, SameLine
from holocodes.finite_field import field_create


def test_p1_points_order():
    """Check if infinity comes first, then the affine points."""
    points = proj_geom.p1_points(field_create(3))
    assert [point.to_list() for point in points] == [
        [1, 0], [0, 1], [1, 1], [1, 2]]
    assert points[0].is_infinity
    assert not any(point.is_infinity for point in points[1:])


def test_p1_chart():
    """Check if chart representatives recover the affine coordinate."""
    field = field_create(5)
    charts = [point.chart() for point in proj_geom.p1_points(field)]
    assert [[int(c) for c in chart] for chart in charts] == [
        [1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [4, 1]]


def test_canonical_representative():
    """Check if scalar multiples give the same point."""
    field = field_create(5)
    assert proj_geom.ProjPoint(field, (2, 4, 0)) == proj_geom.ProjPoint(
        field, (1, 2, 0))
    assert proj_geom.ProjPoint(field, (0, 3, 1)).to_list() == [0, 1, 2]
    with pytest.raises(MalformedInput):
        proj_geom.ProjPoint(field, (0, 0, 0))


def test_points_and_lines_are_different():
    """Check if a point never equals the line with the same coordinates."""
    field = field_create(2)
    point = proj_geom.ProjPoint(field, (1, 0, 0))
    line = proj_geom.ProjLine(field, (1, 0, 0))
    assert point != line
    assert len({point, line}) == 2


@pytest.mark.parametrize('q', (2, 3, 4, 5))
def test_p2_counts(q):
    """Check if P^2 has q^2+q+1 points and lines with q+1 incidences each.
    """
    field = field_create(2, 2) if q == 4 else field_create(q)
    points = proj_geom.p2_points(field)
    lines = proj_geom.p2_lines(field)
    assert len(points) == len(lines) == q * q + q + 1
    assert len(set(points)) == len(points)
    for line in lines:
        assert len(proj_geom.line_points(line)) == q + 1
    for point in points:
        assert len(proj_geom.lines_through(point)) == q + 1


def test_p2_order():
    """Check if P^2 points are sorted by the base q value of their digits."""
    points = proj_geom.p2_points(field_create(2))
    assert [point.to_list() for point in points] == [
        [1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1],
        [1, 0, 1], [0, 1, 1], [1, 1, 1],
    ]


def test_line_intersection():
    """Check if two distinct lines meet in exactly one point."""
    field = field_create(3)
    for first, second in itertools.combinations(proj_geom.p2_lines(field), 2):
        point = proj_geom.line_intersection(first, second)
        assert first.contains(point) and second.contains(point)
        shared = set(proj_geom.line_points(first)) & set(
            proj_geom.line_points(second))
        assert shared == {point}


def test_line_intersection_same_line():
    """Check if a line can't be intersected with itself."""
    line = proj_geom.p2_lines(field_create(2))[0]
    with pytest.raises(SameLine):
        proj_geom.line_intersection(line, line)


@pytest.mark.parametrize('q,vertices,edges', ((2, 14, 21), (3, 26, 52)))
def test_link_graph(q, vertices, edges):
    """Check if the building link is the bipartite incidence graph of P^2."""
    link = proj_geom.link_graph(field_create(q))
    assert link.graph.number_of_nodes() == vertices
    assert link.graph.number_of_edges() == edges
    assert len(link.edges) == edges
    assert all(degree == q + 1 for _, degree in link.graph.degree())
    data = link.to_dict()
    assert len(data['points']) == len(data['lines']) == vertices // 2


def test_blowup_lines_intersect():
    """Check if the blow-up rule is point/line incidence."""
    link = proj_geom.link_graph(field_create(2))
    for u, w in itertools.combinations(link.vertices(), 2):
        assert proj_geom.blowup_lines_intersect(u, w) == \
            link.graph.has_edge(u, w)
