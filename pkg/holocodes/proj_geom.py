# coding=utf-8
"""Projective lines and planes over finite fields.

P^1 ordering: position 0 holds the point at infinity ``(1:0)``, positions
``1..q`` hold the affine points ``(x:1)`` by canonical order of ``x``.

P^2 ordering: canonical coordinate triples sorted by ``sum(c_i * q**i)``
where ``c_i`` is the integer representation of coordinate ``i``.  Lines use
the same ordering on their dual coordinates.
"""
import functools
from collections import namedtuple

import networkx as nx
import numpy as np

from holocodes.errors import MalformedInput, SameLine
from holocodes.finite_field import as_ints


class ProjPoint(object):
    """A point of P^1 or P^2 stored by its canonical coordinates.

    The canonical representative is the multiple whose first nonzero
    coordinate is one.
    """

    kind = 'point'

    def __init__(self, field, coords):
        self.field = field
        vector = field.gf([int(c) for c in coords])
        nonzero = np.flatnonzero(as_ints(vector))
        if nonzero.size == 0:
            raise MalformedInput('the zero vector is not a projective point')
        vector = vector / vector[int(nonzero[0])]
        self.coords = tuple(int(c) for c in as_ints(vector))

    def __repr__(self):
        return '{}({})'.format(type(self).__name__,
                               ':'.join(str(c) for c in self.coords))

    def __eq__(self, other):
        return (
            type(self) is type(other) and
            self.field == other.field and
            self.coords == other.coords
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, self.field, self.coords))

    @property
    def vector(self):
        """Return the canonical representative as a galois vector."""
        return self.field.gf(list(self.coords))

    @property
    def order_key(self):
        return sum(c * self.field.q ** i for i, c in enumerate(self.coords))

    @property
    def is_infinity(self):
        """Tell whether this P^1 point is ``(1:0)``."""
        return len(self.coords) == 2 and self.coords[1] == 0

    def chart(self):
        """Return the P^1 chart representative ``(x, 1)`` or ``(1, 0)``."""
        if self.is_infinity:
            return self.field.gf([1, 0])
        u, v = self.vector
        return self.field.gf([int(u / v), 1])

    def to_list(self):
        return list(self.coords)


class ProjLine(ProjPoint):
    """A line of P^2 given by dual coordinates ``(l0:l1:l2)``."""

    kind = 'line'

    def contains(self, point):
        """Tell whether ``point`` lies on this line."""
        return bool(np.dot(self.vector, point.vector) == 0)

    def points(self):
        """Return the q+1 points of the line in P^2 order."""
        return line_points(self)


LinkVertex = namedtuple('LinkVertex', 'kind item')
LinkVertex.__doc__ = 'A vertex of the building link: a point or a line.'


def p1_points(field):
    """Return the q+1 points of P^1, infinity first."""
    return [ProjPoint(field, (1, 0))] + [
        ProjPoint(field, (x, 1)) for x in range(field.q)]


@functools.lru_cache(maxsize=None)
def _p2_triples(field):
    q = field.q
    triples = [(0, 0, 1)]
    triples.extend((0, 1, b) for b in range(q))
    triples.extend((1, a, b) for a in range(q) for b in range(q))
    return sorted(triples, key=lambda c: c[0] + c[1] * q + c[2] * q * q)


@functools.lru_cache(maxsize=None)
def _p2_objects(field, cls):
    return tuple(cls(field, triple) for triple in _p2_triples(field))


def p2_points(field):
    """Return the q^2+q+1 points of P^2 in canonical order."""
    return list(_p2_objects(field, ProjPoint))


def p2_lines(field):
    """Return the q^2+q+1 lines of P^2 in canonical order."""
    return list(_p2_objects(field, ProjLine))


def line_points(line):
    """Return the points of ``line`` in P^2 order."""
    return [point for point in p2_points(line.field) if line.contains(point)]


def lines_through(point):
    """Return the lines through ``point`` in P^2 order."""
    return [line for line in p2_lines(point.field) if line.contains(point)]


def _cross(x, y):
    return type(x)([
        int(x[1] * y[2] - x[2] * y[1]),
        int(x[2] * y[0] - x[0] * y[2]),
        int(x[0] * y[1] - x[1] * y[0]),
    ])


def line_intersection(first, second):
    """Return the unique common point of two distinct lines."""
    if first == second:
        raise SameLine('{!r} meets itself everywhere'.format(first))
    return ProjPoint(first.field, _cross(first.vector, second.vector))


class BuildingLink(object):
    """The point/line incidence graph of P^2(F_q).

    It is the link of a vertex in the Bruhat-Tits building of PGL_3: link
    edges are the 2-simplices through the base vertex.
    """

    def __init__(self, field):
        self.field = field
        self.points = p2_points(field)
        self.lines = p2_lines(field)
        self.edges = [
            (i, j)
            for i, point in enumerate(self.points)
            for j, line in enumerate(self.lines)
            if line.contains(point)
        ]
        self.graph = nx.Graph()
        self.graph.add_nodes_from(
            (LinkVertex('point', point) for point in self.points), bipartite=0)
        self.graph.add_nodes_from(
            (LinkVertex('line', line) for line in self.lines), bipartite=1)
        self.graph.add_edges_from(
            (LinkVertex('point', self.points[i]),
             LinkVertex('line', self.lines[j]))
            for i, j in self.edges
        )

    def vertices(self):
        """Return point vertices followed by line vertices."""
        return (
            [LinkVertex('point', point) for point in self.points] +
            [LinkVertex('line', line) for line in self.lines]
        )

    def to_dict(self):
        return {
            'field': self.field.to_dict(),
            'points': [point.to_list() for point in self.points],
            'lines': [line.to_list() for line in self.lines],
            'edges': [list(edge) for edge in self.edges],
        }


def link_graph(field):
    """Return the building link of P^2 over ``field``."""
    return BuildingLink(field)


def blowup_lines_intersect(u, w):
    """Tell whether two link vertices span a 2-simplex with the base vertex.

    Each vertex stands for a line of the blow-up of P^2 at its rational
    points: the exceptional divisor E_P of a point or the proper transform of
    a line.  E_P meets the transform of L iff P lies on L.  Distinct
    exceptional divisors are disjoint and so are distinct proper transforms,
    since their common point has been blown up.
    """
    if u.kind == w.kind:
        return False
    point, line = (u.item, w.item) if u.kind == 'point' else (w.item, u.item)
    return line.contains(point)
