# coding=utf-8
"""Pentagon tilings, homological surface codes and vertex polynomial codes.

The {5,4} tiling is grown in rings around a central pentagon.  Every
boundary edge of a ring receives a pentagon of the first kind; every
boundary vertex with a single face inside receives, besides, a pentagon of
the second kind touching the ring only at that vertex.
"""
import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from math import lcm

import networkx as nx
import numpy as np

from holocodes import default_config
from holocodes.crss import crss_self_orthogonal
from holocodes.errors import (
    DepthBoundExceeded,
    MalformedInput,
    NonDivisor,
    NotHyperbolic,
    NotOrthogonal,
)
from holocodes.finite_field import as_ints, field_create
from holocodes.linalg import hstack, min_weight_outside, rank
from holocodes.linear_codes import LinearCode


logger = logging.getLogger(__name__)

#: Vertices of a {5,4} face
PENTAGON = 5

CensusStep = namedtuple(
    'CensusStep',
    'step first_kind second_kind faces new_vertices vertices boundary_edges')
CensusStep.__doc__ = """Counts of one growth step of the pentagon tiling.

``first_kind`` and ``second_kind`` count the tiles added at this step,
``faces`` their sum, ``new_vertices`` the vertices added at the next step
and ``boundary_edges`` the boundary length after this step.
"""

SurfaceCodeReport = namedtuple(
    'SurfaceCodeReport',
    'code n k distance x_distance z_distance vertex_rank face_rank homology')
SurfaceCodeReport.__doc__ = """A surface code with its parameter report.

``homology`` holds ``dim V^perp / V*`` and ``dim V*^perp / V``, which are
both equal to ``k``.
"""

TriangleGroup = namedtuple(
    'TriangleGroup', 'orders ell generators relations euler_sum')


##########
# Census #
##########

def pentagon_census(steps):
    """Return the growth counts of the {5,4} tiling for steps 1 to ``steps``.

    Starting from ``m_1 = n_1 = 5`` the counts follow
    ``m' = 2m + 3n`` and ``n' = m + 2n``.  ``W_N = m_(N+1)`` vertices and
    ``E_N = m_(N+1)`` boundary edges come with step N.
    """
    if steps < 1:
        raise MalformedInput('the census starts at step 1, got {}'.format(
            steps))
    census = []
    first, second = 5, 5
    vertices = PENTAGON
    for step in range(1, steps + 1):
        following = 2 * first + 3 * second
        vertices += following
        census.append(CensusStep(step, first, second, first + second,
                                 following, vertices, following))
        first, second = following, first + 2 * second
    return census


##########
# Complex #
##########

class SurfaceComplex(object):
    """A 2-complex: oriented edges and faces given by signed edge cycles.

    :param vertices: number of vertices.
    :param edges: ``(tail, head)`` pairs.
    :param faces: lists of ``(edge, sign)`` pairs; sign ``1`` traverses the
        edge from tail to head.
    """

    def __init__(self, vertices, edges, faces, field=None):
        self.vertices = int(vertices)
        self.edges = [tuple(edge) for edge in edges]
        self.faces = [[(int(e), int(s)) for e, s in face] for face in faces]
        self.field = field or field_create(default_config.DEFAULT_SURFACE_Q)
        self.step_counts = []
        for tail, head in self.edges:
            if not (0 <= tail < self.vertices and 0 <= head < self.vertices):
                raise MalformedInput('edge ({}, {}) leaves the complex'.format(
                    tail, head))
        for face in self.faces:
            if any(not 0 <= e < len(self.edges) for e, _ in face):
                raise MalformedInput('face {} uses a missing edge'.format(
                    face))

    def __repr__(self):
        return 'SurfaceComplex(V={}, E={}, F={})'.format(
            self.vertices, len(self.edges), len(self.faces))

    def over(self, field):
        """Return the same complex with incidence taken over ``field``."""
        complex_ = SurfaceComplex(self.vertices, self.edges, self.faces,
                                  field)
        complex_.step_counts = list(self.step_counts)
        return complex_

    def edge_faces(self):
        """Return, for every edge, the faces it bounds."""
        owners = [[] for _ in self.edges]
        for index, face in enumerate(self.faces):
            for edge, _ in face:
                owners[edge].append(index)
        return owners

    def boundary_edges(self):
        """Return the edges bounding a single face."""
        return [e for e, owners in enumerate(self.edge_faces())
                if len(owners) == 1]

    def vertex_incidence(self):
        """Return the vertex x edge matrix: +1 at the head, -1 at the tail."""
        matrix = np.zeros((self.vertices, len(self.edges)), dtype=np.int64)
        for e, (tail, head) in enumerate(self.edges):
            matrix[head, e] += 1
            matrix[tail, e] -= 1
        return self.field.gf(matrix % self.field.p)

    def face_incidence(self):
        """Return the face x edge matrix of signed boundaries.

        Dual vertices sitting on boundary edges carry no row.
        """
        matrix = np.zeros((len(self.faces), len(self.edges)), dtype=np.int64)
        for f, face in enumerate(self.faces):
            for e, sign in face:
                matrix[f, e] += sign
        return self.field.gf(matrix % self.field.p)

    def dual_graph(self):
        """Return the dual graph with one extra vertex per boundary edge.

        Every edge of the complex is cut by exactly one dual edge.
        """
        graph = nx.MultiGraph()
        graph.add_nodes_from(('face', f) for f in range(len(self.faces)))
        for e, owners in enumerate(self.edge_faces()):
            ends = [('face', f) for f in owners]
            if len(ends) == 1:
                ends.append(('boundary', e))
                graph.add_node(('boundary', e))
            if len(ends) == 2:
                graph.add_edge(ends[0], ends[1], key=e)
        return graph

    def graph(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertices))
        graph.add_edges_from(
            (tail, head, e) for e, (tail, head) in enumerate(self.edges))
        return graph

    def euler_characteristic(self):
        return self.vertices - len(self.edges) + len(self.faces)

    def to_dict(self):
        dual = self.dual_graph()
        nodes = sorted(dual.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return {
            'vertices': self.vertices,
            'edges': [list(edge) for edge in self.edges],
            'faces': [[[e, s] for e, s in face] for face in self.faces],
            'dual': {
                'vertices': len(nodes),
                'edges': sorted(
                    [index[u], index[w]] for u, w in dual.edges()),
            },
        }


def _orient(edges, cycle):
    """Recover the signs of a face from its edges listed along the cycle."""
    if len(cycle) == 1:
        return [(cycle[0], 1)]
    first, second = edges[cycle[0]], edges[cycle[1]]
    start = first[1] if first[0] in second else first[0]
    signed = []
    current = start
    for e in cycle:
        tail, head = edges[e]
        if tail == current:
            signed.append((e, 1))
            current = head
        elif head == current:
            signed.append((e, -1))
            current = tail
        else:
            raise MalformedInput('edges {} do not form a cycle'.format(cycle))
    if current != start:
        raise MalformedInput('edges {} do not close up'.format(cycle))
    return signed


def complex_from_dict(data, field=None):
    """Return the complex described by its JSON form.

    Faces are lists of edge indices in cyclic order or of ``[edge, sign]``
    pairs.
    """
    try:
        vertices = data['vertices']
        if isinstance(vertices, list):
            vertices = len(vertices)
        edges = [tuple(int(v) for v in edge) for edge in data['edges']]
        faces = []
        for face in data['faces']:
            if face and isinstance(face[0], list):
                faces.append([(int(e), int(s)) for e, s in face])
            else:
                faces.append(_orient(edges, [int(e) for e in face]))
    except (KeyError, TypeError, ValueError, IndexError):
        raise MalformedInput('not a surface complex description')
    return SurfaceComplex(vertices, edges, faces, field)


class _RegionBuilder(object):
    """Grows the pentagon region ring by ring."""

    def __init__(self):
        self.vertices = 0
        self.edges = []
        self.faces = []
        self._edge_index = {}

    def new_vertex(self, count=1):
        first = self.vertices
        self.vertices += count
        return list(range(first, first + count))

    def edge(self, tail, head):
        key = frozenset((tail, head))
        if key not in self._edge_index:
            self._edge_index[key] = len(self.edges)
            self.edges.append((tail, head))
        return self._edge_index[key]

    def face(self, cycle):
        signed = []
        for tail, head in zip(cycle, cycle[1:] + cycle[:1]):
            e = self.edge(tail, head)
            signed.append((e, 1 if self.edges[e] == (tail, head) else -1))
        self.faces.append(signed)

    def grow(self, boundary, inside):
        """Add one ring; return the new boundary cycle and inside counts."""
        outward = {}
        new_inside = {}
        for v in boundary:
            if inside[v] == 1:
                s1, x, y, s2 = self.new_vertex(4)
                self.face([s1, x, y, s2, v])
                outward[v] = [s1, x, y, s2]
                new_inside.update({s1: 2, x: 1, y: 1, s2: 2})
            else:
                outward[v] = self.new_vertex()
                new_inside[outward[v][0]] = 2
        new_boundary = []
        for i, v in enumerate(boundary):
            following = boundary[(i + 1) % len(boundary)]
            tip, = self.new_vertex()
            self.face([outward[v][-1], tip, outward[following][0],
                       following, v])
            new_inside[tip] = 1
            new_boundary.extend(outward[v] + [tip])
        second_kind = sum(1 for v in boundary if inside[v] == 1)
        return new_boundary, new_inside, len(boundary), second_kind


def region_build(depth, depth_bound=default_config.REGION_DEPTH_BOUND,
                 field=None):
    """Return the {5,4} disk grown ``depth`` rings around one pentagon."""
    if depth < 0:
        raise MalformedInput('depth must be nonnegative, got {}'.format(
            depth))
    if depth > depth_bound:
        raise DepthBoundExceeded('depth {} exceeds the bound {}'.format(
            depth, depth_bound))
    builder = _RegionBuilder()
    boundary = builder.new_vertex(PENTAGON)
    builder.face(list(boundary))
    inside = {v: 1 for v in boundary}
    steps = []
    for step in range(1, depth + 1):
        boundary, inside, first, second = builder.grow(boundary, inside)
        steps.append(CensusStep(step, first, second, first + second,
                                len(boundary), builder.vertices,
                                len(boundary)))
        logger.debug('Ring %d: %d + %d tiles, boundary %d', step, first,
                     second, len(boundary))
    complex_ = SurfaceComplex(builder.vertices, builder.edges, builder.faces,
                              field)
    complex_.step_counts = steps
    return complex_


def toric_code(size, field=None):
    """Return the ``size`` x ``size`` square tessellation of the torus."""
    if size < 2:
        raise MalformedInput('the torus needs L >= 2, got {}'.format(size))

    def vertex(i, j):
        return (i % size) * size + j % size

    edges = []
    for i in range(size):
        for j in range(size):
            edges.append((vertex(i, j), vertex(i, j + 1)))
    for i in range(size):
        for j in range(size):
            edges.append((vertex(i, j), vertex(i + 1, j)))

    def horizontal(i, j):
        return (i % size) * size + j % size

    def vertical(i, j):
        return size * size + (i % size) * size + j % size

    faces = [
        [(horizontal(i, j), 1), (vertical(i, j + 1), 1),
         (horizontal(i + 1, j), -1), (vertical(i, j), -1)]
        for i in range(size) for j in range(size)
    ]
    return SurfaceComplex(size * size, edges, faces, field)


def closed_tetrahedron(field=None):
    """Return the boundary of a tetrahedron, a closed sphere."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    faces = [[0, 3, 1], [0, 4, 2], [1, 5, 2], [3, 5, 4]]
    return SurfaceComplex(4, edges, [_orient(edges, face) for face in faces],
                          field)


def surface_code(complex_, search_bound=default_config.SEARCH_BOUND,
                 distance=True):
    """Return the stabilizer code of a complex with its parameter report.

    Vertex rows give ``(v | 0)`` generators and face rows ``(0 | w)``
    generators; ``k = n - dim V - dim V*``.
    """
    field = complex_.field
    vertex_rows = complex_.vertex_incidence()
    face_rows = complex_.face_incidence()
    n = len(complex_.edges)
    if np.any(as_ints(vertex_rows @ face_rows.T)):
        raise NotOrthogonal('vertex and face rows of {!r} are not orthogonal'
                            .format(complex_))
    zeros = field.zeros
    symplectic = np.vstack([
        as_ints(hstack(vertex_rows, zeros(vertex_rows.shape))),
        as_ints(hstack(zeros(face_rows.shape), face_rows)),
    ]) if n else np.zeros((0, 0), dtype=np.int64)
    code = crss_self_orthogonal(LinearCode(field, field.gf(symplectic)))
    vertex_rank = rank(vertex_rows)
    face_rank = rank(face_rows)
    k = n - vertex_rank - face_rank
    x_distance = z_distance = None
    if distance and k:
        groups = [(i,) for i in range(n)]
        x_distance = min_weight_outside(
            vertex_rows, face_rows, groups, search_bound)[0]
        z_distance = min_weight_outside(
            face_rows, vertex_rows, groups, search_bound)[0]
        code._distance = min(x_distance, z_distance)
    logger.debug('Surface code of %r: [[%d, %d, %s]]', complex_, n, k,
                 code.distance)
    return SurfaceCodeReport(code, n, k, code.distance, x_distance,
                             z_distance, vertex_rank, face_rank, (k, k))


#######################
# Vertex polynomials #
#######################

def vertex_poly_encode(a, ell, alpha, coeffs):
    """Return ``(f(t_x))`` for ``x`` in Z/aZ, all arithmetic mod ``ell``.

    ``f(t) = c_0 + c_1 t + ... + c_(a-1) t**(a-1) + alpha t**a`` and the
    evaluation point of ``x`` is the additive representative
    ``t_x = (ell / a) x mod ell``.
    """
    if a < 1 or ell % a:
        raise NonDivisor('{} does not divide {}'.format(a, ell))
    coeffs = list(coeffs)
    if len(coeffs) != a:
        raise MalformedInput('expected {} coefficients, got {}'.format(
            a, len(coeffs)))
    polynomial = [c % ell for c in coeffs] + [alpha % ell]
    step = ell // a
    return tuple(
        sum(c * pow(step * x, i, ell) for i, c in enumerate(polynomial)) % ell
        for x in range(a)
    )


class VertexPolyCode(object):
    """The encoding ``|alpha> -> sum over coefficients of |f(t_x)>``."""

    def __init__(self, a, ell):
        if a < 1 or ell % a:
            raise NonDivisor('{} does not divide {}'.format(a, ell))
        self.a = a
        self.ell = ell

    def __repr__(self):
        return 'VertexPolyCode(a={}, ell={})'.format(self.a, self.ell)

    def encode(self, alpha, coeffs):
        return vertex_poly_encode(self.a, self.ell, alpha, coeffs)

    def superposition(self, alpha):
        """Yield the output tuple of every coefficient choice."""
        for coeffs in itertools.product(range(self.ell), repeat=self.a):
            yield self.encode(alpha, coeffs)

    def table(self):
        """Return ``{alpha: {output: multiplicity}}`` over Z/ellZ."""
        table = {}
        for alpha in range(self.ell):
            counts = {}
            for output in self.superposition(alpha):
                counts[output] = counts.get(output, 0) + 1
            table[alpha] = counts
        return table


def triangle_group_data(a, b, c):
    """Return the presentation data of the triangle group of type (a, b, c).

    The group is ``<x, y | x**a, y**b, (x y)**c>`` with vertex stabilizers
    of orders ``a``, ``b`` and ``c``.
    """
    orders = (a, b, c)
    if min(orders) < 2:
        raise NotHyperbolic('orders must be at least 2, got {}'.format(orders))
    euler_sum = sum(Fraction(1, order) for order in orders)
    if euler_sum >= 1:
        raise NotHyperbolic('1/{} + 1/{} + 1/{} = {} is not below 1'.format(
            a, b, c, euler_sum))
    return TriangleGroup(
        orders,
        lcm(a, b, c),
        ('x', 'y'),
        ('x^{}'.format(a), 'y^{}'.format(b), '(xy)^{}'.format(c)),
        euler_sum,
    )
