# coding=utf-8
"""Holographic codes on Bruhat-Tits trees and Mumford curve graphs.

Tree addresses are tuples of integers.  The first entry is a position in
the P^1 order of :func:`holocodes.proj_geom.p1_points` (0 is infinity), the
following entries are integer representations of affine field elements.

The root evaluates ``f(u, v) = sum(a_i u**i v**(k-1-i))`` at the chart
representatives of P^1, where infinity is ``(1, 0)``.  A non-root vertex
uses the chart in which its backward leg is ``(0:1)`` and its forward leg
``x`` is ``(1:x)``, so it evaluates ``sum(a_i x**(k-1-i))`` forward and its
value at infinity is ``a_0``, the value inherited from its parent.
"""
import logging
from collections import namedtuple

import networkx as nx
import numpy as np

from holocodes import default_config
from holocodes.crss import quantum_rs_code
from holocodes.errors import (
    DepthBoundExceeded,
    InputShapeMismatch,
    InvalidGluing,
    KOutOfRange,
    KTooSmall,
    MalformedInput,
)
from holocodes.finite_field import as_ints
from holocodes.linalg import kernel, rank
from holocodes.linear_codes import LinearCode
from holocodes.proj_geom import p1_points


logger = logging.getLogger(__name__)

HolographicMap = namedtuple(
    'HolographicMap', 'matrix input_dimension boundary rank')
HolographicMap.__doc__ = """End-to-end linear map from inputs to boundary.

``matrix`` has one row per input symbol and one column per boundary symbol;
``boundary`` lists the address of every column.
"""

MumfordCode = namedtuple(
    'MumfordCode',
    'code solution_basis solution_dimension expected_dimension '
    'constraint_rank free_legs')
MumfordCode.__doc__ = """The code C(G) with its dimension report.

``expected_dimension`` is ``kN - M``; it equals ``solution_dimension``
exactly when the ``M`` gluing constraints are independent.
"""

QuantumTreeLift = namedtuple(
    'QuantumTreeLift',
    'field extension tree vertex_code matchings subtree_legs')
QuantumTreeLift.__doc__ = """Per-vertex data of the quantum tree code.

``matchings`` pairs every forward leg of a parent with the leg at infinity
of the child it leads to.  ``subtree_legs`` maps ``'root'`` and
``'vertex'`` to the leg labels lying in P^1 of the smaller field.
"""


class RootedTree(object):
    """A depth-N ball around the root of the Bruhat-Tits tree.

    Vertices are listed in breadth first order, children by label order.
    """

    def __init__(self, field, depth):
        self.field = field
        self.depth = depth
        levels = [[()]]
        if depth >= 1:
            levels.append([(j,) for j in range(field.q + 1)])
        for _ in range(2, depth + 1):
            levels.append([
                address + (x,)
                for address in levels[-1]
                for x in range(field.q)
            ])
        self.levels = levels
        self.vertices = [address for level in levels for address in level]

    def __repr__(self):
        return 'RootedTree(q={}, depth={})'.format(self.field.q, self.depth)

    def children(self, address):
        """Return the children of a vertex in label order."""
        if len(address) >= self.depth:
            return []
        if not address:
            return [(j,) for j in range(self.field.q + 1)]
        return [address + (x,) for x in range(self.field.q)]

    def leaves(self):
        """Return the boundary vertices; a depth 0 tree has none."""
        return list(self.levels[-1]) if self.depth else []

    def internal_nonroot(self):
        """Return the vertices at depths 1 to N-1."""
        return [address for level in self.levels[1:-1] for address in level]

    def label(self, address):
        """Return the P^1 point and field elements along an address."""
        if not address:
            return []
        head = p1_points(self.field)[address[0]]
        return [head] + [self.field(x) for x in address[1:]]

    def input_dimension(self, k):
        return k + (k - 1) * len(self.internal_nonroot())


def tree_build(field, depth, depth_bound=default_config.TREE_DEPTH_BOUND):
    """Return the rooted tree of the given depth over ``field``."""
    if depth < 0:
        raise MalformedInput('depth must be nonnegative, got {}'.format(
            depth))
    if depth > depth_bound:
        raise DepthBoundExceeded('depth {} exceeds the bound {}'.format(
            depth, depth_bound))
    return RootedTree(field, depth)


def _root_evaluation(field, k):
    """Return the k x (q+1) matrix of monomials at the root's legs."""
    charts = [point.chart() for point in p1_points(field)]
    u = field.gf([int(chart[0]) for chart in charts])
    v = field.gf([int(chart[1]) for chart in charts])
    return _stack(field, [u ** i * v ** (k - 1 - i) for i in range(k)])


def _forward_evaluation(field, k):
    """Return the k x q matrix of monomials at the forward legs."""
    x = field.elements()
    return _stack(field, [x ** (k - 1 - i) for i in range(k)])


def _stack(field, rows):
    return field.gf(np.stack([as_ints(row) for row in rows]))


def _evaluate(field, coefficients, evaluation):
    """Evaluate per-vertex coefficients on every leg.

    :param coefficients: array ``(m, k, D)``.
    :param evaluation: array ``(k, legs)``.
    :returns: array ``(m * legs, D)`` ordered vertex major.
    """
    m, k, width = coefficients.shape
    legs = evaluation.shape[1]
    flat = coefficients.transpose(0, 2, 1).reshape(m * width, k)
    values = (flat @ evaluation).reshape(m, width, legs)
    return values.transpose(0, 2, 1).reshape(m * legs, width)


def _descend(field, k, incoming, levels, fresh):
    """Push values through ``levels`` coded layers of non-root vertices.

    :param incoming: array ``(m, D)`` of values arriving at the first layer.
    :param fresh: callable returning the ``(m, k - 1, D)`` new coefficients
        of a layer of ``m`` vertices.
    """
    evaluation = _forward_evaluation(field, k)
    for _ in range(levels):
        m, width = incoming.shape
        coefficients = field.zeros((m, k, width))
        coefficients[:, 0, :] = incoming
        if k > 1:
            coefficients[:, 1:, :] = fresh(m)
        incoming = _evaluate(field, coefficients, evaluation)
    return incoming


class _InputFeed(object):
    """Hands out consecutive input symbols, as values or as unit vectors."""

    def __init__(self, field, k, width, values=None, start=0):
        self.field = field
        self.k = k
        self.width = width
        self.values = values
        self.position = start

    def take(self, count):
        """Return the next ``count`` inputs as a ``(count, D)`` array."""
        first = self.position
        self.position += count
        if self.values is not None:
            return self.values[first:first + count].reshape(count, 1)
        block = np.zeros((count, self.width), dtype=np.int64)
        block[np.arange(count), first + np.arange(count)] = 1
        return self.field.gf(block)

    def __call__(self, m):
        return self.take(m * (self.k - 1)).reshape(m, self.k - 1, self.width)


def _check_k(field, k, upper):
    if not 1 <= k <= upper:
        raise KOutOfRange('k = {} is outside [1, {}]'.format(k, upper))


def _tree_boundary(tree, k, feed):
    field = tree.field
    if tree.depth == 0:
        return field.zeros((0, feed.width))
    root = feed.take(k).reshape(1, k, feed.width)
    incoming = _evaluate(field, root, _root_evaluation(field, k))
    return _descend(field, k, incoming, tree.depth - 1, feed)


def holographic_encode(tree, k, inputs):
    """Return the boundary word of the tree encoder.

    :param inputs: ``k`` symbols for the root followed by ``k - 1`` symbols
        for every internal non-root vertex in breadth first order.
    """
    field = tree.field
    _check_k(field, k, field.q)
    inputs = inputs if field.owns(inputs) else field.gf(inputs)
    expected = tree.input_dimension(k)
    if inputs.shape != (expected,):
        raise InputShapeMismatch('expected {} input symbols, got {}'.format(
            expected, inputs.size))
    feed = _InputFeed(field, k, 1, values=inputs)
    return _tree_boundary(tree, k, feed).reshape(-1)


def encode_matrix(tree, k):
    """Return the matrix of the tree encoder, one row per input symbol."""
    field = tree.field
    _check_k(field, k, field.q)
    width = tree.input_dimension(k)
    feed = _InputFeed(field, k, width)
    boundary = _tree_boundary(tree, k, feed)
    return boundary.T if boundary.size else field.zeros((width, 0))


def tree_map(tree, k):
    """Return the tree encoder as a :data:`HolographicMap`."""
    matrix = encode_matrix(tree, k)
    return HolographicMap(matrix, matrix.shape[0], tree.leaves(),
                          rank(matrix))


##########
# Mumford #
##########

class MumfordGraph(object):
    """Copies of P^1 glued pairwise at points.

    :param edges: tuples ``(i, P_i, j, P_j)`` gluing point ``P_i`` of
        component ``i`` to point ``P_j`` of component ``j``, points given by
        their P^1 positions.
    """

    def __init__(self, field, components, edges):
        self.field = field
        self.components = int(components)
        self.edges = [tuple(int(value) for value in edge) for edge in edges]
        if self.components < 1:
            raise InvalidGluing('a graph needs at least one component')
        used = set()
        for edge in self.edges:
            if len(edge) != 4:
                raise InvalidGluing('edge {} is not (i, P_i, j, P_j)'.format(
                    list(edge)))
            for component, point in (edge[:2], edge[2:]):
                if not 0 <= component < self.components:
                    raise InvalidGluing('no component {}'.format(component))
                if not 0 <= point <= field.q:
                    raise InvalidGluing('no point {} on P^1(F_{})'.format(
                        point, field.q))
                if (component, point) in used:
                    raise InvalidGluing('point {} of component {} is glued '
                                        'twice'.format(point, component))
                used.add((component, point))
        self._used = used

    def __repr__(self):
        return 'MumfordGraph(N={}, M={})'.format(
            self.components, len(self.edges))

    def free_legs(self):
        """Return the unglued ``(component, point)`` pairs in order."""
        return [
            (component, point)
            for component in range(self.components)
            for point in range(self.field.q + 1)
            if (component, point) not in self._used
        ]

    def graph(self):
        """Return the dual graph as a networkx multigraph."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.components))
        graph.add_edges_from((edge[0], edge[2]) for edge in self.edges)
        return graph

    def betti_number(self):
        """Return the first Betti number ``M - N + #components``."""
        return (len(self.edges) - self.components +
                nx.number_connected_components(self.graph()))

    def to_dict(self):
        return {
            'field': self.field.to_dict(),
            'components': self.components,
            'edges': [list(edge) for edge in self.edges],
        }


def mumford_from_dict(field, data):
    """Return the graph described by its JSON form."""
    try:
        return MumfordGraph(field, data['components'], data['edges'])
    except (KeyError, TypeError, ValueError):
        raise MalformedInput('not a Mumford graph description')


def _block_monomials(field, k, component, point, components):
    row = field.zeros(k * components)
    column = _root_evaluation(field, k)[:, point]
    row[component * k:(component + 1) * k] = column
    return row


def _free_leg_values(graph, k, basis, legs):
    """Return the values of every solution in ``basis`` at the free legs."""
    field = graph.field
    if not (basis.shape[0] and legs):
        return field.zeros((basis.shape[0], len(legs)))
    evaluation = field.gf(np.stack([
        as_ints(_block_monomials(field, k, i, p, graph.components))
        for i, p in legs
    ]).T)
    return basis @ evaluation


def mumford_code(graph, k):
    """Return the code ``C(G)`` of polynomials agreeing along the gluing.

    The unknowns are the ``k N`` coefficients of ``(f_1, ..., f_N)``; each
    edge asks ``f_i(P_i) = f_j(P_j)``.  The code collects the values at the
    free legs.
    """
    field = graph.field
    components = graph.components
    _check_k(field, k, field.q + 1)
    betti = graph.betti_number()
    if not k * components > components + betti - 1:
        raise KTooSmall('k = {} needs k N > N + b_1 - 1 with N = {}, b_1 = {}'
                        .format(k, components, betti))
    unknowns = k * components
    if graph.edges:
        constraints = field.gf(np.stack([
            as_ints(
                _block_monomials(field, k, i, pi, components) -
                _block_monomials(field, k, j, pj, components))
            for i, pi, j, pj in graph.edges
        ]))
    else:
        constraints = field.zeros((0, unknowns))
    basis = kernel(constraints)
    legs = graph.free_legs()
    generator = _free_leg_values(graph, k, basis, legs)
    constraint_rank = rank(constraints)
    solution_dimension = basis.shape[0]
    expected = unknowns - len(graph.edges)
    if solution_dimension != expected:
        logger.info('Gluing constraints of %r have rank %d < %d', graph,
                    constraint_rank, len(graph.edges))
    return MumfordCode(
        LinearCode(field, generator), basis, solution_dimension, expected,
        constraint_rank, legs)


def mumford_holographic_extend(graph, k, depth,
                               depth_bound=default_config.TREE_DEPTH_BOUND):
    """Attach coded trees of the given depth to every free leg of ``graph``.

    Each free leg feeds ``depth`` layers of non-root vertices; the boundary
    is the layer after the last one.  Inputs are the coordinates in the
    solution basis of :func:`mumford_code` followed by ``k - 1`` symbols per
    tree vertex.
    """
    if depth < 0:
        raise MalformedInput('depth must be nonnegative, got {}'.format(
            depth))
    if depth > depth_bound:
        raise DepthBoundExceeded('depth {} exceeds the bound {}'.format(
            depth, depth_bound))
    field = graph.field
    report = mumford_code(graph, k)
    _check_k(field, k, field.q)
    legs = report.free_legs
    solutions = report.solution_dimension
    tree_vertices = len(legs) * sum(field.q ** level for level in range(depth))
    width = solutions + (k - 1) * tree_vertices
    incoming = field.zeros((len(legs), width))
    if solutions and legs:
        incoming[:, :solutions] = _free_leg_values(
            graph, k, report.solution_basis, legs).T
    feed = _InputFeed(field, k, width, start=solutions)
    boundary = _descend(field, k, incoming, depth, feed)
    addresses = [(leg,) for leg in range(len(legs))]
    for _ in range(depth):
        addresses = [
            address + (x,) for address in addresses for x in range(field.q)]
    matrix = boundary.T if boundary.size else field.zeros((width, 0))
    return HolographicMap(matrix, width, addresses, rank(matrix))


###############
# Quantum lift #
###############

def quantum_tree_lift(field, depth,
                      depth_bound=default_config.TREE_DEPTH_BOUND):
    """Return the per-vertex data of the quantum code on the F_{q^2} tree.

    Every vertex carries the [[q^2+1, q^2-2q+1, q+1]]_q code of
    :func:`holocodes.crss.quantum_rs_code`; its legs are the points of
    P^1(F_{q^2}).  The legs labelled by P^1(F_q) span the copy of the
    F_q tree inside the F_{q^2} tree.
    """
    ext = field.quadratic_extension()
    tree = tree_build(ext, depth, depth_bound)
    subfield = sorted(as_ints(field.subfield_embedding(ext)).tolist())
    matchings = [
        {'parent': list(address[:-1]), 'leg': address[-1],
         'child': list(address), 'child_leg': 'infinity'}
        for address in tree.vertices if address
    ]
    subtree_legs = {
        'root': [0] + [1 + x for x in subfield],
        'vertex': subfield,
    }
    return QuantumTreeLift(field, ext, tree, quantum_rs_code(field),
                           matchings, subtree_legs)


def subtree_vertices(lift):
    """Return the vertices reached through subfield legs only."""
    root_legs = set(lift.subtree_legs['root'])
    legs = set(lift.subtree_legs['vertex'])
    return [
        address for address in lift.tree.vertices
        if not address or (
            address[0] in root_legs and
            all(label in legs for label in address[1:]))
    ]
