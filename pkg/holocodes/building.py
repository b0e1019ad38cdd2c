# coding=utf-8
"""Evaluation codes on P^2 and their propagation through a building link.

Sections of degree ``m`` are coefficient vectors over the monomials of
:class:`SectionSpace`.  A projective point is evaluated at its canonical
representative, which fixes one trivialization of every fiber.
"""
import itertools
import logging
from collections import namedtuple

import numpy as np

from holocodes.errors import (
    DegreeOutOfRange,
    InconsistentConstraints,
    LengthMismatch,
    MalformedInput,
    SameLine,
)
from holocodes.finite_field import (
    as_ints,
    decode_vector,
    encode_matrix,
    encode_vector,
    field_from_dict,
)
from holocodes.linalg import rref, solve_affine, vstack
from holocodes.linear_codes import LinearCode
from holocodes.proj_geom import (
    LinkVertex,
    ProjLine,
    line_intersection,
    line_points,
    lines_through,
    link_graph,
    p2_lines,
    p2_points,
)


logger = logging.getLogger(__name__)

LineValueVector = namedtuple('LineValueVector', 'line values')
LineValueVector.__doc__ = """Values at the q+1 points of a line, P^2 order."""

PointValueVector = namedtuple('PointValueVector', 'point values')
PointValueVector.__doc__ = """Values along an exceptional divisor E_P.

Coordinates are indexed by the lines through P in P^2 order.
"""

Propagation = namedtuple(
    'Propagation',
    'base directions solution_dimension output_dimension')
Propagation.__doc__ = """Affine set of outputs on a target line.

``base`` is one :data:`LineValueVector`, ``directions`` a reduced matrix
whose row space is the set of differences.  ``solution_dimension`` counts
the free parameters of the matching sections.
"""

LocalCode = namedtuple(
    'LocalCode', 'outputs flags_checked pairs_checked consistent')


class SectionSpace(object):
    """Degree ``m`` forms in ``x0, x1, x2``.

    Monomials are ordered lexicographically from ``x0**m`` to ``x2**m``.
    """

    def __init__(self, field, m):
        if m < 0:
            raise DegreeOutOfRange('degree must be nonnegative, got {}'
                                   .format(m))
        self.field = field
        self.m = m
        self.exponents = [
            (e0, e1, m - e0 - e1)
            for e0 in range(m, -1, -1)
            for e1 in range(m - e0, -1, -1)
        ]

    def __repr__(self):
        return 'SectionSpace(q={}, m={})'.format(self.field.q, self.m)

    @property
    def dimension(self):
        return len(self.exponents)

    def monomials(self, points):
        """Return the ``dimension x len(points)`` matrix of monomial values.
        """
        field = self.field
        if not points:
            return field.zeros((self.dimension, 0))
        coords = field.gf([list(point.coords) for point in points])
        rows = [
            coords[:, 0] ** e0 * coords[:, 1] ** e1 * coords[:, 2] ** e2
            for e0, e1, e2 in self.exponents
        ]
        return field.gf(np.stack([as_ints(row) for row in rows]))

    def evaluate(self, section, points):
        """Return the values of ``section`` at ``points``."""
        section = self.section(section)
        return section @ self.monomials(points)

    def section(self, coefficients):
        """Return ``coefficients`` as a section vector of this space."""
        field = self.field
        section = coefficients if field.owns(coefficients) else field.gf(
            coefficients)
        if section.shape != (self.dimension,):
            raise LengthMismatch('a degree {} section has {} coefficients'
                                 .format(self.m, self.dimension))
        return section

    def monomial_names(self):
        return [
            '*'.join('x{}^{}'.format(i, e) for i, e in enumerate(exps) if e)
            or '1'
            for exps in self.exponents
        ]


def p2_evaluation_code(field, m):
    """Return the code of degree ``m`` forms evaluated on all of P^2(F_q).

    ``0 < m <= q``; ``m = 0`` gives the repetition code.
    """
    if not 0 <= m <= field.q:
        raise DegreeOutOfRange('need 0 < m <= {}, got {}'.format(field.q, m))
    space = SectionSpace(field, m)
    code = LinearCode(field, space.monomials(p2_points(field)))
    if code.k != space.dimension:
        logger.warning('Evaluation of degree %d forms over GF(%d) is not '
                       'injective', m, field.q)
    return code


def restrict_to_line(space, section, line):
    """Return the values of ``section`` at the points of ``line``."""
    return LineValueVector(line, space.evaluate(section, line_points(line)))


def exceptional_values(space, section, point):
    """Return the values of the pulled back section along E_P.

    The pull back is constant on the exceptional divisor, so every direction
    carries the value at ``point``.
    """
    value = space.evaluate(section, [point])[0]
    count = len(lines_through(point))
    return PointValueVector(point, space.field.gf([int(value)] * count))


def cell_consistency(first, second):
    """Tell whether two line outputs agree where their lines meet."""
    shared = line_intersection(first.line, second.line)
    i = line_points(first.line).index(shared)
    j = line_points(second.line).index(shared)
    return bool(first.values[i] == second.values[j])


def propagate_cell(space, known, target):
    """Return every output on ``target`` of sections matching ``known``.

    :param known: :data:`LineValueVector` constraints.
    :raises InconsistentConstraints: when no section takes the known values.
    """
    field = space.field
    for vector in known:
        if vector.line == target:
            raise SameLine('{!r} is both known and the target'.format(target))
    blocks = [space.monomials(line_points(vector.line)).T for vector in known]
    if blocks:
        matrix = vstack(*blocks)
        rhs = field.gf(np.concatenate(
            [as_ints(vector.values) for vector in known]))
    else:
        matrix = field.zeros((0, space.dimension))
        rhs = field.zeros(0)
    solved = solve_affine(matrix, rhs)
    if solved is None:
        raise InconsistentConstraints(
            'no degree {} section takes the given values on {} lines'.format(
                space.m, len(known)))
    particular, directions = solved
    restriction = space.monomials(line_points(target))
    base = LineValueVector(target, particular @ restriction)
    if directions.shape[0]:
        outputs, _ = rref(directions @ restriction)
    else:
        outputs = field.zeros((0, restriction.shape[1]))
    logger.debug('Propagated %d constraints to %r: %d free sections',
                 matrix.shape[0], target, directions.shape[0])
    return Propagation(base, outputs, directions.shape[0], outputs.shape[0])


def building_local_code(space, section):
    """Deposit the outputs of ``section`` on every vertex of the link.

    Line vertices receive the values on the proper transform of the line,
    point vertices the values along their exceptional divisor.  Every link
    edge and every pair of distinct lines is checked for agreement.  A
    disagreement raises :class:`InconsistentConstraints`.
    """
    field = space.field
    link = link_graph(field)
    outputs = {}
    for line in link.lines:
        outputs[LinkVertex('line', line)] = restrict_to_line(
            space, section, line)
    for point in link.points:
        outputs[LinkVertex('point', point)] = exceptional_values(
            space, section, point)
    for i, j in link.edges:
        point, line = link.points[i], link.lines[j]
        on_line = outputs[LinkVertex('line', line)].values[
            line_points(line).index(point)]
        on_divisor = outputs[LinkVertex('point', point)].values[
            lines_through(point).index(line)]
        if on_line != on_divisor:
            raise InconsistentConstraints(
                'outputs disagree on the flag {!r} in {!r}'.format(
                    point, line))
    pairs = list(itertools.combinations(link.lines, 2))
    for first, second in pairs:
        if not cell_consistency(outputs[LinkVertex('line', first)],
                                outputs[LinkVertex('line', second)]):
            raise InconsistentConstraints(
                'outputs on {!r} and {!r} disagree'.format(first, second))
    return LocalCode(outputs, len(link.edges), len(pairs), True)


def blowup_evaluation_code(field, m):
    """Return the evaluation code on the rational points of the blow-up.

    Coordinates run over the points of every exceptional divisor (points of
    P^2 in order, directions by lines through the point) followed by the
    points of every proper transform (lines in order).
    """
    if not 0 <= m <= field.q:
        raise DegreeOutOfRange('need 0 < m <= {}, got {}'.format(field.q, m))
    space = SectionSpace(field, m)
    points = p2_points(field)
    at_points = space.monomials(points)
    columns = [
        as_ints(at_points[:, [i] * (field.q + 1)])
        for i in range(len(points))
    ]
    columns.extend(
        as_ints(space.monomials(line_points(line)))
        for line in p2_lines(field)
    )
    return LinearCode(field, field.gf(np.hstack(columns)))


def line_vector_from_dict(field, data):
    """Return the line output described by ``{"line": ..., "values": ...}``.
    """
    try:
        line = ProjLine(field, data['line'])
        values = decode_vector(field, data['values'])
    except (KeyError, TypeError, ValueError):
        raise MalformedInput('not a line value vector')
    if values.shape != (field.q + 1,):
        raise LengthMismatch('a line carries {} values, got {}'.format(
            field.q + 1, values.size))
    return LineValueVector(line, values)


def line_vector_to_dict(field, vector):
    return {
        'line': vector.line.to_list(),
        'values': encode_vector(field, vector.values),
    }


def propagation_from_dict(data):
    """Return ``(space, known, target)`` from a propagation request."""
    try:
        field = field_from_dict(data['field'])
        space = SectionSpace(field, int(data['m']))
        known = [line_vector_from_dict(field, entry)
                 for entry in data.get('known', [])]
        target = ProjLine(field, data['target'])
    except (KeyError, TypeError, ValueError):
        raise MalformedInput('not a propagation request')
    return space, known, target


def propagation_to_dict(field, result):
    return {
        'base': line_vector_to_dict(field, result.base),
        'directions': encode_matrix(field, result.directions),
        'solution_dimension': result.solution_dimension,
        'output_dimension': result.output_dimension,
    }


def local_code_to_dict(field, local):
    outputs = []
    for vertex, vector in local.outputs.items():
        site = vector.line if vertex.kind == 'line' else vector.point
        outputs.append({
            'kind': vertex.kind,
            'coords': site.to_list(),
            'values': encode_vector(field, vector.values),
        })
    return {
        'outputs': outputs,
        'flags_checked': local.flags_checked,
        'pairs_checked': local.pairs_checked,
        'consistent': local.consistent,
    }
