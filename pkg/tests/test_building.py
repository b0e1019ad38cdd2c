# coding=utf-8
"""Tests for :mod:`holocodes.building`."""
import json
import os

import mock
import pytest

from holocodes import building
from holocodes.errors import (
    DegreeOutOfRange,
    InconsistentConstraints,
    LengthMismatch,
    MalformedInput,
    SameLine,
)
from holocodes.finite_field import as_ints, field_create
from holocodes.linear_codes import min_distance
from holocodes.proj_geom import ProjLine, line_points, p2_lines, p2_points


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


@pytest.mark.parametrize('m', (0, 1, 2, 3))
def test_section_space_dimension(m):
    """Check if degree m forms span (m+1)(m+2)/2 monomials."""
    space = building.SectionSpace(field_create(3), m)
    assert space.dimension == (m + 1) * (m + 2) // 2
    assert len(set(space.exponents)) == space.dimension
    assert all(sum(exps) == m for exps in space.exponents)


def test_section_space_names():
    """Check if monomials run from x0^m down to x2^m."""
    field = field_create(2)
    assert building.SectionSpace(field, 0).monomial_names() == ['1']
    assert building.SectionSpace(field, 1).monomial_names() == [
        'x0^1', 'x1^1', 'x2^1']
    assert building.SectionSpace(field, 2).monomial_names()[0] == 'x0^2'


def test_section_space_errors():
    """Check if negative degrees and wrong lengths are rejected."""
    field = field_create(2)
    with pytest.raises(DegreeOutOfRange):
        building.SectionSpace(field, -1)
    with pytest.raises(LengthMismatch):
        building.SectionSpace(field, 1).section([1, 0])


@pytest.mark.parametrize('q,n,distance', ((2, 7, 4), (3, 13, 9)))
def test_p2_evaluation_code_linear_forms(q, n, distance):
    """Check if linear forms on P^2 give the [q^2+q+1, 3, q^2] code."""
    code = building.p2_evaluation_code(field_create(q), 1)
    assert (code.n, code.k) == (n, 3)
    assert min_distance(code) == distance


def test_p2_evaluation_code_degrees():
    """Check if the degree must stay within 0..q."""
    field = field_create(2)
    assert building.p2_evaluation_code(field, 0).k == 1
    with pytest.raises(DegreeOutOfRange):
        building.p2_evaluation_code(field, 3)
    with pytest.raises(DegreeOutOfRange):
        building.p2_evaluation_code(field, -1)


def test_restrict_to_line():
    """Check if restriction evaluates the section on the line points."""
    field = field_create(2)
    space = building.SectionSpace(field, 1)
    line = ProjLine(field, (0, 0, 1))
    vector = building.restrict_to_line(space, [1, 0, 0], line)
    assert vector.line == line
    assert as_ints(vector.values).tolist() == [1, 0, 1]
    vanishing = building.restrict_to_line(space, [0, 0, 1], line)
    assert as_ints(vanishing.values).tolist() == [0, 0, 0]


def test_exceptional_values():
    """Check if the pull back is constant along the exceptional divisor."""
    field = field_create(3)
    space = building.SectionSpace(field, 2)
    section = [1, 2, 0, 1, 0, 2]
    for point in p2_points(field):
        vector = building.exceptional_values(space, section, point)
        value = int(space.evaluate(section, [point])[0])
        assert as_ints(vector.values).tolist() == [value] * 4


def test_cell_consistency():
    """Check if outputs of one section agree where their lines meet."""
    field = field_create(3)
    space = building.SectionSpace(field, 2)
    section = [2, 1, 1, 0, 2, 1]
    first, second = p2_lines(field)[:2]
    on_first = building.restrict_to_line(space, section, first)
    on_second = building.restrict_to_line(space, section, second)
    assert building.cell_consistency(on_first, on_second)
    shared = line_points(first).index(
        set(line_points(first)).intersection(line_points(second)).pop())
    values = on_first.values.copy()
    values[shared] += field.one
    broken = building.LineValueVector(first, values)
    assert not building.cell_consistency(broken, on_second)


def test_propagate_cell_one_line():
    """Check if one known line leaves the multiples of its equation free."""
    field = field_create(2)
    space = building.SectionSpace(field, 1)
    known, target = p2_lines(field)[:2]
    section = [1, 1, 0]
    result = building.propagate_cell(
        space, [building.restrict_to_line(space, section, known)], target)
    assert result.solution_dimension == 1
    assert result.output_dimension == 1
    assert building.cell_consistency(
        result.base, building.restrict_to_line(space, section, known))


def test_propagate_cell_two_lines():
    """Check if two known lines fix a linear form."""
    field = field_create(3)
    space = building.SectionSpace(field, 1)
    first, second, target = p2_lines(field)[:3]
    section = [1, 2, 1]
    known = [building.restrict_to_line(space, section, line)
             for line in (first, second)]
    result = building.propagate_cell(space, known, target)
    assert result.solution_dimension == 0
    assert result.output_dimension == 0
    expected = building.restrict_to_line(space, section, target)
    assert as_ints(result.base.values).tolist() == as_ints(
        expected.values).tolist()


def test_propagate_cell_nothing_known():
    """Check if an empty request returns every restriction."""
    field = field_create(2)
    space = building.SectionSpace(field, 1)
    result = building.propagate_cell(space, [], p2_lines(field)[0])
    assert result.solution_dimension == 3
    assert result.output_dimension == 2
    assert as_ints(result.base.values).tolist() == [0, 0, 0]


def test_propagate_cell_errors():
    """Check if repeated and contradictory constraints are rejected."""
    field = field_create(2)
    space = building.SectionSpace(field, 1)
    line = p2_lines(field)[0]
    known = building.restrict_to_line(space, [1, 0, 1], line)
    with pytest.raises(SameLine):
        building.propagate_cell(space, [known], line)
    # No linear form takes the value 1 at all three points of a line.
    ones = building.LineValueVector(line, field.gf([1, 1, 1]))
    with pytest.raises(InconsistentConstraints):
        building.propagate_cell(space, [ones], p2_lines(field)[1])


@pytest.mark.parametrize('q,flags,pairs', ((2, 21, 21), (3, 52, 78)))
def test_building_local_code(q, flags, pairs):
    """Check if one section deposits consistent outputs on the link."""
    field = field_create(q)
    space = building.SectionSpace(field, 1)
    local = building.building_local_code(space, [1, 1, 1])
    assert local.consistent
    assert local.flags_checked == flags
    assert local.pairs_checked == pairs
    assert len(local.outputs) == 2 * (q * q + q + 1)
    data = building.local_code_to_dict(field, local)
    assert len(data['outputs']) == len(local.outputs)
    assert data['consistent'] is True


def test_building_local_code_disagreeing_lines():
    """Check if disagreeing line outputs raise."""
    space = building.SectionSpace(field_create(2), 1)
    with mock.patch('holocodes.building.cell_consistency',
                    return_value=False):
        with pytest.raises(InconsistentConstraints):
            building.building_local_code(space, [1, 1, 1])


def test_building_local_code_disagreeing_flag():
    """Check if a divisor output off its line output raises."""
    field = field_create(2)
    space = building.SectionSpace(field, 1)
    exceptional_values = building.exceptional_values

    def shifted(space, section, point):
        vector = exceptional_values(space, section, point)
        return vector._replace(values=vector.values + field.one)

    with mock.patch('holocodes.building.exceptional_values', shifted):
        with pytest.raises(InconsistentConstraints):
            building.building_local_code(space, [1, 1, 1])


@pytest.mark.parametrize('q,m', ((2, 1), (2, 2), (3, 1)))
def test_blowup_evaluation_code(q, m):
    """Check if the blow-up code has 2(q+1)(q^2+q+1) coordinates."""
    code = building.blowup_evaluation_code(field_create(q), m)
    assert code.n == 2 * (q + 1) * (q * q + q + 1)
    assert code.k == (m + 1) * (m + 2) // 2


def test_line_vector_dict():
    """Check if line outputs survive their JSON form."""
    field = field_create(3)
    space = building.SectionSpace(field, 1)
    vector = building.restrict_to_line(space, [1, 2, 0], p2_lines(field)[4])
    again = building.line_vector_from_dict(
        field, building.line_vector_to_dict(field, vector))
    assert again.line == vector.line
    assert as_ints(again.values).tolist() == as_ints(vector.values).tolist()
    with pytest.raises(LengthMismatch):
        building.line_vector_from_dict(
            field, {'line': [1, 0, 0], 'values': [1, 2]})
    with pytest.raises(MalformedInput):
        building.line_vector_from_dict(field, {'values': [1, 2, 0, 1]})


def test_propagation_request():
    """Check if a JSON request propagates to the target line."""
    with open(os.path.join(DATA_DIR, 'propagate.json')) as handle:
        space, known, target = building.propagation_from_dict(
            json.load(handle))
    assert (space.field.q, space.m) == (2, 1)
    assert len(known) == 1
    result = building.propagation_to_dict(
        space.field, building.propagate_cell(space, known, target))
    assert result['solution_dimension'] == 1
    assert result['output_dimension'] == 1
    assert result['base']['line'] == target.to_list()
    with pytest.raises(MalformedInput):
        building.propagation_from_dict({'m': 1})
