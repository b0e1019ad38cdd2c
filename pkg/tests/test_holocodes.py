"""Holocodes command line tests."""
import json
import os

import click
import mock
import pytest

from click.testing import CliRunner
from holocodes import (
    CommandResult,
    cli,
    dispatch,
    result_to_dict,
    validate_int_list,
)


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


@pytest.fixture
def cli_runner():
    """Return a `click`->`CliRunner` object."""
    return CliRunner()


def run(cli_runner, args, **kwargs):
    """Invoke the CLI and return the exit code and the decoded JSON."""
    result = cli_runner.invoke(cli, args, **kwargs)
    output = json.loads(result.stdout) if result.stdout.strip() else None
    return result.exit_code, output


def test_field(cli_runner):
    """Check if field describes a prime field."""
    exit_code, output = run(cli_runner, ['field', '--p', '7'])
    assert exit_code == 0
    assert output['status'] == 'ok'
    assert output['error'] is None
    assert output['payload']['q'] == 7
    assert output['payload']['primitive_element'] == 3
    assert 'modulus irreducible' in output['diagnostics']


def test_field_extension(cli_runner):
    """Check if extension elements are printed as coefficient lists."""
    exit_code, output = run(cli_runner, ['field', '--p', '3', '--r', '2'])
    assert exit_code == 0
    assert output['payload']['q'] == 9
    assert len(output['payload']['primitive_element']) == 2


def test_field_error(cli_runner):
    """Check if a domain error exits with 1 and reports its code."""
    exit_code, output = run(cli_runner, ['field', '--p', '4'])
    assert exit_code == 1
    assert output['status'] == 'error'
    assert output['error'] == 'NonPrimeP'
    assert output['payload']['message']


def test_usage_error(cli_runner):
    """Check if a missing option is a usage error."""
    result = cli_runner.invoke(cli, ['field'])
    assert result.exit_code == 2


def test_unknown_command(cli_runner):
    """Check if unknown commands are usage errors."""
    assert cli_runner.invoke(cli, ['frobnicate']).exit_code == 2
    assert cli_runner.invoke(cli, ['crss', 'frobnicate']).exit_code == 2


def test_dispatch():
    """Check if dispatch returns the result of a command."""
    result = dispatch(['tiling', 'census', '--n', '2'])
    assert result.status == 'ok'
    assert [step['faces'] for step in result.payload] == [10, 40]
    assert result.error is None


def test_dispatch_errors():
    """Check if dispatch reports domain, usage and unknown command errors."""
    assert dispatch(['field', '--p', '4']).error == 'NonPrimeP'
    assert dispatch(['field']).error == 'UsageError'
    assert dispatch(['frobnicate']).error == 'UnknownCommand'
    assert dispatch(['tree', 'frobnicate']).error == 'UnknownCommand'


def test_result_to_dict():
    """Check if results are printed with all four keys."""
    result = CommandResult('ok', {'n': 5}, ['MDS'], None)
    assert result_to_dict(result) == {
        'status': 'ok', 'payload': {'n': 5}, 'diagnostics': ['MDS'],
        'error': None}


@pytest.mark.parametrize('value,result', (
    (None, None),
    ('1,2,3', [1, 2, 3]),
    ('4', [4]),
    ('1, 2,', [1, 2]),
))
def test_validate_int_list(value, result):
    """Check if comma separated integers are parsed."""
    assert validate_int_list(None, mock.MagicMock(), value) == result


def test_validate_int_list_error():
    """Check if non integers raise BadParameter."""
    option = mock.MagicMock()
    option.name = 'message'
    with pytest.raises(click.BadParameter):
        validate_int_list(None, option, '1,a')


def test_rs_encode(cli_runner):
    """Check if rs-encode builds an MDS code and encodes a message."""
    exit_code, output = run(
        cli_runner, ['rs-encode', '--q', '5', '--k', '2', '--message', '1,2'])
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k'], payload['min_distance']) == (5, 2, 4)
    assert len(payload['codeword']) == 5
    assert 'MDS' in output['diagnostics']


def test_rs_encode_projective(cli_runner):
    """Check if --points P1 gives the projective code."""
    exit_code, output = run(
        cli_runner, ['rs-encode', '--q', '4', '--k', '2', '--points', 'P1'])
    assert exit_code == 0
    assert output['payload']['n'] == 5
    assert output['payload']['min_distance'] == 4


def test_rs_encode_needs_field(cli_runner):
    """Check if rs-encode without a field is malformed."""
    exit_code, output = run(cli_runner, ['rs-encode', '--k', '2'])
    assert exit_code == 1
    assert output['error'] == 'MalformedInput'


def test_search_bound_option(cli_runner):
    """Check if --search-bound reaches the distance search."""
    with mock.patch('holocodes.linear_codes.min_distance') as min_distance:
        min_distance.return_value = None
        exit_code, _ = run(cli_runner, [
            '--search-bound', '7', 'rs-encode', '--q', '5', '--k', '2'])
    assert exit_code == 0
    min_distance.assert_called_once()
    assert min_distance.call_args[0][1] == 7


def test_search_bound_note(cli_runner):
    """Check if a distance beyond the bound becomes a diagnostic."""
    exit_code, output = run(cli_runner, [
        '--search-bound', '5', 'rs-encode', '--q', '7', '--k', '3'])
    assert exit_code == 0
    assert output['payload']['min_distance'] is None
    assert output['diagnostics'][0].startswith('distance not computed')


def test_config_module_option(cli_runner):
    """Check if settings from a config module are used."""
    exit_code, output = run(cli_runner, [
        '--config-module', 'tests.data.small_config', 'toric', '--L', '3'])
    assert exit_code == 1
    assert output['error'] == 'SearchBoundExceeded'


def test_config_module_missing(cli_runner):
    """Check if a missing config module is a usage error."""
    result = cli_runner.invoke(
        cli, ['--config-module', 'holocodes_missing_config_module',
              'field', '--p', '2'])
    assert result.exit_code == 2


def test_config_module_envvar(cli_runner):
    """Check if the config module can be named in the environment."""
    exit_code, output = run(
        cli_runner, ['tree', 'encode', '--q', '2', '--k', '2', '--depth', '2',
                     '--inputs', '1,0,1,0,1'],
        env={'HOLOCODES_CONFIG_MODULE': 'tests.data.small_config'})
    assert exit_code == 1
    assert output['error'] == 'DepthBoundExceeded'


def test_code_dual(cli_runner):
    """Check if code-dual reads a code and prints its dual."""
    _, code = run(cli_runner, ['rs-encode', '--q', '5', '--k', '2'])
    exit_code, output = run(cli_runner, ['code-dual', 'euclidean'],
                            input=json.dumps(code['payload']))
    assert exit_code == 0
    assert (output['payload']['n'], output['payload']['k']) == (5, 3)


def test_code_distance_malformed(cli_runner):
    """Check if input that isn't JSON is malformed."""
    exit_code, output = run(cli_runner, ['code-distance'], input='[1, 2')
    assert exit_code == 1
    assert output['error'] == 'MalformedInput'


def test_crss_five_qubit(cli_runner):
    """Check if the five qubit code is [[5,1,3]]."""
    exit_code, output = run(cli_runner, ['crss', 'five-qubit'])
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k'], payload['dQ']) == (5, 1, 3)
    assert 'quantum distance certified exhaustively' in output['diagnostics']


def test_crss_oracle_dim(cli_runner):
    """Check if the oracle finds a two dimensional code space."""
    _, code = run(cli_runner, ['crss', 'five-qubit'])
    exit_code, output = run(cli_runner, ['crss', 'oracle-dim'],
                            input=json.dumps(code['payload']))
    assert exit_code == 0
    assert output['payload']['dimension'] == 2
    assert output['diagnostics'] == ['oracle dimension equals q^k']


def test_crss_oracle_bound(cli_runner):
    """Check if --oracle-bound refuses the explicit projector."""
    _, code = run(cli_runner, ['crss', 'five-qubit'])
    exit_code, output = run(
        cli_runner, ['--oracle-bound', '16', 'crss', 'oracle-dim'],
        input=json.dumps(code['payload']))
    assert exit_code == 1
    assert output['error'] == 'OracleBoundExceeded'


def test_crss_build_hermitian(cli_runner):
    """Check if the projective F_4 layer builds the [[5,1,3]] code."""
    _, code = run(
        cli_runner, ['rs-encode', '--q', '4', '--k', '2', '--points', 'P1'])
    exit_code, output = run(
        cli_runner, ['crss', 'build', '--variant', 'hermitian'],
        input=json.dumps(code['payload']))
    assert exit_code == 0
    payload = output['payload']
    assert (payload['q'], payload['n'], payload['k'], payload['dQ']) == (
        2, 5, 1, 3)


def test_crss_build_nested_needs_pair(cli_runner):
    """Check if a nested build without a pair is malformed."""
    exit_code, output = run(
        cli_runner, ['crss', 'build', '--variant', 'nested'], input='{}')
    assert exit_code == 1
    assert output['error'] == 'MalformedInput'


def test_crss_build_nested(cli_runner):
    """Check if nested RS codes over F_3 give [[3,1,2]]."""
    _, first = run(cli_runner, ['rs-encode', '--q', '3', '--k', '1'])
    _, second = run(cli_runner, ['rs-encode', '--q', '3', '--k', '2'])
    pair = {'first': first['payload'], 'second': second['payload']}
    exit_code, output = run(
        cli_runner, ['crss', 'build', '--variant', 'nested'],
        input=json.dumps(pair))
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k'], payload['dQ']) == (3, 1, 2)


def test_crss_perfect_tensor_even(cli_runner):
    """Check if even q is rejected by perfect-tensor."""
    exit_code, output = run(cli_runner, ['crss', 'perfect-tensor', '--q', '4'])
    assert exit_code == 1
    assert output['error'] == 'MalformedInput'


def test_crss_qutrit(cli_runner):
    """Check if the qutrit code is an isometry and a perfect tensor."""
    exit_code, output = run(cli_runner, ['crss', 'qutrit'])
    assert exit_code == 0
    assert output['payload']['gram'] == [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
    assert output['diagnostics'] == [
        'encoding is an isometry', 'tensor is perfect']


def test_tree_encode(cli_runner):
    """Check if tree encode prints the boundary values."""
    exit_code, output = run(cli_runner, [
        'tree', 'encode', '--q', '3', '--k', '2', '--depth', '1',
        '--inputs', '1,2'])
    assert exit_code == 0
    assert output['payload']['boundary'] == [2, 1, 0, 2]
    assert output['payload']['leaves'] == [[0], [1], [2], [3]]
    assert output['diagnostics'] == []


def test_tree_depth_bound(cli_runner):
    """Check if --depth-bound caps the tree depth."""
    exit_code, output = run(cli_runner, [
        '--depth-bound', '1', 'tree', 'matrix', '--q', '2', '--k', '2',
        '--depth', '2'])
    assert exit_code == 1
    assert output['error'] == 'DepthBoundExceeded'


def test_tree_matrix(cli_runner):
    """Check if the tree encoder is injective."""
    exit_code, output = run(cli_runner, [
        'tree', 'matrix', '--q', '2', '--k', '2', '--depth', '2'])
    assert exit_code == 0
    assert output['payload']['rank'] == 5
    assert output['diagnostics'] == ['encoder is injective']


def test_mumford_code(cli_runner):
    """Check if the genus one graph gives a [2, 1] code."""
    exit_code, output = run(cli_runner, [
        'mumford', 'code', '--k', '2',
        '--input', os.path.join(DATA_DIR, 'btz.json')])
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k']) == (2, 1)
    assert payload['solution_dimension'] == 2
    assert output['diagnostics'] == [
        'b_1 = 1', 'gluing constraints independent']


def test_mumford_extend(cli_runner):
    """Check if trees on the free legs widen the boundary."""
    exit_code, output = run(cli_runner, [
        'mumford', 'extend', '--k', '2', '--depth', '1',
        '--input', os.path.join(DATA_DIR, 'btz.json')])
    assert exit_code == 0
    assert output['payload']['input_dimension'] == 4
    assert output['payload']['rank'] == 3


def test_mumford_needs_field(cli_runner):
    """Check if a graph without a field is malformed."""
    exit_code, output = run(cli_runner, ['mumford', 'code', '--k', '2'],
                            input=json.dumps({'components': 1, 'edges': []}))
    assert exit_code == 1
    assert output['error'] == 'MalformedInput'


def test_tiling_census(cli_runner):
    """Check if the census is printed step by step."""
    exit_code, output = run(cli_runner, ['tiling', 'census', '--n', '3'])
    assert exit_code == 0
    assert [
        (step['first_kind'], step['second_kind'])
        for step in output['payload']
    ] == [(5, 5), (25, 15), (95, 55)]


def test_tiling_region(cli_runner):
    """Check if a one ring region prints its complex and steps."""
    exit_code, output = run(cli_runner, ['tiling', 'region', '--n', '1'])
    assert exit_code == 0
    assert len(output['payload']['faces']) == 11
    assert output['payload']['steps'][0]['boundary_edges'] == 25
    assert output['diagnostics'] == ['Euler characteristic 1']


def test_tiling_triangle(cli_runner):
    """Check if triangle groups report ell or NotHyperbolic."""
    exit_code, output = run(
        cli_runner, ['tiling', 'triangle', '--a', '2', '--b', '3', '--c', '7'])
    assert exit_code == 0
    assert output['payload']['ell'] == 42
    assert output['payload']['euler_sum'] == '41/42'
    exit_code, output = run(
        cli_runner, ['tiling', 'triangle', '--a', '2', '--b', '3', '--c', '6'])
    assert exit_code == 1
    assert output['error'] == 'NotHyperbolic'


def test_tiling_vertex_poly(cli_runner):
    """Check if vertex-poly encodes one input or tabulates them."""
    exit_code, output = run(cli_runner, [
        'tiling', 'vertex-poly', '--a', '2', '--ell', '20', '--alpha', '1',
        '--coeffs', '1,1'])
    assert exit_code == 0
    assert output['payload'] == {'output': [1, 11]}
    exit_code, output = run(cli_runner, [
        'tiling', 'vertex-poly', '--a', '2', '--ell', '4', '--alpha', '1'])
    assert exit_code == 0
    terms = output['payload']['table'][0]['terms']
    assert sum(term['multiplicity'] for term in terms) == 16


def test_surface_code(cli_runner):
    """Check if the tetrahedron encodes no qudits."""
    exit_code, output = run(cli_runner, [
        'surface', 'code',
        '--input', os.path.join(DATA_DIR, 'tetrahedron.json')])
    assert exit_code == 0
    assert (output['payload']['n'], output['payload']['k']) == (6, 0)
    assert output['payload']['dQ'] is None


def test_toric(cli_runner):
    """Check if toric prints [[8,2,2]] for L = 2."""
    exit_code, output = run(cli_runner, ['toric', '--L', '2'])
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k'], payload['dQ']) == (8, 2, 2)
    assert payload['vertex_rank'] == 3
    assert payload['homology'] == [2, 2]


def test_building_link(cli_runner):
    """Check if the link over F_2 is the Heawood graph."""
    exit_code, output = run(cli_runner, ['building', 'link', '--q', '2'])
    assert exit_code == 0
    assert output['payload']['vertex_count'] == 14
    assert output['payload']['edge_count'] == 21


def test_building_code(cli_runner):
    """Check if linear forms on P^2(F_3) give a [13, 3, 9] code."""
    exit_code, output = run(
        cli_runner, ['building', 'code', '--q', '3', '--m', '1'])
    assert exit_code == 0
    payload = output['payload']
    assert (payload['n'], payload['k'], payload['min_distance']) == (
        13, 3, 9)
    assert payload['monomials'] == ['x0^1', 'x1^1', 'x2^1']
    assert 'distance meets the bound n - m(q+1) = 9' in output['diagnostics']


def test_building_code_blowup(cli_runner):
    """Check if --blowup evaluates on the blown up plane."""
    exit_code, output = run(cli_runner, [
        'building', 'code', '--q', '2', '--m', '1', '--blowup'])
    assert exit_code == 0
    assert (output['payload']['n'], output['payload']['k']) == (42, 3)


def test_building_propagate(cli_runner):
    """Check if one known line leaves one free output direction."""
    exit_code, output = run(cli_runner, [
        'building', 'propagate',
        '--input', os.path.join(DATA_DIR, 'propagate.json')])
    assert exit_code == 0
    assert output['payload']['solution_dimension'] == 1
    assert output['payload']['output_dimension'] == 1


def test_building_local(cli_runner):
    """Check if a section gives consistent outputs on the link."""
    exit_code, output = run(cli_runner, [
        'building', 'local', '--q', '2', '--m', '1', '--section', '1,1,1'])
    assert exit_code == 0
    assert output['payload']['consistent'] is True
    assert output['diagnostics'] == ['21 flags and 21 line pairs consistent']


def test_reproduce(cli_runner):
    """Check if reproduce runs the selected tables."""
    exit_code, output = run(cli_runner, [
        'reproduce', '--table', 'census', '--table', 'link'])
    assert exit_code == 0
    payload = output['payload']
    assert [check['table'] for check in payload['checks']] == [
        'census', 'link']
    assert payload['summary'] == {'passed': 2}
    assert output['diagnostics'] == ['passed: 2']


def test_reproduce_failure(cli_runner):
    """Check if a failed check turns into an AcceptanceFailed error."""
    with mock.patch.dict(
            'holocodes.reproduce.CHECKS',
            {'census': lambda settings: (False, {})}):
        exit_code, output = run(cli_runner, ['reproduce', '--table', 'census'])
    assert exit_code == 1
    assert output['error'] == 'AcceptanceFailed'
    assert output['payload']['summary'] == {'failed': 1}


def test_reproduce_unknown_table(cli_runner):
    """Check if unknown tables are usage errors."""
    result = cli_runner.invoke(cli, ['reproduce', '--table', 'bogus'])
    assert result.exit_code == 2
