"""Holocodes.

Holocodes builds classical and quantum error correcting codes on the
combinatorics of p-adic symmetric spaces:

* Reed-Solomon and evaluation codes over finite fields
* stabilizer codes through the symplectic (CRSS) construction
* holographic encoders on Bruhat-Tits trees and Mumford curve graphs
* homological surface codes from pentagon tilings
* evaluation codes propagated through the link of a rank 2 building

Every command prints a JSON result on stdout.
"""
import functools
import json
import logging
from collections import Counter, namedtuple

import click

from holocodes import (
    building,
    config,
    crss,
    finite_field,
    holo_tree,
    linear_codes,
    proj_geom,
    reproduce,
    surface_tiling,
)
from holocodes.errors import (
    HolocodesError,
    MalformedInput,
    SearchBoundExceeded,
)


logging.captureWarnings(True)

logger = logging.getLogger(__name__)

CommandResult = namedtuple(
    'CommandResult', 'status payload diagnostics error')
CommandResult.__doc__ = """Outcome of one command.

``error`` holds the code of the domain error of a failed command.
"""

#: Key of the last result in ``click.Context.meta``
RESULT_KEY = 'holocodes.result'


class UnknownCommand(click.UsageError):
    """Indicate a subcommand that does not exist."""

    code = 'UnknownCommand'


class CommandGroup(click.Group):
    """Group reporting unknown subcommands with their own error."""

    def resolve_command(self, ctx, args):
        name = args[0]
        if not name.startswith('-') and self.get_command(ctx, name) is None:
            raise UnknownCommand('No such command "{}".'.format(name), ctx=ctx)
        return super(CommandGroup, self).resolve_command(ctx, args)


def ok(payload, *diagnostics):
    """Return a successful result."""
    return CommandResult('ok', payload, list(diagnostics), None)


def reports(function):
    """Turn domain errors raised by a command into error results."""
    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except HolocodesError as error:
            logger.debug('Command failed with %s: %s', error.code, error)
            return CommandResult(
                'error', {'message': str(error)}, [], error.code)
    return wrapper


def result_to_dict(result):
    """Return the JSON form of a :data:`CommandResult`."""
    return {
        'status': result.status,
        'payload': result.payload,
        'diagnostics': result.diagnostics,
        'error': result.error,
    }


def validate_int_list(ctx, param, value):
    """Validate an option that expects comma separated integers."""
    if value is None:
        return
    try:
        return [int(item) for item in value.split(',') if item.strip()]
    except ValueError:
        raise click.BadParameter(
            '{} needs to be comma separated integers'.format(param.name))


def load_json(stream):
    """Read one JSON document from a file object."""
    try:
        return json.load(stream)
    except ValueError as error:
        raise MalformedInput('input is not JSON: {}'.format(error))


def dispatch(argv):
    """Run the command line on ``argv`` and return its result.

    Usage errors are returned as error results too, with the click message.
    """
    ctx = None
    try:
        ctx = cli.make_context('holocodes', list(argv))
        with ctx:
            cli.invoke(ctx)
    except click.exceptions.Exit:
        pass
    except click.ClickException as error:
        return CommandResult(
            'error', {'message': error.format_message()}, [],
            getattr(error, 'code', 'UsageError'))
    return ctx.meta.get(RESULT_KEY) if ctx is not None else None


pass_config = click.make_pass_decorator(config.HolocodesConfig, ensure=True)


def _field(settings, q):
    return finite_field.field_from_order(
        q, size_bound=settings.FIELD_SIZE_BOUND)


def _distance_or_note(code, settings):
    """Return the distance of ``code`` and a diagnostic."""
    try:
        distance = linear_codes.min_distance(code, settings.SEARCH_BOUND)
    except SearchBoundExceeded as error:
        return None, 'distance not computed: {}'.format(error)
    return distance, 'distance certified exhaustively'


def _quantum_distance_or_note(code, settings):
    try:
        crss.quantum_distance(code, settings.SEARCH_BOUND)
    except SearchBoundExceeded as error:
        return 'quantum distance not computed: {}'.format(error)
    return 'quantum distance certified exhaustively'


@click.group(cls=CommandGroup)
@click.option(
    '--config-module',
    envvar='HOLOCODES_CONFIG_MODULE',
    help='Python import path to the config module. E.g. '
    '"package.myconfig.module".',
)
@click.option(
    '--search-bound',
    type=click.IntRange(min=1),
    help='Most codewords or supports visited by exhaustive searches.',
)
@click.option(
    '--oracle-bound',
    type=click.IntRange(min=1),
    help='Largest Hilbert space dimension handled by the eigenspace oracle.',
)
@click.option(
    '--depth-bound',
    type=click.IntRange(min=0),
    help='Deepest tree and widest tiling region accepted.',
)
@click.option(
    '--verbose',
    is_flag=True,
    help='Log debug messages on stderr.',
)
@click.version_option()
@click.pass_context
def cli(ctx, config_module, search_bound, oracle_bound, depth_bound, verbose):
    """Holocodes CLI command group."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG)
    try:
        settings = config.HolocodesConfig(config_module)
    except config.ConfigModuleError as error:
        raise click.BadParameter(str(error), param_hint='--config-module')
    ctx.obj = settings.override(
        search_bound=search_bound,
        oracle_bound=oracle_bound,
        tree_depth_bound=depth_bound,
        region_depth_bound=depth_bound,
    )


@cli.result_callback()
@click.pass_context
def emit(ctx, result, **params):
    """Print the result of the invoked command as JSON."""
    if result is None:
        return
    settings = ctx.find_object(config.HolocodesConfig)
    click.echo(json.dumps(result_to_dict(result), indent=settings.JSON_INDENT))
    ctx.meta[RESULT_KEY] = result
    if result.status != 'ok':
        ctx.exit(1)


#################
# Field / codes #
#################

@cli.command('field')
@click.option('--p', 'p', type=int, required=True, help='Characteristic.')
@click.option('--r', 'r', type=int, default=1, help='Extension degree.')
@click.option(
    '--modulus',
    callback=validate_int_list,
    help='Coefficients c_0,...,c_r of a monic irreducible modulus.',
)
@pass_config
@reports
def field(settings, p, r, modulus):
    """Describe the finite field GF(p^r)."""
    created = finite_field.field_create(
        p, r, modulus, size_bound=settings.FIELD_SIZE_BOUND)
    payload = created.to_dict()
    payload['q'] = created.q
    payload['primitive_element'] = finite_field.encode_element(
        created, created.primitive_element())
    return ok(
        payload,
        'modulus irreducible',
        'multiplicative group cyclic of order {}'.format(created.q - 1),
    )


@cli.command('rs-encode')
@click.option('--q', 'q', type=int, help='Field order.')
@click.option('--p', 'p', type=int, help='Characteristic, with --r.')
@click.option('--r', 'r', type=int, default=1, help='Extension degree.')
@click.option('--k', 'k', type=int, required=True, help='Dimension.')
@click.option(
    '--points',
    help='Comma separated elements, or "P1" for every point of P^1. '
    'Defaults to every element of the field.',
)
@click.option('--weights', callback=validate_int_list, help='Multipliers.')
@click.option('--message', callback=validate_int_list, help='k symbols.')
@pass_config
@reports
def rs_encode(settings, q, p, r, k, points, weights, message):
    """Build a generalized Reed-Solomon code and encode a message."""
    if q is None and p is None:
        raise MalformedInput('either --q or --p is needed')
    field_ = _field(settings, q) if q is not None else \
        finite_field.field_create(p, r, size_bound=settings.FIELD_SIZE_BOUND)
    if weights is not None:
        weights = finite_field.decode_vector(field_, weights)
    if points == 'P1':
        spec = linear_codes.EvaluationSpec(
            field_, proj_geom.p1_points(field_), weights, k)
        code = linear_codes.rs_projective(spec)
    else:
        if points is None:
            elements = list(range(field_.q))
        else:
            try:
                elements = [int(item) for item in points.split(',')]
            except ValueError:
                raise MalformedInput(
                    'points must be "P1" or comma separated elements')
        finite_field.decode_vector(field_, elements)
        spec = linear_codes.EvaluationSpec(field_, elements, weights, k)
        code = linear_codes.rs_affine(spec)
    distance, note = _distance_or_note(code, settings)
    payload = code.to_dict()
    if message is not None:
        codeword = code.encode(finite_field.decode_vector(field_, message))
        payload['codeword'] = finite_field.encode_vector(field_, codeword)
    diagnostics = [note]
    if distance is not None and distance == code.n - code.k + 1:
        diagnostics.append('MDS')
    return ok(payload, *diagnostics)


@cli.command('code-distance')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Code JSON, stdin by default.')
@pass_config
@reports
def code_distance(settings, stream):
    """Compute the minimum distance of a linear code."""
    code = linear_codes.code_from_dict(load_json(stream))
    linear_codes.min_distance(code, settings.SEARCH_BOUND)
    return ok(code.to_dict(), 'distance certified exhaustively')


@cli.command('code-dual')
@click.argument('pairing', type=click.Choice(['euclidean', 'hermitian']))
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Code JSON, stdin by default.')
@reports
def code_dual(pairing, stream):
    """Compute the Euclidean or Hermitian dual of a linear code."""
    code = linear_codes.code_from_dict(load_json(stream))
    if pairing == 'hermitian':
        dual = linear_codes.dual_hermitian(code)
        notes = []
        if linear_codes.is_hermitian_self_orthogonal(code):
            notes.append('code is Hermitian self-orthogonal')
    else:
        dual = linear_codes.dual_euclidean(code)
        notes = []
    return ok(dual.to_dict(), *notes)


########
# CRSS #
########

@cli.group('crss', cls=CommandGroup)
def crss_group():
    """Stabilizer codes from classical codes."""


def _stabilizer_result(code, settings, *notes):
    diagnostics = list(code.notes) + list(notes)
    diagnostics.append('symplectic self-orthogonality verified')
    diagnostics.append(_quantum_distance_or_note(code, settings))
    return ok(code.to_dict(), *diagnostics)


@crss_group.command('build')
@click.option(
    '--variant',
    required=True,
    type=click.Choice(['self-orth', 'nested', 'hermitian']),
    help='Which classical input the code is built from.',
)
@click.option(
    '--pairing',
    default='euclidean',
    type=click.Choice(['euclidean', 'hermitian']),
    help='Pairing of a nested pair.',
)
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Code JSON, or {"first": ..., "second": ...} for a pair.')
@pass_config
@reports
def crss_build(settings, variant, pairing, stream):
    """Build a stabilizer code with the CRSS construction."""
    data = load_json(stream)
    if variant == 'self-orth':
        code = crss.crss_self_orthogonal(linear_codes.code_from_dict(data))
    elif variant == 'hermitian':
        code = crss.crss_hermitian(linear_codes.code_from_dict(data))
    else:
        try:
            first, second = data['first'], data['second']
        except (KeyError, TypeError):
            raise MalformedInput('a nested pair needs "first" and "second"')
        code = crss.crss_nested_pair(
            linear_codes.code_from_dict(first),
            linear_codes.code_from_dict(second),
            pairing,
        )
    return _stabilizer_result(code, settings)


@crss_group.command('distance')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Stabilizer code JSON, stdin by default.')
@pass_config
@reports
def crss_distance(settings, stream):
    """Compute the quantum distance of a stabilizer code."""
    code = crss.stabilizer_from_dict(load_json(stream))
    crss.quantum_distance(code, settings.SEARCH_BOUND)
    return ok(code.to_dict(), 'quantum distance certified exhaustively')


@crss_group.command('oracle-dim')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Stabilizer code JSON, stdin by default.')
@pass_config
@reports
def crss_oracle_dim(settings, stream):
    """Compute the code space dimension from the explicit projector."""
    code = crss.stabilizer_from_dict(load_json(stream))
    dimension = crss.eigenspace_oracle(code, settings.ORACLE_BOUND)
    expected = code.field.q ** code.k
    diagnostics = []
    if dimension == expected:
        diagnostics.append('oracle dimension equals q^k')
    return ok({'n': code.n, 'k': code.k, 'q': code.field.q,
               'dimension': dimension, 'expected': expected}, *diagnostics)


@crss_group.command('five-qubit')
@pass_config
@reports
def crss_five_qubit(settings):
    """Build the [[5,1,3]] code."""
    return _stabilizer_result(crss.five_qubit_code(), settings)


@crss_group.command('perfect-tensor')
@click.option('--q', 'q', type=int, required=True, help='Odd field order.')
@pass_config
@reports
def crss_perfect_tensor(settings, q):
    """Build the [[q, 1, (q+1)/2]] perfect tensor code."""
    return _stabilizer_result(
        crss.perfect_tensor_code(_field(settings, q)), settings)


@crss_group.command('quantum-rs')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@pass_config
@reports
def crss_quantum_rs(settings, q):
    """Build the [[q^2+1, q^2-2q+1, q+1]] quantum Reed-Solomon code."""
    return _stabilizer_result(
        crss.quantum_rs_code(_field(settings, q)), settings)


@crss_group.command('qutrit')
@reports
def crss_qutrit():
    """Show the qutrit perfect tensor code."""
    code = crss.qutrit_perfect_code()
    payload = code.to_dict()
    payload['gram'] = code.gram().tolist()
    diagnostics = []
    if code.is_isometry():
        diagnostics.append('encoding is an isometry')
    if crss.is_perfect_tensor(code.tensor()):
        diagnostics.append('tensor is perfect')
    return ok(payload, *diagnostics)


########
# Tree #
########

@cli.group('tree', cls=CommandGroup)
def tree_group():
    """Holographic codes on Bruhat-Tits trees."""


@tree_group.command('encode')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@click.option('--k', 'k', type=int, required=True, help='Symbols per vertex.')
@click.option('--depth', type=int, required=True, help='Tree depth.')
@click.option('--inputs', callback=validate_int_list, required=True,
              help='Root inputs then k-1 per internal vertex.')
@pass_config
@reports
def tree_encode(settings, q, k, depth, inputs):
    """Encode inputs into the boundary of a tree."""
    field_ = _field(settings, q)
    tree = holo_tree.tree_build(field_, depth, settings.TREE_DEPTH_BOUND)
    boundary = holo_tree.holographic_encode(
        tree, k, finite_field.decode_vector(field_, inputs))
    return ok({
        'boundary': finite_field.encode_vector(field_, boundary),
        'leaves': [list(address) for address in tree.leaves()],
    })


@tree_group.command('matrix')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@click.option('--k', 'k', type=int, required=True, help='Symbols per vertex.')
@click.option('--depth', type=int, required=True, help='Tree depth.')
@pass_config
@reports
def tree_matrix(settings, q, k, depth):
    """Show the end to end encoding matrix of a tree."""
    field_ = _field(settings, q)
    tree = holo_tree.tree_build(field_, depth, settings.TREE_DEPTH_BOUND)
    encoder = holo_tree.tree_map(tree, k)
    diagnostics = []
    if encoder.rank == encoder.input_dimension:
        diagnostics.append('encoder is injective')
    return ok({
        'vertices': len(tree.vertices),
        'input_dimension': encoder.input_dimension,
        'rank': encoder.rank,
        'boundary': [list(address) for address in encoder.boundary],
        'matrix': finite_field.encode_matrix(field_, encoder.matrix),
    }, *diagnostics)


@tree_group.command('lift')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@click.option('--depth', type=int, required=True, help='Tree depth.')
@pass_config
@reports
def tree_lift(settings, q, depth):
    """Show the quantum code on the tree of the quadratic extension."""
    lift = holo_tree.quantum_tree_lift(
        _field(settings, q), depth, settings.TREE_DEPTH_BOUND)
    code = lift.vertex_code
    note = _quantum_distance_or_note(code, settings)
    return ok({
        'q': lift.field.q,
        'extension': lift.extension.to_dict(),
        'vertices': len(lift.tree.vertices),
        'vertex_code': {'n': code.n, 'k': code.k, 'dQ': code.distance},
        'matchings': lift.matchings,
        'subtree_legs': lift.subtree_legs,
        'subtree_vertices': len(holo_tree.subtree_vertices(lift)),
    }, note)


###########
# Mumford #
###########

@cli.group('mumford', cls=CommandGroup)
def mumford_group():
    """Codes on graphs of glued projective lines."""


def _mumford_graph(stream):
    data = load_json(stream)
    try:
        field_ = finite_field.field_from_dict(data['field'])
    except (KeyError, TypeError):
        raise MalformedInput('a Mumford graph needs a "field"')
    return holo_tree.mumford_from_dict(field_, data)


@mumford_group.command('code')
@click.option('--k', 'k', type=int, required=True, help='Symbols per line.')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Graph JSON, stdin by default.')
@reports
def mumford_code(k, stream):
    """Build the code of polynomials agreeing along the gluing."""
    graph = _mumford_graph(stream)
    report = holo_tree.mumford_code(graph, k)
    diagnostics = ['b_1 = {}'.format(graph.betti_number())]
    if report.solution_dimension == report.expected_dimension:
        diagnostics.append('gluing constraints independent')
    payload = report.code.to_dict()
    payload.update({
        'solution_dimension': report.solution_dimension,
        'expected_dimension': report.expected_dimension,
        'constraint_rank': report.constraint_rank,
        'free_legs': [list(leg) for leg in report.free_legs],
    })
    return ok(payload, *diagnostics)


@mumford_group.command('extend')
@click.option('--k', 'k', type=int, required=True, help='Symbols per line.')
@click.option('--depth', type=int, required=True, help='Tree depth.')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Graph JSON, stdin by default.')
@pass_config
@reports
def mumford_extend(settings, k, depth, stream):
    """Attach coded trees to the free legs of a graph."""
    graph = _mumford_graph(stream)
    encoder = holo_tree.mumford_holographic_extend(
        graph, k, depth, settings.TREE_DEPTH_BOUND)
    return ok({
        'input_dimension': encoder.input_dimension,
        'rank': encoder.rank,
        'boundary': [list(address) for address in encoder.boundary],
        'matrix': finite_field.encode_matrix(graph.field, encoder.matrix),
    })


##########
# Tiling #
##########

@cli.group('tiling', cls=CommandGroup)
def tiling_group():
    """The {5,4} pentagon tiling."""


@tiling_group.command('census')
@click.option('--n', 'n', type=int, required=True, help='Last step.')
@reports
def tiling_census(n):
    """Count the tiles added at every growth step."""
    return ok([step._asdict() for step in surface_tiling.pentagon_census(n)])


@tiling_group.command('region')
@click.option('--n', 'n', type=int, required=True, help='Rings to grow.')
@pass_config
@reports
def tiling_region(settings, n):
    """Grow a disk of pentagons and print its complex."""
    region = surface_tiling.region_build(n, settings.REGION_DEPTH_BOUND)
    payload = region.to_dict()
    payload['steps'] = [step._asdict() for step in region.step_counts]
    return ok(payload, 'Euler characteristic {}'.format(
        region.euler_characteristic()))


@tiling_group.command('triangle')
@click.option('--a', 'a', type=int, required=True, help='First order.')
@click.option('--b', 'b', type=int, required=True, help='Second order.')
@click.option('--c', 'c', type=int, required=True, help='Third order.')
@reports
def tiling_triangle(a, b, c):
    """Describe the hyperbolic triangle group of type (a, b, c)."""
    group = surface_tiling.triangle_group_data(a, b, c)
    return ok({
        'orders': list(group.orders),
        'ell': group.ell,
        'generators': list(group.generators),
        'relations': list(group.relations),
        'euler_sum': str(group.euler_sum),
    }, 'hyperbolic')


@tiling_group.command('vertex-poly')
@click.option('--a', 'a', type=int, required=True, help='Branching order.')
@click.option('--ell', type=int, required=True, help='Modulus.')
@click.option('--alpha', type=int, help='Input symbol, every one by default.')
@click.option('--coeffs', callback=validate_int_list,
              help='a coefficients; the whole superposition by default.')
@reports
def tiling_vertex_poly(a, ell, alpha, coeffs):
    """Encode with the vertex polynomial code over Z/ellZ."""
    code = surface_tiling.VertexPolyCode(a, ell)
    if coeffs is not None:
        return ok({'output': list(code.encode(alpha or 0, coeffs))})
    if alpha is None:
        alphas, table = range(ell), code.table()
    else:
        alphas = [alpha % ell]
        table = {alphas[0]: Counter(code.superposition(alphas[0]))}
    return ok({
        'a': a,
        'ell': ell,
        'table': [
            {'alpha': value, 'terms': [
                {'output': list(output), 'multiplicity': count}
                for output, count in sorted(table[value].items())]}
            for value in alphas
        ],
    })


def _surface_result(complex_, settings):
    report = surface_tiling.surface_code(complex_, settings.SEARCH_BOUND)
    return ok({
        'q': complex_.field.q,
        'n': report.n,
        'k': report.k,
        'dQ': report.distance,
        'x_distance': report.x_distance,
        'z_distance': report.z_distance,
        'vertex_rank': report.vertex_rank,
        'face_rank': report.face_rank,
        'homology': list(report.homology),
    }, 'vertex and face rows orthogonal')


@cli.group('surface', cls=CommandGroup)
def surface_group():
    """Homological codes of surfaces."""


@surface_group.command('code')
@click.option('--q', 'q', type=int, help='Field order, 2 by default.')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Complex JSON, stdin by default.')
@pass_config
@reports
def surface_code(settings, q, stream):
    """Build the surface code of a complex."""
    field_ = _field(settings, q or settings.DEFAULT_SURFACE_Q)
    complex_ = surface_tiling.complex_from_dict(load_json(stream), field_)
    return _surface_result(complex_, settings)


@cli.command('toric')
@click.option('--L', 'size', type=int, required=True, help='Torus size.')
@click.option('--q', 'q', type=int, help='Field order, 2 by default.')
@pass_config
@reports
def toric(settings, size, q):
    """Build the toric code on an L x L torus."""
    field_ = _field(settings, q or settings.DEFAULT_SURFACE_Q)
    return _surface_result(surface_tiling.toric_code(size, field_), settings)


############
# Building #
############

@cli.group('building', cls=CommandGroup)
def building_group():
    """Codes on the link of a rank 2 building."""


@building_group.command('link')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@pass_config
@reports
def building_link(settings, q):
    """Show the point/line incidence graph of P^2."""
    link = proj_geom.link_graph(_field(settings, q))
    payload = link.to_dict()
    payload['vertex_count'] = link.graph.number_of_nodes()
    payload['edge_count'] = link.graph.number_of_edges()
    return ok(payload)


@building_group.command('code')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@click.option('--m', 'm', type=int, required=True, help='Degree.')
@click.option('--blowup', is_flag=True,
              help='Evaluate on the blow-up instead of P^2.')
@pass_config
@reports
def building_code(settings, q, m, blowup):
    """Build the evaluation code of degree m forms."""
    field_ = _field(settings, q)
    if blowup:
        code = building.blowup_evaluation_code(field_, m)
    else:
        code = building.p2_evaluation_code(field_, m)
    distance, note = _distance_or_note(code, settings)
    payload = code.to_dict()
    payload['monomials'] = building.SectionSpace(field_, m).monomial_names()
    diagnostics = [note]
    bound = code.n - m * (q + 1)
    if not blowup and distance is not None and distance >= bound:
        diagnostics.append('distance meets the bound n - m(q+1) = {}'.format(
            bound))
    return ok(payload, *diagnostics)


@building_group.command('propagate')
@click.option('--input', 'stream', type=click.File('r'), default='-',
              help='Constraints JSON, stdin by default.')
@reports
def building_propagate(stream):
    """Propagate known line outputs to a new line."""
    space, known, target = building.propagation_from_dict(load_json(stream))
    result = building.propagate_cell(space, known, target)
    return ok(building.propagation_to_dict(space.field, result))


@building_group.command('local')
@click.option('--q', 'q', type=int, required=True, help='Field order.')
@click.option('--m', 'm', type=int, required=True, help='Degree.')
@click.option('--section', callback=validate_int_list, required=True,
              help='Coefficients of the root section.')
@pass_config
@reports
def building_local(settings, q, m, section):
    """Deposit the outputs of a section on the whole link."""
    space = building.SectionSpace(_field(settings, q), m)
    local = building.building_local_code(space, space.section(
        finite_field.decode_vector(space.field, section)))
    return ok(building.local_code_to_dict(space.field, local),
              '{} flags and {} line pairs consistent'.format(
                  local.flags_checked, local.pairs_checked))


#############
# Reproduce #
#############

@cli.command('reproduce')
@click.option(
    '--table',
    'tables',
    multiple=True,
    type=click.Choice(list(reproduce.CHECKS)),
    help='Table to reproduce, every table by default.',
)
@pass_config
@reports
def reproduce_command(settings, tables):
    """Run the acceptance checks."""
    records, summary = reproduce.run_checks(tables or None, settings)
    payload = {
        'checks': [record._asdict() for record in records],
        'summary': dict(summary),
    }
    diagnostics = ['{}: {}'.format(*status) for status in summary.items()]
    if summary.get('failed'):
        return CommandResult('error', payload, diagnostics, 'AcceptanceFailed')
    return ok(payload, *diagnostics)
