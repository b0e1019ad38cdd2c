# coding=utf-8
"""Stabilizer codes from classical codes.

Error operators are ``E_{a,b} = xi**phase T_a R_b`` acting on the q-ary
qudits ``|x>``, ``x`` in F_q^n, with::

    T_a |x> = |x - a>        R_b |x> = xi**Tr(x . b) |x>

and ``xi`` a primitive p-th root of unity.  With this convention
``T R = xi R T`` and ``E_{a,b} E_{a',b'} = xi**-Tr(b . a') E_{a+a',b+b'}``.

A stabilizer code is stored through its symplectic code: the F_q-linear
span of the ``(a | b)`` rows of its generators, a code of length 2n.
"""
import itertools
import logging
from collections import namedtuple

import numpy as np

from holocodes import cyclotomic, default_config
from holocodes.errors import (
    FieldMismatch,
    LengthMismatch,
    MalformedInput,
    NotHermitianSelfOrthogonal,
    NotNested,
    NotSelfOrthogonal,
    OracleBoundExceeded,
)
from holocodes.finite_field import (
    as_ints,
    decode_vector,
    encode_vector,
    field_create,
    field_from_dict,
    field_from_order,
)
from holocodes.linalg import hstack, min_weight_outside
from holocodes.linear_codes import (
    EvaluationSpec,
    LinearCode,
    dual_euclidean,
    dual_hermitian,
    is_hermitian_self_dual,
    is_hermitian_self_orthogonal,
    rs_projective,
    selfdual_grs_code,
    stack_codes,
)
from holocodes.proj_geom import p1_points


logger = logging.getLogger(__name__)

Detectability = namedtuple('Detectability', 'detectable scalar')
Detectability.__doc__ = """Outcome of projecting an error onto a code.

``scalar`` holds the coordinates of lambda (see :mod:`holocodes.cyclotomic`)
as fractions, or ``None`` when the error is not detectable.
"""


class ErrorOperator(object):
    """The generalized Pauli operator ``xi**phase T_a R_b``."""

    def __init__(self, field, a, b, phase=0):
        if not (field.owns(a) and field.owns(b)):
            raise FieldMismatch('error vectors must live in GF({})'.format(
                field.q))
        if a.shape != b.shape or a.ndim != 1:
            raise LengthMismatch('a and b have shapes {} and {}'.format(
                a.shape, b.shape))
        self.field = field
        self.a = a
        self.b = b
        self.phase = int(phase) % field.p

    @classmethod
    def identity(cls, field, n):
        return cls(field, field.zeros(n), field.zeros(n))

    def __repr__(self):
        return 'ErrorOperator(a={}, b={}, phase={})'.format(
            as_ints(self.a).tolist(), as_ints(self.b).tolist(), self.phase)

    def __eq__(self, other):
        return (
            isinstance(other, ErrorOperator) and
            self.field == other.field and
            self.phase == other.phase and
            np.array_equal(as_ints(self.a), as_ints(other.a)) and
            np.array_equal(as_ints(self.b), as_ints(other.b))
        )

    def __ne__(self, other):
        return not self == other

    def __mul__(self, other):
        """Compose two operators, ``self`` acting last."""
        _check_compatible(self, other)
        phase = self.phase + other.phase - int(
            np.dot(self.b, other.a).field_trace())
        return ErrorOperator(self.field, self.a + other.a, self.b + other.b,
                             phase)

    @property
    def n(self):
        return self.a.size

    @property
    def weight(self):
        """Return the number of qudits where the operator acts."""
        return int(np.count_nonzero(as_ints(self.a) | as_ints(self.b)))

    def commutes_with(self, other):
        return symplectic_pairing(self, other) == 0

    def to_dict(self):
        return {
            'a': encode_vector(self.field, self.a),
            'b': encode_vector(self.field, self.b),
            'phase': self.phase,
        }


def error_from_dict(field, data):
    """Return the error operator described by its JSON form."""
    try:
        return ErrorOperator(
            field,
            decode_vector(field, data['a']),
            decode_vector(field, data['b']),
            data.get('phase', 0),
        )
    except (KeyError, TypeError, AttributeError):
        raise MalformedInput('not an error operator: {!r}'.format(data))


def _check_compatible(first, second):
    if first.field != second.field:
        raise FieldMismatch('operators act on different fields')
    if first.n != second.n:
        raise LengthMismatch('operators act on {} and {} qudits'.format(
            first.n, second.n))


def _pair(x):
    if isinstance(x, ErrorOperator):
        return x.a, x.b
    return x


def symplectic_pairing(x, y):
    """Return ``Tr(a . b' - a' . b)`` as an integer in ``[0, p)``.

    :param x: an :class:`ErrorOperator` or a pair ``(a, b)``.
    :param y: likewise.
    """
    a, b = _pair(x)
    a2, b2 = _pair(y)
    if not a.shape == b.shape == a2.shape == b2.shape:
        raise LengthMismatch('cannot pair vectors of shapes {}'.format(
            [a.shape, b.shape, a2.shape, b2.shape]))
    if type(a) is not type(a2):
        raise FieldMismatch('cannot pair vectors of different fields')
    return int((np.dot(a, b2) - np.dot(a2, b)).field_trace())


def symplectic_gram(code):
    """Return ``A B^T - B A^T`` for the generator ``(A | B)`` of ``code``."""
    n = code.n // 2
    if code.k == 0:
        return code.field.zeros((0, 0))
    a, b = code.generator[:, :n], code.generator[:, n:]
    return a @ b.T - b @ a.T


class StabilizerCode(object):
    """An [[n, k, d_Q]]_q stabilizer code.

    The generators are the F_p-basis ``gamma_i * c_j`` of the symplectic
    code, where ``c_j`` are the rows of its generator and ``gamma_i`` the
    power basis of F_q.
    """

    def __init__(self, symplectic, notes=()):
        field = symplectic.field
        n = symplectic.n // 2
        self.field = field
        self.symplectic = symplectic
        self.n = n
        self.k = n - symplectic.k
        self.generators = [
            ErrorOperator(field, gamma * row[:n], gamma * row[n:])
            for row in symplectic.generator
            for gamma in field.basis
        ]
        self.notes = list(notes)
        self._distance = None

    def __repr__(self):
        return 'StabilizerCode([[{}, {}, {}]]_{})'.format(
            self.n, self.k, self._distance, self.field.q)

    @property
    def distance(self):
        """Return the memoized quantum distance or ``None``."""
        return self._distance

    def parameters(self):
        return self.n, self.k, self._distance

    def to_dict(self):
        return {
            'field': self.field.to_dict(),
            'q': self.field.q,
            'n': self.n,
            'k': self.k,
            'dQ': self._distance,
            'generators': [
                generator.to_dict() for generator in self.generators],
        }


def stabilizer_from_dict(data):
    """Return the stabilizer code described by its JSON form."""
    try:
        if 'field' in data:
            field = field_from_dict(data['field'])
        else:
            field = field_from_order(int(data['q']))
        n = int(data['n'])
        generators = [error_from_dict(field, entry)
                      for entry in data['generators']]
    except (KeyError, TypeError, ValueError):
        raise MalformedInput('not a stabilizer code description')
    if any(generator.n != n for generator in generators):
        raise LengthMismatch('generators do not act on {} qudits'.format(n))
    if generators:
        rows = field.gf(np.stack([
            np.concatenate([as_ints(g.a), as_ints(g.b)])
            for g in generators
        ]))
    else:
        rows = field.zeros((0, 2 * n))
    code = crss_self_orthogonal(LinearCode(field, rows))
    if data.get('dQ') is not None:
        code._distance = int(data['dQ'])
    return code


def crss_self_orthogonal(code, notes=()):
    """Return the stabilizer code of a symplectically self-orthogonal code.

    :param code: a code of length 2n over F_q, rows ``(a | b)``.
    """
    if code.n % 2:
        raise LengthMismatch('symplectic codes have even length, got {}'
                             .format(code.n))
    if np.any(as_ints(symplectic_gram(code))):
        raise NotSelfOrthogonal(
            '{!r} is not symplectically self-orthogonal'.format(code))
    stabilizer = StabilizerCode(code, notes)
    logger.debug('Built %r from %r', stabilizer, code)
    return stabilizer


def quantum_distance(code, search_bound=default_config.SEARCH_BOUND):
    """Return ``min{w(a, b) : (a, b) in C^perp minus C}``.

    ``C^perp`` is the symplectic dual of the symplectic code ``C``.  When the
    two coincide (k = 0) the least weight of a nonzero element of ``C`` is
    returned, the usual distance of a stabilizer state.
    """
    if code.distance is not None:
        return code.distance
    weight, _ = _distance_search(code, search_bound)
    code._distance = weight
    logger.debug('Quantum distance of %r is %d', code, weight)
    return weight


def logical_witness(code, search_bound=default_config.SEARCH_BOUND):
    """Return a least weight error in ``C^perp`` minus ``C``."""
    _, witness = _distance_search(code, search_bound)
    n = code.n
    return ErrorOperator(code.field, witness[:n], witness[n:])


def _distance_search(code, search_bound):
    n = code.n
    symplectic = code.symplectic
    groups = [(i, n + i) for i in range(n)]
    if symplectic.k:
        a = symplectic.generator[:, :n]
        b = symplectic.generator[:, n:]
        parity = hstack(-b, a)
    else:
        parity = code.field.zeros((0, 2 * n))
    found = min_weight_outside(parity, symplectic.generator, groups,
                               search_bound)
    if found is None:
        found = min_weight_outside(
            dual_euclidean(symplectic).generator,
            code.field.zeros((0, 2 * n)),
            groups,
            search_bound,
        )
    return found


def _symplectic_half(code, z_part=False):
    """Return the code of ``(c | 0)`` rows, or ``(0 | c)`` for the Z part."""
    field = code.field
    rows = code.generator if code.k else field.zeros((0, code.n))
    zeros = field.zeros(rows.shape)
    halves = (zeros, rows) if z_part else (rows, zeros)
    return LinearCode(field, hstack(*halves))


def crss_nested_pair(first, second, pairing='euclidean'):
    """Return the stabilizer code of a nested pair ``first <= second``.

    With the Euclidean pairing the X part comes from ``first`` and the Z part
    from the dual of ``second``, giving
    ``[[n, k2 - k1, min(d(C2 - C1), d(C1^perp - C2^perp))]]_q``.

    With the Hermitian pairing the codes live over F_{q^2}, ``second`` must
    be the Hermitian dual of ``first``, and the code is
    ``crss_hermitian(first)``, an ``[[n, k2 - k1]]_q`` code.
    """
    if first.field != second.field or first.n != second.n:
        raise LengthMismatch('{!r} and {!r} are not comparable'.format(
            first, second))
    if not second.contains(first):
        raise NotNested('{!r} is not contained in {!r}'.format(first, second))
    if pairing == 'hermitian':
        if dual_hermitian(first) != second:
            raise NotNested(
                '{!r} is not the Hermitian dual of {!r}'.format(
                    second, first))
        return crss_hermitian(first)
    if pairing != 'euclidean':
        raise MalformedInput('unknown pairing {!r}'.format(pairing))
    return crss_self_orthogonal(stack_codes(
        _symplectic_half(first),
        _symplectic_half(dual_euclidean(second), z_part=True)))


def crss_hermitian(code):
    """Return the q-ary stabilizer code of a Hermitian self-orthogonal code.

    Every codeword ``u`` over F_{q^2} is written ``u = a + gamma b`` with
    ``a, b`` over F_q and ``gamma`` the least primitive element, which gives
    rows ``(a | b)``.  Since
    ``u . conj(v) - conj(u) . v = (conj(gamma) - gamma)(a . b' - b . a')``
    the expansion of a Hermitian self-orthogonal code is symplectically
    self-orthogonal.
    """
    ext = code.field
    q = ext.conjugation_exponent
    if not is_hermitian_self_orthogonal(code):
        raise NotHermitianSelfOrthogonal(
            '{!r} is not contained in its Hermitian dual'.format(code))
    sub = field_create(ext.p, ext.r // 2)
    embedding = sub.subfield_embedding(ext)
    gamma = ext.primitive_element()
    combined = as_ints(embedding[:, None] + gamma * embedding[None, :])
    alpha_of = np.zeros(ext.q, dtype=np.int64)
    beta_of = np.zeros(ext.q, dtype=np.int64)
    alpha_of[combined] = np.arange(q)[:, None]
    beta_of[combined] = np.arange(q)[None, :]
    rows = []
    for row in code.generator:
        for multiplier in (ext.one, gamma):
            values = as_ints(multiplier * row)
            rows.append(np.concatenate([alpha_of[values], beta_of[values]]))
    if rows:
        symplectic = LinearCode(sub, sub.gf(np.stack(rows)))
    else:
        symplectic = LinearCode(sub, sub.zeros((0, 2 * code.n)))
    notes = []
    if is_hermitian_self_dual(code):
        notes.append('input is Hermitian self-dual')
    return crss_self_orthogonal(symplectic, notes)


def five_qubit_code():
    """Return the [[5,1,3]]_2 code of ``XZZXI`` and its cyclic shifts."""
    field = field_create(2)
    a = np.array([1, 0, 0, 1, 0])
    b = np.array([0, 1, 1, 0, 0])
    rows = np.stack([
        np.concatenate([np.roll(a, shift), np.roll(b, shift)])
        for shift in range(5)
    ])
    return crss_self_orthogonal(LinearCode(field, field.gf(rows)))


def quantum_grs_code(field, n, k):
    """Return the [[n, n - 2k, k + 1]]_q quantum GRS code.

    It is :func:`crss_hermitian` of the Hermitian self-orthogonal code
    ``C_{w,k}`` over F_{q^2} on the first ``n`` elements of F_q.
    """
    code, _ = selfdual_grs_code(field, n, k)
    return crss_hermitian(code)


def perfect_tensor_code(field):
    """Return the [[q, 1, (q+1)/2]]_q perfect tensor code for odd q."""
    if field.q % 2 == 0:
        raise MalformedInput('perfect tensor codes need an odd q')
    return quantum_grs_code(field, field.q, (field.q - 1) // 2)


def quantum_rs_code(field):
    """Return the [[q^2+1, q^2-2q+1, q+1]]_q quantum Reed-Solomon code.

    Its classical layer evaluates polynomials of degree below q at every
    point of P^1(F_{q^2}), which is Hermitian self-orthogonal.
    """
    ext = field.quadratic_extension()
    spec = EvaluationSpec(ext, p1_points(ext), None, field.q)
    return crss_hermitian(rs_projective(spec))


##########
# Oracle #
##########

def _states(field, n):
    dimension = field.q ** n
    indices = np.arange(dimension, dtype=np.int64)
    return field.gf((indices[:, None] // field.q ** np.arange(n)) % field.q)


def _state_index(field, states):
    return as_ints(states) @ (field.q ** np.arange(states.shape[1]))


def operator_monomial(operator, hermitian=False):
    """Return the monomial matrix of an error operator.

    :param hermitian: for p = 2, multiply by ``i**Tr(a . b)`` so that the
        operator squares to the identity.
    """
    field = operator.field
    order = cyclotomic.root_order(field.p)
    unit = order // field.p
    states = _states(field, operator.n)
    perm = _state_index(field, states - operator.a)
    phases = as_ints((states @ operator.b).field_trace())
    exps = unit * (phases + operator.phase)
    if hermitian and field.p == 2:
        exps = exps + int(np.dot(operator.a, operator.b).field_trace())
    return cyclotomic.Monomial(perm, exps % order, order)


def operator_matrix(operator):
    """Return the dense cyclotomic matrix of an error operator."""
    return cyclotomic.dense(operator_monomial(operator))


def _check_oracle_bound(code, oracle_bound):
    dimension = code.field.q ** code.n
    if dimension > oracle_bound:
        raise OracleBoundExceeded(
            'Hilbert space of dimension {} exceeds the bound {}'.format(
                dimension, oracle_bound))


def stabilizer_group(code, oracle_bound=default_config.ORACLE_BOUND):
    """Return every element of the stabilizer group as a monomial."""
    _check_oracle_bound(code, oracle_bound)
    field = code.field
    order = cyclotomic.root_order(field.p)
    elements = [cyclotomic.identity(field.q ** code.n, order)]
    for generator in code.generators:
        monomial = operator_monomial(generator, hermitian=True)
        powers = [cyclotomic.identity(field.q ** code.n, order)]
        for _ in range(field.p - 1):
            powers.append(cyclotomic.compose(powers[-1], monomial))
        elements = [
            cyclotomic.compose(element, power)
            for element, power in itertools.product(elements, powers)
        ]
    logger.debug('Stabilizer group of %r has %d elements', code,
                 len(elements))
    return elements


def eigenspace_oracle(code, oracle_bound=default_config.ORACLE_BOUND):
    """Return the dimension of the joint +1 eigenspace of the generators.

    The projector is the group average, so the dimension is the average of
    the traces of the group elements.
    """
    return _average_trace(stabilizer_group(code, oracle_bound))


def _average_trace(elements):
    total = sum(cyclotomic.monomial_trace(element) for element in elements)
    reduced = cyclotomic.reduce(total)
    if np.any(reduced[1:]) or reduced[0] % len(elements):
        raise ValueError('group trace {} is not a multiple of {}'.format(
            reduced.tolist(), len(elements)))
    return int(reduced[0]) // len(elements)


def detectability_check(code, error, oracle_bound=default_config.ORACLE_BOUND):
    """Tell whether ``P E P`` is a multiple of the code projector ``P``.

    With ``Q`` the sum of the group elements (``P = Q / |G|``) the test is
    ``|G| dim QEQ = tr(QEQ) Q``, in which case
    ``lambda = tr(QEQ) / (|G|^2 dim)``.
    """
    if error.field != code.field or error.n != code.n:
        raise LengthMismatch('{!r} does not act on {!r}'.format(error, code))
    elements = stabilizer_group(code, oracle_bound)
    size = code.field.q ** code.n
    order = cyclotomic.root_order(code.field.p)
    projector = cyclotomic.accumulate(elements, size, order)
    dimension = _average_trace(elements)
    projected = cyclotomic.times_monomial(projector,
                                          operator_monomial(error))
    sandwich = np.zeros_like(projector)
    for element in elements:
        sandwich += cyclotomic.times_monomial(projected, element)
    trace = cyclotomic.trace(sandwich)
    left = len(elements) * dimension * sandwich
    right = cyclotomic.scalar_times(trace, projector)
    if not cyclotomic.equal(left, right):
        return Detectability(False, None)
    return Detectability(True, cyclotomic.as_fractions(
        trace, len(elements) ** 2 * dimension))


#################
# Isometry code #
#################

class IsometryCode(object):
    """An encoding map ``|i> -> sum_j table[i, j] |j>`` with integer entries.

    Output basis states are indexed by their digits, most significant first,
    so ``|bcd>`` is column ``9b + 3c + d`` for qutrits.
    """

    def __init__(self, field, in_qudits, out_qudits, table):
        self.field = field
        self.in_qudits = in_qudits
        self.out_qudits = out_qudits
        self.table = np.asarray(table, dtype=np.int64)
        expected = (field.q ** in_qudits, field.q ** out_qudits)
        if self.table.shape != expected:
            raise LengthMismatch('table has shape {}, expected {}'.format(
                self.table.shape, expected))

    def gram(self):
        """Return the inner products of the encoded basis states."""
        return self.table @ self.table.T

    def is_isometry(self):
        """Tell whether the map is an isometry up to normalization."""
        gram = self.gram()
        return bool(
            gram[0, 0] > 0 and
            np.array_equal(gram, gram[0, 0] * np.eye(len(gram), dtype=int))
        )

    def tensor(self):
        """Return the map as a tensor with one index per leg."""
        legs = self.in_qudits + self.out_qudits
        return self.table.reshape((self.field.q,) * legs)

    def reduced_state(self, state, site):
        """Return the unnormalized one-site reduced state of an encoding."""
        vector = self.table[state].reshape((self.field.q,) * self.out_qudits)
        matrix = np.moveaxis(vector, site, 0).reshape(self.field.q, -1)
        return matrix @ matrix.T

    def encoding(self, state):
        """Return ``{ket: coefficient}`` for one encoded basis state."""
        kets = {}
        for column in np.flatnonzero(self.table[state]):
            digits = np.base_repr(int(column), self.field.q).zfill(
                self.out_qudits)
            kets[digits] = int(self.table[state, column])
        return kets

    def to_dict(self):
        return {
            'q': self.field.q,
            'in_qudits': self.in_qudits,
            'out_qudits': self.out_qudits,
            'map': [self.encoding(state) for state in range(len(self.table))],
        }


def qutrit_perfect_code():
    """Return the qutrit code ``|a> -> sum_x |x, x + a, x + 2a>``."""
    field = field_create(3)
    table = np.zeros((3, 27), dtype=np.int64)
    for a in range(3):
        for x in range(3):
            table[a, 9 * x + 3 * ((x + a) % 3) + (x + 2 * a) % 3] = 1
    return IsometryCode(field, 1, 3, table)


def is_perfect_tensor(tensor):
    """Tell whether every split of at most half the legs is an isometry.

    The tensor has integer entries; for each subset ``A`` of the legs with
    ``|A| <= legs / 2`` the matrix from ``A`` to its complement must satisfy
    ``M^T M = c I`` with ``c > 0``.
    """
    tensor = np.asarray(tensor)
    legs = tensor.ndim
    for size in range(1, legs // 2 + 1):
        for subset in itertools.combinations(range(legs), size):
            rest = [leg for leg in range(legs) if leg not in subset]
            rows = int(np.prod([tensor.shape[leg] for leg in rest]))
            matrix = np.transpose(tensor, rest + list(subset)).reshape(
                rows, -1)
            gram = matrix.T @ matrix
            if gram[0, 0] <= 0 or not np.array_equal(
                    gram, gram[0, 0] * np.eye(len(gram), dtype=int)):
                return False
    return True
