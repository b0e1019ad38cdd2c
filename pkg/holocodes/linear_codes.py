# coding=utf-8
"""Linear codes and (generalized) Reed-Solomon constructions."""
import logging
from collections import namedtuple

import numpy as np

from holocodes import default_config
from holocodes.errors import (
    DegreeTooLarge,
    DuplicatePoints,
    FieldMismatch,
    LengthMismatch,
    MalformedInput,
    NoWeightRoot,
    SearchBoundExceeded,
    ZeroWeight,
)
from holocodes.finite_field import (
    as_ints,
    decode_matrix,
    encode_matrix,
    field_from_dict,
    field_of,
)
from holocodes.linalg import in_span, kernel, rref, vstack
from holocodes.proj_geom import ProjPoint


logger = logging.getLogger(__name__)

#: Messages encoded per batch by the exhaustive distance search
ENUMERATION_CHUNK = 4096

EvaluationSpec = namedtuple(
    'EvaluationSpec', 'field points weights degree_bound')
EvaluationSpec.__doc__ = """Data of an evaluation code.

``points`` are field elements (affine) or :class:`ProjPoint` (projective),
``weights`` a galois vector of nonzero multipliers or ``None`` for all ones
and ``degree_bound`` the number ``k`` of coefficients.
"""


class LinearCode(object):
    """A k-dimensional subspace of F_q^n.

    The generator is kept in reduced row echelon form so equal codes have
    equal generators.
    """

    def __init__(self, field, generator):
        if not field.owns(generator):
            raise FieldMismatch('generator is not a matrix over GF({})'
                                .format(field.q))
        self.field = field
        self.generator, self.pivots = rref(generator)
        self.n = generator.shape[1]
        self.k = self.generator.shape[0]
        self._min_distance = None

    def __repr__(self):
        return 'LinearCode([{}, {}]_{})'.format(self.n, self.k, self.field.q)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode) and
            self.field == other.field and
            self.n == other.n and
            self.k == other.k and
            np.array_equal(as_ints(self.generator),
                           as_ints(other.generator))
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field, self.n, as_ints(self.generator).tobytes()))

    def __contains__(self, vector):
        return in_span(self.generator, vector.reshape(1, -1))

    @property
    def min_distance(self):
        """Return the memoized minimum distance or ``None``."""
        return self._min_distance

    def contains(self, other):
        """Tell whether ``other`` is a subcode of this code."""
        if other.field != self.field or other.n != self.n:
            raise LengthMismatch('{!r} and {!r} are not comparable'.format(
                self, other))
        return in_span(self.generator, other.generator)

    def encode(self, message):
        """Return ``message @ generator``."""
        message = self.field.gf(message) if not self.field.owns(
            message) else message
        if message.shape != (self.k,):
            raise LengthMismatch('expected {} message symbols, got {}'.format(
                self.k, message.shape[0]))
        if self.k == 0:
            return self.field.zeros(self.n)
        return message @ self.generator

    def to_dict(self):
        return {
            'field': self.field.to_dict(),
            'n': self.n,
            'k': self.k,
            'generator': encode_matrix(self.field, self.generator),
            'min_distance': self._min_distance,
        }


def zero_code(field, n):
    """Return the zero code of length ``n``."""
    return LinearCode(field, field.zeros((0, n)))


def full_code(field, n):
    """Return the whole space F_q^n."""
    return LinearCode(field, field.gf.Identity(n))


def code_from_dict(data):
    """Return the code described by its JSON form."""
    try:
        field = field_from_dict(data['field'])
        generator = decode_matrix(field, data['generator'], data.get('n'))
    except (KeyError, TypeError):
        raise MalformedInput('not a code description')
    if 'n' in data and generator.shape[1] != data['n']:
        raise MalformedInput('generator has {} columns, n is {}'.format(
            generator.shape[1], data['n']))
    code = LinearCode(field, generator)
    if data.get('min_distance') is not None:
        code._min_distance = int(data['min_distance'])
    return code


def _check_spec(spec, projective):
    field = spec.field
    n = len(spec.points)
    k = spec.degree_bound
    keys = [
        point.coords if isinstance(point, ProjPoint) else int(point)
        for point in spec.points
    ]
    if any(isinstance(point, ProjPoint) != projective
           for point in spec.points):
        raise MalformedInput('points must all be {}'.format(
            'projective' if projective else 'affine'))
    if len(set(keys)) != n:
        raise DuplicatePoints('evaluation points repeat: {}'.format(keys))
    if k < 0 or k > n:
        raise DegreeTooLarge('k = {} exceeds n = {}'.format(k, n))
    weights = spec.weights
    if weights is None:
        weights = field.gf.Ones(n)
    if weights.shape != (n,):
        raise LengthMismatch('{} weights for {} points'.format(
            weights.shape[0], n))
    if np.any(as_ints(weights) == 0):
        raise ZeroWeight('weights must be nonzero')
    return weights


def rs_affine(spec):
    """Return the GRS code ``{(w_i f(x_i))}`` for ``deg f < k``.

    Row ``i`` of the generator evaluates the monomial ``x**i``.
    """
    weights = _check_spec(spec, projective=False)
    field = spec.field
    points = field.gf([int(x) for x in spec.points])
    rows = [weights * points ** i for i in range(spec.degree_bound)]
    generator = (
        field.gf(np.stack([as_ints(row) for row in rows])) if rows
        else field.zeros((0, len(spec.points)))
    )
    return LinearCode(field, generator)


def rs_projective(spec):
    """Return the GRS code ``{(w_i f(u_i, v_i))}`` on points of P^1.

    ``f(u, v) = sum(a_i u**i v**(k-1-i))`` is evaluated at the chart
    representatives ``(x, 1)`` and ``(1, 0)``, so an affine point receives
    ``sum(a_i x**i)`` and infinity receives ``a_(k-1)``.
    """
    weights = _check_spec(spec, projective=True)
    field = spec.field
    k = spec.degree_bound
    charts = [point.chart() for point in spec.points]
    u = field.gf([int(chart[0]) for chart in charts])
    v = field.gf([int(chart[1]) for chart in charts])
    rows = [weights * u ** i * v ** (k - 1 - i) for i in range(k)]
    generator = (
        field.gf(np.stack([as_ints(row) for row in rows])) if rows
        else field.zeros((0, len(spec.points)))
    )
    return LinearCode(field, generator)


def min_distance(code, search_bound=default_config.SEARCH_BOUND):
    """Return the minimum Hamming weight of a nonzero codeword.

    All ``q**k`` codewords are enumerated.  The zero code has no nonzero
    codeword and gives ``None``.  The result is memoized on the code.
    """
    if code.min_distance is not None:
        return code.min_distance
    if code.k == 0:
        return None
    q, k = code.field.q, code.k
    total = q ** k
    if total > search_bound:
        raise SearchBoundExceeded(
            '{} codewords exceed the search bound {}'.format(
                total, search_bound))
    powers = q ** np.arange(k, dtype=np.int64)
    best = code.n
    for start in range(1, total, ENUMERATION_CHUNK):
        indices = np.arange(start, min(start + ENUMERATION_CHUNK, total),
                            dtype=np.int64)
        messages = code.field.gf((indices[:, None] // powers) % q)
        weights = np.count_nonzero(as_ints(messages @ code.generator), axis=1)
        best = min(best, int(weights.min()))
        if best == 1:
            break
    logger.debug('Enumerated %d codewords of %r: d = %d', total, code, best)
    code._min_distance = best
    return best


def dual_euclidean(code):
    """Return ``{y : sum(c_i y_i) = 0 for every codeword c}``."""
    return LinearCode(code.field, kernel(_full_rows(code)))


def dual_hermitian(code):
    """Return ``{y : sum(c_i y_i**q) = 0 for every codeword c}``.

    The code lives over F_{q^2}; applying the conjugation to the defining
    equations turns them into ``conj(G) @ y = 0``.
    """
    field = code.field
    return LinearCode(field, kernel(field.conjugate(_full_rows(code))))


def _full_rows(code):
    if code.k == 0:
        return code.field.zeros((0, code.n))
    return code.generator


def hermitian_gram(code):
    """Return the matrix of Hermitian products of the generator rows."""
    field = code.field
    if code.k == 0:
        return field.zeros((0, 0))
    return code.generator @ field.conjugate(code.generator).T


def is_hermitian_self_orthogonal(code):
    """Tell whether ``code`` is contained in its Hermitian dual."""
    return not np.any(as_ints(hermitian_gram(code)))


def is_hermitian_self_dual(code):
    """Tell whether ``code`` equals its Hermitian dual."""
    return is_hermitian_self_orthogonal(code) and 2 * code.k == code.n


def selfdual_grs_weights(field, points):
    """Return weights with ``w_i**(q+1) = prod(x_i - x_j, j != i)**-1``.

    :param field: the field F_{q^2}.
    :param points: distinct elements of ``field``.
    :returns: a galois vector; each ``w_i`` is the least root in canonical
        order.
    """
    q = field.conjugation_exponent
    points = field.gf([int(x) for x in points])
    if len(set(as_ints(points).tolist())) != points.size:
        raise DuplicatePoints('evaluation points repeat')
    elements = field.elements()
    norms = elements ** (q + 1)
    weights = []
    for i in range(points.size):
        product = field.one
        for j in range(points.size):
            if j != i:
                product = product * (points[i] - points[j])
        target = product ** -1
        roots = np.flatnonzero(as_ints(norms) == int(target))
        if roots.size == 0:
            raise NoWeightRoot('{} has no {}-th root in GF({})'.format(
                int(target), q + 1, field.q))
        weights.append(int(elements[int(roots[0])]))
    return field.gf(weights)


def check_hermitian_selfduality_condition(w, points, k):
    """Tell whether ``sum(w_i**(q+1) x_i**(q j + l))`` vanishes for j, l < k.

    This is the power sum form of ``C_{w,k}`` being contained in its
    Hermitian dual.
    """
    if k == 0:
        return True
    field = field_of(w)
    q = field.conjugation_exponent
    points = field.gf([int(x) for x in points])
    if points.shape != w.shape:
        raise LengthMismatch('{} weights for {} points'.format(
            w.shape[0], points.shape[0]))
    norms = w ** (q + 1)
    for j in range(k):
        for ell in range(k):
            if np.sum(norms * points ** (q * j + ell)) != 0:
                return False
    return True


def selfdual_grs_code(field, n, k):
    """Return the Hermitian self-orthogonal GRS code ``C_{w,k}``.

    The code lives over the quadratic extension of ``field``; its points are
    the first ``n`` elements of ``field`` and its weights come from
    :func:`selfdual_grs_weights`.

    :returns: a ``(code, spec)`` tuple.
    """
    ext = field.quadratic_extension()
    if n > field.q:
        raise DegreeTooLarge('at most {} points lie in GF({})'.format(
            field.q, field.q))
    embedding = field.subfield_embedding(ext)
    points = embedding[:n]
    weights = selfdual_grs_weights(ext, points)
    spec = EvaluationSpec(ext, list(points), weights, k)
    return rs_affine(spec), spec


def stack_codes(first, second):
    """Return the sum of two codes of one length."""
    if first.field != second.field or first.n != second.n:
        raise LengthMismatch('{!r} and {!r} cannot be added'.format(
            first, second))
    return LinearCode(first.field, vstack(_full_rows(first),
                                          _full_rows(second)))
