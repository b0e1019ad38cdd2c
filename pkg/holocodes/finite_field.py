# coding=utf-8
"""Exact arithmetic in finite fields GF(p^r).

Fields are thin wrappers around :mod:`galois` field classes.  A field element
is a 0-d :class:`galois.FieldArray`; vectors and matrices are galois arrays of
the same class.  The integer representation of an element is
``sum(c_i * p**i)`` where ``c_i`` are its coordinates in the power basis
``1, g, ..., g**(r-1)`` of the modulus root ``g``, so sorting elements by
their integer value gives the canonical element order used everywhere else.
"""
import functools
import logging

import galois
import numpy as np

from holocodes import default_config
from holocodes.errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    MalformedInput,
    NonPrimeP,
    OddExtensionDegree,
    ReducibleModulus,
)


logger = logging.getLogger(__name__)

OPERATIONS = ('add', 'sub', 'mul', 'div', 'pow')


class Field(object):
    """The finite field with ``q = p**r`` elements.

    Use :func:`field_create` instead of instantiating this class directly so
    that equal parameters share one object.
    """

    def __init__(self, p, r, modulus, gf):
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = modulus
        self.gf = gf
        self.basis = tuple(gf(p ** i) for i in range(r))
        self._primitive = None

    def __repr__(self):
        return 'Field(p={}, r={}, modulus={})'.format(
            self.p, self.r, list(self.modulus))

    def __eq__(self, other):
        return (
            isinstance(other, Field) and
            (self.p, self.r, self.modulus) ==
            (other.p, other.r, other.modulus)
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __call__(self, value):
        """Return the element(s) with the given integer representation."""
        return self.gf(value)

    @property
    def zero(self):
        return self.gf(0)

    @property
    def one(self):
        return self.gf(1)

    def elements(self):
        """Return all elements in canonical order."""
        return self.gf.elements

    def nonzero_elements(self):
        """Return all nonzero elements in canonical order."""
        return self.gf.elements[1:]

    def zeros(self, shape):
        """Return a zero array of the given shape."""
        return self.gf.Zeros(shape)

    def owns(self, array):
        """Tell whether ``array`` is a galois array of this field."""
        return type(array) is self.gf

    def primitive_element(self):
        """Return the least primitive element in canonical order.

        Finding one proves that the multiplicative group is cyclic of order
        ``q - 1``.
        """
        if self._primitive is None:
            nonzero = self.nonzero_elements()
            orders = np.asarray(nonzero.multiplicative_order())
            first = np.flatnonzero(orders == self.q - 1)[0]
            self._primitive = nonzero[int(first)]
        return self._primitive

    @property
    def conjugation_exponent(self):
        """Return ``p**(r/2)``, the size of the index 2 subfield."""
        if self.r % 2:
            raise OddExtensionDegree(
                'GF({}) has odd degree {} over GF({})'.format(
                    self.q, self.r, self.p))
        return self.p ** (self.r // 2)

    def conjugate(self, array):
        """Apply the involution ``x -> x**sqrt(q)`` elementwise."""
        return array ** self.conjugation_exponent

    def subfield_elements(self):
        """Return the elements of the index 2 subfield in canonical order."""
        elements = self.elements()
        return elements[self.conjugate(elements) == elements]

    def quadratic_extension(self):
        """Return the field with ``q**2`` elements."""
        return field_create(self.p, 2 * self.r)

    def subfield_embedding(self, ext):
        """Return the images of this field's elements inside ``ext``.

        The result is indexed by integer representation.  The modulus root is
        sent to its least root in ``ext``.
        """
        if ext.p != self.p or ext.r % self.r:
            raise FieldMismatch(
                'GF({}) is not a subfield of GF({})'.format(self.q, ext.q))
        digits = np.array(
            [_digits(value, self.p, self.r) for value in range(self.q)],
            dtype=np.int64,
        )
        if self.r == 1:
            return ext.gf(digits[:, 0])
        modulus = galois.Poly(list(reversed(self.modulus)), field=ext.gf)
        roots = modulus.roots()
        root = roots[int(np.argmin(as_ints(roots)))]
        powers = root ** np.arange(self.r)
        return ext.gf(digits) @ powers

    def to_dict(self):
        """Return the JSON form of the field."""
        return {'p': self.p, 'r': self.r, 'modulus': list(self.modulus)}


def as_ints(array):
    """Return the integer representations of a galois array."""
    return np.array(array.view(np.ndarray), dtype=np.int64)


def _digits(value, base, length):
    """Return the ``length`` least significant base ``base`` digits."""
    digits = []
    for _ in range(length):
        value, digit = divmod(value, base)
        digits.append(digit)
    return digits


@functools.lru_cache(maxsize=None)
def _cached_field(p, r, modulus):
    if r == 1:
        gf = galois.GF(p)
    else:
        poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
        gf = galois.GF(p ** r, irreducible_poly=poly)
    logger.debug('Created GF(%d^%d) with modulus %s', p, r, modulus)
    return Field(p, r, modulus, gf)


def field_create(p, r=1, modulus=None,
                 size_bound=default_config.FIELD_SIZE_BOUND):
    """Create the field GF(p^r).

    :param p: the characteristic, a prime.
    :param r: the extension degree.
    :param modulus: optional coefficient list ``[c_0, ..., c_r]`` of a monic
        irreducible polynomial.  The lexicographically least one is used when
        omitted.  Degree one moduli all give the same prime field and are
        normalized to ``x``.
    :param size_bound: the largest accepted order.
    """
    if not isinstance(p, (int, np.integer)) or p < 2 or not galois.is_prime(
            int(p)):
        raise NonPrimeP('{} is not a prime'.format(p))
    if not isinstance(r, (int, np.integer)) or r < 1:
        raise MalformedInput('extension degree must be positive, got {}'
                             .format(r))
    p, r = int(p), int(r)
    if p ** r > size_bound:
        raise FieldTooLarge('GF({}^{}) exceeds the bound {}'.format(
            p, r, size_bound))
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        _check_modulus(p, r, modulus)
    if r == 1:
        modulus = (0, 1)
    elif modulus is None:
        poly = galois.irreducible_poly(p, r, method='min')
        modulus = tuple(int(c) for c in reversed(poly.coeffs))
    return _cached_field(p, r, modulus)


def _check_modulus(p, r, modulus):
    if len(modulus) != r + 1 or any(not 0 <= c < p for c in modulus):
        raise ReducibleModulus(
            'modulus {} is not a degree {} polynomial over GF({})'.format(
                list(modulus), r, p))
    if modulus[-1] != 1:
        raise ReducibleModulus('modulus {} is not monic'.format(
            list(modulus)))
    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    if not poly.is_irreducible():
        raise ReducibleModulus('modulus {} is reducible over GF({})'.format(
            list(modulus), p))


def field_from_order(q, size_bound=default_config.FIELD_SIZE_BOUND):
    """Create the field with ``q`` elements and the default modulus."""
    if not isinstance(q, (int, np.integer)) or not galois.is_prime_power(
            int(q)):
        raise NonPrimeP('{} is not a prime power'.format(q))
    primes, exponents = galois.factors(int(q))
    return field_create(int(primes[0]), int(exponents[0]),
                        size_bound=size_bound)


def field_from_dict(data):
    """Return the field described by its JSON form."""
    try:
        return field_create(data['p'], data.get('r', 1), data.get('modulus'))
    except (KeyError, TypeError, AttributeError):
        raise MalformedInput('not a field description: {!r}'.format(data))


def field_of(array):
    """Return the :class:`Field` a galois array belongs to."""
    cls = type(array)
    if not issubclass(cls, galois.FieldArray):
        raise FieldMismatch('{!r} is not a finite field element'.format(
            array))
    if cls.degree == 1:
        return field_create(cls.characteristic)
    modulus = tuple(int(c) for c in reversed(cls.irreducible_poly.coeffs))
    return field_create(cls.characteristic, cls.degree, modulus)


def arithmetic(x, y, op):
    """Combine two elements of the same field.

    :param op: one of ``add``, ``sub``, ``mul``, ``div`` or ``pow``.  For
        ``pow`` the second operand is an integer exponent.
    """
    if op not in OPERATIONS:
        raise MalformedInput('unknown operation {!r}'.format(op))
    if op == 'pow':
        if not isinstance(y, (int, np.integer)):
            raise FieldMismatch('exponent must be an integer')
        if int(y) < 0 and x == 0:
            raise DivisionByZero('zero has no inverse')
        return x ** int(y)
    if type(x) is not type(y):
        raise FieldMismatch('{!r} and {!r} live in different fields'.format(
            x, y))
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if y == 0:
        raise DivisionByZero('division by zero in GF({})'.format(
            type(x).order))
    return x / y


def trace(x):
    """Return the absolute trace ``x + x**p + ... + x**(p**(r-1))``."""
    return x.field_trace()


def frobenius(x, degree=None):
    """Return ``x**(p**degree)``.

    Without ``degree`` the map is the conjugation of an even degree field
    over its index 2 subfield, or the absolute Frobenius otherwise.
    """
    cls = type(x)
    if degree is None:
        degree = cls.degree // 2 if cls.degree % 2 == 0 else 1
    return x ** (cls.characteristic ** degree)


def basis_expand(x):
    """Return the power basis coordinates of ``x`` as a list of ints."""
    cls = type(x)
    return _digits(int(x), cls.characteristic, cls.degree)


def basis_combine(field, coeffs):
    """Return the element with the given power basis coordinates."""
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) != field.r or any(not 0 <= c < field.p for c in coeffs):
        raise MalformedInput('{} are not coordinates over GF({})'.format(
            coeffs, field.p))
    return field.gf(sum(c * field.p ** i for i, c in enumerate(coeffs)))


###############
# JSON codecs #
###############

def encode_element(field, x):
    """Return the JSON form of an element."""
    if field.r == 1:
        return int(x)
    return basis_expand(x)


def decode_element(field, value):
    """Return the element described by a JSON value."""
    if isinstance(value, (list, tuple)):
        return basis_combine(field, value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput('{!r} is not a field element'.format(value))
    if not 0 <= value < field.q:
        raise MalformedInput('{} is not an element of GF({})'.format(
            value, field.q))
    return field.gf(value)


def encode_vector(field, vector):
    """Return the JSON form of a vector."""
    return [encode_element(field, x) for x in vector]


def decode_vector(field, values):
    """Return the vector described by a JSON list."""
    if not isinstance(values, (list, tuple)):
        raise MalformedInput('{!r} is not a vector'.format(values))
    return field.gf([int(decode_element(field, value)) for value in values]
                    ) if values else field.zeros(0)


def encode_matrix(field, matrix):
    """Return the JSON form of a matrix."""
    return [encode_vector(field, row) for row in matrix]


def decode_matrix(field, rows, ncols=None):
    """Return the matrix described by a JSON list of rows."""
    if not isinstance(rows, (list, tuple)):
        raise MalformedInput('{!r} is not a matrix'.format(rows))
    if not rows:
        return field.zeros((0, ncols or 0))
    vectors = [decode_vector(field, row) for row in rows]
    if len({vector.size for vector in vectors}) != 1:
        raise MalformedInput('matrix rows have different lengths')
    return field.gf(np.stack([as_ints(v) for v in vectors]))
