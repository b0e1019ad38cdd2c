"""Exact matrices over the cyclotomic integers Z[zeta].

A matrix ``sum_j zeta**j M_j`` is stored as an integer array of shape
``(N, rows, cols)`` holding ``M_0, ..., M_(N-1)``, where ``zeta`` is a
primitive N-th root of unity.  For odd p we take ``N = p``; for p = 2 we take
``N = 4`` so that the square roots of -1 needed to make qubit stabilizers
Hermitian are available.

Weyl operators are monomial matrices and are kept in the sparse form
:class:`Monomial` until a dense matrix is really needed.
"""
from collections import namedtuple
from fractions import Fraction

import numpy as np


def root_order(p):
    """Return N, the order of the root of unity used for characteristic p."""
    return 4 if p == 2 else p


Monomial = namedtuple('Monomial', 'perm exps order')
Monomial.__doc__ = """A monomial matrix ``|x> -> zeta**exps[x] |perm[x]>``."""


def identity(dimension, order):
    """Return the identity monomial."""
    return Monomial(np.arange(dimension), np.zeros(dimension, dtype=np.int64),
                    order)


def compose(first, second):
    """Return the monomial of the product ``first @ second``."""
    return Monomial(
        first.perm[second.perm],
        (second.exps + first.exps[second.perm]) % first.order,
        first.order,
    )


def monomial_trace(monomial):
    """Return the trace as a coefficient vector of length N."""
    fixed = monomial.perm == np.arange(monomial.perm.size)
    return np.bincount(monomial.exps[fixed], minlength=monomial.order)


def dense(monomial):
    """Return the dense form of a monomial."""
    size = monomial.perm.size
    matrix = np.zeros((monomial.order, size, size), dtype=np.int64)
    matrix[monomial.exps, monomial.perm, np.arange(size)] = 1
    return matrix


def accumulate(monomials, size, order):
    """Return the dense sum of many monomials."""
    total = np.zeros((order, size, size), dtype=np.int64)
    columns = np.arange(size)
    for monomial in monomials:
        np.add.at(total, (monomial.exps, monomial.perm, columns), 1)
    return total


def times_monomial(matrix, monomial):
    """Return ``matrix @ monomial`` for a dense matrix."""
    result = np.zeros_like(matrix)
    for shift in range(monomial.order):
        columns = np.flatnonzero(monomial.exps == shift)
        if columns.size:
            result[:, :, columns] = np.roll(
                matrix[:, :, monomial.perm[columns]], shift, axis=0)
    return result


def matmul(first, second):
    """Multiply two dense cyclotomic matrices."""
    order = first.shape[0]
    result = np.zeros(
        (order, first.shape[1], second.shape[2]), dtype=np.int64)
    for i in range(order):
        for j in range(order):
            result[(i + j) % order] += first[i] @ second[j]
    return result


def adjoint(matrix):
    """Return the conjugate transpose."""
    order = matrix.shape[0]
    conjugated = matrix[(-np.arange(order)) % order]
    return np.transpose(conjugated, (0, 2, 1))


def scalar_times(coefficients, matrix):
    """Multiply a dense matrix by the scalar with the given coefficients."""
    result = np.zeros_like(matrix)
    for i, coefficient in enumerate(coefficients):
        if coefficient:
            result += coefficient * np.roll(matrix, i, axis=0)
    return result


def trace(matrix):
    """Return the trace of a dense matrix as a coefficient vector."""
    return np.trace(matrix, axis1=1, axis2=2)


def reduce(coefficients):
    """Return canonical coordinates modulo the cyclotomic polynomial.

    The first axis holds the powers of zeta.  For N = 4 the basis is
    ``1, i``; for an odd prime N it is ``1, zeta, ..., zeta**(N-2)``.
    """
    coefficients = np.asarray(coefficients)
    order = coefficients.shape[0]
    if order == 4:
        return coefficients[:2] - coefficients[2:]
    return coefficients[:-1] - coefficients[-1]


def equal(first, second):
    """Tell whether two cyclotomic arrays represent the same values."""
    return not np.any(reduce(first - second))


def as_fractions(coefficients, denominator):
    """Return reduced coefficients divided by an integer as fractions."""
    return [Fraction(int(c), denominator) for c in reduce(coefficients)]
