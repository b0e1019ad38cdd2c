"""Exact linear algebra over finite fields.

Everything here takes and returns galois arrays.  Matrices with no rows or no
columns are accepted everywhere, which galois itself does not always do.
"""
import itertools
import logging
from math import comb

import numpy as np

from holocodes import default_config
from holocodes.errors import LengthMismatch, SearchBoundExceeded
from holocodes.finite_field import as_ints


logger = logging.getLogger(__name__)


def vstack(*matrices):
    """Stack matrices of one field vertically."""
    gf = type(matrices[0])
    ncols = matrices[0].shape[1]
    if any(matrix.shape[1] != ncols for matrix in matrices):
        raise LengthMismatch('cannot stack matrices with {} columns'.format(
            sorted({matrix.shape[1] for matrix in matrices})))
    return gf(np.vstack([as_ints(matrix) for matrix in matrices]))


def hstack(*matrices):
    """Stack matrices of one field horizontally."""
    gf = type(matrices[0])
    return gf(np.hstack([as_ints(matrix) for matrix in matrices]))


def rref(matrix):
    """Return the reduced row echelon form without zero rows and its pivots.

    :param matrix: a 2-d galois array.
    :returns: a ``(reduced, pivots)`` tuple where ``pivots[i]`` is the
        column of the leading one of row ``i``.
    """
    gf = type(matrix)
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return gf.Zeros((0, matrix.shape[1])), []
    reduced = matrix.row_reduce()
    values = as_ints(reduced)
    keep = np.any(values != 0, axis=1)
    reduced = reduced[keep]
    pivots = [int(np.flatnonzero(row)[0]) for row in values[keep]]
    return reduced, pivots


def rank(matrix):
    """Return the rank of a matrix."""
    return len(rref(matrix)[1])


def kernel(matrix):
    """Return a basis, one vector per row, of ``{x : matrix @ x = 0}``."""
    gf = type(matrix)
    nrows, ncols = matrix.shape
    if ncols == 0:
        return gf.Zeros((0, 0))
    if nrows == 0 or not np.any(as_ints(matrix)):
        return gf.Identity(ncols)
    return matrix.null_space()


def in_span(basis, vectors):
    """Tell whether every row of ``vectors`` lies in the span of ``basis``."""
    if vectors.shape[0] == 0:
        return True
    return rank(vstack(basis, vectors)) == rank(basis)


def solve_affine(matrix, rhs):
    """Solve ``matrix @ x = rhs``.

    :returns: ``None`` when the system is inconsistent, else a tuple
        ``(particular, directions)`` with one particular solution and a basis
        of the kernel of ``matrix``.
    """
    gf = type(matrix)
    nrows, ncols = matrix.shape
    if rhs.shape != (nrows,):
        raise LengthMismatch('{} equations but {} right hand sides'.format(
            nrows, rhs.shape[0]))
    augmented = gf(np.hstack([as_ints(matrix), as_ints(rhs).reshape(-1, 1)]))
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    particular = gf.Zeros(ncols)
    for row, column in zip(reduced, pivots):
        particular[column] = row[ncols]
    return particular, kernel(matrix)


def min_weight_outside(parity, exclude, groups,
                       search_bound=default_config.SEARCH_BOUND):
    """Find the least weight vector of ``ker(parity)`` outside ``exclude``.

    Weight counts position groups: a vector has weight ``w`` when its
    support meets exactly ``w`` of ``groups``.  Classical Hamming weight uses
    singleton groups; symplectic weight uses the groups ``{i, n + i}``.

    Supports are tried by increasing size, so the first support whose
    restricted kernel leaves the span of ``exclude`` gives the minimum.

    :returns: ``(weight, witness)`` or ``None`` when ``ker(parity)`` is inside
        the span of ``exclude``.
    """
    gf = type(parity)
    length = parity.shape[1]
    exclude_rank = rank(exclude)
    visited = 0
    for weight in range(1, len(groups) + 1):
        visited += comb(len(groups), weight)
        if visited > search_bound:
            raise SearchBoundExceeded(
                'more than {} supports needed for a weight {} search'.format(
                    search_bound, weight))
        logger.debug('Trying supports of weight %d', weight)
        for support in itertools.combinations(range(len(groups)), weight):
            columns = sorted(
                column for group in support for column in groups[group])
            basis = kernel(parity[:, columns])
            for vector in basis:
                candidate = gf.Zeros(length)
                candidate[columns] = vector
                candidate = candidate.reshape(1, -1)
                if rank(vstack(exclude, candidate)) > exclude_rank:
                    return weight, candidate[0]
    return None
