# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import logging
import numpy

logger = logging.getLogger(__name__)


class FormSpace(object):
    """
    The space of row vectors of length 2m over the field with two elements, with its standard forms.

    A vector is encoded as a 2m-bit integer whose bit ``i`` is coordinate ``i``. The quadratic form is
    ``theta(u) = u.e.u^T`` where ``e`` has the identity in its upper-right m x m corner, and the alternating form is
    ``phi(u, v) = u.f.v^T`` with ``f = e + e^T``.
    """

    def __init__(self, m):
        """
        :param int m: Half the dimension, at least 1.
        """
        if m < 1:
            raise ValueError('The half-dimension must be positive.')

        self.m = m
        self.dimension = 2 * m
        self.size = 1 << self.dimension

        self.e = numpy.zeros((self.dimension, self.dimension), dtype=numpy.int64)
        self.e[:m, m:] = numpy.eye(m, dtype=numpy.int64)
        self.f = (self.e + self.e.T) % 2

        # Row v holds the coordinates of the vector encoded as v
        self.coordinates = (numpy.arange(self.size)[:, None] >> numpy.arange(self.dimension)) & 1
        self.theta_table = numpy.einsum('vi,ij,vj->v', self.coordinates, self.e, self.coordinates) % 2

        # Adding this vector flips the type of the form
        self.flip_vector = 1 | (1 << m)

    def theta(self, u):
        return int(self.theta_table[u])

    def phi(self, u, v):
        return int(self.coordinates[u] @ self.f @ self.coordinates[v]) % 2

    def phi_matrix(self):
        """
        Returns the Gram matrix of ``phi`` over all pairs of vectors.

        :return: A ``size`` x ``size`` array of zeros and ones.
        :rtype: numpy.ndarray
        """
        return (self.coordinates @ self.f @ self.coordinates.T) % 2

    def quadratic_form(self, sign):
        """
        Returns the values of a non-degenerate quadratic form of the requested type on every vector.

        The plus type is ``theta`` itself. The minus type is ``theta(u) + phi(u, c)`` where ``c`` is a vector with
        ``theta(c) = 1``.

        :param str sign: Either '+' or '-'.
        :return: The array of form values, indexed by the encoded vector.
        :rtype: numpy.ndarray
        """
        if sign == '+':
            return self.theta_table.copy()
        elif sign == '-':
            c = self.flip_vector
            shifted = (self.coordinates @ self.f @ self.coordinates[c]) % 2
            return (self.theta_table + shifted) % 2
        else:
            raise ValueError("The sign must be '+' or '-'.")

    def singular_count(self, sign):
        """Number of singular vectors, zero included, of the form of the given type."""
        m = self.m
        if sign == '+':
            return 2 ** (2 * m - 1) + 2 ** (m - 1)
        else:
            return 2 ** (2 * m - 1) - 2 ** (m - 1)

    def singular_vectors(self, sign):
        """
        Returns the singular vectors of the form of the given type, in ascending order.

        :param str sign: Either '+' or '-'.
        :return: The encoded vectors with form value zero.
        :rtype: list[int]
        """
        values = self.quadratic_form(sign)
        vectors = [int(v) for v in numpy.flatnonzero(values == 0)]

        expected = self.singular_count(sign)
        if len(vectors) != expected:
            raise ArithmeticError('Form of type {} has {} singular vectors instead of {}.'.format(
                sign, len(vectors), expected))

        logger.debug('Form of type %s on dimension %d has %d singular vectors', sign, self.dimension, len(vectors))
        return vectors

    def check_polarization(self):
        """
        Verifies exhaustively that ``theta(u + v) + theta(u) + theta(v) = phi(u, v)``, that ``phi`` is alternating and
        that ``phi`` is non-degenerate.

        :return: True if all identities hold.
        :rtype: bool
        """
        vectors = numpy.arange(self.size)
        sums = vectors[:, None] ^ vectors[None, :]
        polar = (self.theta_table[sums] + self.theta_table[:, None] + self.theta_table[None, :]) % 2
        gram = self.phi_matrix()

        if not numpy.array_equal(polar, gram):
            return False
        if numpy.any(numpy.diagonal(gram)):
            return False

        return _gf2_rank(self.f) == self.dimension


def _gf2_rank(matrix):
    rows = numpy.array(matrix, dtype=numpy.uint8) % 2
    rank = 0
    for column in range(rows.shape[1]):
        pivots = numpy.flatnonzero(rows[rank:, column]) + rank
        if len(pivots) == 0:
            continue

        pivot = pivots[0]
        rows[[rank, pivot]] = rows[[pivot, rank]]
        others = numpy.flatnonzero(rows[:, column])
        others = others[others != rank]
        rows[others] ^= rows[rank]
        rank += 1
        if rank == rows.shape[0]:
            break

    return rank
