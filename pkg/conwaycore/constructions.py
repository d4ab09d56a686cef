# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
Constructors for the design families.

Vector points are numbered by the integer value of their bit encoding, in ascending order.
"""

import collections
import conwaycore.designs
import conwaycore.forms
import itertools
import logging
import numpy

logger = logging.getLogger(__name__)


class ConstructionError(Exception):
    """The parameters do not describe a design of the requested family."""
    pass


def zero_sum_quadruples(vectors):
    """
    Returns the 4-subsets of a set of vectors whose sum is zero.

    Two disjoint pairs with the same sum always form such a subset, and every such subset arises this way.

    :param list[int] vectors: The encoded vectors.
    :return: The quadruples, as sorted tuples of encoded vectors.
    :rtype: set[tuple[int, int, int, int]]
    """
    by_sum = collections.defaultdict(list)
    for a, b in itertools.combinations(sorted(vectors), 2):
        by_sum[a ^ b].append((a, b))

    result = set()
    for pairs in by_sum.values():
        for (a, b), (c, d) in itertools.combinations(pairs, 2):
            result.add(tuple(sorted((a, b, c, d))))

    return result


def _check_rank(m, minimum=2):
    if not isinstance(m, int) or m < minimum:
        raise ConstructionError('The parameter m must be an integer greater than or equal to {}.'.format(minimum))


def _indexed_design(vectors, quadruples, name):
    index = {vector: point for point, vector in enumerate(sorted(vectors))}
    blocks = [[index[vector] for vector in quadruple] for quadruple in quadruples]
    return conwaycore.designs.Design(len(index), blocks, name)


def boolean_design(m):
    """
    Returns the Boolean quadruple system of order 2^m: the zero-sum 4-subsets of the vector space of dimension m.

    :param int m: The dimension, at least 2.
    :return: The 2-(2^m, 4, 2^(m-1) - 1) design.
    :rtype: Design
    """
    _check_rank(m)
    vectors = list(range(1 << m))
    return _indexed_design(vectors, zero_sum_quadruples(vectors), 'boolean(m={})'.format(m))


def symplectic_design(m):
    """
    Returns the design on the vector space of dimension 2m whose blocks are the zero-sum 4-subsets on which the
    quadratic form ``theta`` sums to zero.

    :param int m: Half the dimension, at least 2.
    :return: The 2-(2^(2m), 4, 2^(2m-2) - 1) design.
    :rtype: Design
    """
    _check_rank(m)
    space = conwaycore.forms.FormSpace(m)
    vectors = list(range(space.size))
    theta = space.theta_table
    quadruples = [q for q in zero_sum_quadruples(vectors) if sum(theta[x] for x in q) % 2 == 0]
    return _indexed_design(vectors, quadruples, 'symplectic(m={})'.format(m))


def orthogonal_design(m, sign, model='singular'):
    """
    Returns the orthogonal design of the given type.

    In the ``singular`` model, the points are the singular vectors (zero included) of a non-degenerate quadratic form
    of type ``sign`` on a space of dimension 2m. In the ``theta`` model, the points are the vectors v with
    ``theta(v) = 0`` for the plus type and ``theta(v) = 1`` for the minus type. Both models use the zero-sum
    4-subsets as blocks and give isomorphic designs.

    :param int m: Half the dimension, at least 2.
    :param str sign: Either '+' or '-'.
    :param str model: Either 'singular' or 'theta'.
    :return: The 2-(2^(m-1)(2^m + sign), 4, lambda) design.
    :rtype: Design
    """
    _check_rank(m)
    try:
        epsilon = conwaycore.designs.parse_sign(sign)
    except ValueError as error:
        raise ConstructionError(str(error))

    sign = '+' if epsilon == 1 else '-'
    space = conwaycore.forms.FormSpace(m)

    if model == 'singular':
        try:
            vectors = space.singular_vectors(sign)
        except ArithmeticError as error:
            raise ConstructionError('Form self-check failed: {}'.format(error))
    elif model == 'theta':
        wanted = 0 if epsilon == 1 else 1
        vectors = [int(v) for v in numpy.flatnonzero(space.theta_table == wanted)]
    else:
        raise ConstructionError("Unknown model '{}'.".format(model))

    expected = 2 ** (m - 1) * (2 ** m + epsilon)
    if len(vectors) != expected:
        raise ConstructionError('The form has {} points instead of {}.'.format(len(vectors), expected))

    quadruples = zero_sum_quadruples(vectors)
    if not quadruples:
        raise ConstructionError('degenerate: not a 2-design (m={}, sign {} gives no blocks)'.format(m, sign))

    name = 'orthogonal(m={},{})'.format(m, sign)
    if model != 'singular':
        name = 'orthogonal(m={},{},{})'.format(m, sign, model)

    design = _indexed_design(vectors, quadruples, name)
    logger.info('Built %r', design)
    return design


def projective_plane_3():
    """
    Returns the projective plane of order 3 as a 2-(13, 4, 1) design.

    Points are the 1-dimensional subspaces of the 3-dimensional space over the field with three elements, represented
    by their vectors whose first non-zero coordinate is 1, in lexicographic order. Lines are the 2-dimensional
    subspaces.

    :rtype: Design
    """
    normalized = [
        vector for vector in itertools.product(range(3), repeat=3)
        if any(vector) and next(x for x in vector if x) == 1]

    points = numpy.array(normalized, dtype=numpy.int64)
    incidence = (points @ points.T) % 3 == 0
    lines = {tuple(int(p) for p in numpy.flatnonzero(row)) for row in incidence}

    return conwaycore.designs.Design(len(normalized), sorted(lines), 'pg(2,3)')


FAMILIES = ('boolean', 'symplectic', 'orthogonal', 'pg23')


def build(family, m=None, sign=None, model='singular'):
    """
    Builds a design of a named family.

    :param str family: One of 'boolean', 'symplectic', 'orthogonal' and 'pg23'.
    :param int m: The rank parameter, for the vector space families.
    :param str sign: The form type, for the orthogonal family.
    :param str model: The point model, for the orthogonal family.
    :return: The design.
    :rtype: Design
    """
    if family == 'pg23':
        return projective_plane_3()
    elif family not in FAMILIES:
        raise ConstructionError("Unknown family '{}', expected one of {}.".format(family, ', '.join(FAMILIES)))

    if m is None:
        raise ConstructionError('The {} family requires the parameter m.'.format(family))

    if family == 'boolean':
        return boolean_design(m)
    elif family == 'symplectic':
        return symplectic_design(m)
    else:
        if sign is None:
            raise ConstructionError('The orthogonal family requires a sign.')
        return orthogonal_design(m, sign, model)
