# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
Permutations of the point set {0, ..., n - 1}.

Permutations act on the right: the image of ``x`` under ``p`` is written ``x^p``, and the product ``p * q`` maps ``x``
to ``(x^p)^q``. Products therefore read from left to right, like move sequences.
"""

import math
import numpy


class PermutationError(Exception):
    """A permutation could not be built, or two permutations of different degrees were combined."""
    pass


def point_dtype(degree):
    """
    Returns the smallest unsigned integer type able to hold every point of a set of the given size.

    :param int degree: The number of points.
    :return: The numpy type used for image arrays.
    :rtype: type
    """
    if degree <= 256:
        return numpy.uint8
    elif degree <= 65536:
        return numpy.uint16
    else:
        return numpy.uint32


class Permutation(object):
    """An immutable bijection of {0, ..., n - 1}, stored as its array of images."""

    __slots__ = ('_images', '_key')

    def __init__(self, images):
        """
        Initializes a permutation from its images.

        :param images: The sequence whose entry ``x`` is the image of ``x``.
        """
        array = numpy.array(images, dtype=numpy.int64).ravel()
        if not numpy.array_equal(numpy.sort(array), numpy.arange(len(array))):
            raise PermutationError('The images {} do not form a permutation.'.format(list(array)))

        self._set(array.astype(point_dtype(len(array))))

    def _set(self, array):
        array.flags.writeable = False
        self._images = array
        self._key = array.tobytes()

    @classmethod
    def from_array(cls, array):
        """
        Wraps an image array without validating it.

        :param numpy.ndarray array: An array already known to be a permutation.
        :return: The permutation.
        :rtype: Permutation
        """
        result = cls.__new__(cls)
        result._set(numpy.array(array, dtype=point_dtype(len(array))))
        return result

    @classmethod
    def identity(cls, degree):
        return cls.from_array(numpy.arange(degree))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        """
        Builds a permutation from disjoint cycles.

        :param int degree: The number of points.
        :param cycles: Each cycle is a sequence of points, ``(a, b, c)`` mapping a to b, b to c and c to a.
        :return: The permutation.
        :rtype: Permutation
        """
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for index, point in enumerate(cycle):
                if point in seen or not 0 <= point < degree:
                    raise PermutationError('Invalid cycle {} for degree {}.'.format(tuple(cycle), degree))

                seen.add(point)
                images[point] = cycle[(index + 1) % len(cycle)]

        return cls.from_array(numpy.array(images))

    @property
    def degree(self):
        return len(self._images)

    @property
    def images(self):
        """The read-only image array."""
        return self._images

    @property
    def key(self):
        """The bytes of the image array, usable as an exact set key."""
        return self._key

    def __call__(self, point):
        return int(self._images[point])

    def __mul__(self, other):
        _check_degrees(self, other)
        return Permutation.from_array(other._images[self._images])

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = numpy.arange(self.degree)
        base = self._images
        while exponent:
            if exponent & 1:
                result = base[result]
            base = base[base]
            exponent >>= 1

        return Permutation.from_array(result)

    def inverse(self):
        result = numpy.empty_like(self._images)
        result[self._images] = numpy.arange(self.degree, dtype=self._images.dtype)
        return Permutation.from_array(result)

    def conjugate(self, other):
        """
        Returns ``other^-1 * self * other``.

        :param Permutation other: The conjugating permutation.
        :return: The conjugate, mapping ``x^other`` to ``(x^self)^other``.
        :rtype: Permutation
        """
        _check_degrees(self, other)
        result = numpy.empty_like(self._images)
        result[other._images] = other._images[self._images]
        return Permutation.from_array(result)

    def support(self):
        return frozenset(int(point) for point in numpy.flatnonzero(self._images != numpy.arange(self.degree)))

    def fixed_points(self):
        return frozenset(int(point) for point in numpy.flatnonzero(self._images == numpy.arange(self.degree)))

    def cycles(self, include_fixed=False):
        """
        Returns the disjoint cycle decomposition, each cycle starting at its smallest point.

        :param bool include_fixed: Whether cycles of length one are included.
        :return: The cycles, ordered by their first point.
        :rtype: list[tuple[int]]
        """
        seen = numpy.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue

            cycle = [start]
            seen[start] = True
            point = int(self._images[start])
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = int(self._images[point])

            if include_fixed or len(cycle) > 1:
                result.append(tuple(cycle))

        return result

    def cycle_type(self):
        return sorted(len(cycle) for cycle in self.cycles(include_fixed=True))

    def order(self):
        return math.lcm(*self.cycle_type()) if self.degree else 1

    def is_identity(self):
        return bool(numpy.array_equal(self._images, numpy.arange(self.degree)))

    def is_involution(self):
        return not self.is_identity() and bool(numpy.array_equal(self._images[self._images], numpy.arange(self.degree)))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented

        return self.degree == other.degree and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __len__(self):
        return self.degree

    def __str__(self):
        return ''.join('(' + ' '.join(str(point) for point in cycle) + ')' for cycle in self.cycles()) or '()'

    def __repr__(self):
        return 'Permutation({})'.format(self._images.tolist())


def _check_degrees(first, second):
    if first.degree != second.degree:
        raise PermutationError(
            'Permutations of degree {} and {} cannot be combined.'.format(first.degree, second.degree))


def compose(p, q):
    """
    Returns the product ``p * q``, which applies ``p`` first.

    :param Permutation p: The first permutation.
    :param Permutation q: The second permutation.
    :return: The permutation mapping ``x`` to ``(x^p)^q``.
    :rtype: Permutation
    """
    return p * q


def inverse(p):
    return p.inverse()


def conjugate(p, g):
    return p.conjugate(g)


def element_order(p):
    return p.order()


def support(p):
    return p.support()


def fixed_points(p):
    return p.fixed_points()


def cycles(p):
    return p.cycles()


def multiply_all(permutations, degree):
    """
    Returns the left-to-right product of a sequence of permutations.

    :param permutations: The permutations to multiply.
    :param int degree: The degree, used when the sequence is empty.
    :return: The product.
    :rtype: Permutation
    """
    result = numpy.arange(degree)
    for permutation in permutations:
        result = permutation.images[result]

    return Permutation.from_array(result)
