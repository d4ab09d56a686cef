# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
The hole-stabilizer and the Conway groupoid of a design.

The Conway groupoid at a point inf is the set of move sequences starting at inf. Those that also end at inf form a
group, the hole-stabilizer, generated by the sequences [inf, x, y, inf]. The groupoid is the disjoint union of the
cosets pi * [inf, x] of the hole-stabilizer pi.
"""

import conwaycore.groups
import conwaycore.permutations
import conwaycore.workers
import dataclasses
import logging
import numpy

logger = logging.getLogger(__name__)

DEFAULT_CAP = 4000000


class GroupoidError(Exception):
    """Two independent computations of the same groupoid disagree."""
    pass


class EnumerationCapExceeded(Exception):
    """An enumeration would hold more elements than allowed."""
    pass


def closure(generators, degree, cap=DEFAULT_CAP, pool=None):
    """
    Enumerates the group generated by some permutations, breadth first.

    :param list[numpy.ndarray] generators: The generators, as image arrays.
    :param int degree: The number of points.
    :param int cap: The largest number of elements allowed.
    :param WorkerPool pool: The pool used to multiply frontier chunks.
    :return: The elements, one row of images per element, in order of discovery.
    :rtype: numpy.ndarray
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    generators = [numpy.asarray(g) for g in generators]
    identity = numpy.arange(degree, dtype=conwaycore.permutations.point_dtype(degree))
    seen = {identity.tobytes()}
    layers = [identity[None, :]]
    frontier = layers[0]

    while len(frontier):
        chunks = pool.split(frontier)
        products = pool.map(lambda chunk: [g[chunk] for g in generators], chunks)

        found = []
        for chunk_products in products:
            for block in chunk_products:
                for row in block:
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        found.append(row)

        if len(seen) > cap:
            raise EnumerationCapExceeded('The group has more than {} elements.'.format(cap))

        frontier = numpy.array(found, dtype=identity.dtype).reshape(-1, degree)
        if len(frontier):
            layers.append(frontier)
        logger.debug('Closure frontier of %d elements, %d in total', len(frontier), len(seen))

    return numpy.concatenate(layers)


class GroupSet(object):
    """A permutation group given by generators and a stabilizer chain, and enumerated when small enough."""

    def __init__(self, generators, chain, elements=None):
        self.generators = generators
        self.chain = chain
        self.order = chain.order
        self.elements = elements
        self._keys = None

    @property
    def enumerated(self):
        return self.elements is not None

    @property
    def keys(self):
        if self._keys is None and self.enumerated:
            self._keys = {row.tobytes() for row in self.elements}
        return self._keys

    def __contains__(self, permutation):
        if self.enumerated:
            images = numpy.asarray(permutation.images, dtype=self.elements.dtype)
            return images.tobytes() in self.keys
        else:
            return permutation in self.chain

    def __len__(self):
        return self.order


def hole_generators(table, inf):
    """
    Returns the distinct non-trivial move sequences [inf, x, y, inf].

    :param MoveTable table: The move table.
    :param int inf: The base point.
    :return: The generators as image arrays, ordered by (x, y).
    :rtype: list[numpy.ndarray]
    """
    moves = table.table
    n = table.n
    identity = numpy.arange(n)
    back = moves[:, inf, :]
    seen = {identity.astype(moves.dtype).tobytes()}
    result = []
    for x in range(n):
        if x == inf:
            continue
        # Row y holds [inf,x][x,y][y,inf]
        walks = numpy.take_along_axis(back, moves[x][:, moves[inf, x]], axis=1)
        for y in range(n):
            if y == x or y == inf:
                continue
            key = walks[y].tobytes()
            if key not in seen:
                seen.add(key)
                result.append(walks[y])

    return result


def hole_stabilizer(table, inf, cap=DEFAULT_CAP, pool=None, enumerate_elements=True):
    """
    Computes the hole-stabilizer at a point.

    The generators [inf, x, y, inf] are pruned to those that enlarge the group generated by the previous ones. The group
    is enumerated when its order is at most ``cap``, otherwise only its order is known.

    :param MoveTable table: The move table.
    :param int inf: The base point.
    :param int cap: The largest order that is enumerated.
    :param WorkerPool pool: The pool used for the closure.
    :param bool enumerate_elements: Whether to enumerate the group when it is small enough.
    :rtype: GroupSet
    """
    n = table.n
    chain = conwaycore.groups.StabilizerChain([], n)
    generators = [g for g in hole_generators(table, inf) if chain.extend(g)]
    logger.info('Hole-stabilizer at %d: %d generators, order %d', inf, len(generators), chain.order)

    elements = None
    if enumerate_elements and chain.order <= cap:
        elements = closure(generators, n, cap, pool)
        if len(elements) != chain.order:
            raise GroupoidError('The closure has {} elements but the stabilizer chain gives order {}.'.format(
                len(elements), chain.order))

    return GroupSet([conwaycore.permutations.Permutation.from_array(g) for g in generators], chain, elements)


class GroupoidSet(object):
    """The Conway groupoid at a point, as a union of cosets of the hole-stabilizer."""

    def __init__(self, base, size, cosets=None):
        """
        :param int base: The base point.
        :param int size: The number of elements.
        :param dict cosets: The coset pi * [base, x] for every point x, or None when the groupoid is not enumerated.
        """
        self.base = base
        self.size = size
        self.cosets = cosets
        self._keys = None

    @property
    def enumerated(self):
        return self.cosets is not None

    def elements(self):
        """
        Returns every element, coset by coset.

        :rtype: numpy.ndarray
        """
        return numpy.concatenate([self.cosets[x] for x in sorted(self.cosets)])

    @property
    def keys(self):
        if self._keys is None and self.enumerated:
            self._keys = {row.tobytes() for coset in self.cosets.values() for row in coset}
        return self._keys

    def __contains__(self, permutation):
        if not self.enumerated:
            raise GroupoidError('The groupoid is not enumerated.')

        images = numpy.asarray(permutation.images, dtype=self.cosets[self.base].dtype)
        return images.tobytes() in self.keys

    def __len__(self):
        return self.size


def conway_groupoid(table, inf, hole, cap=DEFAULT_CAP):
    """
    Computes the Conway groupoid at a point from its hole-stabilizer.

    :param MoveTable table: The move table.
    :param int inf: The base point.
    :param GroupSet hole: The hole-stabilizer at ``inf``.
    :param int cap: The largest size that is enumerated.
    :rtype: GroupoidSet
    """
    n = table.n
    size = n * hole.order
    if not hole.enumerated or size > cap:
        logger.info('Conway groupoid at %d has %d elements, size only', inf, size)
        return GroupoidSet(inf, size)

    cosets = {x: table.table[inf, x][hole.elements] for x in range(n)}
    return GroupoidSet(inf, size, cosets)


def direct_walk(table, inf, cap=DEFAULT_CAP):
    """
    Enumerates the Conway groupoid by walking: from an element g ending at e = inf^g, every g [e, y] is reached.

    :param MoveTable table: The move table.
    :param int inf: The base point.
    :param int cap: The largest number of elements allowed.
    :return: The image keys of every element.
    :rtype: set[bytes]
    """
    moves = table.table
    n = table.n
    identity = numpy.arange(n, dtype=moves.dtype)
    seen = {identity.tobytes()}
    frontier = identity[None, :]

    while len(frontier):
        ends = frontier[:, inf].astype(numpy.int64)
        found = []
        for y in range(n):
            for row in moves[ends[:, None], y, frontier]:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    found.append(row)

        if len(seen) > cap:
            raise EnumerationCapExceeded('The groupoid has more than {} elements.'.format(cap))
        frontier = numpy.array(found, dtype=moves.dtype).reshape(-1, n)

    return seen


@dataclasses.dataclass(frozen=True)
class GroupEvidence:
    is_group: bool
    move_group_order: int
    groupoid_size: int
    transitive: bool
    stabilizer_order: int
    stabilizer_matches: bool


def is_group(table, inf, hole_order, chain=None):
    """
    Decides whether the Conway groupoid is a group, by comparing the order of the group generated by all elementary
    moves with the size n |pi| of the groupoid.

    :param MoveTable table: The move table.
    :param int inf: The base point.
    :param int hole_order: The order of the hole-stabilizer at ``inf``.
    :param StabilizerChain chain: A chain of the group generated by the moves with ``inf`` as first base point, if one
        was already built.
    :rtype: GroupEvidence
    """
    n = table.n
    if chain is None:
        chain = conwaycore.groups.StabilizerChain(table.distinct, n, base=[inf])

    order = chain.order
    orbit = chain.orbit_lengths()[0] if chain.levels else 1
    stabilizer_order = order // orbit
    size = n * hole_order
    group = order == size

    return GroupEvidence(
        is_group=group,
        move_group_order=order,
        groupoid_size=size,
        transitive=orbit == n,
        stabilizer_order=stabilizer_order,
        stabilizer_matches=group and orbit == n and stabilizer_order == hole_order)


def _block_codes(blocks, n):
    blocks = numpy.sort(blocks, axis=1).astype(numpy.int64)
    return ((blocks[:, 0] * n + blocks[:, 1]) * n + blocks[:, 2]) * n + blocks[:, 3]


def is_automorphism_group(design, generators):
    """
    Checks that every generator maps blocks to blocks.

    :param Design design: The design.
    :param generators: The generators, usually the distinct elementary moves.
    :return: Whether every generator is an automorphism, and a block mapped outside the design otherwise.
    :rtype: tuple[bool, dict]
    """
    blocks = design.block_array()
    codes = _block_codes(blocks, design.n)
    for generator in generators:
        images = numpy.asarray(generator.images)[blocks]
        outside = numpy.flatnonzero(~numpy.isin(_block_codes(images, design.n), codes))
        if len(outside):
            row = outside[0]
            return False, {
                'generator': str(generator),
                'block': blocks[row].tolist(),
                'image': sorted(images[row].tolist())
            }

    return True, None


def base_sweep(table, points=None):
    """
    Computes the order of the hole-stabilizer at every point, by stabilizer chains only.

    :param MoveTable table: The move table.
    :param points: The base points, all points by default.
    :return: The order at each point.
    :rtype: dict[int, int]
    """
    points = range(table.n) if points is None else points
    return {point: hole_stabilizer(table, point, enumerate_elements=False).order for point in points}


def closure_spot_check(groupoid, samples=10000, seed=1):
    """
    Checks on random pairs that products of groupoid elements stay in the groupoid.

    :param GroupoidSet groupoid: An enumerated groupoid.
    :param int samples: The number of pairs.
    :param int seed: The seed of the random generator.
    :return: The number of pairs checked and the first pair whose product is outside, if any.
    :rtype: tuple[int, dict]
    """
    elements = groupoid.elements()
    keys = groupoid.keys
    generator = numpy.random.default_rng(seed)
    first = generator.integers(0, len(elements), size=samples)
    second = generator.integers(0, len(elements), size=samples)
    products = numpy.take_along_axis(elements[second], elements[first].astype(numpy.int64), axis=1)

    for index, row in enumerate(products):
        if row.tobytes() not in keys:
            return samples, {
                'left': str(conwaycore.permutations.Permutation.from_array(elements[first[index]])),
                'right': str(conwaycore.permutations.Permutation.from_array(elements[second[index]]))
            }

    return samples, None
