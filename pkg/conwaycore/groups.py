# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
Permutation group algorithms: stabilizer chains, orbits, transitivity and primitivity.

Groups are given by generators, either Permutation objects or image arrays. Products read from left to right, so the
array of ``g * h`` is ``h[g]``.
"""

import conwaycore.permutations
import conwaycore.workers
import dataclasses
import logging
import numpy

logger = logging.getLogger(__name__)


class GroupError(Exception):
    """The group does not satisfy the precondition of an operation."""
    pass


def _as_array(generator):
    if isinstance(generator, conwaycore.permutations.Permutation):
        return numpy.asarray(generator.images, dtype=numpy.int64)
    else:
        return numpy.asarray(generator, dtype=numpy.int64)


def _inverse(images):
    result = numpy.empty_like(images)
    result[images] = numpy.arange(len(images))
    return result


class _Level(object):
    """One level of a stabilizer chain: a base point, its basic orbit, and coset representatives."""

    def __init__(self, base, degree):
        self.base = base
        self.generators = []
        self.orbit = [base]
        identity = numpy.arange(degree)
        self.transversal = {base: identity}
        self.inverses = {base: identity}
        self.checked = set()

    def extend_orbit(self):
        # Existing representatives never change, so Schreier generators already sifted stay valid
        position = 0
        while position < len(self.orbit):
            beta = self.orbit[position]
            for generator in self.generators:
                gamma = int(generator[beta])
                if gamma not in self.transversal:
                    representative = generator[self.transversal[beta]]
                    self.transversal[gamma] = representative
                    self.inverses[gamma] = _inverse(representative)
                    self.orbit.append(gamma)
            position += 1


class StabilizerChain(object):
    """
    A base and strong generating set of a permutation group, built by the deterministic Schreier-Sims algorithm.

    New base points are the smallest points moved by the generator that requires them.
    """

    def __init__(self, generators, degree, base=()):
        """
        :param generators: The generators of the group.
        :param int degree: The number of points.
        :param base: Points to use as the first base points, in order.
        """
        self.degree = degree
        self._identity = numpy.arange(degree)
        self.levels = [_Level(point, degree) for point in base]
        self.strong_generators = []

        for generator in generators:
            self.extend(generator)

    @property
    def base(self):
        return [level.base for level in self.levels]

    @property
    def order(self):
        result = 1
        for level in self.levels:
            result *= len(level.orbit)
        return result

    def orbit_lengths(self):
        return [len(level.orbit) for level in self.levels]

    def sift(self, element, start=0):
        """
        Divides an element by coset representatives down the chain.

        :param element: The element to sift.
        :param int start: The first level to use.
        :return: The residue and the level at which sifting stopped.
        :rtype: tuple[numpy.ndarray, int]
        """
        residue = _as_array(element)
        for depth in range(start, len(self.levels)):
            level = self.levels[depth]
            beta = int(residue[level.base])
            if beta not in level.transversal:
                return residue, depth
            residue = level.inverses[beta][residue]

        return residue, len(self.levels)

    def __contains__(self, element):
        residue, depth = self.sift(element)
        return depth == len(self.levels) and numpy.array_equal(residue, self._identity)

    def extend(self, generator):
        """
        Adds a generator to the group, unless it is already an element.

        :param generator: The new generator.
        :return: True if the group became larger.
        :rtype: bool
        """
        generator = _as_array(generator)
        if len(generator) != self.degree:
            raise GroupError('Generator of degree {} in a group of degree {}.'.format(len(generator), self.degree))

        residue, depth = self.sift(generator)
        if depth == len(self.levels) and numpy.array_equal(residue, self._identity):
            return False

        self._add_strong_generator(residue, 0, depth)
        self._complete(depth)
        return True

    def _add_strong_generator(self, element, first, last):
        if last == len(self.levels):
            moved = int(numpy.flatnonzero(element != self._identity)[0])
            self.levels.append(_Level(moved, self.degree))

        self.strong_generators.append(element)
        for depth in range(first, last + 1):
            level = self.levels[depth]
            level.generators.append(element)
            level.extend_orbit()

    def _complete(self, depth):
        while depth >= 0:
            level = self.levels[depth]
            added = False
            for beta in list(level.orbit):
                for index, generator in enumerate(level.generators):
                    if (beta, index) in level.checked:
                        continue

                    level.checked.add((beta, index))
                    gamma = int(generator[beta])
                    schreier = level.inverses[gamma][generator[level.transversal[beta]]]
                    residue, stop = self.sift(schreier, depth + 1)
                    if stop == len(self.levels) and numpy.array_equal(residue, self._identity):
                        continue

                    self._add_strong_generator(residue, depth + 1, stop)
                    logger.debug('New strong generator at level %d, order now %d', stop, self.order)
                    depth = stop
                    added = True
                    break
                if added:
                    break

            if not added:
                depth -= 1

    def stabilizer_generators(self, depth=1):
        """
        Returns generators of the pointwise stabilizer of the first ``depth`` base points.

        :param int depth: The number of base points to fix.
        :rtype: list[numpy.ndarray]
        """
        if depth >= len(self.levels):
            return []

        return list(self.levels[depth].generators)


def stabilizer_chain(generators, degree, base=()):
    return StabilizerChain(generators, degree, base)


class UnionFind(object):
    """Disjoint sets of the points {0, ..., n - 1} with path halving and union by size."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        """
        Merges the sets of two points.

        :return: True if the points were in different sets.
        :rtype: bool
        """
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def classes(self):
        result = {}
        for x in range(len(self.parent)):
            result.setdefault(self.find(x), []).append(x)
        return sorted(result.values())


def orbits(generators, n):
    """
    Returns the orbits of a group, each sorted, ordered by their smallest point.

    :param generators: The generators of the group.
    :param int n: The number of points.
    :rtype: list[list[int]]
    """
    partition = UnionFind(n)
    for generator in generators:
        images = _as_array(generator)
        for x in range(n):
            partition.union(x, int(images[x]))

    return partition.classes()


def is_transitive(generators, n):
    return len(orbits(generators, n)) == 1


def transitivity_degree(generators, n, limit=5):
    """
    Returns the largest k up to ``limit`` such that the group is k-transitive, or 0 if it is intransitive.

    The group is k-transitive when the stabilizer of the points 0, ..., i - 1 is transitive on the other
    points for every i < k.

    :param generators: The generators of the group.
    :param int n: The number of points.
    :param int limit: The largest degree reported.
    :rtype: int
    """
    chain = StabilizerChain(generators, n, base=range(min(n, limit)))
    degree = 0
    for depth, length in enumerate(chain.orbit_lengths()[:limit]):
        if length != n - depth:
            break
        degree += 1

    return degree


def is_2_transitive(generators, n):
    return transitivity_degree(generators, n, limit=2) >= 2


def remove_fixed_point(generators, point, n):
    """
    Restricts a group fixing a point to the other points, renumbered in order.

    :param generators: The generators, each fixing ``point``.
    :param int point: The fixed point.
    :param int n: The number of points.
    :return: The restricted generators, of degree n - 1.
    :rtype: list[numpy.ndarray]
    """
    kept = numpy.array([x for x in range(n) if x != point])
    rename = numpy.full(n, -1)
    rename[kept] = numpy.arange(n - 1)

    result = []
    for generator in generators:
        images = _as_array(generator)
        if images[point] != point:
            raise GroupError('The generator does not fix the point {}.'.format(point))
        result.append(rename[images[kept]])

    return result


def minimal_block(generators, n, alpha, beta):
    """
    Returns the smallest block of imprimitivity containing two points.

    :param generators: The generators of a transitive group.
    :param int n: The number of points.
    :param int alpha: The first point.
    :param int beta: The second point.
    :return: The block containing ``alpha`` and ``beta``, sorted.
    :rtype: list[int]
    """
    arrays = [_as_array(generator) for generator in generators]
    partition = UnionFind(n)
    partition.union(alpha, beta)
    pending = [(alpha, beta)]
    while pending:
        x, y = pending.pop()
        for images in arrays:
            u, v = int(images[x]), int(images[y])
            if partition.union(u, v):
                pending.append((u, v))

    root = partition.find(alpha)
    return [x for x in range(n) if partition.find(x) == root]


def is_primitive(generators, n):
    """
    Decides whether a transitive group is primitive.

    :param generators: The generators of the group.
    :param int n: The number of points.
    :return: Whether the group is primitive, and a non-trivial block when it is not.
    :rtype: tuple[bool, list[int]]
    """
    if not is_transitive(generators, n):
        raise GroupError('Primitivity is only defined for transitive groups.')

    for beta in range(1, n):
        block = minimal_block(generators, n, 0, beta)
        if len(block) < n:
            return False, block

    return True, None


def is_2_primitive(generators, n):
    """
    Decides whether a group is transitive with a point stabilizer primitive on the remaining points.

    :param generators: The generators of the group.
    :param int n: The number of points.
    :rtype: bool
    """
    if not is_transitive(generators, n) or n < 2:
        return False

    chain = StabilizerChain(generators, n, base=[0])
    stabilizer = remove_fixed_point(chain.stabilizer_generators(1), 0, n)
    if not is_transitive(stabilizer, n - 1):
        return False

    return is_primitive(stabilizer, n - 1)[0]


@dataclasses.dataclass(frozen=True)
class ThreeTranspositionReport:
    generates: bool
    class_closed: bool
    single_class: bool
    orders_ok: bool
    product_orders: tuple
    witness: dict = None

    @property
    def is_three_transposition_class(self):
        return self.generates and self.class_closed and self.single_class and self.orders_ok


def _product_orders_chunk(elements, rows):
    identity = numpy.arange(elements.shape[1])
    seen = set()
    witness = None
    for i in rows:
        # Row j holds elements[i] * elements[j]
        products = elements[:, elements[i]]
        square = numpy.take_along_axis(products, products, axis=1)
        cube = numpy.take_along_axis(products, square, axis=1)
        one = numpy.all(products == identity, axis=1)
        two = ~one & numpy.all(square == identity, axis=1)
        three = ~one & ~two & numpy.all(cube == identity, axis=1)
        if numpy.any(one):
            seen.add(1)
        if numpy.any(two):
            seen.add(2)
        if numpy.any(three):
            seen.add(3)
        bad = numpy.flatnonzero(~(one | two | three))
        if witness is None and len(bad):
            witness = (int(i), int(bad[0]))

    return seen, witness


def three_transposition_report(elements, group=None, pool=None, chain=None, group_order=None):
    """
    Checks whether a set of involutions is a class of 3-transpositions.

    Whether E generates the group is decided by membership and order when ``group`` is given, or by order alone when
    ``group_order`` is given for a subset of <E>, such as the Conway groupoid. With neither, E generates <E>.

    :param elements: The involutions E.
    :param StabilizerChain group: The group E should generate.
    :param WorkerPool pool: The pool used to partition the pairwise products.
    :param StabilizerChain chain: A chain of the group generated by E, if one was already built.
    :param int group_order: The size of a subset of <E> that E should generate.
    :rtype: ThreeTranspositionReport
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    arrays = numpy.array([_as_array(element) for element in elements])
    if len(arrays) == 0:
        raise GroupError('The set of involutions is empty.')

    n = arrays.shape[1]
    keys = {row.tobytes(): index for index, row in enumerate(arrays)}

    if group is None and group_order is None:
        generates = True
    else:
        own = chain if chain is not None else StabilizerChain(arrays, n)
        if group is None:
            generates = own.order == group_order
        else:
            generates = own.order == group.order and all(row in group for row in arrays)

    witness = None
    class_closed = True
    partition = UnionFind(len(arrays))
    for index, g in enumerate(arrays):
        # Conjugates e^g for all e in E
        conjugates = numpy.empty_like(arrays)
        conjugates[:, g] = g[arrays]
        for source, row in enumerate(conjugates):
            target = keys.get(row.tobytes())
            if target is None:
                if class_closed:
                    witness = {'element': str(conwaycore.permutations.Permutation.from_array(arrays[source])),
                        'conjugator': str(conwaycore.permutations.Permutation.from_array(g))}
                class_closed = False
            else:
                partition.union(source, target)

    single_class = class_closed and len(partition.classes()) == 1

    results = pool.map(
        lambda rows: _product_orders_chunk(arrays, rows), pool.split(list(range(len(arrays)))))
    orders = set()
    bad_pair = None
    for seen, pair in results:
        orders.update(seen)
        if bad_pair is None and pair is not None:
            bad_pair = pair

    if bad_pair is not None and witness is None:
        i, j = bad_pair
        witness = {'pair': [str(conwaycore.permutations.Permutation.from_array(arrays[i])),
            str(conwaycore.permutations.Permutation.from_array(arrays[j]))]}

    return ThreeTranspositionReport(
        generates=generates,
        class_closed=class_closed,
        single_class=single_class,
        orders_ok=bad_pair is None,
        product_orders=tuple(sorted(orders)),
        witness=witness)
