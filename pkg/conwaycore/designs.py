# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import collections
import dataclasses
import hashlib
import itertools
import json
import logging
import numbers
import numpy

logger = logging.getLogger(__name__)


class DesignError(Exception):
    """The design is malformed, or does not satisfy the conditions required by an operation."""
    pass


class NotBooleanError(DesignError):
    """The design does not come from the zero-sum quadruples of a vector space over the field with two elements."""
    pass


class Design(object):
    """A set of 4-element blocks on the points {0, ..., n - 1}."""

    def __init__(self, n, blocks, name=''):
        """
        Initializes a design and checks its structure.

        :param int n: The number of points.
        :param blocks: The blocks, each an iterable of four distinct points.
        :param str name: A free-form label.
        """
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DesignError('The number of points must be a positive integer.')

        normalized = []
        for block in blocks:
            block = tuple(block)
            if any(not isinstance(point, numbers.Integral) or isinstance(point, bool) for point in block):
                raise DesignError('Block {} contains a value that is not a point.'.format(list(block)))

            block = tuple(sorted(int(point) for point in block))
            if len(block) != 4 or len(set(block)) != 4:
                raise DesignError('Block {} does not have four distinct points.'.format(list(block)))
            if any(not 0 <= point < n for point in block):
                raise DesignError('Block {} has a point outside of 0..{}.'.format(list(block), n - 1))
            normalized.append(block)

        self.block_set = frozenset(normalized)
        if len(self.block_set) != len(normalized):
            duplicate = next(block for block, count in collections.Counter(normalized).items() if count > 1)
            raise DesignError('Duplicate block {}.'.format(list(duplicate)))

        self.n = n
        self.name = name
        self.blocks = tuple(sorted(self.block_set))

    def block_array(self):
        """
        Returns the blocks as an array with one sorted row per block.

        :rtype: numpy.ndarray
        """
        return numpy.array(self.blocks, dtype=numpy.int64).reshape(-1, 4)

    def to_json(self):
        return {'name': self.name, 'n': self.n, 'blocks': [list(block) for block in self.blocks]}

    def serialize(self):
        """
        Returns the design file representation: one line of JSON followed by a newline.

        :rtype: str
        """
        return json.dumps(self.to_json(), separators=(',', ':')) + '\n'

    def digest(self):
        """The SHA-256 digest of the point count and blocks, independent of the name."""
        content = json.dumps({'n': self.n, 'blocks': [list(block) for block in self.blocks]}, separators=(',', ':'))
        return hashlib.sha256(content.encode('utf-8')).digest()

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise DesignError('A design must be a JSON object.')
        if 'n' not in data or 'blocks' not in data:
            raise DesignError("A design must have the 'n' and 'blocks' keys.")

        blocks = data['blocks']
        if not isinstance(blocks, list) or any(not isinstance(block, list) for block in blocks):
            raise DesignError("The 'blocks' key must contain a list of lists.")

        name = data.get('name', '')
        if not isinstance(name, str):
            raise DesignError('The design name must be a string.')

        return cls(data['n'], blocks, name)

    def __eq__(self, other):
        return isinstance(other, Design) and self.n == other.n and self.block_set == other.block_set

    def __hash__(self):
        return hash((self.n, self.block_set))

    def __repr__(self):
        return 'Design(name={!r}, n={}, blocks={})'.format(self.name, self.n, len(self.blocks))


def load(stream):
    """
    Reads a design file.

    :param stream: A text stream positioned at the start of the file.
    :return: The design.
    :rtype: Design
    """
    try:
        data = json.load(stream)
    except ValueError as error:
        raise DesignError('The design file is not valid JSON: {}'.format(error))

    return Design.from_json(data)


def dump(design, stream):
    stream.write(design.serialize())


def relabel(design, permutation):
    """
    Renames the points of a design.

    :param Design design: The design to relabel.
    :param permutation: A sequence whose entry ``x`` is the new name of point ``x``.
    :return: The relabelled design.
    :rtype: Design
    """
    names = [int(point) for point in permutation]
    return Design(design.n, [[names[point] for point in block] for block in design.blocks], design.name)


@dataclasses.dataclass(frozen=True)
class DesignStats:
    n: int
    block_count: int
    lambda_min: int
    lambda_max: int
    is_2_design: bool
    is_supersimple: bool
    satisfies_triangle_delta: bool
    supersimple_witness: tuple = None
    delta_witness: tuple = None

    @property
    def lam(self):
        """The index of the design, or None when pairs are covered unevenly."""
        return self.lambda_min if self.is_2_design else None

    @property
    def problems(self):
        result = []
        if not self.is_2_design:
            result.append('not a 2-design (pairs covered between {} and {} times)'.format(
                self.lambda_min, self.lambda_max))
        if not self.is_supersimple:
            result.append('not supersimple')
        return result


_PAIRS = tuple(itertools.combinations(range(4), 2))
_TRIPLES = tuple(itertools.combinations(range(4), 3))


def pair_counts(design):
    """
    Counts the blocks through every pair of points.

    :param Design design: The design.
    :return: A symmetric n x n array with a zero diagonal.
    :rtype: numpy.ndarray
    """
    blocks = design.block_array()
    counts = numpy.zeros((design.n, design.n), dtype=numpy.int64)
    for i, j in _PAIRS:
        numpy.add.at(counts, (blocks[:, i], blocks[:, j]), 1)

    return counts + counts.T


def validate(design):
    """
    Computes the statistics of a design: its index, supersimplicity and condition (△).

    Condition (△) requires that whenever two blocks meet in exactly two points, their symmetric difference is a block.

    :param Design design: The design to validate.
    :return: The statistics.
    :rtype: DesignStats
    """
    n = design.n
    if not design.blocks:
        raise DesignError('degenerate: the design has no blocks')

    counts = pair_counts(design)
    if n > 1:
        off_diagonal = counts[~numpy.eye(n, dtype=bool)]
        lambda_min, lambda_max = int(off_diagonal.min()), int(off_diagonal.max())
    else:
        lambda_min = lambda_max = 0

    is_2_design = lambda_min == lambda_max and lambda_min >= 1

    triples = collections.defaultdict(list)
    for block in design.blocks:
        for triple in _TRIPLES:
            triples[tuple(block[i] for i in triple)].append(block)

    supersimple_witness = next((tuple(blocks[:2]) for blocks in triples.values() if len(blocks) > 1), None)

    through_pair = collections.defaultdict(list)
    for block in design.blocks:
        for i, j in _PAIRS:
            through_pair[(block[i], block[j])].append(block)

    delta_witness = None
    for pair in sorted(through_pair):
        for first, second in itertools.combinations(through_pair[pair], 2):
            if len(set(first) & set(second)) != 2:
                continue
            difference = tuple(sorted(set(first) ^ set(second)))
            if difference not in design.block_set:
                delta_witness = (first, second)
                break
        if delta_witness is not None:
            break

    stats = DesignStats(
        n=n,
        block_count=len(design.blocks),
        lambda_min=lambda_min,
        lambda_max=lambda_max,
        is_2_design=is_2_design,
        is_supersimple=supersimple_witness is None,
        satisfies_triangle_delta=delta_witness is None,
        supersimple_witness=supersimple_witness,
        delta_witness=delta_witness)

    logger.info('Validated %r: lambda in [%d, %d], supersimple=%s, delta=%s',
        design, lambda_min, lambda_max, stats.is_supersimple, stats.satisfies_triangle_delta)
    return stats


def require_supersimple_2_design(design, stats=None):
    """
    Validates a design and raises an error unless it is a supersimple 2-design.

    :param Design design: The design.
    :param DesignStats stats: Statistics already computed for this design, if any.
    :return: The statistics.
    :rtype: DesignStats
    """
    stats = stats or validate(design)
    if stats.problems:
        raise DesignError('The design {!r} is {}.'.format(design.name, ', '.join(stats.problems)))

    return stats


class CollinearityIndex(object):
    """
    The collinearity structure of a supersimple 2-design.

    For a pair {x, y}, the completing pairs are the pairs {a, b} such that {x, y, a, b} is a block, and
    ``overline(x, y)`` is {x, y} together with every completing point. A triple is collinear when some block
    contains it.
    """

    def __init__(self, design, stats=None):
        stats = require_supersimple_2_design(design, stats)

        self.design = design
        self.stats = stats
        self.n = design.n
        self.lam = stats.lam

        self._completions = collections.defaultdict(list)
        for block in design.blocks:
            for i, j in _PAIRS:
                rest = tuple(block[k] for k in range(4) if k not in (i, j))
                self._completions[(block[i], block[j])].append(rest)

        blocks = design.block_array()
        self.collinear = numpy.zeros((self.n, self.n, self.n), dtype=bool)
        for triple in _TRIPLES:
            for order in itertools.permutations(triple):
                self.collinear[blocks[:, order[0]], blocks[:, order[1]], blocks[:, order[2]]] = True

        for (x, y), pairs in self._completions.items():
            if 2 * len(pairs) + 2 != len(self.overline(x, y)):
                raise DesignError('The completing pairs of {{{}, {}}} are not disjoint.'.format(x, y))

    def completing_pairs(self, x, y):
        """
        Returns the completing pairs of {x, y}, sorted.

        :param int x: The first point.
        :param int y: The second point.
        :return: The pairs {a, b} such that {x, y, a, b} is a block.
        :rtype: list[tuple[int, int]]
        """
        return sorted(self._completions[(min(x, y), max(x, y))])

    def overline(self, x, y):
        points = {x, y}
        for pair in self._completions[(min(x, y), max(x, y))]:
            points.update(pair)

        return frozenset(points)

    def is_collinear(self, x, y, z):
        return bool(self.collinear[x, y, z])

    def collinear_triples(self):
        """
        Returns the set C of collinear triples, as sorted tuples.

        :rtype: set[tuple[int, int, int]]
        """
        result = set()
        for block in self.design.blocks:
            for triple in _TRIPLES:
                result.add(tuple(block[i] for i in triple))

        return result


def collinearity_index(design, stats=None):
    return CollinearityIndex(design, stats)


@dataclasses.dataclass(frozen=True, eq=False)
class BooleanReconstruction:
    base: int
    m: int
    table: numpy.ndarray
    vectors: tuple

    def vector(self, point):
        """Returns the image of a point in the vector space, as an m-bit integer."""
        return self.vectors[point]


def reconstruct_boolean(design, inf, stats=None):
    """
    Rebuilds the vector space structure of a design with n = 2 lambda + 2.

    The product ``a * b`` is the point completing {inf, a, b} to a block, with ``a * a = inf`` and ``a * inf = a``. The
    product must be associative, and then the points form an elementary abelian 2-group whose zero-sum quadruples are
    exactly the blocks.

    :param Design design: The design.
    :param int inf: The point used as the zero vector.
    :param DesignStats stats: Statistics already computed for this design, if any.
    :return: The multiplication table and an isomorphism to the vector space.
    :rtype: BooleanReconstruction
    """
    stats = require_supersimple_2_design(design, stats)
    n = design.n
    if n != 2 * stats.lam + 2:
        raise DesignError('Precondition failed: n = {} differs from 2 lambda + 2 = {}.'.format(n, 2 * stats.lam + 2))
    if not 0 <= inf < n:
        raise DesignError('The point {} is not in the design.'.format(inf))

    table = numpy.full((n, n), -1, dtype=numpy.int64)
    table[numpy.arange(n), numpy.arange(n)] = inf
    table[inf, :] = numpy.arange(n)
    table[:, inf] = numpy.arange(n)
    for block in design.blocks:
        if inf not in block:
            continue
        a, b, c = (point for point in block if point != inf)
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            table[x, y] = table[y, x] = z

    if numpy.any(table < 0):
        x, y = (int(v) for v in numpy.argwhere(table < 0)[0])
        raise NotBooleanError('not Boolean: no block contains {{{}, {}, {}}}'.format(inf, x, y))

    points = numpy.arange(n)
    left = table[table]
    right = table[points[:, None, None], table[None, :, :]]
    if not numpy.array_equal(left, right):
        a, b, c = (int(v) for v in numpy.argwhere(left != right)[0])
        raise NotBooleanError('not Boolean: ({0} * {1}) * {2} differs from {0} * ({1} * {2})'.format(a, b, c))

    vectors = {inf: 0}
    m = 0
    for point in range(n):
        if point in vectors:
            continue
        bit = 1 << m
        for element, vector in list(vectors.items()):
            vectors[int(table[element, point])] = vector | bit
        m += 1

    if n != 1 << m or len(vectors) != n:
        raise NotBooleanError('not Boolean: {} points do not form a vector space'.format(n))

    images = tuple(vectors[point] for point in range(n))
    for block in design.blocks:
        if images[block[0]] ^ images[block[1]] ^ images[block[2]] ^ images[block[3]]:
            raise NotBooleanError('not Boolean: block {} does not sum to zero'.format(list(block)))

    if len(design.blocks) != n * (n - 1) * (n - 2) // 24:
        raise NotBooleanError('not Boolean: some zero-sum quadruple is not a block')

    logger.info('Reconstructed %r as a vector space of dimension %d', design, m)
    return BooleanReconstruction(base=inf, m=m, table=table, vectors=images)


def sp_order(m):
    """
    Returns the order of the symplectic group Sp(2m, 2).

    :param int m: Half the dimension.
    :rtype: int
    """
    result = 2 ** (m * m)
    for i in range(1, m + 1):
        result *= 2 ** (2 * i) - 1

    return result


def o_order(m, sign):
    """
    Returns the order of the full orthogonal group O(2m, 2) of the given type.

    :param int m: Half the dimension.
    :param str sign: Either '+' or '-'.
    :rtype: int
    """
    epsilon = parse_sign(sign)
    result = 2 * 2 ** (m * (m - 1)) * (2 ** m - epsilon)
    for i in range(1, m):
        result *= 2 ** (2 * i) - 1

    return result


def parse_sign(sign):
    """
    Converts a sign to +1 or -1.

    :param sign: One of '+', '-', 1 or -1.
    :rtype: int
    """
    if sign in ('+', 1, '1', '+1'):
        return 1
    elif sign in ('-', -1, '-1'):
        return -1
    else:
        raise ValueError("Invalid sign '{}'.".format(sign))
