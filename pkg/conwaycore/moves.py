# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
Elementary moves and the identities they satisfy.

For distinct points a and b of a supersimple design, the elementary move [a, b] is the involution swapping a with b
and swapping a_i with b_i for every block {a, b, a_i, b_i}. The move [a, a] is the identity. A move sequence
[a_0, a_1, ..., a_k] is the product [a_0, a_1][a_1, a_2]...[a_(k-1), a_k], read from left to right.
"""

import conwaycore.permutations
import conwaycore.workers
import dataclasses
import logging
import numpy

logger = logging.getLogger(__name__)


class MoveError(Exception):
    """A move sequence is invalid."""
    pass


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """The outcome of an exhaustive check, with the first counterexample found."""
    name: str
    passed: bool
    checked: int
    witness: dict = None

    def to_json(self):
        return {
            'name': self.name,
            'status': 'pass' if self.passed else 'fail',
            'checked': self.checked,
            'witness': self.witness
        }


class MoveTable(object):
    """All elementary moves of a supersimple design, and the set E of distinct non-trivial moves."""

    def __init__(self, index):
        """
        :param CollinearityIndex index: The collinearity index of the design.
        """
        self.index = index
        self.n = n = index.n
        self.lam = index.lam

        dtype = conwaycore.permutations.point_dtype(n)
        self.table = numpy.broadcast_to(numpy.arange(n, dtype=dtype), (n, n, n)).copy()
        for a in range(n):
            for b in range(a + 1, n):
                row = self.table[a, b]
                row[a], row[b] = b, a
                for p, q in index.completing_pairs(a, b):
                    row[p], row[q] = q, p
                self.table[b, a] = row

        self.table.flags.writeable = False

        classes = {}
        for a in range(n):
            for b in range(a + 1, n):
                classes.setdefault(self.table[a, b].tobytes(), []).append((a, b))

        self.pairs_by_move = classes
        self.distinct = [
            conwaycore.permutations.Permutation.from_array(self.table[pairs[0]]) for pairs in classes.values()]
        logger.info('Built %d elementary moves, %d distinct', n * (n - 1) // 2, len(self.distinct))

    def move(self, a, b):
        """
        Returns the elementary move [a, b].

        :rtype: Permutation
        """
        return conwaycore.permutations.Permutation.from_array(self.table[a, b])

    def array(self):
        """
        Returns the distinct moves as an array with one row of images per move.

        :rtype: numpy.ndarray
        """
        return numpy.array([move.images for move in self.distinct]).reshape(-1, self.n)

    def __len__(self):
        return len(self.distinct)


def elementary_move(index, a, b):
    """
    Returns the elementary move [a, b] of a design.

    :param CollinearityIndex index: The collinearity index of the design.
    :param int a: The first point.
    :param int b: The second point.
    :rtype: Permutation
    """
    images = list(range(index.n))
    if a != b:
        images[a], images[b] = b, a
        for p, q in index.completing_pairs(a, b):
            images[p], images[q] = q, p

    return conwaycore.permutations.Permutation(images)


def move_sequence(table, points):
    """
    Returns the product of the elementary moves along a path of points.

    :param MoveTable table: The move table.
    :param list[int] points: The path, with at least one point.
    :rtype: Permutation
    """
    points = list(points)
    if not points:
        raise MoveError('A move sequence needs at least one point.')

    return conwaycore.permutations.multiply_all((table.move(a, b) for a, b in zip(points, points[1:])), table.n)


def _cycles_of(images):
    return str(conwaycore.permutations.Permutation.from_array(images))


def check_line_move_identity(table):
    """
    Checks that the three pairings of every block give equal moves: [w, x] = [y, z] for every block {w, x, y, z}.

    :param MoveTable table: The move table.
    :rtype: CheckResult
    """
    blocks = table.index.design.block_array()
    moves = table.table
    checked = 0
    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        left = moves[blocks[:, i], blocks[:, j]]
        right = moves[blocks[:, k], blocks[:, l]]
        differ = numpy.flatnonzero(numpy.any(left != right, axis=1))
        checked += len(blocks)
        if len(differ):
            row = differ[0]
            w, x, y, z = (int(blocks[row, c]) for c in (i, j, k, l))
            return CheckResult('line_move_identity', False, checked, {
                'block': blocks[row].tolist(),
                'left': '[{},{}] = {}'.format(w, x, _cycles_of(left[row])),
                'right': '[{},{}] = {}'.format(y, z, _cycles_of(right[row]))
            })

    return CheckResult('line_move_identity', True, checked)


def _distinct_rows(n, y, z):
    rows = numpy.ones(n, dtype=bool)
    rows[[y, z]] = False
    return rows


def _sympeq_chunk(table, ys):
    moves = table.table
    collinear = table.index.collinear
    n = table.n
    checked = 0
    for y in ys:
        for z in range(n):
            if z == y:
                continue
            conjugator = moves[y, z]
            # Row x holds [y,z][x,y][y,z]
            product = conjugator[moves[:, y][:, conjugator]]
            expected = numpy.where(collinear[:, y, z][:, None], moves[:, y], moves[:, z])
            rows = _distinct_rows(n, y, z)
            differ = numpy.flatnonzero(numpy.any(product != expected, axis=1) & rows)
            checked += n - 2
            if len(differ):
                x = int(differ[0])
                return checked, {
                    'triple': [x, y, z],
                    'collinear': bool(collinear[x, y, z]),
                    'left': _cycles_of(product[x]),
                    'right': _cycles_of(expected[x])
                }

    return checked, None


def check_sympeq(table, pool=None):
    """
    Checks that [y, z][x, y][y, z] is [x, y] when x is in overline(y, z), and [x, z] otherwise, for all distinct x, y
    and z.

    :param MoveTable table: The move table.
    :param WorkerPool pool: The pool used to partition the triples.
    :rtype: CheckResult
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    results = pool.map(lambda ys: _sympeq_chunk(table, ys), pool.split(list(range(table.n))))
    checked, witness = conwaycore.workers.first_witness(results)
    return CheckResult('sympeq', witness is None, checked, witness)


def _braid_chunk(table, ys):
    moves = table.table
    collinear = table.index.collinear
    n = table.n
    identity = numpy.arange(n)
    checked = 0
    for y in ys:
        for z in range(n):
            if z == y:
                continue
            rows = _distinct_rows(n, y, z)
            # Row x holds [x,y][y,z]
            product = moves[y, z][moves[:, y]]
            square = numpy.take_along_axis(product, product, axis=1)
            cube = numpy.take_along_axis(product, square, axis=1)
            is_identity = numpy.all(product == identity, axis=1)
            order_two = ~is_identity & numpy.all(square == identity, axis=1)
            order_three = ~is_identity & ~order_two & numpy.all(cube == identity, axis=1)
            inside = collinear[:, y, z]
            wrong = rows & numpy.where(inside, ~order_two, ~order_three)
            checked += n - 2
            if numpy.any(wrong):
                x = int(numpy.flatnonzero(wrong)[0])
                return checked, {
                    'triple': [x, y, z],
                    'collinear': bool(inside[x]),
                    'product': _cycles_of(product[x]),
                    'expected_order': 2 if inside[x] else 3
                }

            # Row x holds [z,x][x,y][y,z] for x outside overline(y, z)
            walk = moves[y, z][numpy.take_along_axis(moves[:, y], moves[z], axis=1)]
            outside = rows & ~inside
            differ = numpy.flatnonzero(outside & numpy.any(walk != moves[:, y], axis=1))
            if len(differ):
                x = int(differ[0])
                return checked, {
                    'triple': [x, y, z],
                    'left': '[{},{},{},{}] = {}'.format(z, x, y, z, _cycles_of(walk[x])),
                    'right': '[{},{}] = {}'.format(x, y, _cycles_of(moves[x, y]))
                }

    return checked, None


def check_braid_orders(table, pool=None):
    """
    Checks, for all distinct x, y and z, that [x, y][y, z] has order 2 when x is in overline(y, z) and order 3
    otherwise, and that [z, x, y, z] = [x, y] in the second case.

    :param MoveTable table: The move table.
    :param WorkerPool pool: The pool used to partition the triples.
    :rtype: CheckResult
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    results = pool.map(lambda ys: _braid_chunk(table, ys), pool.split(list(range(table.n))))
    checked, witness = conwaycore.workers.first_witness(results)
    return CheckResult('braid_orders', witness is None, checked, witness)


def _conjugation_chunk(table, conjugators):
    moves = table.table
    n = table.n
    checked = 0
    for g in conjugators:
        # [x,y]^g maps x^g to the image of ([x,y] applied then g)
        conjugated = numpy.empty_like(moves)
        conjugated[:, :, g] = g[moves]
        expected = moves[g[:, None], g[None, :]]
        differ = numpy.argwhere(numpy.any(conjugated != expected, axis=2))
        checked += n * n
        if len(differ):
            x, y = (int(v) for v in differ[0])
            return checked, {
                'pair': [x, y],
                'conjugator': _cycles_of(g),
                'left': _cycles_of(conjugated[x, y]),
                'right': '[{},{}] = {}'.format(int(g[x]), int(g[y]), _cycles_of(expected[x, y]))
            }

    return checked, None


def check_conjugation(table, conjugators=None, pool=None):
    """
    Checks that [x, y]^g = [x^g, y^g] for every pair of points and every g in E.

    :param MoveTable table: The move table.
    :param list[Permutation] conjugators: The elements g to check, E by default.
    :param WorkerPool pool: The pool used to partition the conjugators.
    :rtype: CheckResult
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    if conjugators is None:
        conjugators = table.distinct

    arrays = [numpy.asarray(g.images) for g in conjugators]
    results = pool.map(lambda chunk: _conjugation_chunk(table, chunk), pool.split(arrays))
    checked, witness = conwaycore.workers.first_witness(results)
    return CheckResult('conjugation', witness is None, checked, witness)


def _conjugation_conditions_chunk(table, bs):
    moves = table.table
    n = table.n
    checked = 0
    for b in bs:
        for c in range(n):
            if c == b:
                continue
            h = moves[b, c]
            rows = _distinct_rows(n, b, c)

            # Row a holds [a,b]^[b,c] and [a^[b,c], c]
            conjugated = numpy.empty_like(moves[:, b])
            conjugated[:, h] = h[moves[:, b]]
            expected = moves[h, c]
            differ = numpy.flatnonzero(rows & numpy.any(conjugated != expected, axis=1))
            checked += n - 2
            if len(differ):
                a = int(differ[0])
                return checked, {
                    'triple': [a, b, c],
                    'identity': '[a,b]^[b,c] = [a^[b,c],c]',
                    'left': _cycles_of(conjugated[a]),
                    'right': _cycles_of(expected[a])
                }

            # Row a holds [a,b,c,a^[b,c]] = [a,b][b,c][c,a^[b,c]]
            walk = numpy.take_along_axis(moves[c][h], h[moves[:, b]], axis=1)
            differ = numpy.flatnonzero(rows & numpy.any(walk != h, axis=1))
            if len(differ):
                a = int(differ[0])
                return checked, {
                    'triple': [a, b, c],
                    'identity': '[b,c] = [a,b,c,a^[b,c]]',
                    'left': _cycles_of(h),
                    'right': _cycles_of(walk[a])
                }

    return checked, None


def check_move_conjugation_conditions(table, pool=None):
    """
    Checks the two move identities that make every move sequence an automorphism of the design: for all distinct a, b
    and c, [a, b]^[b, c] = [a^[b, c], c] and [b, c] = [a, b, c, a^[b, c]].

    :param MoveTable table: The move table.
    :param WorkerPool pool: The pool used to partition the triples.
    :rtype: CheckResult
    """
    pool = pool or conwaycore.workers.SEQUENTIAL
    results = pool.map(lambda bs: _conjugation_conditions_chunk(table, bs), pool.split(list(range(table.n))))
    checked, witness = conwaycore.workers.first_witness(results)
    return CheckResult('move_conjugation_conditions', witness is None, checked, witness)


def check_move_count(table):
    """
    Checks that |E| (lambda + 1) = n (n - 1) / 2 and that every move [a, b] with a != b is an involution moving
    2 lambda + 2 points.

    :param MoveTable table: The move table.
    :rtype: CheckResult
    """
    n = table.n
    expected = n * (n - 1) // 2
    moves = table.array()
    identity = numpy.arange(n)
    supports = numpy.count_nonzero(moves != identity, axis=1)
    involutions = numpy.all(numpy.take_along_axis(moves, moves, axis=1) == identity, axis=1)

    witness = None
    if len(table) * (table.lam + 1) != expected:
        quotient, remainder = divmod(expected, table.lam + 1)
        witness = {'moves': len(table), 'expected': None if remainder else quotient}
    elif numpy.any(supports != 2 * table.lam + 2) or not numpy.all(involutions):
        row = int(numpy.flatnonzero((supports != 2 * table.lam + 2) | ~involutions)[0])
        witness = {'move': _cycles_of(moves[row]), 'support': int(supports[row]), 'expected': 2 * table.lam + 2}

    return CheckResult('move_count', witness is None, len(table), witness)
