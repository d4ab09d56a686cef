# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.designs
import conwaycore.moves
import functools
import itertools
import numpy
import os
import tempfile
import unittest

SLOW_TESTS_VARIABLE = 'CONWAYCORE_SLOW_TESTS'

slow = unittest.skipUnless(
    os.environ.get(SLOW_TESTS_VARIABLE), 'set {} to run the slow tests'.format(SLOW_TESTS_VARIABLE))


def complete_design(n):
    """All the 4-subsets of n points: a 2-design that is not supersimple once n > 4."""
    return conwaycore.designs.Design(n, itertools.combinations(range(n), 4), 'complete({})'.format(n))


def single_block_design():
    """One block on five points: not a 2-design."""
    return conwaycore.designs.Design(5, [[0, 1, 2, 3]], 'single')


@functools.lru_cache(maxsize=None)
def cached(factory, *args):
    """Builds a design once per test run."""
    return factory(*args)


def random_labels(n, seed):
    """
    Returns a random relabelling of n points.

    :param int n: The number of points.
    :param int seed: The seed of the random generator.
    :rtype: list[int]
    """
    return numpy.random.default_rng(seed).permutation(n).tolist()


def relabelled(design, seed):
    return conwaycore.designs.relabel(design, random_labels(design.n, seed))


def write_design(test, design):
    """
    Writes a design to a temporary file removed at the end of the test.

    :param unittest.TestCase test: The running test.
    :param Design design: The design to write.
    :return: The path of the file.
    :rtype: str
    """
    return write_text(test, design.serialize())


def write_text(test, content):
    handle, path = tempfile.mkstemp(suffix='.json')
    with os.fdopen(handle, 'w', encoding='utf-8') as stream:
        stream.write(content)

    test.addCleanup(os.remove, path)
    return path


def move_table(factory, *args):
    """Builds the move table of a constructed design once per test run."""
    design = cached(factory, *args)
    index = cached(conwaycore.designs.collinearity_index, design)
    return cached(conwaycore.moves.MoveTable, index)
