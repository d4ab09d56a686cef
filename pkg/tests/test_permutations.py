# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.permutations
import numpy
import unittest

Permutation = conwaycore.permutations.Permutation


class PermutationTests(unittest.TestCase):

    def test_init(self):
        target = Permutation([1, 0, 2])

        self.assertEqual(3, target.degree)
        self.assertEqual([1, 0, 2], target.images.tolist())
        self.assertEqual(numpy.uint8, target.images.dtype)
        self.assertEqual(1, target(0))

    def test_init_invalid(self):
        self.assertRaises(conwaycore.permutations.PermutationError, Permutation, [0, 0, 1])
        self.assertRaises(conwaycore.permutations.PermutationError, Permutation, [1, 2, 3])

    def test_point_dtype(self):
        self.assertEqual(numpy.uint8, conwaycore.permutations.point_dtype(256))
        self.assertEqual(numpy.uint16, conwaycore.permutations.point_dtype(257))
        self.assertEqual(numpy.uint16, conwaycore.permutations.point_dtype(65536))
        self.assertEqual(numpy.uint32, conwaycore.permutations.point_dtype(65537))

    def test_images_read_only(self):
        target = Permutation([1, 0])

        self.assertRaises(ValueError, target.images.__setitem__, 0, 0)

    def test_compose_left_to_right(self):
        p = Permutation.from_cycles(3, (0, 1))
        q = Permutation.from_cycles(3, (1, 2))

        result = conwaycore.permutations.compose(p, q)

        # 0 goes to 1 under p, then to 2 under q
        self.assertEqual(2, result(0))
        self.assertEqual('(0 2 1)', str(result))
        self.assertEqual('(0 1 2)', str(q * p))

    def test_compose_degree_mismatch(self):
        self.assertRaises(
            conwaycore.permutations.PermutationError,
            conwaycore.permutations.compose,
            Permutation.identity(3),
            Permutation.identity(4))

    def test_inverse(self):
        p = Permutation.from_cycles(5, (0, 1, 2, 3))

        self.assertTrue((p * conwaycore.permutations.inverse(p)).is_identity())
        self.assertEqual('(0 3 2 1)', str(p.inverse()))

    def test_conjugate(self):
        p = Permutation.from_cycles(4, (0, 1))
        g = Permutation.from_cycles(4, (1, 2, 3))

        result = conwaycore.permutations.conjugate(p, g)

        self.assertEqual(g.inverse() * p * g, result)
        self.assertEqual('(0 2)', str(result))

    def test_power(self):
        p = Permutation.from_cycles(6, (0, 1, 2), (3, 4))

        self.assertEqual(p * p, p ** 2)
        self.assertTrue((p ** 6).is_identity())
        self.assertEqual(p.inverse(), p ** -1)

    def test_order(self):
        p = Permutation.from_cycles(7, (0, 1, 2), (3, 4))

        self.assertEqual(6, conwaycore.permutations.element_order(p))
        self.assertEqual(1, Permutation.identity(4).order())
        self.assertEqual([1, 1, 2, 3], p.cycle_type())

    def test_support_and_fixed_points(self):
        p = Permutation.from_cycles(6, (1, 4), (2, 5))

        self.assertEqual(frozenset([1, 2, 4, 5]), conwaycore.permutations.support(p))
        self.assertEqual(frozenset([0, 3]), conwaycore.permutations.fixed_points(p))

    def test_cycles(self):
        p = Permutation([2, 0, 1, 3, 5, 4])

        self.assertEqual([(0, 2, 1), (4, 5)], conwaycore.permutations.cycles(p))
        self.assertEqual([(0, 2, 1), (3,), (4, 5)], p.cycles(include_fixed=True))
        self.assertEqual('(0 2 1)(4 5)', str(p))
        self.assertEqual('()', str(Permutation.identity(3)))

    def test_from_cycles_invalid(self):
        self.assertRaises(conwaycore.permutations.PermutationError, Permutation.from_cycles, 4, (0, 1), (1, 2))
        self.assertRaises(conwaycore.permutations.PermutationError, Permutation.from_cycles, 4, (0, 4))

    def test_involution(self):
        self.assertTrue(Permutation.from_cycles(4, (0, 1), (2, 3)).is_involution())
        self.assertFalse(Permutation.identity(4).is_involution())
        self.assertFalse(Permutation.from_cycles(4, (0, 1, 2)).is_involution())

    def test_equality_and_hash(self):
        first = Permutation([1, 0, 2])
        second = Permutation.from_cycles(3, (0, 1))

        self.assertEqual(first, second)
        self.assertEqual(1, len({first, second}))
        self.assertNotEqual(first, Permutation([1, 0]))
        self.assertEqual(first.key, second.key)

    def test_multiply_all(self):
        p = Permutation.from_cycles(3, (0, 1))
        q = Permutation.from_cycles(3, (1, 2))

        self.assertEqual(p * q * p, conwaycore.permutations.multiply_all([p, q, p], 3))
        self.assertTrue(conwaycore.permutations.multiply_all([], 3).is_identity())
