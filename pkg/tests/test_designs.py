# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.constructions
import conwaycore.designs
import io
import tests.helpers as helpers
import unittest


class DesignTests(unittest.TestCase):

    def test_init_sorts_blocks(self):
        target = conwaycore.designs.Design(6, [[5, 3, 1, 0], [0, 1, 2, 4]], 'test')

        self.assertEqual(((0, 1, 2, 4), (0, 1, 3, 5)), target.blocks)
        self.assertEqual('test', target.name)

    def test_init_invalid(self):
        Design = conwaycore.designs.Design

        self.assertRaises(conwaycore.designs.DesignError, Design, 0, [])
        self.assertRaises(conwaycore.designs.DesignError, Design, 5, [[0, 1, 2]])
        self.assertRaises(conwaycore.designs.DesignError, Design, 5, [[0, 1, 1, 2]])
        self.assertRaises(conwaycore.designs.DesignError, Design, 5, [[0, 1, 2, 5]])
        self.assertRaises(conwaycore.designs.DesignError, Design, 5, [[0, 1, 2, '3']])
        self.assertRaises(conwaycore.designs.DesignError, Design, 5, [[0, 1, 2, True]])

    def test_duplicate_block(self):
        with self.assertRaises(conwaycore.designs.DesignError) as context:
            conwaycore.designs.Design(5, [[0, 1, 2, 3], [3, 2, 1, 0]])

        self.assertEqual('Duplicate block [0, 1, 2, 3].', str(context.exception))

    def test_serialize(self):
        target = conwaycore.designs.Design(5, [[4, 3, 2, 1]], 'small')

        self.assertEqual('{"name":"small","n":5,"blocks":[[1,2,3,4]]}\n', target.serialize())

    def test_load(self):
        stream = io.StringIO('{"n": 5, "blocks": [[0, 1, 2, 3], [1, 2, 3, 4]]}')

        target = conwaycore.designs.load(stream)

        self.assertEqual(5, target.n)
        self.assertEqual(2, len(target.blocks))
        self.assertEqual('', target.name)

    def test_load_invalid(self):
        for content in (
                'not json', '[]', '{"n": 5}', '{"n": 5, "blocks": [1, 2]}', '{"n": 5, "blocks": [], "name": 3}'):
            self.assertRaises(conwaycore.designs.DesignError, conwaycore.designs.load, io.StringIO(content))

    def test_dump_and_load(self):
        design = helpers.cached(conwaycore.constructions.boolean_design, 3)
        stream = io.StringIO()

        conwaycore.designs.dump(design, stream)
        stream.seek(0)

        self.assertEqual(design, conwaycore.designs.load(stream))

    def test_digest_ignores_name(self):
        first = conwaycore.designs.Design(5, [[0, 1, 2, 3]], 'a')
        second = conwaycore.designs.Design(5, [[0, 1, 2, 3]], 'b')

        self.assertEqual(first.digest(), second.digest())
        self.assertEqual(32, len(first.digest()))
        self.assertNotEqual(first.digest(), conwaycore.designs.Design(6, [[0, 1, 2, 3]]).digest())

    def test_relabel(self):
        design = conwaycore.designs.Design(5, [[0, 1, 2, 3]])

        result = conwaycore.designs.relabel(design, [4, 3, 2, 1, 0])

        self.assertEqual(((1, 2, 3, 4),), result.blocks)


class ValidateTests(unittest.TestCase):

    def test_boolean(self):
        for m in (2, 3, 4):
            design = helpers.cached(conwaycore.constructions.boolean_design, m)

            target = conwaycore.designs.validate(design)

            self.assertEqual(2 ** m, target.n)
            self.assertEqual(2 ** (m - 1) - 1, target.lam)
            self.assertTrue(target.is_2_design)
            self.assertTrue(target.is_supersimple)
            self.assertTrue(target.satisfies_triangle_delta)
            self.assertEqual([], target.problems)

    def test_projective_plane(self):
        target = conwaycore.designs.validate(helpers.cached(conwaycore.constructions.projective_plane_3))

        self.assertEqual(1, target.lam)
        self.assertEqual(13, target.block_count)
        self.assertTrue(target.is_supersimple)
        self.assertTrue(target.satisfies_triangle_delta)

    def test_not_supersimple(self):
        target = conwaycore.designs.validate(helpers.complete_design(5))

        self.assertTrue(target.is_2_design)
        self.assertEqual(3, target.lam)
        self.assertFalse(target.is_supersimple)
        self.assertEqual(2, len(target.supersimple_witness))
        self.assertEqual(['not supersimple'], target.problems)

    def test_not_a_2_design(self):
        target = conwaycore.designs.validate(helpers.single_block_design())

        self.assertFalse(target.is_2_design)
        self.assertIsNone(target.lam)
        self.assertEqual(0, target.lambda_min)
        self.assertEqual(1, target.lambda_max)

    def test_triangle_delta_witness(self):
        # The blocks meet in {0, 1} but {2, 3, 4, 5} is not a block
        design = conwaycore.designs.Design(6, [[0, 1, 2, 3], [0, 1, 4, 5]])

        target = conwaycore.designs.validate(design)

        self.assertFalse(target.satisfies_triangle_delta)
        self.assertEqual(((0, 1, 2, 3), (0, 1, 4, 5)), target.delta_witness)

    def test_no_blocks(self):
        with self.assertRaises(conwaycore.designs.DesignError) as context:
            conwaycore.designs.validate(conwaycore.designs.Design(4, []))

        self.assertIn('degenerate', str(context.exception))

    def test_require_supersimple_2_design(self):
        self.assertRaises(
            conwaycore.designs.DesignError,
            conwaycore.designs.require_supersimple_2_design,
            helpers.complete_design(5))

    def test_pair_counts(self):
        target = conwaycore.designs.pair_counts(helpers.single_block_design())

        self.assertEqual(1, target[0, 1])
        self.assertEqual(1, target[3, 2])
        self.assertEqual(0, target[0, 4])
        self.assertEqual(0, target[0, 0])


class CollinearityIndexTests(unittest.TestCase):

    def test_boolean(self):
        design = helpers.cached(conwaycore.constructions.boolean_design, 3)

        target = conwaycore.designs.collinearity_index(design)

        # Every triple of a Boolean design is collinear
        self.assertEqual(56, len(target.collinear_triples()))
        self.assertEqual(frozenset(range(8)), target.overline(0, 1))
        self.assertEqual(3, len(target.completing_pairs(0, 1)))
        self.assertTrue(target.is_collinear(0, 1, 2))

    def test_projective_plane(self):
        design = helpers.cached(conwaycore.constructions.projective_plane_3)

        target = conwaycore.designs.CollinearityIndex(design)

        self.assertEqual(13 * 4, len(target.collinear_triples()))
        block = design.blocks[0]
        self.assertEqual(frozenset(block), target.overline(block[0], block[1]))
        self.assertEqual([(block[2], block[3])], target.completing_pairs(block[1], block[0]))
        self.assertEqual(2, int(target.collinear[block[0], block[1]].sum()))

    def test_collinear_mask_symmetric(self):
        target = conwaycore.designs.CollinearityIndex(helpers.cached(conwaycore.constructions.symplectic_design, 2))

        mask = target.collinear
        self.assertTrue((mask == mask.transpose(1, 0, 2)).all())
        self.assertTrue((mask == mask.transpose(2, 1, 0)).all())

    def test_not_supersimple(self):
        self.assertRaises(
            conwaycore.designs.DesignError,
            conwaycore.designs.CollinearityIndex,
            helpers.complete_design(5))


class BooleanReconstructionTests(unittest.TestCase):

    def test_reconstruct(self):
        for m in (2, 3, 4):
            design = helpers.cached(conwaycore.constructions.boolean_design, m)

            target = conwaycore.designs.reconstruct_boolean(design, 0)

            self.assertEqual(m, target.m)
            self.assertEqual(0, target.vector(0))
            self.assertEqual(2 ** m, len(set(target.vectors)))

    def test_reconstruct_large(self):
        for m, lam in ((5, 15), (6, 31)):
            design = helpers.cached(conwaycore.constructions.boolean_design, m)
            stats = conwaycore.designs.validate(design)

            target = conwaycore.designs.reconstruct_boolean(design, 0, stats)

            self.assertEqual(lam, stats.lam)
            self.assertTrue(stats.is_supersimple)
            self.assertTrue(stats.satisfies_triangle_delta)
            self.assertEqual(m, target.m)
            self.assertEqual(list(range(2 ** m)), sorted(target.vectors))

    def test_reconstruct_after_relabelling(self):
        for seed in (1, 2, 3):
            design = helpers.relabelled(helpers.cached(conwaycore.constructions.boolean_design, 4), seed)

            target = conwaycore.designs.reconstruct_boolean(design, 5)

            self.assertEqual(4, target.m)
            for block in design.blocks:
                self.assertEqual(0, target.vector(block[0]) ^ target.vector(block[1]) ^
                    target.vector(block[2]) ^ target.vector(block[3]))

    def test_precondition(self):
        design = helpers.cached(conwaycore.constructions.symplectic_design, 2)

        with self.assertRaises(conwaycore.designs.DesignError) as context:
            conwaycore.designs.reconstruct_boolean(design, 0)

        self.assertIn('Precondition failed', str(context.exception))
        self.assertNotIsInstance(context.exception, conwaycore.designs.NotBooleanError)


class GroupOrderTests(unittest.TestCase):

    def test_sp_order(self):
        self.assertEqual(6, conwaycore.designs.sp_order(1))
        self.assertEqual(720, conwaycore.designs.sp_order(2))
        self.assertEqual(1451520, conwaycore.designs.sp_order(3))

    def test_o_order(self):
        self.assertEqual(72, conwaycore.designs.o_order(2, '+'))
        self.assertEqual(120, conwaycore.designs.o_order(2, '-'))
        self.assertEqual(40320, conwaycore.designs.o_order(3, '+'))
        self.assertEqual(51840, conwaycore.designs.o_order(3, '-'))

    def test_parse_sign(self):
        self.assertEqual(1, conwaycore.designs.parse_sign('+'))
        self.assertEqual(-1, conwaycore.designs.parse_sign(-1))
        self.assertRaises(ValueError, conwaycore.designs.parse_sign, '0')
