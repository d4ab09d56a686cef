# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.classifier
import conwaycore.constructions
import tests.helpers as helpers
import unittest

VERIFIED = conwaycore.classifier.Hypotheses(True, True, True)
NOT_REGULAR = conwaycore.classifier.Hypotheses(True, True, False)


class ClassifyTests(unittest.TestCase):

    def test_boolean(self):
        target = conwaycore.classifier.classify(8, 3, 8, 1, VERIFIED)

        self.assertEqual('BOOLEAN(3)', target.label)
        self.assertEqual(3, target.m)
        self.assertTrue(target.consistent)
        self.assertIn('n=2^3 and |L|=2^3', target.evidence)

    def test_orthogonal(self):
        target = conwaycore.classifier.classify(10, 2, 720, 72, VERIFIED)

        self.assertEqual('SP(2)', target.label)
        self.assertEqual('+', target.sign)
        self.assertIn('|pi|=|O+(4,2)|', target.evidence)

    def test_orthogonal_minus(self):
        target = conwaycore.classifier.classify(28, 5, 1451520, 51840, VERIFIED)

        self.assertEqual('SP(3)', target.label)
        self.assertEqual('-', target.sign)

    def test_affine_symplectic(self):
        target = conwaycore.classifier.classify(16, 3, 11520, 720, VERIFIED)

        self.assertEqual('AFFINE_SP(2)', target.label)
        self.assertIn('|pi|=|Sp(4,2)|', target.evidence)

    def test_exotic(self):
        target = conwaycore.classifier.classify(13, 1, 1235520, 95040, NOT_REGULAR, False, True)

        self.assertEqual('EXOTIC_M13_CANDIDATE', target.label)
        self.assertFalse(target.hypotheses_verified)
        self.assertTrue(target.consistent)

    def test_unclassified_outside_hypotheses(self):
        target = conwaycore.classifier.classify(13, 1, 1235520, 95040, NOT_REGULAR, True, True)

        self.assertEqual('UNCLASSIFIED', target.label)
        self.assertTrue(target.consistent)

    def test_unclassified_contradiction(self):
        with self.assertLogs('conwaycore.classifier', 'WARNING'):
            target = conwaycore.classifier.classify(12, 3, 99, 1, VERIFIED)

        self.assertEqual(conwaycore.classifier.Family.UNCLASSIFIED, target.family)
        self.assertFalse(target.consistent)

    def test_missing_reports(self):
        self.assertRaises(
            conwaycore.classifier.ClassificationError, conwaycore.classifier.classify, 8, 3, None, 1, VERIFIED)
        self.assertRaises(
            conwaycore.classifier.ClassificationError, conwaycore.classifier.classify, 13, 1, 13, 1, NOT_REGULAR)

    def test_to_json(self):
        target = conwaycore.classifier.classify(16, 3, 11520, 720, VERIFIED)

        self.assertEqual({
            'family': 'AFFINE_SP(2)',
            'parameters': {'m': 2, 'sign': None},
            'hypotheses_verified': True,
            'evidence': ['n=16', 'lambda=3', '|L|=11520', '|pi|=720', 'n=2^4 and |L|=2^4|Sp(4,2)|', '|pi|=|Sp(4,2)|']
        }, target.to_json())


class PrimitivityImplicationTests(unittest.TestCase):

    def test_orthogonal(self):
        target = conwaycore.classifier.verify_primitivity_implications(10, 2, True, True, True, True, True, [9])

        self.assertTrue(target.passed)
        self.assertEqual('pass', target.status)
        self.assertEqual(4, len(target.implications))
        self.assertFalse(any(implication.vacuous for implication in target.implications))

    def test_counterexample(self):
        target = conwaycore.classifier.verify_primitivity_implications(10, 2, True, False, True, True, True)

        self.assertFalse(target.passed)
        failed = [implication.name for implication in target.implications if not implication.holds]
        self.assertEqual(['group implies primitive'], failed)

    def test_short_orbit(self):
        target = conwaycore.classifier.verify_primitivity_implications(10, 2, True, True, True, True, True, [3, 6])

        self.assertEqual('fail', target.status)

    def test_vacuous(self):
        target = conwaycore.classifier.verify_primitivity_implications(13, 1, False, True, False, True, True)

        self.assertTrue(target.passed)
        self.assertTrue(all(implication.vacuous for implication in target.implications))

    def test_skipped(self):
        target = conwaycore.classifier.verify_primitivity_implications(8, 3, True, True, True, False, False)

        self.assertEqual('skipped', target.status)
        self.assertTrue(target.passed)
        self.assertEqual(
            {'name': 'primitivity_implications', 'status': 'skipped',
             'details': {'reason': 'hypothesis n>2λ+2 fails, skipped'}},
            target.to_json())

    def test_implication_json(self):
        target = conwaycore.classifier.Implication('group implies primitive', False, False)

        self.assertEqual({
            'name': 'group implies primitive',
            'antecedent': False,
            'consequent': False,
            'status': 'pass',
            'vacuous': True
        }, target.to_json())


class FamilyParameterTests(unittest.TestCase):

    def test_orthogonal(self):
        target = conwaycore.classifier.verify_family_parameters(10, 2, VERIFIED, strong_triangle=True)

        self.assertEqual('pass', target.status)
        self.assertEqual('orthogonal', target.details['branch'])
        self.assertEqual(2, target.details['m'])
        self.assertEqual('+', target.details['sign'])

    def test_orthogonal_minus(self):
        target = conwaycore.classifier.verify_family_parameters(28, 5, VERIFIED)

        self.assertEqual('pass', target.status)
        self.assertEqual({'branch': 'orthogonal', 'm': 3, 'sign': '-'}, {
            key: target.details[key] for key in ('branch', 'm', 'sign')})

    def test_symplectic(self):
        target = conwaycore.classifier.verify_family_parameters(16, 3, VERIFIED, strong_triangle=True)

        self.assertEqual('pass', target.status)
        self.assertEqual('symplectic', target.details['branch'])

    def test_boolean(self):
        design = helpers.relabelled(helpers.cached(conwaycore.constructions.boolean_design, 3), 7)

        target = conwaycore.classifier.verify_family_parameters(8, 3, VERIFIED, design)

        self.assertEqual('pass', target.status)
        self.assertEqual({'branch': 'boolean', 'm': 3}, {key: target.details[key] for key in ('branch', 'm')})

    def test_boolean_requires_design(self):
        self.assertRaises(
            conwaycore.classifier.ClassificationError,
            conwaycore.classifier.verify_family_parameters, 8, 3, VERIFIED)

    def test_no_family(self):
        target = conwaycore.classifier.verify_family_parameters(20, 3, VERIFIED)

        self.assertEqual('fail', target.status)
        self.assertIsNone(target.details['branch'])

    def test_weak_triangle(self):
        target = conwaycore.classifier.verify_family_parameters(10, 2, VERIFIED, strong_triangle=False)

        self.assertEqual('fail', target.status)
        self.assertFalse(target.details['strong_triangle_property'])

    def test_inapplicable(self):
        with self.assertRaises(conwaycore.classifier.ClassificationError) as context:
            conwaycore.classifier.verify_family_parameters(13, 1, NOT_REGULAR)

        self.assertIn('inapplicable', str(context.exception))
