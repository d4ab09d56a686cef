# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import conwaycore.caching
import unittest


class SqliteCacheTests(unittest.TestCase):

    def test_put_and_get(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        target.put(b'design', 'pi_order', 0, 95040)
        result = target.get(b'design', 'pi_order', 0)

        self.assertEqual(95040, result)

    def test_commit(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        target.put(b'design', 'move_group_order', -1, 720)
        target.commit()
        result = target.get(b'design', 'move_group_order', -1)

        self.assertEqual(720, result)

    def test_keys(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        target.put(b'design', 'pi_order', 0, 72)

        self.assertIsNone(target.get(b'design', 'pi_order', 1))
        self.assertIsNone(target.get(b'design', 'move_group_order', 0))
        self.assertIsNone(target.get(b'other', 'pi_order', 0))

    def test_max_values(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        target.put(b'design', 'move_group_order', -1, 2 ** 80 + 1)
        result = target.get(b'design', 'move_group_order', -1)

        self.assertEqual(2 ** 80 + 1, result)

    def test_existing_value_kept(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        target.put(b'design', 'pi_order', 0, 72)
        target.put(b'design', 'pi_order', 0, 1)

        self.assertEqual(72, target.get(b'design', 'pi_order', 0))

    def test_cache_miss(self):
        target = conwaycore.caching.SqliteCache(':memory:')

        result = target.get(b'design', 'pi_order', 0)

        self.assertIsNone(result)
