# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import contextlib
import sqlite3


class SqliteCache(object):
    """An object that can be used for caching group orders in a Sqlite database."""

    def __init__(self, path):
        """
        Initializes the connection to the database, and creates the table if needed.

        :param str path: The path to the database file. Use ':memory:' for an in-memory database.
        """
        self.connection = sqlite3.connect(path)

        with contextlib.closing(self.connection.cursor()) as cursor:
            cursor.execute("""
                CREATE TABLE IF NOT EXISTS GroupOrders(
                  DesignDigest BLOB,
                  Quantity TEXT,
                  BasePoint INT,
                  Value TEXT,
                  PRIMARY KEY (DesignDigest, Quantity, BasePoint))
            """)

    def get(self, design_digest, quantity, base_point):
        """
        Returns a cached group order.

        :param bytes design_digest: The digest of the design.
        :param str quantity: The name of the cached quantity, such as 'pi_order'.
        :param int base_point: The base point the quantity depends on, or -1.
        :return: The cached value if it is found in the cache, or None otherwise.
        :rtype: int
        """
        with contextlib.closing(self.connection.cursor()) as cursor:
            cursor.execute("""
                  SELECT  Value
                  FROM    GroupOrders
                  WHERE   DesignDigest = ? AND Quantity = ? AND BasePoint = ?
                """,
                (design_digest, quantity, base_point))

            result = cursor.fetchone()

            if result is None:
                return None
            else:
                return int(result[0])

    def put(self, design_digest, quantity, base_point, value):
        """
        Saves a group order in cache. Orders are stored as text since they can exceed 64 bits.

        :param bytes design_digest: The digest of the design.
        :param str quantity: The name of the cached quantity.
        :param int base_point: The base point the quantity depends on, or -1.
        :param int value: The value to save.
        """
        with contextlib.closing(self.connection.cursor()) as cursor:
            cursor.execute("""
                  INSERT OR IGNORE INTO GroupOrders
                    (DesignDigest, Quantity, BasePoint, Value)
                  VALUES (?, ?, ?, ?)
                """,
                (design_digest, quantity, base_point, str(value)))

    def commit(self):
        """
        Commits all changes to the cache database.
        """
        self.connection.commit()
