# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

import concurrent.futures
import os


class WorkerPool(object):
    """Runs independent pieces of work on a pool of threads and returns their results in submission order."""

    def __init__(self, threads=None):
        """
        :param int threads: The number of threads, or None to use one thread per core.
        """
        self.threads = max(1, threads or os.cpu_count() or 1)

    def map(self, function, items):
        """
        Applies a function to every item.

        :param function: The function to apply.
        :param items: The items.
        :return: The results, in the order of the items.
        :rtype: list
        """
        items = list(items)
        if self.threads == 1 or len(items) <= 1:
            return [function(item) for item in items]

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(function, items))

    @staticmethod
    def split(items, pieces=64):
        """
        Splits a sequence into contiguous chunks. The chunks do not depend on the number of threads.

        :param items: The sequence to split.
        :param int pieces: The largest number of chunks.
        :return: The non-empty chunks, in order.
        :rtype: list
        """
        size = max(1, -(-len(items) // pieces))
        return [items[start:start + size] for start in range(0, len(items), size)]


SEQUENTIAL = WorkerPool(1)


def first_witness(results):
    """
    Combines the results of a partitioned check.

    :param list results: One ``(checked, witness)`` pair per chunk, in chunk order.
    :return: The total number of cases checked and the first witness found, or None.
    :rtype: tuple[int, object]
    """
    checked = sum(count for count, _ in results)
    witness = next((witness for _, witness in results if witness is not None), None)
    return checked, witness
