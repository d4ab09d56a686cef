#!/usr/bin/env python

# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

"""
The main file for Conwaycore.
"""

import conwaycore.routing


if __name__ == "__main__":
    conwaycore.routing.Program.execute()
