# -*- coding: utf-8; -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The Conwaycore developers
#
# See the LICENSE file at the root of the repository for the full license text.

__version__ = '1.0'
