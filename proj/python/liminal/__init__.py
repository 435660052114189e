# SPDX-FileCopyrightText: © 2026 The liminal authors
#
# SPDX-License-Identifier: Apache-2.0
"""Invariants of isolated weighted-homogeneous hypersurface singularities."""

from ._liminal import *  # noqa: F401,F403
from ._liminal import LiminalError, WeightSystem  # noqa: F401

__version__ = "0.1.0"
