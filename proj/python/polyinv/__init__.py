# Copyright 2026 The polyinv authors
# SPDX-License-Identifier: Apache-2.0

"""Exact-arithmetic toolkit for substitution-invariant polynomials.

The heavy lifting happens in the compiled extension; this package just
re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
