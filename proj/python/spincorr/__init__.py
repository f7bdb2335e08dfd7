# Copyright 2026 The spincorr Authors
# SPDX-License-Identifier: Apache-2.0
"""Formation-probability correlators for spin-1/2 chains."""

from ._spincorr import *  # noqa: F401,F403
from ._spincorr import CapacityError, ConvergenceError, DomainError

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
