"""Truncated q-series arithmetic, partition oracles, and mod-5 congruence checks
for 2-color partitions."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
