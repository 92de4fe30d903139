"""Exact lcm bounds for integer sequences."""

from ._core import *  # noqa: F401,F403
from ._core import LcmlabError, verify  # noqa: F401
