"""Exact Gorenstein-projectivity checks over tensor products of quiver algebras."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
