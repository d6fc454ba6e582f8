"""Quantum N-player games.

Players are numbered from 0. Outcomes are integers whose most significant
bit belongs to player 0.
"""

from ._qgames import *  # noqa: F401,F403
from ._qgames import __doc__  # noqa: F401

__version__ = "0.1.0"
