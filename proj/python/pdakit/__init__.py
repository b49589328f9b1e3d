"""Placement delivery arrays for coded caching.

Stars are ``None`` in row lists; rates and memory ratios are ``fractions.Fraction``.
"""

from ._pdakit import *  # noqa: F401,F403
from ._pdakit import __doc__  # noqa: F401
