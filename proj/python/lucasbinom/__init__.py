"""Exact Lucas sequences and Lucas-type binomial coefficients.

Values are exact: integers, rationals, or polynomials in x over the
rationals. Anything that takes a value also accepts an ``int`` or a string
such as ``"x+1"`` or ``"3/2"``.
"""

from ._lucasbinom import *  # noqa: F401,F403
from ._lucasbinom import __version__  # noqa: F401
