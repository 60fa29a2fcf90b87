"""Exact lower-bound certificates for Seshadri constants on surfaces with
Picard number 1."""

from seshadri_bounds._core import *  # noqa: F401,F403
from seshadri_bounds._core import __version__  # noqa: F401
