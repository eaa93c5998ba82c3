"""Conical Legendre functions, sums over their zeros, and a hyperbolic-space
Casimir application."""

from legsum.types import ConicalPoint, EvalResult, Flag, SeriesPath
from legsum.errors import LegsumError

__version__ = "0.1.0"

__all__ = ["ConicalPoint", "EvalResult", "Flag", "SeriesPath", "LegsumError", "__version__"]
