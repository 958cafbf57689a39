"""Weighted chromatic polynomials and Potts partition functions in an external field."""

from .graph import Graph, build_family, family, parse_family
from .poly import MPoly, RationalPoly, parse

__version__ = "0.1.0"

__all__ = ["Graph", "MPoly", "RationalPoly", "build_family", "family", "parse", "parse_family"]
