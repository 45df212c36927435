"""Hodge types of theta-stable parabolic subalgebras and special cycles for Hermitian symmetric pairs."""

from .rootsys import DominantVector, HermitianFamily, RootSystem, build
from .families import format_family, parse_family, parse_weight

__all__ = [
    "DominantVector",
    "HermitianFamily",
    "RootSystem",
    "build",
    "format_family",
    "parse_family",
    "parse_weight",
]
__version__ = "0.1.0"
