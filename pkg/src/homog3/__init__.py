"""Finite workbench for homogeneous n-graphs (edge-colored complete graphs)."""

__version__ = "0.1.0"

from .core import NGraph, VertexMap, are_isomorphic, automorphisms, canonical_form
from .kernels import IMPLEMENTATION

__all__ = [
    "IMPLEMENTATION",
    "NGraph",
    "VertexMap",
    "__version__",
    "are_isomorphic",
    "automorphisms",
    "canonical_form",
]
