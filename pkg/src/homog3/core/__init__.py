"""The n-graph type with isomorphism, automorphism, substructure and age machinery."""

from .age import (
    AgeCatalog,
    enumerate_age,
    subset_patterns,
    triangle_graph,
    triangle_spectrum,
    triangle_word,
)
from .canon import (
    are_isomorphic,
    automorphisms,
    canonical,
    canonical_code,
    canonical_form,
    iter_isomorphisms,
    orbits_from_generators,
    refine,
)
from .io import dumps, load, loads, save, to_dot
from .ngraph import NGraph, VertexMap, default_color_names, same_signature


def induced(g, vertices):
    """Induced substructure on ``vertices``, in caller order."""
    return g.induced(vertices)


__all__ = [
    "AgeCatalog",
    "NGraph",
    "VertexMap",
    "are_isomorphic",
    "automorphisms",
    "canonical",
    "canonical_code",
    "canonical_form",
    "default_color_names",
    "dumps",
    "enumerate_age",
    "induced",
    "iter_isomorphisms",
    "load",
    "loads",
    "orbits_from_generators",
    "refine",
    "same_signature",
    "save",
    "subset_patterns",
    "to_dot",
    "triangle_graph",
    "triangle_spectrum",
    "triangle_word",
]
