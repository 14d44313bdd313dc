import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ngraphs
from homog3.analysis import color_diameter, equivalence_report, quotient
from homog3.constructions import (
    DEFAULT_PARAMS,
    KINDS,
    RST,
    GeneratorSpec,
    build,
    class_generic,
    class_random,
    complete,
    cover_cgamma,
    cover_of,
    multipartite,
    nested_wreath,
    pentagon,
    plant,
    product,
    quotient_random,
    random_graph,
    random_ngraph,
    relabel,
    rook,
    wreath,
)
from homog3.core import NGraph, are_isomorphic, automorphisms, triangle_spectrum
from homog3.errors import ArgumentError


def pairs_of(g, c):
    return sorted(g.pairs(c))


def test_wreath_small():
    g = wreath(complete(2, "S"), complete(3, "R"))
    assert g.size == 6
    assert len(pairs_of(g, 0)) == 6 and len(pairs_of(g, 1)) == 9
    assert all(x // 3 == y // 3 for x, y in pairs_of(g, 0))


def test_wreath_identities():
    g = random_ngraph(7, 3, 2)
    assert wreath(g, complete(1, "R")) == g
    assert wreath(complete(1, "R"), g) == g


@settings(max_examples=30, deadline=None)
@given(ngraphs(min_size=1, max_size=3, colors=3), ngraphs(min_size=1, max_size=3, colors=3),
       ngraphs(min_size=1, max_size=3, colors=3))
def test_wreath_associative(a, b, c):
    assert wreath(wreath(a, b), c) == wreath(a, wreath(b, c))


def test_product_small():
    g = product(2, 2, "R", "S", "T")
    assert [len(pairs_of(g, c)) for c in range(3)] == [2, 2, 2]
    line = product(1, 5, "R", "S", "T")
    assert line.realized_colors() == [1]


def test_product_three_by_three_is_rook():
    assert are_isomorphic(product(3, 3, 0, 1, 2).recolor({0: 1}), rook(0)) is not None


def test_cover_two_classes():
    edge = cover_of(NGraph.from_upper(2, [1], RST))
    assert pairs_of(edge, 0) == [(0, 1), (2, 3)]
    assert pairs_of(edge, 1) == [(0, 2), (1, 3)]
    assert pairs_of(edge, 2) == [(0, 3), (1, 2)]
    non = cover_of(NGraph.from_upper(2, [2], RST))
    assert pairs_of(non, 1) == pairs_of(edge, 2)
    assert pairs_of(non, 2) == pairs_of(edge, 1)
    assert pairs_of(cover_cgamma(0, 1), 0) == [(0, 1)]


def test_cover_class_is_single_r_pair():
    g = cover_cgamma(3, 8)
    sub = g.induced([4, 5])
    assert sub.size == 2 and sub.color(0, 1) == 0


def test_class_random_single_cross_pair_deterministic():
    cols = {class_random(2, 1, 0, s).color(0, 1) for s in range(20)}
    assert cols <= {1, 2} and len(cols) == 2
    assert class_random(2, 1, 0, 5) == class_random(2, 1, 0, 5)


def test_class_random_avoids_two_eq_triangles():
    spec = triangle_spectrum(class_random(6, 8, 0, 1))
    assert (0, 0, 1) not in spec and (0, 0, 2) not in spec


def test_regeneration_is_bit_identical():
    for kind in KINDS:
        assert build(kind, seed=3) == build(kind, seed=3)
    assert class_random(3, 2, 0, 9).matrix.tobytes() == class_random(3, 2, 0, 9).matrix.tobytes()


def test_pentagon_degrees():
    g = pentagon("R")
    for c in (1, 2):
        assert all(len(g.neighbors(c, a)) == 2 for a in range(5))
    assert len(automorphisms(g)) == 10


def test_rook_automorphisms():
    assert len(automorphisms(rook())) == 72


def test_quotient_random_contracts_to_two_graph():
    g = quotient_random(3, 2, 7)
    q, proj = quotient(g, [0])
    assert q.size == 3 and set(q.realized_colors()) <= {1, 2}
    assert list(proj) == [0, 0, 1, 1, 2, 2]


def test_class_generic_classes():
    g = class_generic(3, 10, 2, "R")
    rep = equivalence_report(g, [1, 2])
    assert rep.is_equivalence and len(rep.classes) == 3


def test_multipartite():
    g = multipartite(3, 4)
    assert g.color_count == 2 and len(pairs_of(g, 0)) == 3 * 6


def test_plant_and_relabel():
    g = random_ngraph(12, 3, 0)
    k = complete(4, "S")
    h = plant(g, [1, 5, 7, 9], k)
    assert h.induced([1, 5, 7, 9]) == k
    assert are_isomorphic(relabel(g, 4), g) is not None
    with pytest.raises(ArgumentError):
        plant(g, [1, 2], k)


def test_random_graph_two_colors():
    g = random_graph(30, 1)
    assert set(g.realized_colors()) == {1, 2}


def test_generator_spec_round_trip():
    spec = GeneratorSpec("class_random", {"classes": 4}, 11)
    again = GeneratorSpec.from_obj(spec.to_obj())
    assert again.build() == spec.build()
    assert spec.resolved()["class_size"] == DEFAULT_PARAMS["class_random"]["class_size"]
    with pytest.raises(ArgumentError):
        GeneratorSpec("nope")
    with pytest.raises(ArgumentError):
        GeneratorSpec("product", {"classes": 3})


def test_nested_wreath_layers():
    g = nested_wreath([(2, "T"), (3, "S"), (4, "R")])
    assert g == wreath(wreath(complete(2, "T"), complete(3, "S")), complete(4, "R"))
    assert [len(pairs_of(g, c)) for c in range(3)] == [6 * 6, 2 * 3 * 16, 144]


@pytest.mark.parametrize("kind", KINDS)
def test_default_outputs_have_small_diameter(kind):
    for seed in range(3):
        g = build(kind, seed=seed)
        for c in range(g.color_count):
            assert all(d <= 3 for _, d in color_diameter(g, c))
