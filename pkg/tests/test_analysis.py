import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from conftest import ngraphs
from homog3.analysis import (
    closure_property_holds,
    color_components,
    color_diameter,
    color_distance,
    detect_equivalences,
    equivalence_report,
    max_clique_in,
    neighborhood,
    nontrivial_equivalences,
    pair_class_analysis,
    quotient,
)
from homog3.constructions import (
    class_generic,
    class_random,
    complete,
    cover_cgamma,
    pentagon,
    plant,
    product,
    quotient_random,
    random_graph,
    random_ngraph,
    wreath,
)
from homog3.core import NGraph, are_isomorphic
from homog3.errors import ArgumentError, NotQuotientableError, ResourceLimitError


def is_equivalence_brute(g, U):
    n = g.size
    rel = [[x == y or g.color(x, y) in U for y in range(n)] for x in range(n)]
    return all(
        not (rel[x][y] and rel[y][z]) or rel[x][z]
        for x in range(n) for y in range(n) for z in range(n)
    )


def test_diameters():
    assert max(d for _, d in color_diameter(complete(5, "R"), 0)) == 1
    g = pentagon("R")
    j = g.neighbors(1, 0)
    assert [d for _, d in color_diameter(g, 1)] == [2]
    assert color_distance(g, 1, 0, j[0]) == 1
    two = NGraph.from_upper(3, [0, 1, 1], ("R", "S"))
    assert color_distance(two, 0, 0, 2) == math.inf
    assert color_components(two, 0) == [[0, 1], [2]]


@settings(max_examples=60, deadline=None)
@given(ngraphs(min_size=1, max_size=7))
def test_equivalence_detection_matches_brute_force(g):
    for rep in detect_equivalences(g):
        assert rep.is_equivalence == is_equivalence_brute(g, set(rep.color_set))
        if rep.is_equivalence:
            cls = rep.class_of()
            for x, y in combinations(range(g.size), 2):
                assert (cls[x] == cls[y]) == (g.color(x, y) in rep.color_set)


def test_cover_classes_have_size_two():
    g = cover_cgamma(2, 16)
    rep = equivalence_report(g, [0])
    assert rep.is_equivalence and set(rep.class_sizes) == {2} and len(rep.classes) == 16


def test_class_generic_equivalence():
    rep = equivalence_report(class_generic(4, 10, 1, "R"), ["S", "T"])
    assert rep.is_equivalence and len(rep.classes) == 4


def test_random_sample_has_no_equivalence():
    assert nontrivial_equivalences(random_ngraph(40, 3, 0)) == []


def test_quotient_round_trip():
    base = random_graph(10, 5, edge=1, non_edge=2)
    g = wreath(base, complete(3, "R"))
    q, _ = quotient(g, [0])
    assert are_isomorphic(q, base) is not None


def test_quotient_failures():
    with pytest.raises(NotQuotientableError):
        quotient(product(2, 2, "R", "S", "T"), [0])
    with pytest.raises(ArgumentError):
        quotient(random_ngraph(10, 3, 0), [0])
    q, proj = quotient(complete(4, "R"), [0])
    assert q.size == 1 and proj == [0, 0, 0, 0]


def test_neighborhoods():
    g = complete(6, "S")
    assert neighborhood(g, "S", 2)[0] == [0, 1, 3, 4, 5]
    p = pentagon("R")
    vs, sub = neighborhood(p, 1, 0)
    assert len(vs) == 2 and sub.color(0, 1) == 2
    c = cover_cgamma(1, 10)
    assert all(len(neighborhood(c, 0, a)[0]) == 1 for a in range(c.size))


def test_closure_property():
    assert closure_property_holds(wreath(complete(3, "S"), complete(4, "R")), 0)
    assert not closure_property_holds(NGraph.from_upper(3, [0, 0, 1], ("R", "S")), 0)


def test_cover_pairs_are_two_matchings():
    g = cover_cgamma(4, 20)
    rep = equivalence_report(g, [0])
    for p, q in [(0, 1), (3, 7), (10, 19)]:
        pr = pair_class_analysis(g, rep, p, q, "S")
        assert pr.r == 1 and pr.n == 2 * pr.r and pr.pair_type == "two_matchings"
        a1, a2, b1, b2 = pr.partition_found
        assert g.color(a1[0], b1[0]) == 1 and g.color(a2[0], b2[0]) == 1


def test_pair_types():
    g = quotient_random(6, 3, 2)
    rep = equivalence_report(g, [0])
    types = {pair_class_analysis(g, rep, 0, q, "S").pair_type for q in range(1, 6)}
    assert types <= {"complete", "null"}
    h = class_random(4, 10, 0, 3)
    rep = equivalence_report(h, [0])
    pr = pair_class_analysis(h, rep, 0, 1, "S")
    assert pr.pair_type == "random_like" and pr.colors_realized == [1, 2]
    with pytest.raises(ArgumentError):
        pair_class_analysis(h, rep, 0, 0, "S")


@settings(max_examples=60, deadline=None)
@given(ngraphs(min_size=1, max_size=9))
def test_max_clique_matches_brute_force(g):
    for c in range(g.color_count):
        size, wit = max_clique_in(g, range(g.size), c)
        assert size == oracles.max_clique(g, c)
        assert all(g.color(x, y) == c for x, y in combinations(wit, 2))


def test_clique_examples():
    assert max_clique_in(complete(7, "T"), range(7), "T")[0] == 7
    c = cover_cgamma(0, 12)
    nb = c.neighbors(0, 5)
    assert max_clique_in(c, nb, "S")[0] == 1
    g = class_random(6, 8, 0, 1)
    vs = [0, 8, 16, 24]
    g = plant(g, vs, NGraph.complete(4, 1, g.colors))
    assert max_clique_in(g, range(g.size), "S")[0] >= 4
    with pytest.raises(ResourceLimitError):
        max_clique_in(g, range(g.size), "S", budget=10)
