"""Label a sample against the families of the classification.

Exact branches (nested wreaths of cliques with pentagon/rook factors,
products, covers) run at every size. The statistical branches (random
n-graph, blow-ups, random-bipartite classes, generic classes) need at least
``min_size`` vertices.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .analysis import (
    class_pair_colors,
    equivalence_report,
    nontrivial_equivalences,
    pair_class_analysis,
    quotient,
)
from .constructions import pentagon, rook
from .core.age import triangle_spectrum
from .core.canon import are_isomorphic
from .core.ngraph import NGraph
from .errors import ArgumentError, InconclusiveError, NotQuotientableError
from .homogeneity import check_extension_axioms, demands_up_to

RANDOM_NGRAPH = "random_ngraph"
BLOWUP = "random_graph_blowup"
CLASS_GENERIC = "class_generic"
COVER = "cover"
CLASS_RANDOM = "class_random"
QUOTIENT_COMPLETE = "quotient_complete"
WREATH = "wreath_stable"
PRODUCT = "product"
MULTIPARTITE = "multipartite"
SPORADIC = "sporadic"
UNKNOWN = "unknown"

DISPLAY = {
    RANDOM_NGRAPH: "random_ngraph Γ^{i,j,k}",
    BLOWUP: "random_graph_blowup Γ^{i,j}[K_k]",
    CLASS_GENERIC: "class_generic K^i[Γ^{j,k}]",
    COVER: "cover CΓ",
    CLASS_RANDOM: "class_random B/B_n",
    QUOTIENT_COMPLETE: "quotient_complete Γ[K_ω]",
    WREATH: "wreath_stable K[K[K]]",
    PRODUCT: "product K×K",
    MULTIPARTITE: "multipartite I[K]",
    SPORADIC: "pentagon/rook family",
    UNKNOWN: "unknown",
}

FAMILIES = (
    RANDOM_NGRAPH, BLOWUP, CLASS_GENERIC, COVER, CLASS_RANDOM, QUOTIENT_COMPLETE,
    WREATH, PRODUCT, MULTIPARTITE, SPORADIC, UNKNOWN,
)


@dataclass
class ClassificationLabel:
    family: str
    parameters: dict = field(default_factory=dict)
    evidence: list = field(default_factory=list)  # (check name, outcome)

    def failed_checks(self):
        return [name for name, outcome in self.evidence if outcome is False]

    def to_obj(self):
        return {
            "family": self.family,
            "display": DISPLAY[self.family],
            "parameters": self.parameters,
            "evidence": [[name, outcome] for name, outcome in self.evidence],
        }


# ---------------------------------------------------------------------------
# exact structure recognizers


def _sporadic(g):
    """('P' | 'Q', spare color or None) when g is the pentagon or the rook graph."""
    if g.size not in (5, 9):
        return None
    real = g.realized_colors()
    if len(real) != 2:
        return None
    spare = next((c for c in range(g.color_count) if c not in real), None)
    j, k = real
    build = pentagon if g.size == 5 else rook
    tag = "P" if g.size == 5 else "Q"
    for a, b in ((j, k), (k, j)):
        shape = build(0, ("x", "a", "b"))  # j-role index 1, k-role index 2
        rule = {1: a, 2: b}
        h = NGraph.from_upper(shape.size, [rule[c] for c in shape.upper().tolist()], g.colors)
        if are_isomorphic(g, h) is not None:
            return (tag, spare)
    return None


def wreath_decomposition(g):
    """Factors of g as a nested wreath product, outermost first, or None.

    Each factor is ``("K", m, color)``, ``("P", spare)`` or ``("Q", spare)``.
    """
    if g.size <= 1:
        return [("K", g.size, None)]
    real = g.realized_colors()
    if len(real) == 1:
        return [("K", g.size, real[0])]
    sp = _sporadic(g)
    if sp is not None:
        return [sp]
    for r in range(1, len(real)):
        for U in combinations(real, r):
            rep = equivalence_report(g, U)
            if not rep.nontrivial or len(set(rep.class_sizes)) != 1:
                continue
            try:
                q, _ = quotient(g, U, rep)
            except NotQuotientableError:
                continue
            first = g.induced(rep.classes[0])
            if any(are_isomorphic(first, g.induced(c)) is None for c in rep.classes[1:]):
                continue
            outer = wreath_decomposition(q)
            inner = wreath_decomposition(first)
            if outer is not None and inner is not None:
                return outer + inner
    return None


def product_structure(g):
    """``(m, n, i, j, k)`` when g is K_m^i x K_n^j (i < j), else None."""
    single = {r.color_set[0]: r for r in nontrivial_equivalences(g) if len(r.color_set) == 1}
    for i, j in combinations(sorted(single), 2):
        ri, rj = single[i], single[j]
        m, n = ri.class_sizes[0], rj.class_sizes[0]
        if set(ri.class_sizes) != {m} or set(rj.class_sizes) != {n} or m * n != g.size:
            continue
        ci, cj = ri.class_of(), rj.class_of()
        cells = {(ci[x], cj[x]) for x in range(g.size)}
        if len(cells) != g.size:
            continue
        rest = {
            g.color(x, y)
            for x, y in g.pairs()
            if ci[x] != ci[y] and cj[x] != cj[y]
        }
        if len(rest) == 1:
            return (m, n, i, j, rest.pop())
    return None


def _cover(g, rep):
    """Whether the 2-element classes of ``rep`` make g a double cover."""
    if set(rep.class_sizes) != {2} or len(rep.classes) < 2:
        return False
    c = rep.color_set[0]
    others = [x for x in range(g.color_count) if x != c]
    if len(others) != 2:
        return False
    s = others[0]
    for p, q in combinations(range(len(rep.classes)), 2):
        pr = pair_class_analysis(g, rep, p, q, s)
        if pr.pair_type != "two_matchings" or pr.r != 1 or pr.colors_realized != others:
            return False
    return True


# ---------------------------------------------------------------------------


def classify(g, min_size=16, class_threshold=4):
    """Decision tree over the classification's families; see module docstring."""
    ev = []
    dec = wreath_decomposition(g)
    if dec is not None and g.size > 1:
        kinds = {f[0] for f in dec}
        ev.append(("wreath_decomposition", True))
        layers = [list(f) for f in dec]
        if kinds == {"K"}:
            if g.color_count == 2 and len(dec) == 2:
                return ClassificationLabel(MULTIPARTITE, {"layers": layers}, ev)
            return ClassificationLabel(WREATH, {"layers": layers}, ev)
        return ClassificationLabel(SPORADIC, {"layers": layers}, ev)
    ev.append(("wreath_decomposition", "none"))
    eqs = nontrivial_equivalences(g)
    ev.append(("equivalences", ["".join(g.colors[c] for c in r.color_set) for r in eqs]))
    single = [r for r in eqs if len(r.color_set) == 1]
    for rep in single:
        if _cover(g, rep):
            ev.append(("cover_pair_structure", True))
            return ClassificationLabel(
                COVER, {"classes": len(rep.classes), "eq_color": rep.color_set[0]}, ev
            )
    prod = product_structure(g)
    if prod is not None:
        m, n, i, j, k = prod
        ev.append(("product_pattern", True))
        return ClassificationLabel(PRODUCT, {"m": m, "n": n, "i": i, "j": j, "k": k}, ev)

    if g.size < min_size:
        raise InconclusiveError(f"{g.size} vertices is below the minimum {min_size}")

    for rep in single:
        label = _single_equivalence(g, rep, class_threshold, list(ev))
        if label is not None:
            return label
    for rep in eqs:
        if len(rep.color_set) == g.color_count - 1:
            label = _generic_classes(g, rep, list(ev))
            if label is not None:
                return label
    if not eqs:
        checks = []
        ok = True
        for d in demands_up_to(g.color_count, 2):
            rep = check_extension_axioms(g, d)
            passed = rep.exhaustive and rep.satisfied_fraction == 1.0
            checks.append((f"extension{tuple(d)}", passed))
            ok = ok and passed
        if ok:
            return ClassificationLabel(
                RANDOM_NGRAPH, {"colors": g.realized_colors()}, ev + checks
            )
        ev.extend(checks)
    return ClassificationLabel(UNKNOWN, {}, ev)


def _single_equivalence(g, rep, threshold, ev):
    c = rep.color_set[0]
    others = [x for x in range(g.color_count) if x != c]
    sizes = set(rep.class_sizes)
    if len(sizes) != 1:
        return None
    size = sizes.pop()
    try:
        q, _ = quotient(g, [c], rep)
    except NotQuotientableError:
        q = None
    if q is not None:
        real = q.realized_colors()
        ev.append(("quotient_monochromatic_pairs", True))
        ev.append(("quotient_realizes_both_cross_colors", len(real) == 2))
        if len(real) != 2:
            return None
        fam = BLOWUP if size <= threshold else QUOTIENT_COMPLETE
        params = {"classes": len(rep.classes), "class_size": size, "eq_color": c, "cross_colors": real}
        return ClassificationLabel(fam, params, ev)
    if size <= threshold or len(others) != 2:
        return None
    random_like = all(
        pair_class_analysis(g, rep, p, r, others[0]).pair_type == "random_like"
        for p, r in combinations(range(len(rep.classes)), 2)
    )
    ev.append(("class_pairs_random_like", random_like))
    spec = triangle_spectrum(g)
    missing = {
        t for t in _all_triples(g.color_count) if t not in spec
    }
    expected = {tuple(sorted((c, c, x))) for x in others}
    ev.append(("triangle_spectrum_lacks_exactly_two_eq_triples", missing == expected))
    if random_like and missing == expected:
        params = {"classes": len(rep.classes), "class_size": size, "eq_color": c, "cross_colors": others}
        return ClassificationLabel(CLASS_RANDOM, params, ev)
    return None


def _all_triples(n):
    return [(a, b, c) for a in range(n) for b in range(a, n) for c in range(b, n)]


def _generic_classes(g, rep, ev):
    if not rep.nontrivial:
        return None
    cross = [x for x in range(g.color_count) if x not in rep.color_set]
    if len(cross) != 1:
        return None
    c = cross[0]
    try:
        quotient(g, rep.color_set, rep)
    except NotQuotientableError:
        return None
    ev.append(("quotient_monochromatic", True))
    inner = [set(g.induced(cls).realized_colors()) for cls in rep.classes]
    both = all(s == set(rep.color_set) for s in inner)
    ev.append(("classes_realize_both_colors", both))
    if not both:
        return None
    params = {"m": len(rep.classes), "class_size": rep.class_sizes[0], "cross_color": c,
              "inner_colors": list(rep.color_set)}
    return ClassificationLabel(CLASS_GENERIC, params, ev)


# ---------------------------------------------------------------------------


def _factor_name(f, names):
    if f[0] == "K":
        m, c = f[1], f[2]
        return f"K_{m}" if c is None else f"K_{m}^{names[c]}"
    tag, spare = f
    return tag if spare is None else f"{tag}^{names[spare]}"


def parameter_report(label, color_names=("R", "S", "T")):
    """Human-readable name of a labeled structure, e.g. ``K_2^T[K_3^S[K_4^R]]``."""
    fam, p, nm = label.family, label.parameters, color_names
    if fam == UNKNOWN:
        raise ArgumentError("no parameter report for an unknown family")
    if fam in (WREATH, SPORADIC):
        parts = [_factor_name(f, nm) for f in p["layers"]]
        out = parts[-1]
        for part in reversed(parts[:-1]):
            out = f"{part}[{out}]"
        return out
    if fam == MULTIPARTITE:
        return f"I_{p['layers'][0][1]}[K_{p['layers'][1][1]}]"
    if fam == PRODUCT:
        return f"K_{p['m']}^{nm[p['i']]} × K_{p['n']}^{nm[p['j']]}"
    if fam == COVER:
        return f"C(Γ) [{p['classes']} classes]"
    if fam == RANDOM_NGRAPH:
        return "Γ^{" + ",".join(nm[c] for c in p["colors"]) + "}"
    if fam in (BLOWUP, QUOTIENT_COMPLETE):
        j, k = (nm[c] for c in p["cross_colors"])
        size = p["class_size"] if fam == BLOWUP else "ω"
        return f"Γ^{{{j},{k}}}[K_{size}^{nm[p['eq_color']]}]"
    if fam == CLASS_GENERIC:
        j, k = (nm[c] for c in p["inner_colors"])
        return f"K_{p['m']}^{nm[p['cross_color']]}[Γ^{{{j},{k}}}]"
    if fam == CLASS_RANDOM:
        j, k = (nm[c] for c in p["cross_colors"])
        return f"B_{p['classes']}^{{{j},{k}}}"
    raise ArgumentError(f"unknown family {fam!r}")
