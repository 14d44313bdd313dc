"""Finite homogeneity, extension axioms and orbit/type counts.

``check_homogeneity`` walks ordered tuples t (one per Aut(g)-orbit). A
partial isomorphism t+x -> t+x' extends to an automorphism for every x, x'
with the same colors to t exactly when the pointwise stabilizer of t acts
transitively on each such color class; checking this for all |t| < k
covers every partial isomorphism of size <= k.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from . import budgets, kernels
from .core.age import enumerate_age
from .core.canon import canonical, iter_isomorphisms, orbits_from_generators
from .errors import ArgumentError, ResourceLimitError


@dataclass(frozen=True)
class PartialIsomorphism:
    """Map ``domain[i] -> image[i]`` between two substructures of one graph."""

    domain: tuple
    image: tuple

    def is_isomorphism(self, g):
        d, im = list(self.domain), list(self.image)
        return len(set(d)) == len(d) and len(set(im)) == len(im) and np.array_equal(
            g.matrix[np.ix_(d, d)], g.matrix[np.ix_(im, im)]
        )

    def extends(self, g):
        """Whether some automorphism of ``g`` extends this map."""
        d, im = list(self.domain), list(self.image)
        rest_d = [x for x in range(g.size) if x not in set(d)]
        rest_i = [x for x in range(g.size) if x not in set(im)]
        cells_d = [[x] for x in d] + ([rest_d] if rest_d else [])
        cells_i = [[x] for x in im] + ([rest_i] if rest_i else [])
        return next(iter_isomorphisms(g, g, cells_d, cells_i), None) is not None


@dataclass
class HomogeneityReport:
    k: int
    holds: bool
    counterexample: Optional[PartialIsomorphism] = None
    tuples_examined: int = 0


def _cells(t, rest):
    return [[x] for x in t] + ([list(rest)] if rest else [])


def check_homogeneity(g, k=None, max_size=None):
    """Test that every isomorphism between induced substructures of size <= k extends."""
    if k is None:
        k = min(4, g.size)
    if not 0 <= k <= g.size:
        raise ArgumentError(f"k={k} must lie in [0, {g.size}]")
    limit = budgets.get("homogeneity_size", max_size)
    if g.size > limit:
        raise ResourceLimitError("homogeneity_size", limit, g.size)
    mat = g.matrix
    stack = [()]
    examined = 0
    while stack:
        t = stack.pop()
        if len(t) >= k:
            continue
        examined += 1
        tset = set(t)
        rest = [x for x in range(g.size) if x not in tset]
        if not rest:
            continue
        gens = canonical(g, _cells(t, rest)).generators
        approx = [o for o in orbits_from_generators(g.size, gens) if o[0] not in tset]
        # merge approximate orbits that are in fact conjugate
        code_of = {}
        true_orbits = {}
        for orb in approx:
            x = orb[0]
            code = canonical(g, _cells(t + (x,), [y for y in rest if y != x])).code
            true_orbits.setdefault(code, []).extend(orb)
            for y in orb:
                code_of[y] = code
        by_type = {}
        for x in rest:
            key = tuple(int(mat[x, y]) for y in t)
            by_type.setdefault(key, []).append(x)
        for key in sorted(by_type):
            members = by_type[key]
            first = code_of[members[0]]
            for y in members[1:]:
                if code_of[y] != first:
                    ce = PartialIsomorphism(t + (members[0],), t + (y,))
                    return HomogeneityReport(k, False, ce, examined)
        if all(len(o) == 1 for o in true_orbits.values()):
            continue  # trivial stabilizer: every deeper color class is a singleton
        reps = sorted(min(o) for o in true_orbits.values())
        for x in reversed(reps):
            stack.append(t + (x,))
    return HomogeneityReport(k, True, None, examined)


# ---------------------------------------------------------------------------
# extension axioms


@dataclass
class ExtensionReport:
    demands: list
    tested: int
    satisfied: int
    exhaustive: bool
    seed: Optional[int] = None
    first_failure: Optional[list] = None  # per-color vertex lists

    @property
    def satisfied_fraction(self):
        return 1.0 if self.tested == 0 else self.satisfied / self.tested


def placement_count(v, demand):
    total = 1
    left = v
    for k in demand:
        total *= comb(left, k)
        left -= k
    return total


def _split(flat, demand):
    out, pos = [], 0
    for k in demand:
        out.append(sorted(int(x) for x in flat[pos:pos + k]))
        pos += k
    return out


def check_extension_axioms(g, demand, sample_budget=None, seed=0):
    """For placements of disjoint sets A_c (|A_c| = demand[c]), look for a fresh
    vertex joined to every vertex of A_c in color c, for all c.

    Exhaustive when the placement count is within ``sample_budget``,
    otherwise a seeded uniform sample of that many placements.
    """
    demand = [int(x) for x in demand]
    if len(demand) != g.color_count or min(demand, default=0) < 0:
        raise ArgumentError(f"demand needs {g.color_count} non-negative entries")
    total = sum(demand)
    if total > g.size - 1:
        raise ArgumentError(f"demand total {total} exceeds size - 1 = {g.size - 1}")
    limit = budgets.get("extension_samples", sample_budget)
    bits = kernels.color_bits(g.matrix, g.color_count)
    count = placement_count(g.size, demand)
    if count <= limit:
        tested, sat, first = kernels.extension_exhaustive(bits, np.array(demand, dtype=np.int64))
        fail = _split(first, demand) if first.size or (tested > sat) else None
        return ExtensionReport(demand, tested, sat, True, None, fail)
    rng = np.random.default_rng(seed)
    slot_colors = np.array([c for c, k in enumerate(demand) for _ in range(k)], dtype=np.int64)
    tested = sat = 0
    fail = None
    chunk = 4096
    while tested < limit:
        p = min(chunk, limit - tested)
        keys = rng.random((p, g.size))
        place = np.argpartition(keys, total - 1, axis=1)[:, :total] if total else np.zeros((p, 0), dtype=np.int64)
        place = np.ascontiguousarray(place.astype(np.int64))
        ok = kernels.extension_check(bits, place, slot_colors)
        if fail is None and not ok.all():
            fail = _split(place[int(np.argmin(ok))], demand)
        sat += int(ok.sum())
        tested += p
    return ExtensionReport(demand, tested, sat, False, seed, fail)


def demands_up_to(ncolors, total):
    """All demand vectors with 1 <= sum <= total, in sum-then-lex order."""
    out = []
    for s in range(1, total + 1):
        for combo in combinations(range(ncolors + s - 1), ncolors - 1):
            parts, prev = [], -1
            for c in combo:
                parts.append(c - prev - 1)
                prev = c
            parts.append(ncolors + s - 1 - prev - 1)
            out.append(parts)
    out.sort(key=lambda d: (sum(d), [-x for x in d]))
    return out


# ---------------------------------------------------------------------------
# type counts and quotient transitivity


def count_subtypes(g, k, budget=None):
    """Isomorphism-class counts of induced substructures by size 1..k."""
    return enumerate_age(g, k, budget).profile()


@dataclass
class QuotientTransitivity:
    pair_classes: int
    pair_counts: list = field(default_factory=list)
    triple_classes: Optional[int] = None
    triple_counts: Optional[list] = None

    @property
    def two_transitive_evidence(self):
        return self.pair_classes == 1

    @property
    def three_transitive_evidence(self):
        return self.triple_classes == 1


def check_quotient_transitivity(g, eq_report, triple_budget=2000):
    """Isomorphism classes of unions of 2 (and, within budget, 3) classes."""
    if not eq_report.is_equivalence:
        raise ArgumentError("check_quotient_transitivity() needs an equivalence")
    classes = eq_report.classes
    if len(classes) < 2:
        raise ArgumentError("need at least two classes")

    def census(r):
        cnt = Counter()
        for combo in combinations(range(len(classes)), r):
            vs = [x for q in combo for x in classes[q]]
            cnt[canonical(g.induced(vs)).code] += 1
        return [cnt[c] for c in sorted(cnt)]

    pairs = census(2)
    rep = QuotientTransitivity(len(pairs), pairs)
    if len(classes) >= 3 and comb(len(classes), 3) <= triple_budget:
        triples = census(3)
        rep.triple_classes = len(triples)
        rep.triple_counts = triples
    return rep
