"""Ages: isomorphism classes of induced substructures, and triangle spectra."""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .. import budgets, kernels
from ..errors import ArgumentError, ResourceLimitError
from .canon import canonical_code, canonical_pattern
from .ngraph import NGraph


@dataclass
class AgeCatalog:
    """Pairwise non-isomorphic induced substructures of each size 1..max_size."""

    max_size: int
    entries: dict = field(default_factory=dict)  # size -> list of canonical NGraph
    counts: dict = field(default_factory=dict)   # size -> multiplicity per entry

    def classes(self, size):
        return self.entries.get(size, [])

    def profile(self):
        return {s: len(self.entries[s]) for s in sorted(self.entries)}

    def contains(self, h):
        """Whether ``h`` (any labeling) is isomorphic to a catalog entry."""
        if h.size not in self.entries:
            return False
        code = canonical_code(h)
        return any(canonical_code(e) == code for e in self.entries[h.size])


def check_pattern_width(k, ncolors):
    if ncolors ** (k * (k - 1) // 2) >= 2 ** 63:
        raise ArgumentError(f"subset patterns of size {k} over {ncolors} colors overflow int64")


def subset_patterns(g, k):
    """Raw pattern code of every k-subset of ``g`` in combinations order."""
    check_pattern_width(k, g.color_count)
    return kernels.subset_codes(np.ascontiguousarray(g.matrix), k, g.color_count)


def enumerate_age(g, k, budget=None):
    """Catalog of the isomorphism types of induced substructures of size <= k.

    Entries for each size are canonical representatives, sorted by their
    canonical code, with the number of subsets realizing each.
    """
    if k > g.size:
        raise ArgumentError(f"k={k} exceeds graph size {g.size}")
    limit = budgets.get("age_subsets", budget)
    needed = sum(comb(g.size, s) for s in range(1, k + 1))
    if needed > limit:
        raise ResourceLimitError("age_subsets", limit, needed)
    cat = AgeCatalog(max_size=k)
    for s in range(1, k + 1):
        codes = subset_patterns(g, s)
        uniq, counts = np.unique(codes, return_counts=True)
        merged = {}
        for code, cnt in zip(uniq.tolist(), counts.tolist()):
            form = canonical_pattern(code, s, g.colors)
            key = canonical_code(form)
            if key in merged:
                merged[key][1] += cnt
            else:
                merged[key] = [form, cnt]
        order = sorted(merged)
        cat.entries[s] = [merged[key][0] for key in order]
        cat.counts[s] = [merged[key][1] for key in order]
    return cat


def triangle_spectrum(g):
    """Counts of realized unordered color triples ``(c1 <= c2 <= c3)``."""
    counts = kernels.triangle_counts(np.ascontiguousarray(g.matrix), g.color_count)
    out = {}
    n = g.color_count
    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                if counts[a, b, c]:
                    out[(a, b, c)] = int(counts[a, b, c])
    return out


def triangle_word(g, triple):
    return "".join(g.colors[c] for c in triple)


def triangle_graph(colors, word):
    """The triangle whose three edges carry the colors spelled by ``word``.

    ``word`` is three color names (single letters each, e.g. ``"RRS"``) or a
    sequence of three names/indices.
    """
    probe = NGraph(np.zeros((0, 0)), colors)
    parts = list(word) if isinstance(word, str) else list(word)
    if len(parts) != 3:
        raise ArgumentError(f"triangle word needs 3 colors: {word!r}")
    c01, c02, c12 = (probe.cidx(p) for p in parts)
    return NGraph.from_upper(3, [c01, c02, c12], colors)
