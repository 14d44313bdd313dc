"""Per-color metrics, invariant equivalence relations, quotients and class-pair structure."""

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import budgets
from .core.ngraph import NGraph
from .errors import ArgumentError, NotQuotientableError, ResourceLimitError

INF = math.inf


def _colors(g, U):
    if isinstance(U, (int, str, np.integer)):
        U = [U]
    return sorted({g.cidx(c) for c in U})


def _bfs(adj_row_sets, src):
    dist = {src: 0}
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in adj_row_sets[x]:
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def _nbr_lists(g, c):
    mask = g.matrix == c
    return [np.flatnonzero(mask[x]).tolist() for x in range(g.size)]


def color_distance(g, c, a, b):
    """Length of a shortest path of color ``c`` from a to b (``math.inf`` if none)."""
    c = g.cidx(c)
    if a == b:
        return 0
    return _bfs(_nbr_lists(g, c), a).get(b, INF)


def color_components(g, c):
    """Connected components of the spanning subgraph of color ``c``, sorted."""
    c = g.cidx(c)
    nb = _nbr_lists(g, c)
    seen = set()
    comps = []
    for x in range(g.size):
        if x in seen:
            continue
        comp = sorted(_bfs(nb, x))
        seen.update(comp)
        comps.append(comp)
    return comps


def color_diameter(g, c):
    """``[(component, diameter), ...]`` for every color-``c`` component."""
    c = g.cidx(c)
    nb = _nbr_lists(g, c)
    out = []
    for comp in color_components(g, c):
        diam = 0
        for x in comp:
            diam = max(diam, max(_bfs(nb, x).values()))
        out.append((comp, diam))
    return out


def max_component_diameter(g, c):
    return max((d for _, d in color_diameter(g, c)), default=0)


# ---------------------------------------------------------------------------
# equivalence relations


@dataclass
class EquivalenceReport:
    color_set: tuple
    is_equivalence: bool
    classes: Optional[list] = None
    class_sizes: Optional[list] = None
    witness: Optional[tuple] = None  # (x, y, z): U(x,y), U(y,z), not U(x,z)

    @property
    def nontrivial(self):
        """More than one class and not every class a singleton."""
        return bool(self.is_equivalence and 1 < len(self.classes) < sum(self.class_sizes))

    def class_of(self):
        out = {}
        for q, cls in enumerate(self.classes or []):
            for x in cls:
                out[x] = q
        return out


def equivalence_report(g, U):
    """Exact transitivity verdict for the reflexive closure of the union of ``U``."""
    cols = tuple(_colors(g, U))
    mask = np.isin(g.matrix, cols)
    np.fill_diagonal(mask, False)
    B = mask.astype(np.int32)
    two = (B @ B) > 0
    bad = two & ~mask
    np.fill_diagonal(bad, False)
    if bad.any():
        x, z = (int(t) for t in np.argwhere(bad)[0])
        y = int(np.flatnonzero(mask[x] & mask[z])[0])
        return EquivalenceReport(cols, False, witness=(x, y, z))
    classes = []
    seen = np.zeros(g.size, dtype=bool)
    for x in range(g.size):
        if seen[x]:
            continue
        cls = [x] + np.flatnonzero(mask[x]).tolist()
        cls.sort()
        seen[cls] = True
        classes.append(cls)
    return EquivalenceReport(cols, True, classes, [len(c) for c in classes])


def detect_equivalences(g):
    """One report per nonempty proper subset U of the colors, in size-then-lex order."""
    n = g.color_count
    out = []
    for r in range(1, n):
        for U in combinations(range(n), r):
            out.append(equivalence_report(g, U))
    return out


def nontrivial_equivalences(g):
    return [r for r in detect_equivalences(g) if r.nontrivial]


# ---------------------------------------------------------------------------
# quotients


def class_pair_colors(g, A, B):
    sub = g.matrix[np.ix_(list(A), list(B))]
    return sorted(set(np.unique(sub).tolist()))


def quotient(g, U, report=None):
    """Structure induced on the U-classes.

    Returns ``(quotient_graph, projection)`` where ``projection[x]`` is the
    class index of vertex x. The quotient keeps the full color signature;
    colors of U are simply unrealized in it.
    """
    rep = report if report is not None else equivalence_report(g, U)
    if not rep.is_equivalence:
        raise ArgumentError(f"colors {rep.color_set} do not define an equivalence relation")
    classes = rep.classes
    k = len(classes)
    mat = np.zeros((k, k), dtype=np.int64)
    for p in range(k):
        for q in range(p + 1, k):
            cols = class_pair_colors(g, classes[p], classes[q])
            if len(cols) != 1:
                raise NotQuotientableError((p, q), [g.colors[c] for c in cols])
            mat[p, q] = mat[q, p] = cols[0]
    proj = [0] * g.size
    for q, cls in enumerate(classes):
        for x in cls:
            proj[x] = q
    return NGraph(mat, g.colors), proj


def neighborhood(g, c, a):
    """``(vertices, induced)`` for the color-``c`` neighborhood of ``a``."""
    vs = g.neighbors(g.cidx(c), a)
    return vs, g.induced(vs)


def closure_property_holds(g, c):
    """{a} ∪ c(a) = {b} ∪ c(b) for all b in c(a), at every a whose c-neighborhood is c-complete."""
    c = g.cidx(c)
    for a in range(g.size):
        vs, sub = neighborhood(g, c, a)
        if sub.size > 1 and not (sub.upper() == c).all():
            continue
        closed_a = set(vs) | {a}
        for b in vs:
            if set(g.neighbors(c, b)) | {b} != closed_a:
                return False
    return True


# ---------------------------------------------------------------------------
# pairs of classes


PAIR_TYPES = ("null", "complete", "two_matchings", "matching", "random_like", "other")


@dataclass
class PairClassReport:
    class_a: list
    class_b: list
    colors_realized: list
    r: Optional[int]
    r_values: dict = field(default_factory=dict)
    non_constant: bool = False
    partition_found: Optional[tuple] = None  # (A1, A2, B1, B2)
    pair_type: str = "other"

    @property
    def n(self):
        return len(self.class_a)


def _bipartite_components(sub):
    """Components of the bipartite graph with biadjacency ``sub`` (bool)."""
    na, nb = sub.shape
    seen_a, seen_b = set(), set()
    comps = []
    for start in range(na):
        if start in seen_a:
            continue
        ca, cb = {start}, set()
        stack = [("a", start)]
        seen_a.add(start)
        while stack:
            side, x = stack.pop()
            if side == "a":
                for y in np.flatnonzero(sub[x]).tolist():
                    if y not in seen_b:
                        seen_b.add(y)
                        cb.add(y)
                        stack.append(("b", y))
            else:
                for y in np.flatnonzero(sub[:, x]).tolist():
                    if y not in seen_a:
                        seen_a.add(y)
                        ca.add(y)
                        stack.append(("a", y))
        comps.append((sorted(ca), sorted(cb)))
    for y in range(nb):
        if y not in seen_b:
            comps.append(([], [y]))
    return comps


def pair_class_analysis(g, report, A, B, s_color):
    """Structure of the ``s_color`` cross pairs between classes A and B.

    ``A`` and ``B`` are vertex lists or class indices of ``report``.
    """
    if not report.is_equivalence:
        raise ArgumentError("pair_class_analysis() needs an equivalence report")
    if isinstance(A, (int, np.integer)):
        A = report.classes[A]
    if isinstance(B, (int, np.integer)):
        B = report.classes[B]
    A, B = sorted(A), sorted(B)
    classes = {tuple(c) for c in report.classes}
    if tuple(A) not in classes or tuple(B) not in classes or A == B:
        raise ArgumentError("A and B must be distinct classes of the report")
    s = g.cidx(s_color)
    sub = g.matrix[np.ix_(A, B)]
    realized = sorted(set(np.unique(sub).tolist()))
    mask = sub == s
    r_values = {a: int(mask[i].sum()) for i, a in enumerate(A)}
    vals = set(r_values.values())
    non_constant = len(vals) > 1
    r = None if non_constant else vals.pop()
    rep = PairClassReport(A, B, realized, r, r_values, non_constant)

    if not mask.any():
        rep.pair_type = "null"
        return rep
    if mask.all():
        rep.pair_type = "complete"
        return rep
    comps = _bipartite_components(mask)
    if not non_constant and len(A) == len(B) == 2 * r and len(comps) == 2:
        (a1, b1), (a2, b2) = comps
        blocks_full = all(
            mask[np.ix_(ca, cb)].all() and len(ca) == len(cb) == r for ca, cb in comps
        )
        if blocks_full:
            rep.partition_found = (
                [A[i] for i in a1], [A[i] for i in a2],
                [B[i] for i in b1], [B[i] for i in b2],
            )
            rep.pair_type = "two_matchings"
            return rep
    col_r = mask.sum(axis=0)
    if r == 1 and len(A) == len(B) and (col_r == 1).all():
        rep.pair_type = "matching"
        return rep
    if len(realized) >= 2:
        rep.pair_type = "random_like"
        return rep
    return rep


# ---------------------------------------------------------------------------
# cliques


def max_clique_in(g, region, c, budget=None):
    """Exact maximum ``c``-clique inside ``region`` by branch and bound.

    Returns ``(size, witness)`` with the witness sorted.
    """
    c = g.cidx(c)
    region = sorted(set(int(x) for x in region))
    limit = budgets.get("clique_region", budget)
    if len(region) > limit:
        raise ResourceLimitError("clique_region", limit, len(region))
    if not region:
        return 0, []
    sub = g.matrix[np.ix_(region, region)] == c
    nbr = []
    for i in range(len(region)):
        bits = 0
        for j in np.flatnonzero(sub[i]).tolist():
            bits |= 1 << j
        nbr.append(bits)
    best = max_clique_bits(nbr)
    witness = [region[i] for i in range(len(region)) if best >> i & 1]
    return len(witness), witness


def max_clique_bits(nbr):
    """Maximum clique of the graph given by neighbor bitmasks; lowest-index first on ties."""
    n = len(nbr)
    if n == 0:
        return 0
    best = [1, 1]  # (mask, size)

    def expand(clique, size, cand):
        if not cand:
            if size > best[1]:
                best[0], best[1] = clique, size
            return
        while cand:
            if size + bin(cand).count("1") <= best[1]:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            cand &= ~low
            expand(clique | low, size + 1, cand & nbr[i])

    expand(0, 0, (1 << n) - 1)
    return best[0]
