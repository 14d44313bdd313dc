"""Half-graph (order property) witnesses and constant-type edge sequences.

Convention: in a half-graph of order m for color P, ``P(a_i, b_j)`` holds
iff ``i <= j``. The strict variant is the same object with the b row
shifted by one.
"""

from dataclasses import dataclass
from typing import Optional

from . import budgets
from .analysis import max_clique_bits
from .errors import ArgumentError, ResourceLimitError


@dataclass(frozen=True)
class HalfGraphWitness:
    color: int
    order: int
    a: tuple
    b: tuple
    below: Optional[int] = None  # exact color on (a_i, b_j), i > j; None = any color but P
    horizontal_colors: Optional[tuple] = None

    def verify(self, g):
        """Pair-by-pair check of the pattern, distinctness and row colors."""
        vs = self.a + self.b
        if len(set(vs)) != len(vs) or len(self.a) != self.order or len(self.b) != self.order:
            return False
        for i, x in enumerate(self.a):
            for j, y in enumerate(self.b):
                col = g.color(x, y)
                if i <= j:
                    if col != self.color:
                        return False
                elif col == self.color or (self.below is not None and col != self.below):
                    return False
        if self.horizontal_colors is not None:
            ca, cb = self.horizontal_colors
            for row, c in ((self.a, ca), (self.b, cb)):
                for i in range(len(row)):
                    for j in range(i + 1, len(row)):
                        if g.color(row[i], row[j]) != c:
                            return False
        return True

    def prefix(self, m):
        """The order-m witness formed by the first m rows."""
        hc = self.horizontal_colors
        return HalfGraphWitness(self.color, m, self.a[:m], self.b[:m], self.below, hc)


def _bitrows(g):
    rows = []
    mat = g.matrix
    for c in range(g.color_count):
        per = []
        for x in range(g.size):
            bits = 0
            for y in (mat[x] == c).nonzero()[0].tolist():
                bits |= 1 << y
            per.append(bits)
        rows.append(per)
    return rows


def _row_colors(g, row):
    if len(row) < 2:
        return None
    cols = {g.color(row[i], row[j]) for i in range(len(row)) for j in range(i + 1, len(row))}
    return cols.pop() if len(cols) == 1 else None


def find_half_graph(g, P, m, horizontal=None, below=None, budget=None):
    """First half-graph witness of order m (a row before b row, index order), or None.

    ``horizontal`` optionally fixes the colors ``(a-row, b-row)`` of the two
    rows as monochromatic cliques; ``below`` optionally fixes the color of
    ``(a_i, b_j)`` for ``i > j``.
    """
    P = g.cidx(P)
    Q = None if below is None else g.cidx(below)
    if Q is not None and Q == P:
        raise ArgumentError("below-diagonal color must differ from the cross color")
    limit = budgets.get("half_graph_order", budget)
    if m > limit:
        raise ResourceLimitError("half_graph_order", limit, m)
    if m < 1:
        raise ArgumentError("order must be >= 1")
    if 2 * m > g.size:
        return None
    ha = hb = None
    if horizontal is not None:
        ha, hb = (g.cidx(c) for c in horizontal)
    rows = _bitrows(g)
    v = g.size
    full = (1 << v) - 1
    onP = rows[P]
    if Q is None:
        offP = [full & ~onP[x] & ~(1 << x) for x in range(v)]
    else:
        offP = rows[Q]
    a = []

    def b_candidates():
        # cand[j] for b_j given all of a
        out = []
        for j in range(m):
            bits = full
            for i, x in enumerate(a):
                bits &= onP[x] if i <= j else offP[x]
            out.append(bits)
        return out

    def feasible():
        t = len(a)
        for j in range(m):
            bits = full
            for i in range(t):
                bits &= onP[a[i]] if i <= j else offP[a[i]]
            if not bits:
                return False
        return True

    def choose_b(cands):
        b = []

        def rec(j, allowed):
            if j == m:
                return True
            bits = cands[j] & allowed
            while bits:
                low = bits & -bits
                y = low.bit_length() - 1
                bits &= ~low
                b.append(y)
                nxt = allowed & rows[hb][y] if hb is not None else allowed
                if rec(j + 1, nxt):
                    return True
                b.pop()
            return False

        return tuple(b) if rec(0, full) else None

    def rec_a(allowed):
        if len(a) == m:
            b = choose_b(b_candidates())
            return b
        bits = allowed
        while bits:
            low = bits & -bits
            x = low.bit_length() - 1
            bits &= ~low
            if x in a:
                continue
            a.append(x)
            if feasible():
                nxt = allowed & rows[ha][x] if ha is not None else allowed
                found = rec_a(nxt)
                if found is not None:
                    return found
            a.pop()
        return None

    b = rec_a(full)
    if b is None:
        return None
    at = tuple(a)
    hc = (ha, hb) if horizontal is not None else None
    if hc is None:
        ca, cb = _row_colors(g, at), _row_colors(g, b)
        if ca is not None and cb is not None:
            hc = (ca, cb)
    return HalfGraphWitness(P, m, at, b, Q, hc)


def max_half_graph_order(g, P, cap, budget=None):
    """Largest m <= cap admitting a half-graph for P (0 if none)."""
    limit = budgets.get("half_graph_order", budget)
    if cap > limit:
        raise ResourceLimitError("half_graph_order", limit, cap)
    best = 0
    for m in range(1, cap + 1):
        if find_half_graph(g, P, m, budget=budget) is None:
            break
        best = m
    return best


def compatibility_witnesses(g, P, Q, m, rows=None, budget=None):
    """Half-graph with P on and above the diagonal and exactly Q below it."""
    return find_half_graph(g, P, m, horizontal=rows, below=Q, budget=budget)


def compatibility_graph(g, m, rows=None):
    """Pairs (P, Q) of distinct colors for which an order-m witness was found."""
    n = g.color_count
    return sorted(
        (P, Q)
        for P in range(n)
        for Q in range(n)
        if P != Q and compatibility_witnesses(g, P, Q, m, rows) is not None
    )


def pair_type(g, e, f):
    """Ordered 4-vertex type of edges e = (a, b), f = (c, d): colors ac, ad, bc, bd."""
    (a, b), (c, d) = e, f
    return (g.color(a, c), g.color(a, d), g.color(b, c), g.color(b, d))


def ramsey_monochromatic_pairs(g, items, t, budget=None):
    """Largest subsequence of ``items`` whose pairs all share one ordered type.

    Returns the subsequence (item order kept) if it has at least ``t``
    items, else ``None``.
    """
    limit = budgets.get("ramsey_t", budget)
    if t > limit:
        raise ResourceLimitError("ramsey_t", limit, t)
    items = [tuple(int(x) for x in e) for e in items]
    used = [x for e in items for x in e]
    if len(set(used)) != len(used):
        raise ArgumentError("items must be pairwise vertex-disjoint edges")
    cols = {g.color(a, b) for a, b in items}
    if len(cols) > 1:
        raise ArgumentError("items must all carry one color")
    if len(items) <= 1:
        return list(items) if len(items) >= t else None
    types = {}
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            types.setdefault(pair_type(g, items[i], items[j]), []).append((i, j))
    best = None
    for tau in sorted(types):
        nbr = [0] * len(items)
        for i, j in types[tau]:
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        mask = max_clique_bits(nbr)
        chosen = [items[i] for i in range(len(items)) if mask >> i & 1]
        if best is None or len(chosen) > len(best):
            best = chosen
    return best if best is not None and len(best) >= t else None
