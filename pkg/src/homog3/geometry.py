"""Line spaces of maximal monochromatic cliques and their incidence axioms."""

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .errors import NotSemilinearError


@dataclass
class LineSpace:
    """Points 0..n_points-1 with lines given as sorted vertex lists.

    ``base`` is the graph the lines were extracted from, or ``None`` for a
    hand-built incidence structure; collinearity is always read off the
    lines themselves.
    """

    n_points: int
    line_color: Optional[int]
    lines: list
    base: object = None
    incidence: list = field(default_factory=list)

    def __post_init__(self):
        self.lines = sorted(sorted(int(x) for x in ln) for ln in self.lines)
        self.incidence = [[] for _ in range(self.n_points)]
        for idx, ln in enumerate(self.lines):
            for x in ln:
                self.incidence[x].append(idx)

    def collinear(self):
        """Boolean matrix: distinct points sharing a line."""
        m = np.zeros((self.n_points, self.n_points), dtype=bool)
        for ln in self.lines:
            idx = np.array(ln)
            m[np.ix_(idx, idx)] = True
        np.fill_diagonal(m, False)
        return m

    def to_obj(self, color_names=None):
        name = self.line_color
        if color_names is not None and self.line_color is not None:
            name = color_names[self.line_color]
        return {"color": name, "lines": [list(ln) for ln in self.lines]}


def _maximal_clique_from(mask, seed_set, cand):
    clique = list(seed_set)
    for y in cand:
        if all(mask[y, z] for z in clique):
            clique.append(y)
    return sorted(clique)


def extract_lines(g, c):
    """Line of each c-edge ab: {a, b} plus their common c-neighbors, when that is a clique."""
    c = g.cidx(c)
    mask = g.matrix == c
    lines = {}
    for a, b in g.pairs(c):
        common = np.flatnonzero(mask[a] & mask[b]).tolist()
        if common:
            sub = mask[np.ix_(common, common)]
            np.fill_diagonal(sub, True)
            if not sub.all():
                x, y = (int(t) for t in np.argwhere(~sub)[0])
                x, y = common[x], common[y]
                k1 = _maximal_clique_from(mask, [a, b, x], common)
                k2 = _maximal_clique_from(mask, [a, b, y], common)
                raise NotSemilinearError((a, b), (k1, k2))
        lines.setdefault(tuple(sorted([a, b] + common)), None)
    return LineSpace(g.size, c, list(lines), base=g)


@dataclass
class SemilinearVerdict:
    holds: bool
    shared_pair: Optional[tuple] = None   # (p, q, line_i, line_j)
    short_line: Optional[list] = None

    @property
    def axiom_unique_line(self):
        return self.shared_pair is None

    @property
    def axiom_three_points(self):
        return self.short_line is None


def check_semilinear(space):
    """Two points on at most one common line; every line has at least three points."""
    owner = {}
    shared = None
    for idx, ln in enumerate(space.lines):
        for i in range(len(ln)):
            for j in range(i + 1, len(ln)):
                key = (ln[i], ln[j])
                if key in owner and shared is None:
                    shared = (ln[i], ln[j], owner[key], idx)
                owner.setdefault(key, idx)
    short = next((ln for ln in space.lines if len(ln) < 3), None)
    return SemilinearVerdict(shared is None and short is None, shared, short)


@dataclass
class TriangleVerdict:
    holds: bool
    witness: Optional[tuple] = None  # (a, line index, d)


def triangle_freeness(space):
    """For a on line l and d at collinearity distance 2 from a, d sees < 2 points of l."""
    col = space.collinear()
    two = (col.astype(np.int32) @ col.astype(np.int32)) > 0
    dist2 = two & ~col
    np.fill_diagonal(dist2, False)
    for a in range(space.n_points):
        far = np.flatnonzero(dist2[a]).tolist()
        for li in space.incidence[a]:
            ln = space.lines[li]
            for d in far:
                if sum(1 for x in ln if col[d, x]) >= 2:
                    return TriangleVerdict(False, (a, li, d))
    return TriangleVerdict(True)


@dataclass
class QuadrangleProfile:
    points_per_line: dict
    lines_per_point: dict
    collinear_counts: dict  # histogram over non-incident (point, line) pairs

    @property
    def gq_like(self):
        return bool(self.collinear_counts) and set(self.collinear_counts) == {1}


def quadrangle_profile(space):
    col = space.collinear()
    ppl = Counter(len(ln) for ln in space.lines)
    lpp = Counter(len(inc) for inc in space.incidence if inc)
    counts = Counter()
    for li, ln in enumerate(space.lines):
        on = set(ln)
        idx = np.array(ln)
        seen = col[:, idx].sum(axis=1)
        for x in range(space.n_points):
            if x not in on and space.incidence[x]:
                counts[int(seen[x])] += 1
    return QuadrangleProfile(dict(sorted(ppl.items())), dict(sorted(lpp.items())), dict(sorted(counts.items())))


def lines_partition_neighborhoods(space):
    """Lines through each point partition its collinear neighbors."""
    if space.base is None:
        return True
    g = space.base
    for a in range(space.n_points):
        nb = set(g.neighbors(space.line_color, a))
        parts = [set(space.lines[li]) - {a} for li in space.incidence[a]]
        union = set().union(*parts) if parts else set()
        if union != nb or sum(len(p) for p in parts) != len(nb):
            return False
    return True


def edge_count_conserved(space):
    """Sum of C(|l|, 2) over lines equals the number of line-color edges."""
    if space.base is None:
        return True
    total = sum(comb(len(ln), 2) for ln in space.lines)
    return total == len(space.base.pairs(space.line_color))
