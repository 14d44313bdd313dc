"""Forbidden-configuration classes: membership, amalgamation and joint embedding.

Amalgams identify only the common base: ``D`` has the vertices of ``B``
followed by the vertices of ``C`` outside the image of the base, and the
cross pairs between the two new parts are colored by exhaustive search in
color-index order (so the first solution is lexicographically least).
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from typing import Optional

import numpy as np

from . import budgets
from .core.age import subset_patterns, triangle_graph
from .core.canon import are_isomorphic, canonical, canonical_code
from .core.ngraph import NGraph, VertexMap, same_signature
from .errors import ArgumentError, ResourceLimitError


def _raw_code(mat, vs, ncolors):
    code = 0
    for i in range(len(vs) - 1):
        for j in range(i + 1, len(vs)):
            code = code * ncolors + int(mat[vs[i], vs[j]])
    return code


@dataclass
class ForbiddenSet:
    """Canonical, pairwise non-isomorphic forbidden structures over one signature."""

    colors: tuple
    forbidden: list = field(default_factory=list)

    def __post_init__(self):
        self.colors = tuple(self.colors)
        seen = {}
        for f in self.forbidden:
            if f.colors != self.colors:
                raise ArgumentError("forbidden structure has a different color signature")
            seen.setdefault(canonical_code(f), canonical(f).form)
        self.forbidden = [seen[c] for c in sorted(seen)]
        self._codes = None

    @classmethod
    def from_words(cls, colors, words):
        """Forbidden triangles from 3-letter color words such as ``"RRS"``."""
        return cls(tuple(colors), [triangle_graph(tuple(colors), w) for w in words])

    def words(self):
        out = []
        for f in self.forbidden:
            if f.size == 3:
                out.append("".join(sorted(f.colors[c] for c in f.upper().tolist())))
            else:
                out.append(f"<{f.size}-vertex>")
        return out

    @property
    def max_size(self):
        return max((f.size for f in self.forbidden), default=0)

    def raw_codes(self):
        """``{size: {raw code of any labeling: forbidden index}}``."""
        if self._codes is None:
            n = len(self.colors)
            out = {}
            for idx, f in enumerate(self.forbidden):
                table = out.setdefault(f.size, {})
                for perm in permutations(range(f.size)):
                    table.setdefault(_raw_code(f.matrix, perm, n), idx)
            self._codes = out
        return self._codes


def member(g, forb, budget=None):
    """``(True, None)`` if no induced substructure of ``g`` is forbidden,
    else ``(False, embedding)`` for the first forbidden copy found."""
    if g.colors != forb.colors:
        same_signature(g, NGraph(np.zeros((0, 0)), forb.colors))
    limit = budgets.get("forbidden_size", budget)
    if forb.max_size > limit:
        raise ResourceLimitError("forbidden_size", limit, forb.max_size)
    for s, table in sorted(forb.raw_codes().items()):
        if s > g.size:
            continue
        codes = subset_patterns(g, s)
        hit = np.flatnonzero(np.isin(codes, np.fromiter(table, dtype=np.int64)))
        if hit.size:
            pos = int(hit[0])
            sub = _nth_combination(g.size, s, pos)
            f = forb.forbidden[table[int(codes[pos])]]
            iso = are_isomorphic(f, g.induced(sub))
            return False, VertexMap(f, g, tuple(sub[x] for x in iso.images))
    return True, None


def _nth_combination(n, k, index):
    """The ``index``-th k-subset of range(n) in lexicographic order."""
    out = []
    x = 0
    for remaining in range(k, 0, -1):
        while True:
            c = comb(n - x - 1, remaining - 1)
            if index < c:
                out.append(x)
                x += 1
                break
            index -= c
            x += 1
    return out


# ---------------------------------------------------------------------------
# amalgamation problems


@dataclass
class AmalgamationProblem:
    """Base A embedded into B by f1 and into C by f2."""

    A: NGraph
    B: NGraph
    C: NGraph
    f1: VertexMap
    f2: VertexMap

    def __post_init__(self):
        if self.f1.source != self.A or self.f2.source != self.A:
            raise ArgumentError("f1 and f2 must have source A")
        if self.f1.target != self.B or self.f2.target != self.C:
            raise ArgumentError("f1 must map into B and f2 into C")

    @classmethod
    def over_prefix(cls, B, C, a):
        """Problem whose base is the first ``a`` vertices of both B and C."""
        A = B.induced(range(a))
        return cls(A, B, C, VertexMap(A, B, tuple(range(a))), VertexMap(A, C, tuple(range(a))))


@dataclass
class AmalgamationCertificate:
    solved: bool
    solution: Optional[tuple] = None  # (D, g1, g2)
    failure: Optional[list] = None    # [(assignment, witness vertices, forbidden index)]
    strategy: str = "exhaustive"
    new_pairs: list = field(default_factory=list)


def _layout(problem):
    B, C = problem.B, problem.C
    nb = B.size
    base_in_c = {c: problem.f1.images[a] for a, c in enumerate(problem.f2.images)}
    new_c = [c for c in range(C.size) if c not in base_in_c]
    g2 = [0] * C.size
    for c in range(C.size):
        g2[c] = base_in_c[c] if c in base_in_c else nb + new_c.index(c)
    size = nb + len(new_c)
    mat = np.full((size, size), -1, dtype=np.int64)
    mat[:nb, :nb] = B.matrix
    idx = np.array(g2)
    if C.size:
        mat[np.ix_(idx, idx)] = C.matrix
    new_b = [b for b in range(nb) if b not in set(problem.f1.images)]
    pairs = [(b, g2[c]) for b in new_b for c in new_c]
    np.fill_diagonal(mat, 0)
    return mat, g2, pairs


def solve(problem, forb, strategy="exhaustive", fill=None, budget=None):
    """Amalgamate B and C over A inside the class ``forb``."""
    p = problem
    for name, s in (("B", p.B), ("C", p.C)):
        ok, _ = member(s, forb)
        if not ok:
            raise ArgumentError(f"{name} is not a member of the class")
    mat, g2, pairs = _layout(p)
    limit = budgets.get("amalgam_pairs", budget)
    if len(pairs) > limit:
        raise ResourceLimitError("amalgam_pairs", limit, len(pairs))
    n = len(forb.colors)
    size = mat.shape[0]
    tables = forb.raw_codes()

    def finish(m, how):
        np.fill_diagonal(m, 0)
        D = NGraph(m, forb.colors)
        g1 = VertexMap(p.B, D, tuple(range(p.B.size)))
        return AmalgamationCertificate(True, (D, g1, VertexMap(p.C, D, tuple(g2))), None, how, pairs)

    def blocked(m, b, c):
        """First forbidden copy containing b and c with all pairs colored."""
        others = [x for x in range(size) if x != b and x != c]
        for s, table in sorted(tables.items()):
            for rest in combinations(others, s - 2):
                vs = sorted((b, c) + rest)
                sub = m[np.ix_(vs, vs)]
                if (sub < 0).any():
                    continue
                code = _raw_code(m, vs, n)
                if code in table:
                    return vs, table[code]
        return None

    if strategy == "free":
        c0 = n - 1 if fill is None else NGraph(np.zeros((0, 0)), forb.colors).cidx(fill)
        m = mat.copy()
        for b, c in pairs:
            m[b, c] = m[c, b] = c0
        if member(NGraph(np.where(m < 0, 0, m), forb.colors), forb)[0]:
            return finish(m, "free")
    elif strategy != "exhaustive":
        raise ArgumentError(f"unknown strategy {strategy!r}")

    m = mat.copy()
    failure = []

    def rec(i):
        if i == len(pairs):
            return True
        b, c = pairs[i]
        for col in range(n):
            m[b, c] = m[c, b] = col
            hit = blocked(m, b, c)
            if hit is None:
                if rec(i + 1):
                    return True
            else:
                assignment = {pairs[j]: int(m[pairs[j]]) for j in range(i + 1)}
                failure.append((assignment, hit[0], hit[1]))
        m[b, c] = m[c, b] = -1
        return False

    if rec(0):
        return finish(m, "exhaustive")
    return AmalgamationCertificate(False, None, failure, "exhaustive", pairs)


def verify_solution(problem, forb, cert):
    """Independent re-check of a solved certificate."""
    D, g1, g2 = cert.solution
    for a in range(problem.A.size):
        if g1(problem.f1(a)) != g2(problem.f2(a)):
            return False
    return member(D, forb)[0]


# ---------------------------------------------------------------------------
# class enumeration and AP / JEP verdicts


def _extend_once(g, colors):
    """All one-vertex extensions of g (new vertex last)."""
    n = len(colors)
    v = g.size
    for cols in product(range(n), repeat=v):
        mat = np.zeros((v + 1, v + 1), dtype=np.int64)
        mat[:v, :v] = g.matrix
        mat[v, :v] = cols
        mat[:v, v] = cols
        np.fill_diagonal(mat, 0)
        yield NGraph(mat, colors)


def class_members(forb, max_size):
    """Canonical members of the class by size 0..max_size."""
    colors = forb.colors
    out = {0: [NGraph(np.zeros((0, 0)), colors)]}
    for s in range(1, max_size + 1):
        seen = {}
        for g in out[s - 1]:
            for h in _extend_once(g, colors):
                code = canonical_code(h)
                if code not in seen and member(h, forb)[0]:
                    seen[code] = canonical(h).form
        out[s] = [seen[c] for c in sorted(seen)]
    return out


def extensions_over(A, p, forb):
    """Members extending A by p new vertices, up to isomorphism fixing A pointwise."""
    level = [A]
    a = A.size
    for _ in range(p):
        seen = {}
        for g in level:
            for h in _extend_once(g, forb.colors):
                rest = list(range(a, h.size))
                code = canonical(h, [[x] for x in range(a)] + [rest]).code
                if code not in seen and member(h, forb)[0]:
                    seen[code] = h
        level = [seen[c] for c in sorted(seen)]
    return level


@dataclass
class APVerdict:
    holds: bool
    max_size: int
    problems_checked: int
    first_failure: Optional[AmalgamationProblem] = None
    certificate: Optional[AmalgamationCertificate] = None
    kind: str = "ap"


def _problems(forb, max_size, base_sizes):
    members = class_members(forb, max_size)
    for a in base_sizes:
        for A in members[a]:
            exts = {p: extensions_over(A, p, forb) for p in range(1, max_size - a + 1)}
            for p in range(1, max_size - a + 1):
                for q in range(p, max_size - a + 1):
                    for i, B in enumerate(exts[p]):
                        start = i if p == q else 0
                        for C in exts[q][start:]:
                            yield AmalgamationProblem.over_prefix(B, C, a)


def check_ap(forb, max_size, budget=None):
    """Exact AP verdict for problems with |B|, |C| <= max_size."""
    limit = budgets.get("ap_max_size", budget)
    if max_size > limit:
        raise ResourceLimitError("ap_max_size", limit, max_size)
    return _verdict(forb, max_size, range(0, max_size), "ap")


def check_jep(forb, max_size, budget=None):
    """Exact JEP verdict for members with at most max_size vertices."""
    limit = budgets.get("ap_max_size", budget)
    if max_size > limit:
        raise ResourceLimitError("ap_max_size", limit, max_size)
    return _verdict(forb, max_size, [0], "jep")


def _verdict(forb, max_size, base_sizes, kind):
    count = 0
    for prob in _problems(forb, max_size, base_sizes):
        count += 1
        cert = solve(prob, forb, strategy="free")
        if not cert.solved:
            return APVerdict(False, max_size, count, prob, cert, kind)
    return APVerdict(True, max_size, count, None, None, kind)
