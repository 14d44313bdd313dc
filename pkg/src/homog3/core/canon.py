"""Color refinement, canonical labeling, isomorphism and automorphism search.

Vertices are first partitioned by iterated color-degree refinement (each
vertex is keyed by how many neighbors of each color it has in every cell);
the refined ordered partition is label-invariant. Remaining ties are broken
by individualizing vertices of the first non-singleton cell and recursing.
The canonical code is the smallest leaf matrix over the search tree, with
subtrees pruned by automorphisms discovered along the way.
"""

import numpy as np

from .. import budgets
from ..errors import ResourceLimitError
from .ngraph import NGraph, VertexMap, same_signature


def refine(adj, cells):
    """Refine an ordered partition to the coarsest equitable one.

    ``adj`` is the stacked per-color adjacency (ncolors, v, v). Returns the
    new cell list and a trace recording every split; two graphs related by
    an isomorphism that maps cells to cells produce identical traces.
    """
    cells = [list(c) for c in cells]
    v = adj.shape[1]
    trace = []
    while len(cells) < v:
        k = len(cells)
        onehot = np.zeros((v, k), dtype=np.int32)
        for j, cell in enumerate(cells):
            onehot[cell, j] = 1
        sig = np.matmul(adj, onehot).transpose(1, 0, 2).reshape(v, -1)
        out = []
        changed = False
        for j, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            rows = sig[cell]
            if (rows == rows[0]).all():
                out.append(cell)
                continue
            groups = {}
            for x, row in zip(cell, rows):
                groups.setdefault(row.tobytes(), []).append(x)
            keys = sorted(groups)
            out.extend(groups[key] for key in keys)
            trace.append((j, tuple((key, len(groups[key])) for key in keys)))
            changed = True
        cells = out
        if not changed:
            break
    return cells, trace


def _individualize(cells, target, x):
    cell = cells[target]
    rest = [y for y in cell if y != x]
    return cells[:target] + [[x], rest] + cells[target + 1:]


def _first_nonsingleton(cells):
    for j, cell in enumerate(cells):
        if len(cell) > 1:
            return j
    return -1


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def orbits_from_generators(n, generators):
    """Orbit partition of {0..n-1} under the group generated by ``generators``."""
    uf = _UnionFind(n)
    for gen in generators:
        for x, y in enumerate(gen):
            uf.union(x, y)
    groups = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(groups.values())


class _CanonSearch:
    def __init__(self, g):
        self.mat = g.matrix
        self.adj = g.color_adjacency()
        self.v = g.size
        self.iu = np.triu_indices(self.v, 1)
        self.first_path = None
        self.first_code = None
        self.first_lab = None
        self.best_code = None
        self.best_lab = None
        self.generators = []

    def _code(self, lab):
        return self.mat[np.ix_(lab, lab)][self.iu].tobytes()

    def _perm(self, lab_from, lab_to):
        perm = [0] * self.v
        for a, b in zip(lab_from, lab_to):
            perm[a] = b
        return tuple(perm)

    def run(self, cells):
        self._search(cells, [])

    def _search(self, cells, path):
        cells, _ = refine(self.adj, cells)
        target = _first_nonsingleton(cells)
        if target < 0:
            lab = [c[0] for c in cells]
            code = self._code(lab)
            if self.first_code is None:
                self.first_code = self.best_code = code
                self.first_lab = self.best_lab = lab
                self.first_path = list(path)
                return None
            if code == self.first_code:
                self.generators.append(self._perm(self.first_lab, lab))
                common = 0
                for a, b in zip(path, self.first_path):
                    if a != b:
                        break
                    common += 1
                return common
            if code == self.best_code:
                self.generators.append(self._perm(self.best_lab, lab))
            elif code < self.best_code:
                self.best_code = code
                self.best_lab = lab
            return None
        depth = len(path)
        explored = []
        for x in cells[target]:
            if explored and self._pruned(x, explored, path):
                continue
            r = self._search(_individualize(cells, target, x), path + [x])
            explored.append(x)
            if r is not None and r < depth:
                return r
        return None

    def _pruned(self, x, explored, path):
        gens = [g for g in self.generators if all(g[p] == p for p in path)]
        if not gens:
            return False
        uf = _UnionFind(self.v)
        for gen in gens:
            for a, b in enumerate(gen):
                uf.union(a, b)
        rx = uf.find(x)
        return any(uf.find(y) == rx for y in explored)


class Canonical:
    """Result of canonical labeling.

    ``labeling[p]`` is the vertex placed at canonical position ``p``;
    ``code`` is a bytes certificate (equal iff isomorphic, for the same
    initial partition shape); ``generators`` are automorphisms found during
    the search, each a tuple ``perm`` with ``perm[x]`` the image of ``x``.
    """

    __slots__ = ("code", "labeling", "generators", "graph")

    def __init__(self, code, labeling, generators, graph):
        self.code = code
        self.labeling = labeling
        self.generators = generators
        self.graph = graph

    @property
    def form(self):
        """The canonically relabeled graph."""
        return self.graph.induced(self.labeling)


def canonical(g, cells=None):
    """Canonically label ``g``, optionally relative to an ordered vertex partition."""
    if g.size == 0:
        return Canonical(b"", [], [], g)
    if cells is None:
        cells = [list(range(g.size))]
    search = _CanonSearch(g)
    search.run([list(c) for c in cells if c])
    key = (g.size, g.color_count).__repr__().encode() + b"|" + search.best_code
    return Canonical(key, list(search.best_lab), search.generators, g)


def canonical_form(g):
    """Canonical representative of the isomorphism class of ``g``."""
    return canonical(g).form


def canonical_code(g):
    return canonical(g).code


def are_isomorphic(g, h):
    """A color-preserving bijection g -> h as a :class:`VertexMap`, or ``None``."""
    same_signature(g, h)
    if g.size != h.size:
        return None
    if g.size == 0:
        return VertexMap(g, h, ())
    if not np.array_equal(
        np.bincount(g.upper(), minlength=g.color_count),
        np.bincount(h.upper(), minlength=h.color_count),
    ):
        return None
    cg, ch = canonical(g), canonical(h)
    if cg.code != ch.code:
        return None
    images = [0] * g.size
    for a, b in zip(cg.labeling, ch.labeling):
        images[a] = b
    return VertexMap(g, h, tuple(images))


def iter_isomorphisms(g, h, cells_g=None, cells_h=None):
    """Yield every color-preserving bijection g -> h mapping cells to cells."""
    same_signature(g, h)
    if g.size != h.size:
        return
    if g.size == 0:
        yield ()
        return
    adj_g, adj_h = g.color_adjacency(), h.color_adjacency()
    mg, mh = g.matrix, h.matrix
    start_g = cells_g if cells_g is not None else [list(range(g.size))]
    start_h = cells_h if cells_h is not None else [list(range(h.size))]
    if [len(c) for c in start_g] != [len(c) for c in start_h]:
        return

    def rec(cg, ch):
        cg, tg = refine(adj_g, cg)
        ch, th = refine(adj_h, ch)
        if tg != th or [len(c) for c in cg] != [len(c) for c in ch]:
            return
        target = _first_nonsingleton(cg)
        if target < 0:
            images = [0] * g.size
            for a, b in zip(cg, ch):
                images[a[0]] = b[0]
            idx = np.array(images)
            if np.array_equal(mh[np.ix_(idx, idx)], mg):
                yield tuple(images)
            return
        x = cg[target][0]
        nxt_g = _individualize(cg, target, x)
        for y in ch[target]:
            yield from rec(nxt_g, _individualize(ch, target, y))

    yield from rec(start_g, start_h)


def automorphisms(g, max_size=None, max_count=None):
    """The full automorphism group of ``g`` as a list of :class:`VertexMap`.

    Raises :class:`ResourceLimitError` when ``g`` is larger than the
    ``aut_size`` budget or the group has more than ``aut_count`` elements.
    """
    size_limit = budgets.get("aut_size", max_size)
    count_limit = budgets.get("aut_count", max_count)
    if g.size > size_limit:
        raise ResourceLimitError("aut_size", size_limit, g.size)
    out = []
    for images in iter_isomorphisms(g, g):
        out.append(VertexMap(g, g, images))
        if len(out) > count_limit:
            raise ResourceLimitError("aut_count", count_limit, len(out))
    out.sort(key=lambda m: m.images)
    return out


# small-pattern cache: (k, ncolors, names, raw code) -> canonical NGraph
_PATTERN_CACHE = {}


def decode_pattern(code, k, ncolors):
    """Inverse of the kernel subset code: pair colors in upper-triangle order."""
    npairs = k * (k - 1) // 2
    digits = [0] * npairs
    for p in range(npairs - 1, -1, -1):
        code, digits[p] = divmod(code, ncolors)
    return digits


def canonical_pattern(code, k, colors):
    """Canonical NGraph for a k-vertex raw pattern code (memoized)."""
    key = (k, colors, int(code))
    hit = _PATTERN_CACHE.get(key)
    if hit is None:
        g = NGraph.from_upper(k, decode_pattern(int(code), k, len(colors)), colors)
        hit = canonical(g).form
        _PATTERN_CACHE[key] = hit
    return hit
