"""Generators for desk-scale samples of the classified structures.

Vertex indexing is frozen so JSON output is reproducible:

* ``wreath(G, H)``: vertex ``(a, b)`` has index ``a * H.size + b``;
* ``product(m, n)``: vertex ``(a, b)`` has index ``a * n + b``;
* covers: base vertex ``m`` becomes the pair ``{2m, 2m + 1}``;
* class-partitioned kinds: block ``q`` holds ``q * class_size .. (q+1) * class_size - 1``.

Random kinds draw from ``numpy.random.default_rng(seed)``; identical
arguments always regenerate the identical graph.
"""

from dataclasses import dataclass, field

import numpy as np

from .core.ngraph import NGraph, default_color_names, same_signature
from .errors import ArgumentError

RST = default_color_names(3)


def _rng(seed):
    if seed is None:
        raise ArgumentError("randomized generators need an explicit seed")
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def _idx(colors, c):
    return NGraph(np.zeros((0, 0)), colors).cidx(c)


def _from_matrix(mat, colors):
    np.fill_diagonal(mat, 0)
    return NGraph(mat, colors)


def _random_upper(rng, size, choices):
    """Symmetric matrix with every pair drawn uniformly from ``choices``."""
    mat = np.zeros((size, size), dtype=np.int64)
    iu = np.triu_indices(size, 1)
    vals = np.asarray(choices, dtype=np.int64)[rng.integers(0, len(choices), len(iu[0]))]
    mat[iu] = vals
    mat[(iu[1], iu[0])] = vals
    return mat


def complete(size, color, colors=RST):
    """K_size in a single color."""
    return NGraph.complete(size, color, colors)


def wreath(g, h):
    """G[H]: copies of H indexed by G's vertices, joined by G's colors."""
    same_signature(g, h)
    if g.colors != h.colors:
        raise ArgumentError("wreath(): color names differ")
    n = h.size
    size = g.size * n
    if size == 0:
        return NGraph(np.zeros((0, 0)), g.colors)
    outer = np.repeat(np.repeat(g.matrix.astype(np.int64), n, axis=0), n, axis=1)
    inner = np.tile(h.matrix.astype(np.int64), (g.size, g.size))
    block = np.arange(size) // n
    same = block[:, None] == block[None, :]
    mat = np.where(same, inner, outer)
    return _from_matrix(mat, g.colors)


def nested_wreath(layers, colors=RST):
    """K_{m1}^{c1}[K_{m2}^{c2}[...]] from ``[(m1, c1), (m2, c2), ...]``."""
    if not layers:
        raise ArgumentError("nested_wreath() needs at least one layer")
    out = complete(layers[-1][0], layers[-1][1], colors)
    for m, c in reversed(layers[:-1]):
        out = wreath(complete(m, c, colors), out)
    return out


def product(m, n, i=0, j=1, k=2, colors=RST):
    """K_m^i x K_n^j on vertex set m x n."""
    if m < 1 or n < 1:
        raise ArgumentError("product() needs m, n >= 1")
    ci, cj, ck = (_idx(colors, c) for c in (i, j, k))
    if len({ci, cj, ck}) != 3:
        raise ArgumentError("product() needs three distinct colors")
    a = np.arange(m * n) // n
    b = np.arange(m * n) % n
    da = a[:, None] != a[None, :]
    db = b[:, None] != b[None, :]
    mat = np.where(da & ~db, ci, np.where(~da & db, cj, ck))
    return _from_matrix(mat.astype(np.int64), colors)


def multipartite(m, n, colors=("R", "S")):
    """I_m[K_n] as a 2-graph: m blocks of size n; first color inside, second across."""
    if m < 1 or n < 1:
        raise ArgumentError("multipartite() needs m, n >= 1")
    return wreath(complete(m, 1, colors), complete(n, 0, colors))


def _other_two(colors, spare):
    s = _idx(colors, spare)
    rest = [c for c in range(len(colors)) if c != s]
    if len(rest) < 2:
        raise ArgumentError("need at least two colors besides the spare one")
    return rest[0], rest[1]


def pentagon(spare=0, colors=RST):
    """P^i: five vertices; the j-edges and the k-edges each form a pentagon."""
    j, k = _other_two(colors, spare)
    return NGraph.from_function(5, lambda x, y: j if (y - x) % 5 in (1, 4) else k, colors)


def rook(spare=0, colors=RST):
    """Q^i: nine vertices of a 3x3 board; j on shared row or column, k otherwise."""
    j, k = _other_two(colors, spare)

    def rule(x, y):
        return j if (x // 3 == y // 3 or x % 3 == y % 3) else k

    return NGraph.from_function(9, rule, colors)


def random_ngraph(v, n=3, seed=None, colors=None):
    """Every pair colored uniformly at random among n colors."""
    if v < 0 or n < 2:
        raise ArgumentError("random_ngraph() needs v >= 0 and n >= 2")
    colors = default_color_names(n) if colors is None else tuple(colors)
    mat = _random_upper(_rng(seed), v, list(range(n)))
    return _from_matrix(mat, colors)


def random_graph(v, seed, edge=1, non_edge=2, colors=RST):
    """Erdős–Rényi(1/2) graph as a 2-colored sample of the random graph."""
    e, ne = _idx(colors, edge), _idx(colors, non_edge)
    return _from_matrix(_random_upper(_rng(seed), v, [e, ne]), colors)


def cover_of(base, edge=None):
    """The double cover C(base) over colors R, S, T.

    ``base`` is any n-graph whose color ``edge`` (default: index 1 when the
    base is 3-colored, else 0) is the edge relation. R joins 2m and 2m+1; S
    joins same-parity vertices over base edges and mixed-parity vertices
    over base non-edges; everything else is T.
    """
    if edge is None:
        edge = 1 if base.color_count >= 3 else 0
    e = base.cidx(edge)
    m = base.size
    v = 2 * m
    w = np.arange(v) // 2
    parity = np.arange(v) % 2
    E = np.zeros((m, m), dtype=bool)
    if m:
        E = base.matrix == e
    Ew = E[w[:, None], w[None, :]] if m else np.zeros((0, 0), dtype=bool)
    same_par = parity[:, None] == parity[None, :]
    s_mask = np.where(same_par, Ew, ~Ew)
    mat = np.where(s_mask, 1, 2)
    mat[w[:, None] == w[None, :]] = 0
    return _from_matrix(mat.astype(np.int64), RST)


def cover_cgamma(graph_seed, classes):
    """C(Γ) over an Erdős–Rényi(1/2) base graph on ``classes`` vertices."""
    if classes < 1:
        raise ArgumentError("cover_cgamma() needs classes >= 1")
    return cover_of(random_graph(classes, graph_seed))


def _block_ids(classes, class_size):
    return np.arange(classes * class_size) // class_size


def class_random(classes, class_size, eq_color=0, seed=None, colors=RST):
    """Blocks joined internally by ``eq_color``; cross pairs uniform over the other two."""
    if classes < 2 or class_size < 1:
        raise ArgumentError("class_random() needs classes >= 2 and class_size >= 1")
    eq = _idx(colors, eq_color)
    others = [c for c in range(len(colors)) if c != eq][:2]
    v = classes * class_size
    mat = _random_upper(_rng(seed), v, others)
    blk = _block_ids(classes, class_size)
    mat[blk[:, None] == blk[None, :]] = eq
    return _from_matrix(mat, colors)


def quotient_random(classes, class_size, seed=None, eq_color=0, colors=RST):
    """Γ^{j,k}[K_n^i]: each pair of blocks is complete in one random cross color."""
    if classes < 1 or class_size < 1:
        raise ArgumentError("quotient_random() needs classes, class_size >= 1")
    eq = _idx(colors, eq_color)
    others = [c for c in range(len(colors)) if c != eq][:2]
    base = _random_upper(_rng(seed), classes, others)
    np.fill_diagonal(base, eq)
    blk = _block_ids(classes, class_size)
    mat = base[blk[:, None], blk[None, :]]
    return _from_matrix(mat, colors)


def class_generic(m, class_size, seed=None, cross_color=0, colors=RST):
    """K_m^i[Γ^{j,k}]: m blocks joined by ``cross_color``; random j/k inside."""
    if m < 1 or class_size < 1:
        raise ArgumentError("class_generic() needs m, class_size >= 1")
    cc = _idx(colors, cross_color)
    others = [c for c in range(len(colors)) if c != cc][:2]
    rng = _rng(seed)
    v = m * class_size
    mat = np.full((v, v), cc, dtype=np.int64)
    for q in range(m):
        sl = slice(q * class_size, (q + 1) * class_size)
        mat[sl, sl] = _random_upper(rng, class_size, others)
    return _from_matrix(mat, colors)


def plant(g, vertices, sub):
    """Overwrite the pairs among ``vertices`` with the structure of ``sub``."""
    same_signature(g, sub)
    vs = list(vertices)
    if len(vs) != sub.size:
        raise ArgumentError("plant(): vertex count differs from the planted structure")
    mat = g.matrix.astype(np.int64)
    idx = np.array(vs)
    mat[np.ix_(idx, idx)] = sub.matrix
    return _from_matrix(mat, g.colors)


def relabel(g, seed):
    """A seeded random vertex relabeling of ``g`` (isomorphic copy)."""
    perm = _rng(seed).permutation(g.size)
    return g.induced(perm.tolist())


# ---------------------------------------------------------------------------
# GeneratorSpec

KINDS = (
    "wreath",
    "product",
    "multipartite",
    "pentagonP",
    "rookQ",
    "random_ngraph",
    "cover_cgamma",
    "class_random",
    "quotient_random",
    "class_generic",
)

SEEDED = {"random_ngraph", "cover_cgamma", "class_random", "quotient_random", "class_generic"}

DEFAULT_PARAMS = {
    "wreath": {"sizes": [2, 3, 4], "colors": ["T", "S", "R"]},
    "product": {"m": 3, "n": 5, "i": "R", "j": "S", "k": "T"},
    "multipartite": {"m": 3, "n": 4},
    "pentagonP": {"spare": "R"},
    "rookQ": {"spare": "R"},
    "random_ngraph": {"v": 200, "n": 3},
    "cover_cgamma": {"classes": 64},
    "class_random": {"classes": 6, "class_size": 16, "eq_color": "R"},
    "quotient_random": {"classes": 24, "class_size": 3, "eq_color": "R"},
    "class_generic": {"m": 3, "class_size": 24, "cross_color": "R"},
}


@dataclass(frozen=True)
class GeneratorSpec:
    """Tagged descriptor of one construction: ``kind``, its ``params`` and a ``seed``."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArgumentError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        unknown = set(self.params) - set(DEFAULT_PARAMS[self.kind])
        if unknown:
            raise ArgumentError(f"{self.kind}: unknown parameters {sorted(unknown)}")

    def resolved(self):
        out = dict(DEFAULT_PARAMS[self.kind])
        out.update(self.params)
        return out

    def to_obj(self):
        return {"kind": self.kind, "params": self.resolved(), "seed": int(self.seed)}

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["kind"], dict(obj.get("params", {})), int(obj.get("seed", 0)))

    def build(self):
        p = self.resolved()
        kind, seed = self.kind, self.seed
        if kind == "wreath":
            if len(p["sizes"]) != len(p["colors"]):
                raise ArgumentError("wreath: sizes and colors differ in length")
            return nested_wreath(list(zip(p["sizes"], p["colors"])))
        if kind == "product":
            return product(p["m"], p["n"], p["i"], p["j"], p["k"])
        if kind == "multipartite":
            return multipartite(p["m"], p["n"])
        if kind == "pentagonP":
            return pentagon(p["spare"])
        if kind == "rookQ":
            return rook(p["spare"])
        if kind == "random_ngraph":
            return random_ngraph(p["v"], p["n"], seed)
        if kind == "cover_cgamma":
            return cover_cgamma(seed, p["classes"])
        if kind == "class_random":
            return class_random(p["classes"], p["class_size"], p["eq_color"], seed)
        if kind == "quotient_random":
            return quotient_random(p["classes"], p["class_size"], seed, p["eq_color"])
        if kind == "class_generic":
            return class_generic(p["m"], p["class_size"], seed, p["cross_color"])
        raise AssertionError(kind)


def build(kind, seed=0, **params):
    return GeneratorSpec(kind, params, seed).build()
