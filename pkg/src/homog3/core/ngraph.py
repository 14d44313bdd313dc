"""The n-graph value type and vertex maps between n-graphs."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import ArgumentError, SignatureError

NO_COLOR = 255  # diagonal marker; never a valid color index
_LETTERS = "RSTUVWXYZ"


def default_color_names(n):
    if n <= len(_LETTERS):
        return tuple(_LETTERS[:n])
    return tuple(_LETTERS) + tuple(f"C{i}" for i in range(len(_LETTERS), n))


class NGraph:
    """A complete graph whose unordered vertex pairs each carry one of n colors.

    Instances are immutable: the color matrix is stored read-only, and
    equality/hashing are by color names plus matrix contents.
    """

    __slots__ = ("_mat", "_colors", "_hash", "_adj")

    def __init__(self, matrix, colors=None):
        mat = np.array(matrix, dtype=np.int64, copy=True)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ArgumentError("matrix must be square")
        v = mat.shape[0]
        if colors is None:
            off = mat[~np.eye(v, dtype=bool)]
            colors = default_color_names(max(3, int(off.max()) + 1 if off.size else 3))
        colors = tuple(str(c) for c in colors)
        if len(colors) < 2:
            raise ArgumentError("an n-graph needs at least two colors")
        if len(set(colors)) != len(colors):
            raise ArgumentError(f"color names must be distinct: {colors}")
        if len(colors) > 36:
            raise ArgumentError("at most 36 colors are supported")
        np.fill_diagonal(mat, NO_COLOR)
        off = ~np.eye(v, dtype=bool)
        vals = mat[off]
        if vals.size and (vals.min() < 0 or vals.max() >= len(colors)):
            raise ArgumentError("pair colors must lie in [0, color_count)")
        if not np.array_equal(mat, mat.T):
            raise ArgumentError("color matrix must be symmetric")
        mat = mat.astype(np.uint8)
        mat.setflags(write=False)
        self._mat = mat
        self._colors = colors
        self._hash = None
        self._adj = None

    # construction helpers -------------------------------------------------
    @classmethod
    def from_upper(cls, size, values, colors=None):
        """Build from the row-major upper triangle (pair (i, j), i < j)."""
        mat = np.full((size, size), NO_COLOR, dtype=np.int64)
        iu = np.triu_indices(size, 1)
        vals = np.asarray(values, dtype=np.int64)
        if vals.shape != (len(iu[0]),):
            raise ArgumentError(f"expected {len(iu[0])} pair colors, got {vals.size}")
        mat[iu] = vals
        mat[(iu[1], iu[0])] = vals
        return cls(mat, colors)

    @classmethod
    def from_function(cls, size, fn, colors=None):
        """Build by calling ``fn(i, j)`` for every pair ``i < j``."""
        vals = [fn(i, j) for i in range(size) for j in range(i + 1, size)]
        return cls.from_upper(size, vals, colors)

    @classmethod
    def complete(cls, size, color=0, colors=None):
        """The monochromatic complete graph K_size in one color."""
        colors = default_color_names(3) if colors is None else colors
        probe = cls(np.zeros((0, 0)), colors)
        c = probe.cidx(color)
        mat = np.full((size, size), c, dtype=np.int64)
        return cls(mat, colors)

    # accessors -------------------------------------------------------------
    @property
    def matrix(self):
        """Read-only ``(size, size)`` uint8 color matrix; diagonal is NO_COLOR."""
        return self._mat

    @property
    def size(self):
        return self._mat.shape[0]

    @property
    def colors(self):
        return self._colors

    @property
    def color_count(self):
        return len(self._colors)

    def cidx(self, color):
        """Resolve a color given by index or by name."""
        if isinstance(color, (int, np.integer)):
            c = int(color)
            if not 0 <= c < self.color_count:
                raise ArgumentError(f"color index {c} out of range")
            return c
        try:
            return self._colors.index(str(color))
        except ValueError:
            raise ArgumentError(f"unknown color {color!r}; have {self._colors}") from None

    def color(self, i, j):
        if i == j:
            raise ArgumentError("no color on the diagonal")
        return int(self._mat[i, j])

    def upper(self):
        """Pair colors in row-major upper-triangle order."""
        return self._mat[np.triu_indices(self.size, 1)]

    def color_adjacency(self):
        """Stacked 0/1 int32 adjacency matrices, one per color (cached)."""
        if self._adj is None:
            adj = np.stack([(self._mat == c) for c in range(self.color_count)]).astype(np.int32)
            adj.setflags(write=False)
            self._adj = adj
        return self._adj

    def realized_colors(self):
        return sorted(set(int(x) for x in np.unique(self.upper())))

    def neighbors(self, c, a):
        return [int(x) for x in np.flatnonzero(self._mat[a] == c)]

    def pairs(self, c=None):
        """Unordered pairs (i < j), optionally restricted to one color."""
        iu = np.triu_indices(self.size, 1)
        vals = self._mat[iu]
        if c is None:
            return list(zip(iu[0].tolist(), iu[1].tolist()))
        keep = vals == c
        return list(zip(iu[0][keep].tolist(), iu[1][keep].tolist()))

    # derived structures ----------------------------------------------------
    def induced(self, vertices):
        """Substructure on ``vertices`` in the given (caller) order."""
        vs = [int(x) for x in vertices]
        if len(set(vs)) != len(vs):
            raise ArgumentError("induced(): vertices must be distinct")
        for x in vs:
            if not 0 <= x < self.size:
                raise ArgumentError(f"induced(): vertex {x} out of range")
        if not vs:
            return NGraph(np.zeros((0, 0), dtype=np.int64), self._colors)
        return NGraph(self._mat[np.ix_(vs, vs)], self._colors)

    def recolor(self, mapping, colors=None):
        """Apply a color map given as ``{old: new}`` (names or indices)."""
        target = self._colors if colors is None else tuple(colors)
        probe = NGraph(np.zeros((0, 0)), target)
        table = list(range(self.color_count))
        for old, new in mapping.items():
            table[self.cidx(old)] = probe.cidx(new)
        lut = np.array(table + [0] * (256 - len(table)), dtype=np.int64)
        mat = lut[self._mat]
        return NGraph(mat, target)

    def with_colors(self, colors):
        """Same matrix under new color names (same count)."""
        if len(colors) != self.color_count:
            raise SignatureError("color count mismatch")
        return NGraph(self._mat, colors)

    # value semantics -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, NGraph):
            return NotImplemented
        return self._colors == other._colors and np.array_equal(self._mat, other._mat)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._colors, self._mat.tobytes(), self.size))
        return self._hash

    def __repr__(self):
        return f"NGraph(size={self.size}, colors={list(self._colors)})"


def same_signature(g, h):
    if g.color_count != h.color_count:
        raise SignatureError(
            f"color_count mismatch: {g.color_count} vs {h.color_count}"
        )


@dataclass(frozen=True, eq=False)
class VertexMap:
    """An embedding: injective, color-preserving map of source into target."""

    source: NGraph
    target: NGraph
    images: tuple

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.source.size:
            raise ArgumentError("one image per source vertex required")
        if len(set(imgs)) != len(imgs):
            raise ArgumentError("vertex map is not injective")
        if any(not 0 <= x < self.target.size for x in imgs):
            raise ArgumentError("image out of range")
        if imgs:
            sub = self.target.matrix[np.ix_(imgs, imgs)]
            if not np.array_equal(sub, self.source.matrix):
                raise ArgumentError("vertex map does not preserve colors")

    def __call__(self, x):
        return self.images[x]

    def __eq__(self, other):
        if not isinstance(other, VertexMap):
            return NotImplemented
        return (
            self.images == other.images
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash(self.images)

    @property
    def is_bijection(self):
        return self.source.size == self.target.size

    def compose(self, inner: "VertexMap") -> "VertexMap":
        """``self ∘ inner``: apply ``inner`` first."""
        return VertexMap(inner.source, self.target, tuple(self.images[x] for x in inner.images))

    def inverse(self) -> "VertexMap":
        if not self.is_bijection:
            raise ArgumentError("only bijections have inverses")
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return VertexMap(self.target, self.source, tuple(inv))

    @classmethod
    def identity(cls, g):
        return cls(g, g, tuple(range(g.size)))


def restrict_map(images: Sequence[int], domain: Sequence[int]):
    return tuple(images[x] for x in domain)
