"""Pure-Python implementations of the search kernels.

Selected by :mod:`homog3.kernels` when the compiled extension is missing
or ``HOMOG3_PURE_PYTHON=1`` is set. Semantics must match ``_ckernels.pyx``
exactly; ``tests/test_kernels.py`` compares the two.
"""

from itertools import combinations

import numpy as np


def subset_codes(mat, k, ncolors):
    """Integer pattern code of every k-subset, in ``itertools.combinations`` order.

    The code of subset ``s_0 < ... < s_{k-1}`` is the base-``ncolors`` number
    whose digits are the colors of ``(s_i, s_j)``, ``i < j``, in row-major
    upper-triangle order, most significant first.
    """
    v = mat.shape[0]
    if k > v:
        return np.zeros(0, dtype=np.int64)
    if k <= 1:
        count = 1 if k == 0 else v
        return np.zeros(count, dtype=np.int64)
    flat = np.fromiter(
        (x for comb in combinations(range(v), k) for x in comb), dtype=np.int64
    )
    idx = flat.reshape(-1, k)
    codes = np.zeros(idx.shape[0], dtype=np.int64)
    for i in range(k - 1):
        for j in range(i + 1, k):
            codes *= ncolors
            codes += mat[idx[:, i], idx[:, j]]
    return codes


def triangle_counts(mat, ncolors):
    v = mat.shape[0]
    counts = np.zeros((ncolors, ncolors, ncolors), dtype=np.int64)
    if v < 3:
        return counts
    idx = np.fromiter(
        (x for comb in combinations(range(v), 3) for x in comb), dtype=np.int64
    ).reshape(-1, 3)
    cols = np.stack(
        [mat[idx[:, 0], idx[:, 1]], mat[idx[:, 0], idx[:, 2]], mat[idx[:, 1], idx[:, 2]]],
        axis=1,
    ).astype(np.int64)
    cols.sort(axis=1)
    keys = (cols[:, 0] * ncolors + cols[:, 1]) * ncolors + cols[:, 2]
    flat = np.bincount(keys, minlength=ncolors ** 3)
    return flat.reshape(ncolors, ncolors, ncolors).astype(np.int64)


def _rows(bits):
    """uint64 bit matrix -> nested list of Python-int neighbor sets."""
    ncolors, v, words = bits.shape
    out = []
    for c in range(ncolors):
        row = []
        for x in range(v):
            acc = 0
            for w in range(words - 1, -1, -1):
                acc = (acc << 64) | int(bits[c, x, w])
            row.append(acc)
        out.append(row)
    return out


def extension_exhaustive(bits, demand):
    """Scan every placement of disjoint per-color demand sets.

    Returns ``(tested, satisfied, first_failure)`` where ``first_failure``
    is the flattened slot list of the first unsatisfied placement in
    enumeration order, or an empty array.
    """
    ncolors, v, _ = bits.shape
    rows = _rows(bits)
    slot_colors = [c for c in range(ncolors) for _ in range(int(demand[c]))]
    total = len(slot_colors)
    full = (1 << v) - 1
    chosen = [0] * total
    used = [False] * v
    tested = 0
    satisfied = 0
    first = None

    def rec(slot, acc):
        nonlocal tested, satisfied, first
        if slot == total:
            tested += 1
            if acc:
                satisfied += 1
            elif first is None:
                first = list(chosen)
            return
        c = slot_colors[slot]
        start = chosen[slot - 1] + 1 if slot and slot_colors[slot - 1] == c else 0
        row = rows[c]
        for x in range(start, v):
            if used[x]:
                continue
            used[x] = True
            chosen[slot] = x
            rec(slot + 1, acc & row[x])
            used[x] = False

    rec(0, full)
    return tested, satisfied, np.array(first if first is not None else [], dtype=np.int64)


def extension_check(bits, placements, slot_colors):
    """Witness flag (1 = some vertex realizes the demand) per placement row."""
    ncolors, v, _ = bits.shape
    rows = _rows(bits)
    full = (1 << v) - 1
    out = np.zeros(placements.shape[0], dtype=np.uint8)
    for p in range(placements.shape[0]):
        acc = full
        for s in range(placements.shape[1]):
            acc &= rows[int(slot_colors[s])][int(placements[p, s])]
            if not acc:
                break
        out[p] = 1 if acc else 0
    return out
