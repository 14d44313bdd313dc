# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

cnp.import_array()


def subset_codes(const uint8_t[:, :] mat, int k, int ncolors):
    cdef Py_ssize_t v = mat.shape[0]
    cdef Py_ssize_t count, i, a, b, pos
    cdef int64_t code
    cdef int j
    if k > v:
        return np.zeros(0, dtype=np.int64)
    if k <= 1:
        return np.zeros(1 if k == 0 else v, dtype=np.int64)
    count = 1
    for i in range(k):
        count = count * (v - i) // (i + 1)
    out = np.empty(count, dtype=np.int64)
    cdef int64_t[:] res = out
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(k * sizeof(Py_ssize_t))
    for i in range(k):
        idx[i] = i
    pos = 0
    while True:
        code = 0
        for a in range(k - 1):
            for b in range(a + 1, k):
                code = code * ncolors + mat[idx[a], idx[b]]
        res[pos] = code
        pos += 1
        # advance combination in lexicographic order
        j = k - 1
        while j >= 0 and idx[j] == v - k + j:
            j -= 1
        if j < 0:
            break
        idx[j] += 1
        for a in range(j + 1, k):
            idx[a] = idx[a - 1] + 1
    free(idx)
    return out


def triangle_counts(const uint8_t[:, :] mat, int ncolors):
    cdef Py_ssize_t v = mat.shape[0]
    cdef Py_ssize_t x, y, z
    cdef int c1, c2, c3, a, b, c
    out = np.zeros((ncolors, ncolors, ncolors), dtype=np.int64)
    cdef int64_t[:, :, :] cnt = out
    for x in range(v):
        for y in range(x + 1, v):
            c1 = mat[x, y]
            for z in range(y + 1, v):
                c2 = mat[x, z]
                c3 = mat[y, z]
                # sort three values
                a = c1
                b = c2
                c = c3
                if a > b:
                    a, b = b, a
                if b > c:
                    b, c = c, b
                if a > b:
                    a, b = b, a
                cnt[a, b, c] += 1
    return out


cdef struct ExtState:
    int ncolors
    int v
    int words
    int total
    const uint64_t *bits
    int *slot_colors
    int *chosen
    uint8_t *used
    uint64_t *acc          # (total + 1) * words
    int64_t tested
    int64_t satisfied
    int have_first
    int *first


cdef void _rec(ExtState *st, int slot) noexcept nogil:
    cdef int c, start, x, w
    cdef const uint64_t *row
    cdef uint64_t *cur
    cdef uint64_t *nxt
    cdef uint64_t any_bit
    cur = st.acc + slot * st.words
    if slot == st.total:
        st.tested += 1
        any_bit = 0
        for w in range(st.words):
            any_bit |= cur[w]
        if any_bit:
            st.satisfied += 1
        elif not st.have_first:
            st.have_first = 1
            for w in range(st.total):
                st.first[w] = st.chosen[w]
        return
    c = st.slot_colors[slot]
    if slot > 0 and st.slot_colors[slot - 1] == c:
        start = st.chosen[slot - 1] + 1
    else:
        start = 0
    nxt = cur + st.words
    for x in range(start, st.v):
        if st.used[x]:
            continue
        st.used[x] = 1
        st.chosen[slot] = x
        row = st.bits + (<Py_ssize_t> c * st.v + x) * st.words
        for w in range(st.words):
            nxt[w] = cur[w] & row[w]
        _rec(st, slot + 1)
        st.used[x] = 0


def extension_exhaustive(const uint64_t[:, :, ::1] bits, demand):
    cdef ExtState st
    cdef int c, i, s, w
    st.ncolors = bits.shape[0]
    st.v = bits.shape[1]
    st.words = bits.shape[2]
    slots = [c for c in range(st.ncolors) for _ in range(int(demand[c]))]
    st.total = len(slots)
    st.bits = &bits[0, 0, 0]
    st.slot_colors = <int *> malloc((st.total + 1) * sizeof(int))
    st.chosen = <int *> malloc((st.total + 1) * sizeof(int))
    st.first = <int *> malloc((st.total + 1) * sizeof(int))
    st.used = <uint8_t *> malloc(st.v + 1)
    st.acc = <uint64_t *> malloc((st.total + 1) * st.words * sizeof(uint64_t))
    memset(st.used, 0, st.v + 1)
    for i in range(st.total):
        st.slot_colors[i] = slots[i]
    for w in range(st.words):
        st.acc[w] = <uint64_t> 0xFFFFFFFFFFFFFFFF
    if st.v % 64:
        st.acc[st.words - 1] = (<uint64_t> 1 << (st.v % 64)) - 1
    st.tested = 0
    st.satisfied = 0
    st.have_first = 0
    with nogil:
        _rec(&st, 0)
    first = [st.first[i] for i in range(st.total)] if st.have_first else []
    free(st.slot_colors)
    free(st.chosen)
    free(st.first)
    free(st.used)
    free(st.acc)
    return int(st.tested), int(st.satisfied), np.array(first, dtype=np.int64)


def extension_check(const uint64_t[:, :, ::1] bits, const int64_t[:, :] placements,
                    const int64_t[:] slot_colors):
    cdef Py_ssize_t v = bits.shape[1]
    cdef Py_ssize_t words = bits.shape[2]
    cdef Py_ssize_t P = placements.shape[0]
    cdef Py_ssize_t K = placements.shape[1]
    cdef Py_ssize_t p, s, w
    cdef uint64_t word, any_bit
    out = np.zeros(P, dtype=np.uint8)
    cdef uint8_t[:] res = out
    for p in range(P):
        any_bit = 0
        for w in range(words):
            if w == words - 1 and v % 64:
                word = ((<uint64_t> 1) << (v % 64)) - 1
            else:
                word = <uint64_t> 0xFFFFFFFFFFFFFFFF
            for s in range(K):
                word &= bits[slot_colors[s], placements[p, s], w]
            any_bit |= word
        res[p] = 1 if any_bit else 0
    return out
