"""Kernel selection.

The compiled extension ``homog3._ckernels`` is used when importable;
otherwise, or when ``HOMOG3_PURE_PYTHON`` is set to a non-empty value other
than ``0``, the pure-Python module is used. ``IMPLEMENTATION`` names the
active backend.
"""

import os

import numpy as np

from . import _pykernels

_force_py = os.environ.get("HOMOG3_PURE_PYTHON", "") not in ("", "0")

if _force_py:
    _impl = _pykernels
    IMPLEMENTATION = "python"
else:
    try:
        from . import _ckernels as _impl
        IMPLEMENTATION = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        IMPLEMENTATION = "python"

subset_codes = _impl.subset_codes
triangle_counts = _impl.triangle_counts
extension_exhaustive = _impl.extension_exhaustive
extension_check = _impl.extension_check


def color_bits(mat, ncolors):
    """Pack per-color neighbor sets into a ``(ncolors, v, words)`` uint64 array."""
    v = mat.shape[0]
    words = max(1, (v + 63) // 64)
    out = np.zeros((ncolors, v, words), dtype=np.uint64)
    if v == 0:
        return out
    for c in range(ncolors):
        mask = mat == c
        padded = np.zeros((v, words * 64), dtype=np.uint8)
        padded[:, :v] = mask
        # little-endian bit order within each 64-bit word
        packed = np.packbits(padded.reshape(v, words, 64)[:, :, ::-1], axis=2)
        out[c] = packed.view(">u8").reshape(v, words).astype(np.uint64)
    return out
