"""NGraph serialization: the JSON interchange format and DOT export.

JSON layout (key order fixed)::

    {"colors": ["R","S","T"], "size": 4, "matrix": "012210"}

``matrix`` holds one base-36 digit per pair (i, j), i < j, row by row; pair
(i, j) sits at offset ``i*size - i*(i+1)//2 + (j-i-1)``.
"""

import json

import numpy as np

from ..errors import ArgumentError
from .ngraph import NGraph

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUE = {ch: i for i, ch in enumerate(DIGITS)}


def pair_offset(i, j, size):
    if i > j:
        i, j = j, i
    return i * size - i * (i + 1) // 2 + (j - i - 1)


def to_obj(g):
    return {
        "colors": list(g.colors),
        "size": g.size,
        "matrix": "".join(DIGITS[c] for c in g.upper().tolist()),
    }


def from_obj(obj):
    try:
        colors = [str(c) for c in obj["colors"]]
        size = int(obj["size"])
        text = str(obj["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError(f"malformed NGraph object: {exc}") from None
    if len(text) != size * (size - 1) // 2:
        raise ArgumentError("matrix length does not match size")
    try:
        vals = [_DIGIT_VALUE[ch] for ch in text.lower()]
    except KeyError as exc:
        raise ArgumentError(f"bad matrix digit {exc}") from None
    return NGraph.from_upper(size, np.array(vals, dtype=np.int64), colors)


def dumps(g):
    return json.dumps(to_obj(g), separators=(",", ":")) + "\n"


def loads(text):
    return from_obj(json.loads(text))


def save(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(g))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def to_dot(g, name="G"):
    lines = [f"graph {name} {{"]
    for x in range(g.size):
        lines.append(f"  {x};")
    for i, j in g.pairs():
        c = g.colors[g.color(i, j)]
        lines.append(f'  {i} -- {j} [color="{c}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
