"""Named resource limits.

Every limit may be overridden through an environment variable
``HOMOG3_BUDGET_<NAME>`` (upper case), e.g. ``HOMOG3_BUDGET_AUT_SIZE=14``.
Explicit keyword arguments passed to an operation win over both.
"""

import os
from contextlib import contextmanager

DEFAULTS = {
    "aut_size": 12,           # max vertices for automorphisms()
    "aut_count": 1_000_000,   # max automorphisms listed
    "homogeneity_size": 64,   # max vertices for check_homogeneity
    "age_subsets": 5_000_000, # max subsets scanned by enumerate_age
    "clique_region": 256,     # max region size for exact clique search
    "half_graph_order": 6,    # max order m for half-graph search
    "ap_max_size": 6,         # max |B|,|C| for check_ap / check_jep
    "amalgam_pairs": 36,      # max new pairs colored by solve()
    "extension_samples": 200_000,  # placements before switching to sampling
    "forbidden_size": 4,      # max vertices of a forbidden configuration
    "ramsey_t": 5,
}


_ACTIVE = {}


def get(name, override=None):
    """Return the effective value of budget ``name``."""
    if override is not None:
        value = int(override)
    elif name in _ACTIVE:
        value = _ACTIVE[name]
    else:
        env = os.environ.get("HOMOG3_BUDGET_" + name.upper())
        value = int(env) if env is not None else DEFAULTS[name]
    if value <= 0:
        raise ValueError(f"budget {name} must be positive, got {value}")
    return value


def effective():
    """All budgets after environment overrides, sorted by name."""
    return {name: get(name) for name in sorted(DEFAULTS)}


@contextmanager
def overriding(values):
    """Temporarily apply ``{name: value}`` limits (between explicit args and env)."""
    for name, value in values.items():
        if name not in DEFAULTS:
            raise KeyError(name)
        if int(value) <= 0:
            raise ValueError(f"budget {name} must be positive, got {value}")
    saved = dict(_ACTIVE)
    _ACTIVE.update({k: int(v) for k, v in values.items()})
    try:
        yield
    finally:
        _ACTIVE.clear()
        _ACTIVE.update(saved)
