"""Executable no-randomness guarantee.

Nothing in the package draws random numbers.  Inside :func:`seed_free` the
common entry points of ``random`` and ``numpy.random`` raise instead of
returning, so any future use fails loudly.
"""

from __future__ import annotations

import contextlib
import random

import numpy as np


class RandomnessRequested(RuntimeError):
    pass


_PY_NAMES = ("random", "randint", "randrange", "choice", "choices", "shuffle", "sample",
             "uniform", "gauss", "getrandbits", "seed")
_NP_NAMES = ("default_rng", "seed", "rand", "randn", "randint", "random", "choice",
             "permutation", "shuffle", "RandomState")


def _trap(name):
    def refuse(*args, **kwargs):
        raise RandomnessRequested(f"randomness requested ({name}) in a seed-free run")
    return refuse


@contextlib.contextmanager
def seed_free():
    saved = []
    for mod, names, label in ((random, _PY_NAMES, "random"), (np.random, _NP_NAMES, "numpy.random")):
        for name in names:
            if hasattr(mod, name):
                saved.append((mod, name, getattr(mod, name)))
                setattr(mod, name, _trap(f"{label}.{name}"))
    try:
        yield
    finally:
        for mod, name, value in saved:
            setattr(mod, name, value)
