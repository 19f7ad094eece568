"""Enumerate every class multiset for (p, n) up to a dimension bound."""

from __future__ import annotations

import logging
from math import gcd

from .numtheory import is_prime, mul_order, units
from .repdecomp import KernelActionSpec, PrimeComponentSpec, canonical_class, unit_classes

log = logging.getLogger(__name__)


def _vectors(t: int, total: int):
    """Length-``t`` nonnegative vectors summing to ``total``, lexicographically descending."""
    if t == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _vectors(t - 1, total - first):
            yield (first,) + rest


def _scaling_key(p: int, n: int, mult: dict[int, int]) -> tuple:
    """Smallest relabelling of the multiset under r -> lam * r over all units lam."""
    return min(
        tuple(sorted((canonical_class(r * lam, p, n).rep, e) for r, e in mult.items()))
        for lam in units(n)
    )


def sweep_specs(p: int, ns, max_d: int):
    """Yield one KernelActionSpec per class multiset with d <= max_d, skipping
    multisets that a global unit scaling maps onto one already emitted."""
    if not is_prime(p):
        log.warning("p=%d is not prime; nothing to sweep", p)
        return
    for n in ns:
        if n < 2:
            log.warning("skipping n=%d: complement must be nontrivial", n)
            continue
        if gcd(p, n) != 1:
            log.warning("skipping n=%d: p=%d divides n", n, p)
            continue
        f = mul_order(p, n)
        reps = [c.rep for c in unit_classes(p, n)]
        seen = set()
        for total in range(1, max_d // f + 1):
            for vec in _vectors(len(reps), total):
                mult = {r: e for r, e in zip(reps, vec) if e}
                key = _scaling_key(p, n, mult)
                if key in seen:
                    continue
                seen.add(key)
                yield KernelActionSpec(n, (PrimeComponentSpec(p, tuple(mult.items())),))
