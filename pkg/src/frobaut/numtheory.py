"""Exact integer and modular arithmetic.

Everything here is a pure function of Python ints, so group orders never
overflow.  Inputs are desk scale (moduli up to about 10**6).
"""

from __future__ import annotations

from functools import reduce
from math import gcd, prod


class NotAUnitError(ValueError):
    pass


class NotASubgroupError(ValueError):
    pass


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ``[(prime, exponent), ...]``, primes ascending.

    Trial division with a 2-3-5 wheel.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    for q in (2, 3, 5):
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out.append((q, e))
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    q, i = 7, 0
    while q * q <= n:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out.append((q, e))
        q += steps[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def prime_divisors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n):
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for q, _ in factorize(n):
        result = result // q * (q - 1)
    return result


def _check_unit(a: int, n: int) -> int:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(a, n) != 1:
        raise NotAUnitError(f"{a} is not a unit mod {n}")
    return a % n


def mul_order(a: int, n: int) -> int:
    """Least ``m >= 1`` with ``a**m == 1 (mod n)``.

    Works down from ``phi(n)`` by stripping prime factors, so the cost is
    logarithmic in the order rather than linear.
    """
    a = _check_unit(a, n)
    if n == 1:
        return 1
    m = euler_phi(n)
    for q, _ in factorize(m):
        while m % q == 0 and pow(a, m // q, n) == 1:
            m //= q
    return m


def units(n: int) -> list[int]:
    """The unit group (Z/n)^* as a strictly increasing list."""
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def cyclic_subgroup(a: int, n: int) -> list[int]:
    a = _check_unit(a, n)
    out = [1 % n]
    x = a
    while x != 1 % n:
        out.append(x)
        x = x * a % n
    return sorted(out)


def gl_order(e: int, p: int, f: int = 1) -> int:
    """|GL(e, p**f)| computed exactly."""
    if e < 1 or f < 1:
        raise ValueError("gl_order needs e >= 1 and f >= 1")
    q = p**f
    qe = q**e
    return prod(qe - q**i for i in range(e))


def is_subgroup(elements, n: int) -> bool:
    s = set(elements)
    if not s or (1 % n) not in s:
        return False
    return all(a * b % n in s for a in s for b in s)


def _order_counts(elements, n: int, m: int) -> int:
    one = 1 % n
    return sum(1 for a in elements if pow(a, m, n) == one)


def _chains(order: int, bound: int | None = None):
    """Invariant-factor chains d_1 | d_2 | ... | d_k, all > 1, product ``order``.

    Built from the largest factor downward; ``bound`` is the factor the next
    one must divide.
    """
    if order == 1:
        yield []
        return
    for d in divisors(order):
        if d == 1 or (bound is not None and bound % d):
            continue
        rest = order // d
        for tail in _chains(rest, d):
            yield tail + [d]


def abelian_invariants(elements, n: int) -> list[int]:
    """Invariant factors of a subgroup of (Z/n)^*.

    A finite abelian group is fixed up to isomorphism by how many elements
    satisfy x^m = 1 for each m; for C_{d_1} x ... x C_{d_k} that count is
    prod(gcd(m, d_i)).  Candidate chains are matched against those counts.
    """
    elements = sorted(set(a % n for a in elements))
    if any(gcd(a, n) != 1 for a in elements) or not is_subgroup(elements, n):
        raise NotASubgroupError(f"{elements} is not a subgroup of the units mod {n}")
    order = len(elements)
    divs = divisors(order)
    target = {m: _order_counts(elements, n, m) for m in divs}
    for chain in _chains(order):
        if all(prod(gcd(m, d) for d in chain) == target[m] for m in divs):
            return chain
    raise AssertionError("no invariant-factor chain matched")  # unreachable for abelian input


def exponent(elements, n: int) -> int:
    return reduce(lambda x, y: x * y // gcd(x, y), (mul_order(a, n) for a in elements), 1)

