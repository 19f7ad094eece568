"""Prime-field polynomials, extension fields F_{p^f}, and the explicit matrix
realization of a cyclic complement acting on the kernel.

Polynomials are coefficient tuples, lowest degree first, trailing zeros
stripped.  Matrices act on column vectors and are numpy int64 arrays with
entries in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

import numpy as np

from .numtheory import is_prime, mul_order, prime_divisors


class FieldMismatchError(TypeError):
    pass


def _strip(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PolyFp:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(c % self.p for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _same(self, other: PolyFp):
        if self.p != other.p:
            raise FieldMismatchError(f"F_{self.p}[x] vs F_{other.p}[x]")

    def __add__(self, other: PolyFp) -> PolyFp:
        self._same(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return PolyFp(self.p, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> PolyFp:
        return PolyFp(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: PolyFp) -> PolyFp:
        return self + (-other)

    def __mul__(self, other: PolyFp) -> PolyFp:
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyFp(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyFp(self.p, out)

    def __divmod__(self, other: PolyFp) -> tuple[PolyFp, PolyFp]:
        self._same(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv_lead % p
            if c:
                quot[i - db] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - db + j] = (rem[i - db + j] - c * y) % p
        return PolyFp(p, quot), PolyFp(p, rem[:db])

    def __mod__(self, other: PolyFp) -> PolyFp:
        return divmod(self, other)[1]

    def __floordiv__(self, other: PolyFp) -> PolyFp:
        return divmod(self, other)[0]

    def powmod(self, k: int, modulus: PolyFp) -> PolyFp:
        result = PolyFp(self.p, (1,)) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = result * base % modulus
            base = base * base % modulus
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(a: PolyFp, b: PolyFp) -> PolyFp:
    while b.coeffs:
        a, b = b, a % b
    if not a.coeffs:
        return a
    inv = pow(a.coeffs[-1], -1, a.p)
    return PolyFp(a.p, [c * inv for c in a.coeffs])


def is_irreducible(g: PolyFp) -> bool:
    """Ben-Or test: g of degree f is irreducible iff gcd(x^{p^i} - x, g) = 1
    for every i <= f/2."""
    f = g.degree
    if f < 1:
        return False
    if f == 1:
        return True
    p = g.p
    x = PolyFp(p, (0, 1))
    xp = x
    for _ in range(f // 2):
        xp = xp.powmod(p, g)
        if poly_gcd(xp - x, g).degree > 0:
            return False
    return True


def find_irreducible(p: int, f: int) -> PolyFp:
    """Smallest monic irreducible of degree ``f`` over F_p.

    Candidates are ordered by their low coefficients (c_0, c_1, ...,
    c_{f-1}) compared lexicographically, c_0 first.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError("degree must be >= 1")
    for low in product(range(p), repeat=f):
        g = PolyFp(p, low + (1,))
        if is_irreducible(g):
            return g
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class GF:
    """The field F_p[x]/(g) with g = find_irreducible(p, f).

    Build through :func:`get_field` so descriptors are shared; elements of
    distinct descriptors never mix.
    """

    def __init__(self, p: int, f: int):
        self.p = p
        self.f = f
        self.order = p**f
        self.modulus = find_irreducible(p, f)
        self._mod_low = tuple(-c % p for c in self.modulus.coeffs[:-1])

    def __repr__(self):
        return f"GF({self.p}^{self.f})"

    def __call__(self, coords) -> FFElem:
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(c % self.p for c in coords)
        if len(coords) > self.f:
            raise ValueError(f"too many coordinates for {self!r}")
        return FFElem(self, coords + (0,) * (self.f - len(coords)))

    @property
    def zero(self) -> FFElem:
        return self(0)

    @property
    def one(self) -> FFElem:
        return self(1)

    @property
    def gen(self) -> FFElem:
        """The class of x."""
        return self((0, 1)) if self.f > 1 else self(-self.modulus.coeffs[0])

    def elements(self):
        """All elements, coordinate tuples in lexicographic order."""
        for coords in product(range(self.p), repeat=self.f):
            yield FFElem(self, coords)

    def _mul(self, a, b):
        p, f = self.p, self.f
        prodc = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prodc[i + j] += x * y
        # x^f = sum(mod_low[i] x^i)
        for k in range(2 * f - 2, f - 1, -1):
            c = prodc[k] % p
            if c:
                for i, m in enumerate(self._mod_low):
                    prodc[k - f + i] += c * m
        return tuple(c % p for c in prodc[:f])


@lru_cache(maxsize=None)
def get_field(p: int, f: int) -> GF:
    return GF(p, f)


@dataclass(frozen=True, eq=False)
class FFElem:
    field: GF
    coords: tuple[int, ...]

    def _check(self, other):
        if not isinstance(other, FFElem):
            return self.field(other)
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __eq__(self, other):
        return isinstance(other, FFElem) and other.field is self.field and other.coords == self.coords

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.coords))

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElem(self.field, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple(-a % p for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return FFElem(self.field, self.field._mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def inverse(self) -> FFElem:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.order - 2)

    def frobenius(self) -> FFElem:
        return self ** self.field.p

    def mul_order(self) -> int:
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        m = self.field.order - 1
        for q in prime_divisors(m):
            while m % q == 0 and (self ** (m // q)) == self.field.one:
                m //= q
        return m

    def prime_value(self) -> int:
        """The element as an integer, if it lies in the prime field."""
        if any(self.coords[1:]):
            raise ValueError(f"{self} is not in the prime field")
        return self.coords[0]

    def __repr__(self):
        return f"{self.field!r}{list(self.coords)}"


def primitive_nth_root(p: int, f: int, n: int) -> FFElem:
    """First element of F_{p^f} (coordinate-lex scan) of multiplicative order
    exactly ``n``, found as x^((p^f - 1)/n)."""
    F = get_field(p, f)
    q1 = F.order - 1
    if n < 1 or q1 % n:
        raise ValueError(f"no such root: {n} does not divide {p}^{f} - 1")
    for x in F.elements():
        if x.is_zero():
            continue
        y = x ** (q1 // n)
        if y.mul_order() == n:
            return y
    raise AssertionError("multiplicative group is cyclic; a root must exist")


def conjugates(a: FFElem) -> list[FFElem]:
    out = [a]
    b = a.frobenius()
    while b != a:
        out.append(b)
        b = b.frobenius()
    return out


def min_poly(a: FFElem) -> PolyFp:
    """prod (x - c) over the distinct Frobenius conjugates c of ``a``."""
    F = a.field
    coeffs = [F.one]  # lowest first, over F
    for c in conjugates(a):
        shifted = [F.zero] + coeffs
        for i in range(len(coeffs)):
            shifted[i] = shifted[i] - c * coeffs[i]
        coeffs = shifted
    return PolyFp(F.p, [c.prime_value() for c in coeffs])


def companion_matrix(g: PolyFp) -> np.ndarray:
    """Ones on the subdiagonal, -g_0 .. -g_{f-1} down the last column."""
    if not g.is_monic() or g.degree < 1:
        raise ValueError(f"companion matrix needs a monic polynomial of degree >= 1, got {g}")
    f = g.degree
    c = np.zeros((f, f), dtype=np.int64)
    for i in range(1, f):
        c[i, i - 1] = 1
    for i in range(f):
        c[i, f - 1] = -g.coeffs[i] % g.p
    return c


def mat_mul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def mat_pow_mod(a: np.ndarray, k: int, p: int) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a % p
    while k:
        if k & 1:
            result = mat_mul_mod(result, base, p)
        base = mat_mul_mod(base, base, p)
        k >>= 1
    return result


def block_diag(blocks) -> np.ndarray:
    d = sum(b.shape[0] for b in blocks)
    out = np.zeros((d, d), dtype=np.int64)
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i:i + k, i:i + k] = b
        i += k
    return out


def matrix_order(a: np.ndarray, p: int, bound: int) -> int:
    """Multiplicative order of ``a`` given that it divides ``bound``."""
    eye = np.eye(a.shape[0], dtype=np.int64)
    if not np.array_equal(mat_pow_mod(a, bound, p), eye):
        raise ValueError(f"matrix order does not divide {bound}")
    m = bound
    for q in prime_divisors(bound):
        while m % q == 0 and np.array_equal(mat_pow_mod(a, m // q, p), eye):
            m //= q
    return m


@dataclass(frozen=True, eq=False)
class HMatrix:
    """A generator of the complement as an invertible d x d matrix over F_p."""

    p: int
    n: int
    entries: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        ent = np.array(self.entries, dtype=np.int64) % self.p
        ent.setflags(write=False)
        object.__setattr__(self, "entries", ent)
        if ent.ndim != 2 or ent.shape[0] != ent.shape[1]:
            raise ValueError("HMatrix must be square")
        order = matrix_order(ent, self.p, self.n)
        if order != self.n:
            raise ValueError(f"matrix has order {order}, expected {self.n}")

    @property
    def d(self) -> int:
        return self.entries.shape[0]

    def power(self, k: int) -> np.ndarray:
        return mat_pow_mod(self.entries, k % self.n, self.p)


def build_h_matrix(p: int, n: int, classes) -> HMatrix:
    """Block-diagonal generator: for each (r, e), ``e`` companion blocks of the
    minimal polynomial of omega^r, omega a fixed primitive n-th root of unity
    in F_{p^f} with f = ord_n(p)."""
    if n < 2:
        raise ValueError("complement order must be at least 2")
    f = mul_order(p, n)
    omega = primitive_nth_root(p, f, n)
    blocks = []
    for r, e in classes:
        block = companion_matrix(min_poly(omega ** (r % n)))
        blocks.extend([block] * e)
    if not blocks:
        raise ValueError("no constituents")
    return HMatrix(p, n, block_diag(blocks))
