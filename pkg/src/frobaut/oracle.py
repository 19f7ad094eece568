"""Brute-force counts used to check the closed formulas.

Nothing here looks at cyclotomic classes: the normalizer counts see only
(p, n, matrix entries) and the automorphism count sees only the explicit
multiplication of V:C_n.  Work bounds are hard limits; exceeding one raises
:class:`OracleLimitError`, nothing is ever sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .ffield import HMatrix, build_h_matrix

DEFAULT_MATRIX_LIMIT = 2**26
DEFAULT_GROUP_LIMIT = 10**4
DEFAULT_AUT_LIMIT = 2**32
_CHUNK = 1 << 15


class OracleLimitError(RuntimeError):
    pass


# -- linear algebra mod p ---------------------------------------------------

def invertible_mask(mats: np.ndarray, p: int) -> np.ndarray:
    """Row-reduce a batch (B, d, d) over F_p; True where full rank."""
    a = np.array(mats, dtype=np.int64) % p
    batch, d, _ = a.shape
    inv = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    rows = np.arange(batch)
    for col in range(d):
        nz = a[:, col:, col] != 0
        has = nz.any(axis=1)
        alive &= has
        piv = col + np.argmax(nz, axis=1)
        # swap pivot row into place
        top = a[rows, col].copy()
        a[rows, col] = a[rows, piv]
        a[rows, piv] = top
        scale = inv[a[:, col, col]]
        a[:, col] = a[:, col] * scale[:, None] % p
        factors = a[:, col + 1:, col].copy()
        a[:, col + 1:] = (a[:, col + 1:] - factors[:, :, None] * a[:, col][:, None, :]) % p
    return alive


def nullspace_mod_p(m: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : m x = 0} over F_p."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[j, fc] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = -a[i, fc] % p
    return basis


def _as_matrix(h) -> tuple[int, int, np.ndarray]:
    if isinstance(h, HMatrix):
        return h.p, h.n, np.array(h.entries, dtype=np.int64)
    p, n, entries = h
    return p, n, np.array(entries, dtype=np.int64) % p


def _powers(h: np.ndarray, n: int, p: int) -> np.ndarray:
    out = [np.eye(h.shape[0], dtype=np.int64)]
    for _ in range(n - 1):
        out.append(out[-1] @ h % p)
    return np.stack(out)


def frobenius_check_matrix(h) -> bool:
    """True iff h^k - I is invertible for every 0 < k < n."""
    p, n, ent = _as_matrix(h)
    pw = _powers(ent, n, p)[1:]
    if pw.size == 0:
        return True
    return bool(invertible_mask(pw - np.eye(ent.shape[0], dtype=np.int64), p).all())


# -- normalizer and centralizer counts ---------------------------------------

def _counts_enumerate(p, n, h, limit, powers_wanted):
    d = h.shape[0]
    total = p ** (d * d)
    if total > limit:
        raise OracleLimitError(f"instance too large for oracle: {p}^{d * d} matrices exceed limit {limit}")
    pw = _powers(h, n, p)
    place = p ** np.arange(d * d - 1, -1, -1, dtype=np.int64)  # row-major, entry (0,0) most significant
    counts = dict.fromkeys(powers_wanted, 0)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        mats = ((idx[:, None] // place) % p).reshape(-1, d, d)
        ah = mats @ h % p
        for k in powers_wanted:
            hit = np.all((pw[k] @ mats % p) == ah, axis=(1, 2))
            if hit.any():
                counts[k] += int(invertible_mask(mats[hit], p).sum())
    return counts


def _counts_intertwiner(p, n, h, limit, powers_wanted):
    """For each k solve A h = h^k A linearly, then enumerate the solution
    space and count its invertible members."""
    d = h.shape[0]
    pw = _powers(h, n, p)
    bases = {}
    work = 0
    for k in powers_wanted:
        coeff = np.zeros((d * d, d * d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                row = i * d + j
                for l in range(d):
                    coeff[row, i * d + l] += h[l, j]
                    coeff[row, l * d + j] -= pw[k][i, l]
        basis = nullspace_mod_p(coeff, p)
        work += p ** basis.shape[0]
        if work > limit:
            raise OracleLimitError(f"instance too large for oracle: intertwiner spaces exceed limit {limit}")
        bases[k] = basis
    counts = {}
    for k, basis in bases.items():
        r = basis.shape[0]
        total = p**r
        place = p ** np.arange(r - 1, -1, -1, dtype=np.int64)
        c = 0
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            coefs = (idx[:, None] // place) % p
            mats = (coefs @ basis % p).reshape(-1, d, d)
            c += int(invertible_mask(mats, p).sum())
        counts[k] = c
    return counts


def _counts(h, limit, method, powers_wanted):
    p, n, ent = _as_matrix(h)
    d = ent.shape[0]
    if method == "auto":
        method = "enumerate" if p ** (d * d) <= limit else "intertwiner"
    if method == "enumerate":
        return _counts_enumerate(p, n, ent, limit, powers_wanted)
    if method == "intertwiner":
        return _counts_intertwiner(p, n, ent, limit, powers_wanted)
    raise ValueError(f"unknown method {method!r}")


def normalizer_counts_by_power(h, limit=DEFAULT_MATRIX_LIMIT, method="auto") -> dict[int, int]:
    """k -> number of invertible A with A h A^-1 = h^k."""
    _, n, _ = _as_matrix(h)
    return _counts(h, limit, method, range(n))


def count_normalizer_bruteforce(h, limit=DEFAULT_MATRIX_LIMIT, method="auto") -> int:
    """|N(<h>)| in GL(d, p), or in the product of GL(d_i, p_i) when ``h`` is a
    sequence of matrices (one per prime, same n).

    ``method="enumerate"`` walks all p^(d^2) matrices; ``"intertwiner"``
    walks the solution space of A h = h^k A for each k; ``"auto"`` enumerates
    when that fits the limit.
    """
    if isinstance(h, (list, tuple)) and h and isinstance(h[0], HMatrix):
        per = [normalizer_counts_by_power(x, limit, method) for x in h]
        ns = {x.n for x in h}
        if len(ns) != 1:
            raise ValueError("all components must share n")
        return sum(prod(c[k] for c in per) for k in range(ns.pop()))
    return sum(normalizer_counts_by_power(h, limit, method).values())


def count_centralizer_bruteforce(h, limit=DEFAULT_MATRIX_LIMIT, method="auto") -> int:
    if isinstance(h, (list, tuple)) and h and isinstance(h[0], HMatrix):
        return prod(count_centralizer_bruteforce(x, limit, method) for x in h)
    return _counts(h, limit, method, [1])[1]


# -- explicit groups ---------------------------------------------------------

def _spec_matrices(spec) -> list[HMatrix]:
    return [build_h_matrix(c.p, spec.n, c.constituents) for c in sorted(spec.components, key=lambda c: c.p)]


@dataclass(eq=False)
class ExplicitGroup:
    """V:C_n with elements (v, k) encoded as ``vindex * n + k``.

    ``vindex`` is the mixed-radix encoding of the kernel coordinates,
    first coordinate most significant.
    """

    n: int
    primes: tuple[int, ...]
    dims: tuple[int, ...]
    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        self.mods = np.array([p for p, d in zip(self.primes, self.dims) for _ in range(d)], dtype=np.int64)
        self.nv = int(prod(int(m) for m in self.mods))
        self.order = self.nv * self.n
        dim = len(self.mods)
        place = np.ones(dim, dtype=np.int64)
        for i in range(dim - 2, -1, -1):
            place[i] = place[i + 1] * self.mods[i + 1]
        self.place = place
        idx = np.arange(self.nv, dtype=np.int64)
        self.vecs = (idx[:, None] // place) % self.mods  # (nv, dim)
        self.act = np.empty((self.n, self.nv), dtype=np.int64)
        powers = [np.eye(d, dtype=np.int64) for d in self.dims]
        for k in range(self.n):
            parts, off = [], 0
            for i, (p, d) in enumerate(zip(self.primes, self.dims)):
                parts.append(self.vecs[:, off:off + d] @ powers[i].T % p)
                powers[i] = self.matrices[i] @ powers[i] % p
                off += d
            self.act[k] = self.encode(np.concatenate(parts, axis=1))
        self._right = {}

    def encode(self, vecs: np.ndarray) -> np.ndarray:
        return (vecs % self.mods) @ self.place

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise a[i] * b[i]: (va + h^ka vb, ka + kb)."""
        va, ka = np.divmod(a, self.n)
        vb, kb = np.divmod(b, self.n)
        v = self.encode(self.vecs[va] + self.vecs[self.act[ka, vb]])
        return v * self.n + (ka + kb) % self.n

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_arrays(np.array([a]), np.array([b]))[0])

    def right_mul(self, c: int) -> np.ndarray:
        """Permutation a -> a * c over all elements."""
        perm = self._right.get(c)
        if perm is None:
            everything = np.arange(self.order)
            perm = self.mul_arrays(everything, np.full(self.order, c))
            self._right[c] = perm
        return perm

    def table(self) -> np.ndarray:
        """Cayley table T[a, b] = a * b."""
        return np.stack([self.right_mul(c) for c in range(self.order)], axis=1)

    def element_orders(self) -> np.ndarray:
        base = np.arange(self.order)
        power = base.copy()
        out = np.zeros(self.order, dtype=np.int64)
        m = 1
        while True:
            newly = (power == 0) & (out == 0)
            out[newly] = m
            if (out > 0).all():
                return out
            power = self.mul_arrays(power, base)
            m += 1

    def is_abelian(self) -> bool:
        t = self.table()
        return bool(np.array_equal(t, t.T))

    def check_associativity(self, triples: int = 10**5) -> bool:
        """Exhaustive up to 200 elements, else a fixed deterministic stride of triples."""
        if self.order <= 200:
            t = self.table()
            lhs = t[t[:, :, None], np.arange(self.order)[None, None, :]]
            rhs = t[np.arange(self.order)[:, None, None], t[None, :, :]]
            return bool(np.array_equal(lhs, rhs))
        g = self.order
        i = np.arange(triples, dtype=np.int64)
        a, b, c = i * 7919 % g, (i * 104729 + 17) % g, (i * i + 3 * i + 1) % g
        lhs = self.mul_arrays(self.mul_arrays(a, b), c)
        rhs = self.mul_arrays(a, self.mul_arrays(b, c))
        return bool(np.array_equal(lhs, rhs))


def build_group(spec, limit=DEFAULT_GROUP_LIMIT) -> ExplicitGroup:
    hs = _spec_matrices(spec)
    size = prod(h.p ** h.d for h in hs) * spec.n
    if size > limit:
        raise OracleLimitError(f"instance too large for oracle: |G| = {size} exceeds {limit}")
    g = ExplicitGroup(spec.n, tuple(h.p for h in hs), tuple(h.d for h in hs),
                      tuple(np.array(h.entries) for h in hs))
    # Frobenius property directly on vectors: h^k fixes only 0 for 0 < k < n
    nonzero = np.arange(1, g.nv)
    for k in range(1, spec.n):
        if np.any(g.act[k, nonzero] == nonzero):
            raise AssertionError(f"explicit group is not Frobenius: h^{k} fixes a nonzero vector")
    return g


# -- generating sets and automorphisms -------------------------------------------

def closure(G: ExplicitGroup, gens) -> np.ndarray:
    """Elements reachable from the identity by right multiplication."""
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    perms = [G.right_mul(g) for g in gens]
    while frontier.size:
        nxt = np.unique(np.concatenate([perm[frontier] for perm in perms])) if perms else np.array([], int)
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return seen


def find_generating_set(G: ExplicitGroup) -> list[int]:
    gens = [1 % G.order]  # (0, 1): the complement generator
    seen = closure(G, gens)
    while not seen.all():
        # smallest kernel vector (v, 0) outside the closure
        kernel_missing = np.nonzero(~seen[np.arange(G.nv) * G.n])[0]
        gens.append(int(kernel_missing[0]) * G.n)
        seen = closure(G, gens)
    return gens


def _word_tree(G: ExplicitGroup, gens):
    """BFS layers from the identity: (elements, parents, generator index) per layer."""
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    layers = []
    perms = [G.right_mul(g) for g in gens]
    while frontier.size:
        elems, parents, which = [], [], []
        for j, perm in enumerate(perms):
            img = perm[frontier]
            fresh = ~seen[img]
            # keep first (shortest-lex) occurrence
            img, par = img[fresh], frontier[fresh]
            img, first = np.unique(img, return_index=True)
            par = par[first]
            keep = ~seen[img]
            seen[img[keep]] = True
            elems.append(img[keep])
            parents.append(par[keep])
            which.append(np.full(keep.sum(), j))
        layer = (np.concatenate(elems), np.concatenate(parents), np.concatenate(which))
        if layer[0].size == 0:
            break
        layers.append(layer)
        frontier = layer[0]
    if not seen.all():
        raise ValueError("gens do not generate the group")
    return layers


def count_automorphisms_bruteforce(G: ExplicitGroup, gens, limit=DEFAULT_AUT_LIMIT) -> int:
    """Count assignments of generator images that extend to bijective endomorphisms.

    Each element gets a fixed word (parent * generator) from a breadth-first
    tree; a candidate map is extended along those words and accepted iff
    phi(a g_j) = phi(a) x_j holds for every a and j and phi is a bijection.
    """
    if G.order ** len(gens) > limit:
        raise OracleLimitError(f"instance too large for oracle: |G|^{len(gens)} exceeds {limit}")
    layers = _word_tree(G, gens)
    orders = G.element_orders()
    candidates = [np.nonzero(orders == orders[g])[0] for g in gens]
    gen_perms = [G.right_mul(g) for g in gens]
    count = 0
    for images in product(*candidates):
        img_perms = [G.right_mul(int(x)) for x in images]
        phi = np.zeros(G.order, dtype=np.int64)
        for elems, parents, which in layers:
            for j, perm in enumerate(img_perms):
                sel = which == j
                phi[elems[sel]] = perm[phi[parents[sel]]]
        if not all(np.array_equal(phi[gp], ip[phi]) for gp, ip in zip(gen_perms, img_perms)):
            continue
        if np.unique(phi).size == G.order:
            count += 1
    return count
