from itertools import product
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from frobaut.ffield import (
    FieldMismatchError,
    HMatrix,
    PolyFp,
    build_h_matrix,
    companion_matrix,
    conjugates,
    find_irreducible,
    get_field,
    mat_pow_mod,
    min_poly,
    primitive_nth_root,
)
from frobaut.numtheory import mul_order


def brute_irreducible(g: PolyFp) -> bool:
    """No monic factor of degree 1..deg/2, by trial division over all of them."""
    p, f = g.p, g.degree
    for k in range(1, f // 2 + 1):
        for low in product(range(p), repeat=k):
            if not (g % PolyFp(p, low + (1,))).coeffs:
                return False
    return True


def charpoly_mod_p(m: np.ndarray, p: int) -> PolyFp:
    x = sympy.symbols("x")
    cp = sympy.Matrix(m.tolist()).charpoly(x).all_coeffs()[::-1]
    return PolyFp(p, [int(c) for c in cp])


def poly_eval_matrix(g: PolyFp, m: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(m)
    for c in reversed(g.coeffs):
        acc = (acc @ m + c * np.eye(m.shape[0], dtype=np.int64)) % g.p
    return acc


@pytest.mark.parametrize("p, f, expected", [(2, 1, (0, 1)), (2, 2, (1, 1, 1)), (3, 2, (1, 0, 1))])
def test_find_irreducible_examples(p, f, expected):
    assert find_irreducible(p, f).coeffs == expected


@pytest.mark.parametrize("p, f", [(2, 3), (2, 4), (2, 6), (3, 3), (5, 2), (7, 3), (31, 2)])
def test_find_irreducible_is_lexicographic_minimum(p, f):
    g = find_irreducible(p, f)
    assert g.is_monic() and g.degree == f and brute_irreducible(g)
    for low in product(range(p), repeat=f):
        if low == g.coeffs[:-1]:
            break
        assert not brute_irreducible(PolyFp(p, low + (1,)))


def test_primitive_root_examples():
    assert primitive_nth_root(3, 1, 2).coords == (2,)
    w = primitive_nth_root(31, 1, 15)
    assert w ** 15 == w.field.one and w ** 5 != w.field.one and w ** 3 != w.field.one
    F4 = get_field(2, 2)
    assert primitive_nth_root(2, 2, 3) == F4.gen


def test_primitive_root_requires_divisibility():
    with pytest.raises(ValueError, match="no such root"):
        primitive_nth_root(2, 2, 5)


def test_min_poly_examples():
    F4 = get_field(2, 2)
    assert min_poly(F4.one).coeffs == (1, 1)
    assert min_poly(F4.gen).coeffs == (1, 1, 1)
    w = primitive_nth_root(2, 4, 5)
    g = min_poly(w)
    assert g.degree == 4
    assert not (PolyFp(2, (1, 0, 0, 0, 0, 1)) % g).coeffs  # divides x^5 - 1


def test_min_poly_of_zero():
    assert min_poly(get_field(3, 2).zero).coeffs == (0, 1)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        get_field(2, 2).one + get_field(2, 3).one
    with pytest.raises(FieldMismatchError):
        PolyFp(2, (1,)) + PolyFp(3, (1,))


FIELDS = [(2, 1), (2, 3), (2, 4), (3, 2), (5, 2), (7, 1), (3, 3)]


@st.composite
def field_pair(draw):
    p, f = draw(st.sampled_from(FIELDS))
    F = get_field(p, f)
    a = F(draw(st.lists(st.integers(0, p - 1), min_size=f, max_size=f)))
    b = F(draw(st.lists(st.integers(0, p - 1), min_size=f, max_size=f)))
    return F, a, b


@given(field_pair())
def test_field_axioms_and_frobenius(fab):
    F, a, b = fab
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    x = a
    for _ in range(F.f):
        x = x.frobenius()
    assert x == a
    if not a.is_zero():
        assert a * a.inverse() == F.one


@given(field_pair())
def test_min_poly_irreducible_with_orbit_degree(fab):
    _, a, _ = fab
    g = min_poly(a)
    assert g.is_monic() and brute_irreducible(g)
    assert g.degree == len(conjugates(a))


@pytest.mark.parametrize("p, n", [(2, 5), (2, 7), (2, 9), (3, 8), (2, 15), (5, 12), (31, 15), (3, 13)])
def test_min_poly_identifies_cyclotomic_class(p, n):
    f = mul_order(p, n)
    w = primitive_nth_root(p, f, n)
    us = [r for r in range(1, n) if gcd(r, n) == 1]
    polys = {r: min_poly(w**r) for r in us}
    for r in us:
        orbit = {r * p**j % n for j in range(f)}
        for s in us:
            assert (polys[r] == polys[s]) == (s in orbit)


@pytest.mark.parametrize("g, expected", [
    (PolyFp(3, (-1, 1)), [[1]]),
    (PolyFp(2, (1, 1, 1)), [[0, 1], [1, 1]]),
])
def test_companion_examples(g, expected):
    assert companion_matrix(g).tolist() == expected


def test_companion_of_fifth_cyclotomic_has_order_5():
    c = companion_matrix(PolyFp(2, (1, 1, 1, 1, 1)))
    assert c.shape == (4, 4)
    assert np.array_equal(mat_pow_mod(c, 5, 2), np.eye(4, dtype=np.int64))
    assert not np.array_equal(c, np.eye(4, dtype=np.int64))


def test_companion_rejects_non_monic():
    with pytest.raises(ValueError):
        companion_matrix(PolyFp(3, (1, 2)))


@pytest.mark.parametrize("p, f", [(2, 3), (3, 2), (5, 3), (2, 5)])
def test_companion_charpoly_and_minpoly(p, f):
    g = find_irreducible(p, f)
    c = companion_matrix(g)
    assert charpoly_mod_p(c, p) == g
    assert not poly_eval_matrix(g, c).any()


def test_build_h_matrix_examples():
    h = build_h_matrix(3, 2, [(1, 1)])
    assert h.entries.tolist() == [[2]] and h.n == 2
    h = build_h_matrix(2, 5, [(1, 1)])
    assert h.d == 4 and h.n == 5
    h = build_h_matrix(31, 15, [(1, 1), (4, 1), (11, 1), (14, 1)])
    w = primitive_nth_root(31, 1, 15)
    assert np.array_equal(h.entries, np.diag([(w**r).prime_value() for r in (1, 4, 11, 14)]))


BUILD_CASES = [
    (2, 3, [(1, 2)]), (2, 7, [(1, 1), (3, 2)]), (3, 8, [(1, 1), (5, 1)]),
    (5, 12, [(1, 1), (7, 1)]), (2, 9, [(1, 1)]), (7, 6, [(1, 2), (5, 1)]),
]


@pytest.mark.parametrize("p, n, classes", BUILD_CASES)
def test_build_h_matrix_invariants(p, n, classes):
    h = build_h_matrix(p, n, classes)
    f = mul_order(p, n)
    assert h.d == f * sum(e for _, e in classes)
    eye = np.eye(h.d, dtype=np.int64)
    assert np.array_equal(h.power(n), eye)
    for k in range(1, n):
        hk = sympy.Matrix((h.power(k) - eye).tolist())
        assert hk.det() % p != 0  # fixed-point-free
    w = primitive_nth_root(p, f, n)
    expected = PolyFp(p, (1,))
    for r, e in classes:
        for _ in range(e):
            expected = expected * min_poly(w**r)
    assert charpoly_mod_p(h.entries, p) == expected


def test_hmatrix_checks_exact_order():
    with pytest.raises(ValueError):
        HMatrix(2, 3, np.eye(2, dtype=np.int64))
