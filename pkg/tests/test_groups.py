import random
from math import gcd, lcm, prod

import pytest

from genusfields import (RadicandGroup, determinant, enumerate_subgroup,
                         smith_normal_form)
from genusfields.intmath import divisors
from genusfields.selftest import random_group, torsion_counts_match


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)]
            for row in A]


def full_diag(form):
    m, n = form.shape
    S = [[0] * n for _ in range(m)]
    for i, d in enumerate(form.diag):
        S[i][i] = d
    return S


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 2]]).diag == (2, 2)
    assert smith_normal_form([[4, 2], [0, 4]]).diag == (2, 8)
    assert smith_normal_form([[0, 0], [0, 0]]).diag == (0, 0)


def test_snf_transform_properties():
    rng = random.Random(11)
    for _ in range(120):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        A = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        form = smith_normal_form(A)
        assert matmul(matmul([list(r) for r in form.row_transform], A),
                      [list(r) for r in form.col_transform]) == full_diag(form)
        assert abs(determinant(form.row_transform)) == 1
        assert abs(determinant(form.col_transform)) == 1
        diag = [d for d in form.diag if d]
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        assert all(d == 0 for d in form.diag[len(diag):])


def test_member_examples():
    G = RadicandGroup.spanned_by(4, 2, [(2, 0), (0, 2)])
    assert G.member((2, 0))
    assert not G.member((1, 0))
    assert G.member((2, 2))


def test_order_examples():
    assert RadicandGroup.spanned_by(4, 2, [(0, 2)]).order() == 2
    assert RadicandGroup.spanned_by(4, 2, [(2, 0), (0, 2)]).order() == 4
    assert RadicandGroup.spanned_by(4, 2, []).order() == 1


def test_contains_examples():
    G = RadicandGroup.spanned_by(4, 2, [(2, 0), (0, 2)])
    assert G.contains(G)
    assert G.contains(RadicandGroup.spanned_by(4, 2, [(2, 2)]))
    assert not RadicandGroup.spanned_by(4, 2, [(0, 2)]).contains(
        RadicandGroup.spanned_by(4, 2, [(1, 0)]))


def test_invariant_factor_examples():
    assert RadicandGroup.spanned_by(4, 2, [(2, 0), (0, 2)]).invariant_factors() \
        == (2, 2)
    assert RadicandGroup.spanned_by(4, 3, [(1, 1, 2)]).invariant_factors() == (4,)
    assert RadicandGroup.spanned_by(4, 2, []).invariant_factors() == ()


def test_constant_subgroup_order_examples():
    assert RadicandGroup.spanned_by(4, 2, [(0, 2)]).constant_subgroup_order() == 1
    assert RadicandGroup.spanned_by(4, 1, [(2,)]).constant_subgroup_order() == 2
    assert RadicandGroup.spanned_by(6, 2, [(2, 0), (3, 3)]).constant_subgroup_order() == 3


def test_mismatch_errors():
    G = RadicandGroup.spanned_by(4, 2, [(2, 0)])
    with pytest.raises(ValueError):
        G.contains(RadicandGroup.spanned_by(4, 3, [(2, 0, 0)]))
    with pytest.raises(ValueError):
        G.contains(RadicandGroup.spanned_by(8, 2, [(2, 0)]))
    with pytest.raises(ValueError):
        G.member((1, 2, 3))


def element_order(vec, M):
    return M // gcd(M, *vec)


def test_engine_against_enumeration():
    rng = random.Random(12)
    for _ in range(150):
        G = random_group(rng)
        elems = enumerate_subgroup(G)
        assert G.order() == len(elems)
        assert torsion_counts_match(G, elems)
        assert G.exponent() == lcm(1, *(element_order(v, G.modulus) for v in elems))
        assert prod(G.invariant_factors()) == len(elems)
        for v in list(elems)[:8]:
            assert G.member(v)
        for _ in range(8):
            v = tuple(rng.randrange(G.modulus) for _ in range(G.dim))
            assert G.member(v) == (v in elems)


def test_contains_against_enumeration():
    rng = random.Random(13)
    for _ in range(80):
        M = rng.randint(2, 12)
        d = rng.randint(1, 3)
        A = RadicandGroup.spanned_by(
            M, d, [tuple(rng.randrange(M) for _ in range(d))
                   for _ in range(rng.randint(0, 3))])
        B = RadicandGroup.spanned_by(
            M, d, [tuple(rng.randrange(M) for _ in range(d))
                   for _ in range(rng.randint(0, 3))])
        ea, eb = enumerate_subgroup(A), enumerate_subgroup(B)
        assert A.contains(B) == (eb <= ea)
        assert A.equals(B) == (ea == eb)


def test_contains_is_partial_order():
    rng = random.Random(14)
    for _ in range(50):
        M = rng.randint(2, 10)
        d = rng.randint(1, 3)
        groups = [RadicandGroup.spanned_by(
            M, d, [tuple(rng.randrange(M) for _ in range(d))
                   for _ in range(rng.randint(0, 2))]) for _ in range(3)]
        A, B, C = groups
        assert A.contains(A)
        if A.contains(B) and B.contains(C):
            assert A.contains(C)
        if A.contains(B) and B.contains(A):
            assert A.equals(B)


def test_join_spans_union():
    rng = random.Random(15)
    for _ in range(40):
        G = random_group(rng)
        extra = [tuple(rng.randrange(G.modulus) for _ in range(G.dim))]
        joined = G.join(extra)
        assert joined.contains(G)
        assert joined.member(extra[0])


def test_constant_subgroup_order_against_enumeration():
    rng = random.Random(16)
    for _ in range(60):
        G = random_group(rng)
        elems = enumerate_subgroup(G)
        M = G.modulus
        best = 1
        for d in divisors(M):
            vec = (M // d,) + (0,) * (G.dim - 1)
            if vec in elems:
                best = max(best, d)
        assert G.constant_subgroup_order() == best
