import random

import pytest

from genusfields import build_field, element_sort_key

from conftest import FIELD_KEYS, field


def test_build_field_f5():
    F5 = field(5, 1)
    assert F5.q == 5
    assert F5.modulus == (0, 1)
    assert F5.g.coeffs == (2,)  # 1 has order 1; 2 has order 4


def test_build_field_f4():
    F4 = field(2, 2)
    assert F4.modulus == (1, 1, 1)  # the unique monic irreducible quadratic
    assert F4.g.coeffs == (0, 1)    # x, of order 3


def test_build_field_f9():
    F9 = field(3, 2)
    assert F9.modulus == (1, 0, 1)  # x^2 + 1 has no root mod 3
    assert F9.g.coeffs == (1, 1)    # x has order 4, x + 1 has order 8


def test_build_field_deterministic():
    a = build_field(3, 2)
    b = build_field(3, 2)
    assert a == b
    assert a.modulus == b.modulus and a.g == b.g
    x, y = a.from_index(5), b.from_index(7)
    assert (x * a.from_index(7)).coeffs == (b.from_index(5) * y).coeffs


def test_build_field_errors():
    with pytest.raises(ValueError):
        build_field(4, 1)
    with pytest.raises(ValueError):
        build_field(5, 0)
    with pytest.raises(ValueError):
        build_field(2, 21)  # 2^21 exceeds the default bound
    build_field(2, 21, max_q=1 << 22)  # raised bound admits it


def test_overrides_validated():
    with pytest.raises(ValueError):
        build_field(3, 2, modulus=(0, 1, 1))  # x^2 + x is reducible
    with pytest.raises(ValueError):
        build_field(3, 2, modulus=(1, 0, 2))  # not monic
    with pytest.raises(ValueError):
        build_field(5, 1, generator=(4,))    # order 2, not 4
    alt = build_field(5, 1, generator=(3,))
    assert alt.g.coeffs == (3,)
    assert alt.dlog(alt.const(4)) == 2       # 3^2 = 9 = 4


def test_arith_examples():
    F5 = field(5, 1)
    assert F5.const(2) * F5.const(3) == F5.one          # 6 = 1 mod 5
    assert F5.const(4) ** 0 == F5.one
    F4 = field(2, 2)
    x = F4.g
    assert (x * x).coeffs == (1, 1)                     # x^2 = x + 1


def test_arith_errors():
    F5, F7 = field(5, 1), field(7, 1)
    with pytest.raises(ValueError):
        F5.const(1) * F7.const(1)
    with pytest.raises(ZeroDivisionError):
        F5.one / F5.zero
    with pytest.raises(ZeroDivisionError):
        F5.zero ** -1


def test_pow_matches_repeated_product():
    rng = random.Random(1)
    for p, f in FIELD_KEYS:
        fld = field(p, f)
        for _ in range(20):
            x = fld.from_index(rng.randrange(1, fld.q))
            e = rng.randrange(-6, 12)
            expected = fld.one
            base = x if e >= 0 else fld.one / x
            for _ in range(abs(e)):
                expected = expected * base
            assert x ** e == expected


def test_dlog_examples():
    F5, F7 = field(5, 1), field(7, 1)
    assert F5.one.dlog() == 0
    assert F5.const(4).dlog() == 2      # 2^2 = 4
    assert F7.const(6).dlog() == 3      # 3^3 = 27 = 6


def test_dlog_errors():
    F5 = field(5, 1)
    with pytest.raises(ValueError):
        F5.zero.dlog()


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (5, 1), (7, 1), (13, 1),
                                 (2, 2), (3, 2), (2, 3), (5, 3), (2, 10), (3, 5)])
def test_dlog_roundtrip_exhaustive(p, f):
    fld = build_field(p, f)
    g = fld.g
    for x in fld.elements():
        if x.is_zero():
            continue
        assert g ** x.dlog() == x
    assert fld.dlog(g) == 1 or fld.q == 2


def test_dlog_is_homomorphism():
    rng = random.Random(2)
    for p, f in FIELD_KEYS:
        fld = field(p, f)
        n = fld.q - 1
        for _ in range(30):
            x = fld.from_index(rng.randrange(1, fld.q))
            y = fld.from_index(rng.randrange(1, fld.q))
            assert (x * y).dlog() == (x.dlog() + y.dlog()) % n


@pytest.mark.parametrize("p,f", [(5, 1), (13, 1), (3, 2), (2, 3), (2, 10)])
def test_nth_power_criterion(p, f):
    """x is an n-th power iff n divides dlog(x), against brute-force powering."""
    fld = build_field(p, f)
    q = fld.q
    from genusfields.intmath import divisors
    for n in divisors(q - 1):
        powers = {(y ** n).coeffs for y in fld.elements() if not y.is_zero()}
        for x in fld.elements():
            if x.is_zero():
                continue
            assert (x.dlog() % n == 0) == (x.coeffs in powers)


def test_bsgs_large_field():
    """q = 2^17 exceeds the table limit, forcing the BSGS and raw-product paths."""
    fld = build_field(2, 17)
    g = fld.g
    rng = random.Random(3)
    for _ in range(5):
        k = rng.randrange(fld.q - 1)
        assert fld.dlog(g ** k) == k


def test_element_sort_key():
    F5, F9 = field(5, 1), field(3, 2)
    assert [element_sort_key(F5.const(a)) for a in range(5)] == [0, 1, 2, 3, 4]
    keys = [element_sort_key(x) for x in F9.elements()]
    assert sorted(keys) == [-1] + list(range(8))  # zero first, then by dlog
    assert element_sort_key(F9.zero) == -1
    assert element_sort_key(F9.one) == 0
    assert element_sort_key(F9.g) == 1
