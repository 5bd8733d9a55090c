"""Dense univariate polynomials over F_q, with full factorization.

A :class:`Poly` is an immutable coefficient tuple, constant term first,
with no trailing zeros (the zero polynomial is the empty tuple).  The
primes of the rational function field are monic irreducibles, wrapped
in :class:`MonicIrreducible` which certifies irreducibility when built.

Everything here follows one canonical ordering, used for all sorted
output and for the coordinates of radicand vectors: polynomials compare
lexicographically on their coefficient vectors, constant term first,
where a prime-field coefficient sorts by its integer value and an
extension-field coefficient sorts by discrete logarithm with 0 first.

`factor` runs squarefree decomposition, then distinct-degree splitting,
then Cantor-Zassenhaus equal-degree splitting.  The equal-degree stage
is randomized but consumes an explicit seed, so a fixed seed gives a
bit-reproducible factorization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ffield import FqField, FqElem, element_sort_key
from .intmath import prime_factors


class Poly:
    """A dense polynomial over one fixed FqField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, FqElem) or (c.field is not field and c.field != field):
                raise ValueError("coefficient does not belong to the given field")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field: FqField, ints) -> "Poly":
        """Polynomial with prime-subfield coefficients given as integers."""
        return cls(field, [field.const(a) for a in ints])

    @classmethod
    def zero(cls, field: FqField) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FqField) -> "Poly":
        return cls(field, (field.one,))

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def lc(self) -> FqElem:
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.coeffs[-1] ** -1
        return Poly(self.field, [c * inv for c in self.coeffs])

    def _same_field(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other):
        self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else zero
            y = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(x - y)
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        self._same_field(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def __divmod__(self, other):
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree()
        if self.degree() < db:
            return Poly.zero(self.field), self
        inv_lc = other.coeffs[-1] ** -1
        rem = list(self.coeffs)
        quo = [self.field.zero] * (self.degree() - db + 1)
        for k in range(self.degree() - db, -1, -1):
            c = rem[k + db]
            if c:
                factor = c * inv_lc
                quo[k] = factor
                for j in range(db + 1):
                    rem[k + j] = rem[k + j] - factor * other.coeffs[j]
        return Poly(self.field, quo), Poly(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "Poly":
        out = []
        for i, c in enumerate(self.coeffs[1:], 1):
            out.append(self.field.const(i) * c)
        return Poly(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and \
            (self.field is other.field or self.field == other.field)

    def __hash__(self):
        return hash((self.coeffs, self.field._hash))

    def __repr__(self):
        return f"Poly(deg={self.degree()}, coeffs={[c.coeffs for c in self.coeffs]})"


def variable(field: FqField) -> Poly:
    """The polynomial T."""
    return Poly(field, (field.zero, field.one))


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic generator of the ideal (a, b); gcd(0, 0) = 0."""
    a._same_field(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced modulo ``mod``, by square and multiply."""
    if mod.degree() < 1:
        raise ValueError("modulus must have degree >= 1")
    result = Poly.one(base.field)
    acc = base % mod
    while e:
        if e & 1:
            result = (result * acc) % mod
        acc = (acc * acc) % mod
        e >>= 1
    return result


def poly_sort_key(poly: Poly):
    """Canonical comparison key (see the module docstring)."""
    return tuple(element_sort_key(c) for c in poly.coeffs)


# ---------------------------------------------------------------------------
# squarefree decomposition

def _pth_root(h: Poly) -> Poly:
    """The p-th root of a polynomial whose derivative vanishes."""
    field = h.field
    p, q = field.p, field.q
    root = [h.coeffs[i] ** (q // p) for i in range(0, len(h.coeffs), p)]
    return Poly(field, root)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Write f = lc(f) * prod S_j^(m_j) with the S_j monic, squarefree and
    pairwise coprime and the m_j strictly increasing.

    Correct in characteristic p: a vanishing derivative means f is a
    p-th power and the decomposition recurses on its p-th root.
    Constants decompose into the empty product.
    """
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    field = f.field
    parts: dict[int, Poly] = {}

    def accumulate(h: Poly, scale: int):
        d = h.derivative()
        if d.is_zero():
            accumulate(_pth_root(h), scale * field.p)
            return
        c = gcd(h, d)
        w = h // c
        i = 1
        while w.degree() > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree() > 0:
                key = i * scale
                parts[key] = parts[key] * z if key in parts else z
            w, c, i = y, c // y, i + 1
        if c.degree() > 0:
            accumulate(_pth_root(c), scale * field.p)

    m = f.monic()
    if m.degree() > 0:
        accumulate(m, 1)
    return [(parts[k], k) for k in sorted(parts)]


# ---------------------------------------------------------------------------
# irreducibility and factorization

def is_irreducible(f: Poly) -> bool:
    """Rabin's criterion over F_q.  Constants are not irreducible."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no irreducibility status")
    n = f.degree()
    if n < 1:
        return False
    if n == 1:
        return True
    field = f.field
    m = f.monic()
    t = variable(field)
    needed = {n // ell for ell in prime_factors(n)}
    frob = t % m
    for j in range(1, n + 1):
        frob = pow_mod(frob, field.q, m)
        if j in needed and j < n:
            if gcd(frob - t, m).degree() != 0:
                return False
    return frob == t % m


def _random_poly(field: FqField, rng: random.Random, max_deg: int) -> Poly:
    return Poly(field, [field.from_index(rng.randrange(field.q))
                        for _ in range(max_deg + 1)])


def _distinct_degree(h: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree polynomial into products of irreducibles of
    equal degree, returned as (product, degree) pairs."""
    field = h.field
    t = variable(field)
    out = []
    rem = h
    frob = t % rem
    d = 0
    while rem.degree() >= 2 * (d + 1):
        d += 1
        frob = pow_mod(frob, field.q, rem)
        g = gcd(rem, frob - t)
        if g.degree() > 0:
            out.append((g, d))
            rem = rem // g
            if rem.degree() > 0:
                frob = frob % rem
    if rem.degree() > 0:
        out.append((rem, rem.degree()))
    return out


def _equal_degree(h: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of distinct monic
    irreducibles, all of degree d."""
    n = h.degree()
    if n == d:
        return [h]
    field = h.field
    one = Poly.one(field)
    while True:
        r = _random_poly(field, rng, n - 1)
        if r.degree() < 1:
            continue
        if field.p != 2:
            u = pow_mod(r, (field.q ** d - 1) // 2, h)
            split = gcd(h, u - one)
        else:
            # absolute trace map to F_2 over F_(2^f): sum of 2^j-th powers
            acc = r % h
            term = acc
            for _ in range(d * field.f - 1):
                term = pow_mod(term, 2, h)
                acc = acc + term
            split = gcd(h, acc)
        if 0 < split.degree() < n:
            return _equal_degree(split, d, rng) + _equal_degree(h // split, d, rng)


@dataclass(frozen=True)
class MonicIrreducible:
    """A monic irreducible polynomial, certified at construction."""

    poly: Poly

    def __post_init__(self):
        if not self.poly.is_monic():
            raise ValueError("prime must be monic")
        if not is_irreducible(self.poly):
            raise ValueError("prime must be irreducible")

    @property
    def deg(self) -> int:
        return self.poly.degree()

    def sort_key(self):
        return poly_sort_key(self.poly)

    def __repr__(self):
        return f"MonicIrreducible({self.poly!r})"


def factor(f: Poly, seed: int = 0) -> list[tuple[MonicIrreducible, int]]:
    """Factor f = lc(f) * prod P_i^(a_i) into distinct monic irreducibles,
    sorted canonically.  The same seed reproduces the identical run; any
    seed yields the same sorted factor list."""
    if f.is_zero() or f.degree() < 1:
        raise ValueError("cannot factor a constant or zero polynomial")
    rng = random.Random(seed)
    out = []
    for part, mult in squarefree_decomposition(f):
        for prod_, d in _distinct_degree(part):
            for irr in _equal_degree(prod_, d, rng):
                out.append((MonicIrreducible(irr), mult))
    out.sort(key=lambda item: item[0].sort_key())
    return out


def valuation(D: Poly, P: MonicIrreducible) -> int:
    """Largest a with P^a dividing D, for nonzero D."""
    if D.is_zero():
        raise ValueError("valuation of the zero polynomial is undefined")
    count = 0
    cur = D
    while cur.degree() >= P.deg:
        quo, rem = divmod(cur, P.poly)
        if not rem.is_zero():
            break
        cur = quo
        count += 1
    return count
