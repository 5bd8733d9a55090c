"""Exact arithmetic in small finite fields F_q with q = p^f.

Fields come from :func:`build_field` and are deterministic in (p, f):
the defining modulus is the lexicographically smallest monic
irreducible polynomial of degree f over F_p, and the canonical
generator of the multiplicative group is the lexicographically
smallest element of order q - 1.  Coefficient vectors are written
constant term first, and element coordinates refer to the power basis
1, x, ..., x^(f-1) of the modulus.

Discrete logarithms are always taken to the canonical generator.  For
q up to 2^16 a full exponent/log table is built lazily and backs
multiplication, division, powering and `dlog`; beyond that the field
falls back to direct polynomial arithmetic, square-and-multiply
powering and baby-step giant-step logarithms.  Everything is exact.
"""

from __future__ import annotations

from math import isqrt

from .intmath import is_prime, prime_factors

DEFAULT_MAX_Q = 1 << 20
_TABLE_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# raw coefficient arithmetic (tuples of ints, constant term first)

def _index_coeffs(k: int, p: int, f: int) -> tuple[int, ...]:
    """The k-th coefficient vector in lexicographic order, c_0 compared first."""
    out = [0] * f
    for i in range(f):
        out[i], k = divmod(k, p ** (f - 1 - i))
    return tuple(out)


def _fq_mul(a, b, modulus, p):
    f = len(modulus) - 1
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(2 * f - 2, f - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(f):
                prod[i - f + j] = (prod[i - f + j] - c * modulus[j]) % p
    return tuple(prod[:f])


def _fq_pow(a, e, modulus, p):
    f = len(modulus) - 1
    result = tuple([1] + [0] * (f - 1))
    base = a
    while e:
        if e & 1:
            result = _fq_mul(result, base, modulus, p)
        base = _fq_mul(base, base, modulus, p)
        e >>= 1
    return result


def _element_order(a, modulus, p, q):
    one = tuple([1] + [0] * (len(modulus) - 2))
    n = q - 1
    order = n
    for ell in prime_factors(n):
        while order % ell == 0 and _fq_pow(a, order // ell, modulus, p) == one:
            order //= ell
    return order


# ---------------------------------------------------------------------------
# F_p[x] bootstrap helpers, only needed to certify a candidate modulus

def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _fp_mulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _fp_mod(prod, m, p)


def _fp_powmod(a, e, m, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(a), _fp_trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _fp_mod(a, bm, p)
    return a


def _fp_is_irreducible(m, p):
    """Irreducibility of a monic polynomial over F_p, degree >= 1."""
    f = len(m) - 1
    if f == 1:
        return True
    if m[0] == 0:  # divisible by x
        return False
    x = [0, 1]
    needed = {f // ell for ell in prime_factors(f)}
    xq = x
    for j in range(1, f + 1):
        xq = _fp_powmod(xq, p, m, p)
        if j in needed and j < f:
            diff = list(xq) + [0] * max(0, 2 - len(xq))
            diff[1] = (diff[1] - 1) % p
            if len(_fp_gcd(diff, m, p)) != 1:
                return False
    return _fp_trim(xq) == [0, 1]


def _find_modulus(p, f):
    if f == 1:
        return (0, 1)
    # constant term 0 means divisibility by x, so start past those vectors
    for k in range(p ** (f - 1), p ** f):
        cand = _index_coeffs(k, p, f) + (1,)
        if _fp_is_irreducible(list(cand), p):
            return cand
    raise ValueError(f"no monic irreducible of degree {f} over F_{p}")  # unreachable


def _find_generator(p, f, q, modulus):
    for k in range(1, q):
        coeffs = _index_coeffs(k, p, f)
        if _element_order(coeffs, modulus, p, q) == q - 1:
            return coeffs
    raise ValueError("no generator found")  # unreachable: F_q* is cyclic


# ---------------------------------------------------------------------------

def build_field(p: int, f: int, *, modulus=None, generator=None,
                max_q: int = DEFAULT_MAX_Q) -> "FqField":
    """Construct F_{p^f} deterministically.

    Without overrides the defining modulus is the lexicographically
    smallest monic irreducible of degree f over F_p (for f = 1 the
    polynomial x) and the generator is the lexicographically smallest
    element of multiplicative order q - 1, so two calls with the same
    (p, f) give bit-identical fields.

    ``modulus`` overrides the defining polynomial (monic, degree f,
    irreducible, constant term first including the leading 1) and
    ``generator`` overrides the canonical generator (a coefficient
    vector of length f); both are validated.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(f, int) or f < 1:
        raise ValueError(f"f must be a positive integer, got {f!r}")
    q = p ** f
    if q > max_q:
        raise ValueError(f"q = {q} exceeds the configured bound {max_q}")

    if modulus is None:
        modulus = _find_modulus(p, f)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if f > 1 and not _fp_is_irreducible(list(modulus), p):
            raise ValueError("modulus is not irreducible over F_p")

    if generator is None:
        generator = _find_generator(p, f, q, modulus)
    else:
        generator = tuple(int(c) % p for c in generator)
        if len(generator) != f:
            raise ValueError("generator must have f coordinates")
        if not any(generator) or \
                _element_order(generator, modulus, p, q) != q - 1:
            raise ValueError("generator does not have order q - 1")

    return FqField(p, f, modulus, generator)


class FqField:
    """The field with q = p^f elements; use :func:`build_field` to create one."""

    __slots__ = ("p", "f", "q", "modulus", "_gen", "_exp", "_log", "_hash")

    def __init__(self, p, f, modulus, generator):
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = tuple(modulus)
        self._gen = tuple(generator)
        self._exp = None
        self._log = None
        self._hash = hash(("FqField", p, f, self.modulus, self._gen))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FqField):
            return NotImplemented
        return (self.p, self.f, self.modulus, self._gen) == \
            (other.p, other.f, other.modulus, other._gen)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FqField(p={self.p}, f={self.f})"

    # -- element constructors ------------------------------------------------

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, (0,) * self.f)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, tuple([1] + [0] * (self.f - 1)))

    @property
    def g(self) -> "FqElem":
        """The canonical generator of the multiplicative group."""
        return FqElem(self, self._gen)

    def elem(self, coeffs) -> "FqElem":
        """Element from its coordinate vector (length f, reduced mod p)."""
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.f:
            raise ValueError(f"expected {self.f} coordinates, got {len(coeffs)}")
        return FqElem(self, coeffs)

    def const(self, a: int) -> "FqElem":
        """The prime-subfield constant a mod p."""
        return FqElem(self, tuple([int(a) % self.p] + [0] * (self.f - 1)))

    def from_index(self, k: int) -> "FqElem":
        """The k-th element in lexicographic coordinate order, 0 <= k < q."""
        if not 0 <= k < self.q:
            raise ValueError(f"index {k} out of range for q = {self.q}")
        return FqElem(self, _index_coeffs(k, self.p, self.f))

    def elements(self):
        """All q elements in lexicographic coordinate order."""
        for k in range(self.q):
            yield FqElem(self, _index_coeffs(k, self.p, self.f))

    # -- internal coefficient arithmetic --------------------------------------

    def _ensure_tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.q > _TABLE_LIMIT:
            return False
        exp = []
        log = {}
        t = self.one.coeffs
        for i in range(self.q - 1):
            exp.append(t)
            log[t] = i
            t = _fq_mul(t, self._gen, self.modulus, self.p)
        self._exp = exp
        self._log = log
        return True

    def _mul(self, a, b):
        if self._exp is None and not self._ensure_tables():
            return _fq_mul(a, b, self.modulus, self.p)
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _pow_nonzero(self, a, e):
        """a^e for nonzero a and any integer e."""
        n = self.q - 1
        e %= n
        if self._ensure_tables():
            return self._exp[(self._log[a] * e) % n]
        return _fq_pow(a, e, self.modulus, self.p)

    def dlog(self, x: "FqElem") -> int:
        """Exponent k with g^k = x, for nonzero x; a residue modulo q - 1."""
        self._check_elem(x)
        if not any(x.coeffs):
            raise ValueError("dlog of zero is undefined")
        if self._ensure_tables():
            return self._log[x.coeffs]
        return self._dlog_bsgs(x.coeffs)

    def _dlog_bsgs(self, coeffs):
        n = self.q - 1
        if n == 1:
            return 0
        m = isqrt(n - 1) + 1
        baby = {}
        t = self.one.coeffs
        for j in range(m):
            baby.setdefault(t, j)
            t = _fq_mul(t, self._gen, self.modulus, self.p)
        giant = _fq_pow(self._gen, n - m, self.modulus, self.p)  # g^(-m)
        y = coeffs
        for i in range(m + 1):
            j = baby.get(y)
            if j is not None:
                return (i * m + j) % n
            y = _fq_mul(y, giant, self.modulus, self.p)
        raise ValueError("dlog failed; element not in the multiplicative group")

    def element_order(self, x: "FqElem") -> int:
        """Multiplicative order of a nonzero element."""
        self._check_elem(x)
        if not any(x.coeffs):
            raise ValueError("order of zero is undefined")
        return _element_order(x.coeffs, self.modulus, self.p, self.q)

    def _check_elem(self, x):
        if not isinstance(x, FqElem) or (x.field is not self and x.field != self):
            raise ValueError("element does not belong to this field")


class FqElem:
    """An immutable element of an :class:`FqField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _same_field(self, other):
        if not isinstance(other, FqElem):
            raise TypeError(f"cannot combine FqElem with {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._same_field(other)
        p = self.field.p
        return FqElem(self.field,
                      tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same_field(other)
        p = self.field.p
        return FqElem(self.field,
                      tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._same_field(other)
        if not self or not other:
            return self.field.zero
        return FqElem(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        self._same_field(other)
        if not other:
            raise ZeroDivisionError("division by zero in F_q")
        if not self:
            return self.field.zero
        inv = self.field._pow_nonzero(other.coeffs, -1)
        return FqElem(self.field, self.field._mul(self.coeffs, inv))

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if not self:
            if e > 0:
                return self.field.zero
            if e == 0:
                return self.field.one
            raise ZeroDivisionError("negative power of zero in F_q")
        return FqElem(self.field, self.field._pow_nonzero(self.coeffs, e))

    def __eq__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.coeffs == other.coeffs and \
            (self.field is other.field or self.field == other.field)

    def __hash__(self):
        return hash((self.coeffs, self.field._hash))

    def __repr__(self):
        if self.field.f == 1:
            return f"FqElem({self.coeffs[0]} in F_{self.field.q})"
        return f"FqElem({list(self.coeffs)} in F_{self.field.q})"

    def dlog(self) -> int:
        return self.field.dlog(self)

    def multiplicative_order(self) -> int:
        return self.field.element_order(self)


def element_sort_key(x: FqElem):
    """Canonical sort key: integer value on prime fields, dlog (0 first) otherwise."""
    if x.field.f == 1:
        return x.coeffs[0]
    return -1 if x.is_zero() else x.dlog()
