"""Finitely generated subgroups of (Z/M)^d, answered exactly.

Membership, order, containment and invariant factors are all reduced to
integer Smith normal form: a subgroup given by generator rows is the
image of the integer lattice spanned by those rows together with M
times the standard basis, so every question becomes lattice arithmetic
over Z.  Matrices here are tiny (dimension 1 + number of basis primes)
and Python integers are exact, so no modular shortcuts are needed.

Pivoting is deterministic: the entry of smallest nonzero absolute
value, ties broken by row-major position.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .intmath import divisors


# ---------------------------------------------------------------------------
# integer matrices

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in matrix]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """U @ A @ V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...

    ``diag`` holds the min(m, n) diagonal entries of S (nonnegative,
    trailing zeros when the rank is deficient).
    """

    diag: tuple[int, ...]
    row_transform: tuple[tuple[int, ...], ...]
    col_transform: tuple[tuple[int, ...], ...]
    shape: tuple[int, int]


def _find_pivot(S, t, m, n):
    best = None
    where = None
    for i in range(t, m):
        for j in range(t, n):
            a = S[i][j]
            if a != 0 and (best is None or abs(a) < best):
                best = abs(a)
                where = (i, j)
    return where


def smith_normal_form(matrix) -> SmithForm:
    """Smith normal form of an integer matrix, with transforms."""
    S = [list(map(int, row)) for row in matrix]
    m = len(S)
    n = len(S[0]) if m else 0
    if any(len(row) != n for row in S):
        raise ValueError("matrix rows must have equal length")
    U = _identity(m)
    V = _identity(n)

    def add_row(dst, src, mult):
        S[dst] = [a + mult * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + mult * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, mult):
        for row in S:
            row[dst] += mult * row[src]
        for row in V:
            row[dst] += mult * row[src]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        piv = _find_pivot(S, t, m, n)
        if piv is None:
            break
        while True:
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            a = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // a))
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // a))
            if any(S[i][t] for i in range(t + 1, m)) or \
               any(S[t][j] for j in range(t + 1, n)):
                piv = _find_pivot(S, t, m, n)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % a != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
            piv = (t, t)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    diag = tuple(S[i][i] for i in range(min(m, n)))
    return SmithForm(diag=diag,
                     row_transform=tuple(tuple(r) for r in U),
                     col_transform=tuple(tuple(r) for r in V),
                     shape=(m, n))


# ---------------------------------------------------------------------------
# subgroups of (Z/M)^d

@dataclass(frozen=True)
class RadicandGroup:
    """Subgroup of (Z/M)^d spanned by generator rows (entries in [0, M))."""

    modulus: int
    dim: int
    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def spanned_by(cls, modulus: int, dim: int, generators) -> "RadicandGroup":
        if modulus < 1 or dim < 1:
            raise ValueError("modulus and dimension must be positive")
        reduced = []
        for vec in generators:
            row = tuple(int(x) % modulus for x in vec)
            if len(row) != dim:
                raise ValueError(f"generator has length {len(row)}, expected {dim}")
            if any(row):
                reduced.append(row)
        return cls(modulus, dim, tuple(dict.fromkeys(reduced)))

    def _form(self) -> SmithForm:
        return _lattice_form(self.modulus, self.dim, self.generators)

    def _check_compatible(self, other: "RadicandGroup"):
        if not isinstance(other, RadicandGroup):
            raise TypeError("expected a RadicandGroup")
        if other.modulus != self.modulus or other.dim != self.dim:
            raise ValueError("modulus or dimension mismatch")

    def member(self, vector) -> bool:
        """Exact membership of a vector, solved over the stacked lattice."""
        M = self.modulus
        v = tuple(int(x) % M for x in vector)
        if len(v) != self.dim:
            raise ValueError(f"vector has length {len(v)}, expected {self.dim}")
        form = self._form()
        V = form.col_transform
        for j in range(self.dim):
            w = sum(v[i] * V[i][j] for i in range(self.dim))
            if w % form.diag[j] != 0:
                return False
        return True

    def order(self) -> int:
        """Number of elements of the subgroup."""
        return self.modulus ** self.dim // prod(self._form().diag)

    def invariant_factors(self) -> tuple[int, ...]:
        """Cyclic decomposition d_1 | d_2 | ..., factors > 1 only, largest last."""
        M = self.modulus
        facs = [M // s for s in reversed(self._form().diag)]
        return tuple(d for d in facs if d > 1)

    def exponent(self) -> int:
        """Largest invariant factor (1 for the trivial group)."""
        return self.modulus // self._form().diag[0]

    def contains(self, other: "RadicandGroup") -> bool:
        self._check_compatible(other)
        return all(self.member(g) for g in other.generators)

    def equals(self, other: "RadicandGroup") -> bool:
        """Group equality, i.e. mutual containment."""
        return self.contains(other) and other.contains(self)

    def join(self, extra_generators) -> "RadicandGroup":
        """The subgroup generated by this one and further vectors."""
        return RadicandGroup.spanned_by(
            self.modulus, self.dim, self.generators + tuple(
                tuple(int(x) % self.modulus for x in v) for v in extra_generators))

    def constant_subgroup_order(self) -> int:
        """Order of the intersection with the pure-constant line Z/M x 0 x ...

        This is the largest divisor d of M whose order-d constant vector
        (M/d, 0, ..., 0) belongs to the group; the Kummer field attached
        to the group has field of constants F_(q^d).
        """
        M = self.modulus
        for d in reversed(divisors(M)):
            vec = (M // d,) + (0,) * (self.dim - 1)
            if self.member(vec):
                return d
        return 1  # unreachable: d = 1 always succeeds


@lru_cache(maxsize=4096)
def _lattice_form(modulus, dim, generators) -> SmithForm:
    rows = [list(g) for g in generators]
    for i in range(dim):
        row = [0] * dim
        row[i] = modulus
        rows.append(row)
    form = smith_normal_form(rows)
    assert all(s > 0 and modulus % s == 0 for s in form.diag)
    return form


def enumerate_subgroup(group: RadicandGroup, limit: int = 1 << 16) -> frozenset:
    """All elements by closure from the generators; independent of the
    Smith-form machinery, intended as a brute-force oracle."""
    M, d = group.modulus, group.dim
    zero = (0,) * d
    seen = {zero}
    stack = [zero]
    while stack:
        cur = stack.pop()
        for g in group.generators:
            nxt = tuple((a + b) % M for a, b in zip(cur, g))
            if nxt not in seen:
                if len(seen) >= limit:
                    raise ValueError("subgroup too large to enumerate")
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)
