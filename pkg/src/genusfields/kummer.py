"""Kummer extensions of k = F_q(T), normalized to radicand vectors.

A descriptor lists components (gamma, D, m): gamma a nonzero constant,
D a monic polynomial, m a divisor of q - 1, one component per adjoined
m-th root of gamma * D.  `normalize` rewrites each component as a
vector modulo M = q - 1 over the basis of primes dividing any D:
coordinate 0 carries the discrete log of the constant part, each later
coordinate the valuation at one basis prime, and the whole component
vector is (M / m) times that data, the class of (gamma * D)^(M/m).
The subgroup those vectors span decides the degree, the Galois
structure and every containment question for the extension.

Ramification at a finite prime is tame here (m | q - 1) and is read off
the vectors; an independent componentwise formula is provided as an
oracle, and the valuation of a radicand at the infinite place is
-deg(D), which yields the reported index over 1/T.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import InvalidDescriptorError
from .ffield import FqField, FqElem
from .groups import RadicandGroup
from .polyring import MonicIrreducible, Poly, factor, valuation


@dataclass(frozen=True)
class KummerComponent:
    """One adjoined radical: the m-th root of gamma * D."""

    gamma: FqElem
    D: Poly
    m: int


@dataclass(frozen=True)
class KummerDescriptor:
    """User-facing extension data; validates the Kummer conditions."""

    field: FqField
    components: tuple[KummerComponent, ...]

    def __post_init__(self):
        q = self.field.q
        for i, comp in enumerate(self.components, 1):
            if comp.gamma.field != self.field or comp.D.field != self.field:
                raise InvalidDescriptorError(
                    f"component {i}: constant or polynomial from a different field")
            if comp.gamma.is_zero():
                raise InvalidDescriptorError(f"component {i}: gamma must be nonzero")
            if not comp.D.is_monic():
                raise InvalidDescriptorError(f"component {i}: D must be monic")
            if comp.m < 1 or (q - 1) % comp.m != 0:
                raise InvalidDescriptorError(
                    f"component {i}: m = {comp.m} does not divide q - 1 = {q - 1}")


@dataclass(frozen=True)
class PrimeBasis:
    """Sorted, duplicate-free monic irreducibles indexing vector coordinates."""

    primes: tuple[MonicIrreducible, ...]

    @classmethod
    def from_primes(cls, primes) -> "PrimeBasis":
        unique = {P.sort_key(): P for P in primes}
        return cls(tuple(unique[k] for k in sorted(unique)))

    def index(self, P: MonicIrreducible) -> int:
        for i, Q in enumerate(self.primes):
            if Q == P:
                return i
        raise ValueError("prime not in basis")

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, P):
        return any(Q == P for Q in self.primes)


@dataclass(frozen=True)
class RadicandVector:
    """A radicand class mod M: dlog of the constant part, then one
    exponent per basis prime."""

    modulus: int
    const_coord: int
    exps: tuple[int, ...]

    def row(self) -> tuple[int, ...]:
        return (self.const_coord,) + self.exps

    def order(self) -> int:
        return self.modulus // gcd(self.modulus, self.const_coord, *self.exps)

    def is_zero(self) -> bool:
        return self.const_coord == 0 and not any(self.exps)


@dataclass(frozen=True)
class RamificationData:
    """Ramified finite primes with their indices, canonical order, e >= 2 only."""

    entries: tuple[tuple[MonicIrreducible, int], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class NormalizedExtension:
    """A validated descriptor together with its vector model."""

    descriptor: KummerDescriptor
    basis: PrimeBasis
    vectors: tuple[RadicandVector, ...]   # one per original component
    kept: tuple[int, ...]                 # indices of non-trivial components
    group: RadicandGroup
    n: int                                # exponent of the Galois group
    component_degrees: tuple[int, ...]
    degenerate: bool                      # K = k

    @property
    def field(self) -> FqField:
        return self.descriptor.field

    @property
    def dropped(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.vectors)) if i not in self.kept)

    def degree(self) -> int:
        return self.group.order()


def normalize(desc: KummerDescriptor, seed: int = 0) -> NormalizedExtension:
    """Factor the radicands, build the vector model and span the group.

    Components whose radicand is already an m-th power contribute the
    zero vector; they are dropped from the generating set (their index
    appears in ``dropped``) and if nothing remains the extension is the
    base field itself, flagged ``degenerate``.
    """
    field = desc.field
    M = field.q - 1
    factored = []
    primes = []
    for comp in desc.components:
        if comp.D.degree() > 0:
            fac = factor(comp.D, seed)
        else:
            fac = []
        factored.append(fac)
        primes.extend(P for P, _ in fac)
    basis = PrimeBasis.from_primes(primes)

    vectors = []
    for comp, fac in zip(desc.components, factored):
        scale = M // comp.m
        const = (scale * field.dlog(comp.gamma)) % M
        exps = [0] * len(basis)
        for P, a in fac:
            exps[basis.index(P)] = (scale * a) % M
        vectors.append(RadicandVector(M, const, tuple(exps)))

    kept = tuple(i for i, v in enumerate(vectors) if not v.is_zero())
    group = RadicandGroup.spanned_by(
        M, 1 + len(basis), [vectors[i].row() for i in kept])
    degrees = tuple(v.order() for v in vectors)
    n = group.exponent()
    return NormalizedExtension(
        descriptor=desc, basis=basis, vectors=tuple(vectors), kept=kept,
        group=group, n=n, component_degrees=degrees, degenerate=not kept)


def ramification_indices(ext: NormalizedExtension) -> RamificationData:
    """e_P as the order of the group's image under projection to the
    P-coordinate; primes with e_P = 1 are omitted."""
    M = ext.group.modulus
    entries = []
    for j, P in enumerate(ext.basis):
        coords = [ext.vectors[i].exps[j] for i in ext.kept]
        e = M // gcd(M, *coords) if coords else 1
        if e > 1:
            entries.append((P, e))
    return RamificationData(tuple(entries))


def ramification_lcm_oracle(desc: KummerDescriptor, seed: int = 0) -> RamificationData:
    """Independent componentwise formula: e_P = lcm_i m_i / gcd(m_i, v_P(D_i)).

    Inertia in a tame abelian compositum is cyclic of lcm order, so this
    must agree with :func:`ramification_indices` on every descriptor.
    """
    primes = []
    for comp in desc.components:
        if comp.D.degree() > 0:
            primes.extend(P for P, _ in factor(comp.D, seed))
    basis = PrimeBasis.from_primes(primes)
    entries = []
    for P in basis:
        e = 1
        for comp in desc.components:
            v = valuation(comp.D, P) if comp.D.degree() > 0 else 0
            e = lcm(e, comp.m // gcd(comp.m, v))
        if e > 1:
            entries.append((P, e))
    return RamificationData(tuple(entries))


def infinite_ramification(ext: NormalizedExtension) -> int:
    """Ramification index over the infinite place of k.

    The valuation of a radicand gamma * D at infinity is -deg(D), so the
    image of the group under v -> -sum_P deg(P) * v_P determines the
    index, exactly as the finite projections do.
    """
    M = ext.group.modulus
    images = []
    for i in ext.kept:
        vec = ext.vectors[i]
        img = -sum(P.deg * vec.exps[j] for j, P in enumerate(ext.basis))
        images.append(img % M)
    return M // gcd(M, *images) if images else 1


# ---------------------------------------------------------------------------
# basis alignment, for comparing groups built over different prime sets

def union_basis(a: PrimeBasis, b: PrimeBasis) -> PrimeBasis:
    return PrimeBasis.from_primes(tuple(a) + tuple(b))


def embed_group(group: RadicandGroup, old_basis: PrimeBasis,
                new_basis: PrimeBasis) -> RadicandGroup:
    """Re-embed a group in a larger basis; missing coordinates are exact
    zeros because coordinates are valuation data."""
    positions = [1 + new_basis.index(P) for P in old_basis]
    dim = 1 + len(new_basis)
    gens = []
    for vec in group.generators:
        row = [0] * dim
        row[0] = vec[0]
        for old_j, new_j in enumerate(positions):
            row[new_j] = vec[1 + old_j]
        gens.append(tuple(row))
    return RadicandGroup.spanned_by(group.modulus, dim, gens)
