"""Extended genus fields of a Kummer extension, two constructions.

``clement_genus_field`` builds the field obtained by extending the
constants to degree n (the exponent of the Galois group) and adjoining
an e_P-th root of every ramified prime P, where e_P is the ramification
index.  Its degree over the base is n times the product of the e_P, and
that identity is checked exactly on every run.

``rarzvi_genus_field`` composites the extension itself with roots of
the signed primes (-1)^(deg P) * P, one per ramified prime.  It always
sits between the extension and the clement field; the comparison
machinery reports the containments and the degree index.

Both constructions live in the same radicand-vector lattice as the
extension, so containment and equality are exact subgroup questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .ffield import FqField, FqElem
from .groups import RadicandGroup
from .kummer import (KummerComponent, KummerDescriptor, NormalizedExtension,
                     PrimeBasis, ramification_indices)
from .polyring import MonicIrreducible, Poly, is_irreducible


@dataclass(frozen=True)
class GenusField:
    """A constructed genus field: constant extension degree plus radicals.

    ``radicals`` entries (e, c, P) mean the e-th root of c * P is
    adjoined.  For the compositum construction the radical list is not
    canonical and is left empty; the group is always authoritative.
    """

    field: FqField
    basis: PrimeBasis
    constant_degree: int
    radicals: tuple[tuple[int, FqElem, MonicIrreducible], ...]
    group: RadicandGroup
    degree: int
    galois: tuple[int, ...]
    canonical: bool


@dataclass(frozen=True)
class ComparisonReport:
    k_in_rarzvi: bool
    rarzvi_in_clement: bool
    rarzvi_eq_clement: bool
    index_rarzvi_in_clement: int
    degree_k: int
    degree_rarzvi: int
    degree_clement: int


def _sign_dlog(field: FqField) -> int:
    """dlog of -1: zero in characteristic 2, (q - 1) / 2 otherwise."""
    return 0 if field.p == 2 else (field.q - 1) // 2


def _radical_vector(M: int, dim: int, e: int, c_dlog: int, position: int):
    """Vector of the e-th root of c * P, P at the given basis position."""
    row = [0] * dim
    row[0] = ((M // e) * c_dlog) % M
    row[1 + position] = M // e
    return tuple(row)


def clement_genus_field(ext: NormalizedExtension) -> GenusField:
    """The extended genus field: constants of degree n, plus an e_P-th
    root of each ramified prime.  Degenerate extensions give the base
    field back (n = 1, no radicals, degree 1)."""
    field = ext.field
    M = ext.group.modulus
    dim = ext.group.dim
    n = ext.n
    ram = ramification_indices(ext)

    gens = []
    if n > 1:
        gens.append(((M // n),) + (0,) * (dim - 1))
    radicals = []
    for P, e in ram:
        radicals.append((e, field.one, P))
        gens.append(_radical_vector(M, dim, e, 0, ext.basis.index(P)))
    group = RadicandGroup.spanned_by(M, dim, gens)
    return GenusField(field=field, basis=ext.basis, constant_degree=n,
                      radicals=tuple(radicals), group=group,
                      degree=group.order(), galois=group.invariant_factors(),
                      canonical=True)


def verify_degree_formula(gf: GenusField, ext: NormalizedExtension) -> bool:
    """Exact check that the genus field degree is n times the product of
    the ramification indices."""
    ram = ramification_indices(ext)
    return gf.group.order() == ext.n * prod(e for _, e in ram)


def rarzvi_genus_field(ext: NormalizedExtension) -> GenusField:
    """Compositum of the extension with the e_P-th roots of the signed
    primes (-1)^(deg P) * P over the ramified primes."""
    field = ext.field
    M = ext.group.modulus
    dim = ext.group.dim
    sign = _sign_dlog(field)
    gens = []
    for P, e in ramification_indices(ext):
        gens.append(_radical_vector(M, dim, e, (P.deg * sign) % M,
                                    ext.basis.index(P)))
    group = ext.group.join(gens)
    return GenusField(field=field, basis=ext.basis,
                      constant_degree=group.constant_subgroup_order(),
                      radicals=(), group=group, degree=group.order(),
                      galois=group.invariant_factors(), canonical=False)


def compare(ext: NormalizedExtension) -> ComparisonReport:
    """Containments and degrees of extension, compositum and genus field.

    All three groups live over the extension's own prime basis, so the
    subgroup engine answers every question directly.
    """
    cl = clement_genus_field(ext)
    ra = rarzvi_genus_field(ext)
    k_in_r = ra.group.contains(ext.group)
    r_in_c = cl.group.contains(ra.group)
    eq = r_in_c and ra.group.contains(cl.group)
    index = cl.degree // ra.degree if r_in_c else 0
    return ComparisonReport(
        k_in_rarzvi=k_in_r, rarzvi_in_clement=r_in_c, rarzvi_eq_clement=eq,
        index_rarzvi_in_clement=index, degree_k=ext.group.order(),
        degree_rarzvi=ra.degree, degree_clement=cl.degree)


def as_descriptor(gf: GenusField) -> KummerDescriptor:
    """Express a genus field as a Kummer descriptor of its own.

    The constant extension of degree d is cut out by a d-th root of the
    canonical generator g (whose radicand class has exact order d for
    every divisor d of q - 1), and each radical (e, 1, P) becomes the
    component (1, P, e).  Normalizing the result reproduces the group
    exactly, which makes the genus field construction a fixed point.
    """
    if not gf.canonical:
        raise ValueError("only the canonical radical form can be re-described")
    field = gf.field
    comps = []
    if gf.constant_degree > 1:
        comps.append(KummerComponent(field.g, Poly.one(field), gf.constant_degree))
    for e, c, P in gf.radicals:
        comps.append(KummerComponent(c, P.poly, e))
    return KummerDescriptor(field, tuple(comps))


def signed_closed_form_agrees(ext: NormalizedExtension):
    """Diagnostic for the rewritten form of the compositum construction.

    When every non-trivial component adjoins a root of gamma_i * P_i
    with the P_i distinct irreducibles that are exactly the ramified
    primes, the compositum can also be written with constants
    eps_i = (-1)^(deg P_i) * gamma_i split off the primes.  Returns True
    or False when that rewriting is well-defined (it does not always
    produce the same field), or None when it is not applicable.
    """
    desc = ext.descriptor
    field = ext.field
    M = ext.group.modulus
    dim = ext.group.dim
    ram = ramification_indices(ext)
    kept_comps = [desc.components[i] for i in ext.kept]
    if not kept_comps or len(kept_comps) != len(ram):
        return None
    for comp in kept_comps:
        if comp.D.degree() < 1 or not is_irreducible(comp.D):
            return None
    ram_by_poly = {P.poly: e for P, e in ram}
    if {c.D for c in kept_comps} != set(ram_by_poly):
        return None

    sign = _sign_dlog(field)
    gens = []
    for comp in kept_comps:
        e = ram_by_poly[comp.D]
        P = next(P for P, _ in ram if P.poly == comp.D)
        eps_dlog = (field.dlog(comp.gamma) + P.deg * sign) % M
        row = [0] * dim
        row[0] = ((M // e) * eps_dlog) % M
        gens.append(tuple(row))
        gens.append(_radical_vector(M, dim, e, 0, ext.basis.index(P)))
    closed = RadicandGroup.spanned_by(M, dim, gens)
    return closed.equals(rarzvi_genus_field(ext).group)
