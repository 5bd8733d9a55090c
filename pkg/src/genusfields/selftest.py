"""Reduced-size property suites, runnable as ``genusfields selftest``.

These re-run the package's main invariants on small random corpora:
discrete-log round trips, refactoring of random polynomials, the
subgroup engine against exhaustive enumeration, the two ramification
formulas against each other, the degree formula, the containment chain,
the fixed-point property of the genus field construction, and byte
determinism of the JSON report.  The full-size versions live in the
test suite; this is a quick health check with no test dependencies.
"""

from __future__ import annotations

import random
from math import gcd, prod

from .ffield import build_field
from .genus import (as_descriptor, clement_genus_field, rarzvi_genus_field,
                    verify_degree_formula)
from .groups import RadicandGroup, enumerate_subgroup
from .intmath import divisors
from .kummer import (KummerComponent, KummerDescriptor, embed_group, normalize,
                     ramification_indices, ramification_lcm_oracle)
from .polyring import Poly, factor, is_irreducible
from .report import JobConfig, run

FIELD_POOL = ((3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1))

_FIELDS = {}


def pooled_field(p, f):
    key = (p, f)
    if key not in _FIELDS:
        _FIELDS[key] = build_field(p, f)
    return _FIELDS[key]


def random_monic(field, rng, max_deg, min_deg=0):
    deg = rng.randint(min_deg, max_deg)
    coeffs = [field.from_index(rng.randrange(field.q)) for _ in range(deg)]
    return Poly(field, coeffs + [field.one])


def random_descriptor(rng, field=None, max_components=3, max_deg=6):
    """A uniformly messy but always valid descriptor."""
    if field is None:
        field = pooled_field(*rng.choice(FIELD_POOL))
    q = field.q
    nontrivial = [d for d in divisors(q - 1) if d > 1]
    comps = []
    for _ in range(rng.randint(1, max_components)):
        gamma = field.from_index(rng.randrange(1, q))
        D = random_monic(field, rng, max_deg)
        if nontrivial and rng.random() >= 0.1:
            m = rng.choice(nontrivial)
        else:
            m = 1
        comps.append(KummerComponent(gamma, D, m))
    return KummerDescriptor(field, tuple(comps))


def random_group(rng, max_enum=1 << 12):
    """A random subgroup small enough to enumerate."""
    while True:
        modulus = rng.randint(2, 16)
        dim = rng.randint(1, 4)
        if modulus ** dim <= max_enum:
            break
    gens = [tuple(rng.randrange(modulus) for _ in range(dim))
            for _ in range(rng.randint(0, 3))]
    return RadicandGroup.spanned_by(modulus, dim, gens)


def torsion_counts_match(group, elems) -> bool:
    """The number of solutions of d*x = 0 determines the invariant
    factors; compare enumerated counts with the computed factorization."""
    M = group.modulus
    factors = group.invariant_factors()
    if prod(factors) != len(elems):
        return False
    for d in divisors(M):
        counted = sum(1 for x in elems if all((d * c) % M == 0 for c in x))
        if counted != prod(gcd(d, di) for di in factors):
            return False
    return True


# ---------------------------------------------------------------------------
# individual checks; each returns True on success

def check_dlog_roundtrip():
    for p, f in FIELD_POOL:
        field = pooled_field(p, f)
        g = field.g
        for x in field.elements():
            if x.is_zero():
                continue
            if g ** x.dlog() != x:
                return False
    return True


def check_factor_refactors(rng, count=80):
    for _ in range(count):
        field = pooled_field(*rng.choice(FIELD_POOL))
        f = random_monic(field, rng, 8, min_deg=1)
        product = Poly.one(field)
        for P, mult in factor(f, seed=rng.randrange(1 << 30)):
            if not is_irreducible(P.poly):
                return False
            product = product * P.poly ** mult
        if product != f:
            return False
    return True


def check_group_engine(rng, count=60):
    for _ in range(count):
        group = random_group(rng)
        elems = enumerate_subgroup(group)
        if group.order() != len(elems):
            return False
        if not torsion_counts_match(group, elems):
            return False
        for _ in range(10):
            vec = tuple(rng.randrange(group.modulus) for _ in range(group.dim))
            if group.member(vec) != (vec in elems):
                return False
    return True


def check_extension_pipeline(rng, count=40):
    for _ in range(count):
        desc = random_descriptor(rng)
        ext = normalize(desc)
        if ramification_indices(ext).entries != \
                ramification_lcm_oracle(desc).entries:
            return False
        cl = clement_genus_field(ext)
        ra = rarzvi_genus_field(ext)
        if not verify_degree_formula(cl, ext):
            return False
        if not (ra.group.contains(ext.group) and cl.group.contains(ra.group)):
            return False
        if cl.group.constant_subgroup_order() != ext.n:
            return False
        redone = normalize(as_descriptor(cl))
        if not embed_group(redone.group, redone.basis, ext.basis).equals(cl.group):
            return False
    return True


def check_report_determinism(rng):
    field = pooled_field(5, 1)
    comps = (KummerComponent(field.const(2), Poly.from_ints(field, [0, 1, 2, 1]), 4),)
    config = JobConfig(field=field, components=comps, seed=7,
                       include_comparison=True, include_infinite=True)
    return run(config).to_json() == run(config).to_json()


def run_selftest(seed: int = 0, write=print) -> bool:
    rng = random.Random(seed)
    checks = [
        ("dlog round trip", check_dlog_roundtrip),
        ("factorization refactors", lambda: check_factor_refactors(rng)),
        ("subgroup engine vs enumeration", lambda: check_group_engine(rng)),
        ("extension pipeline invariants", lambda: check_extension_pipeline(rng)),
        ("report determinism", lambda: check_report_determinism(rng)),
    ]
    all_ok = True
    for name, fn in checks:
        ok = fn()
        all_ok &= ok
        write(f"{'ok  ' if ok else 'FAIL'} {name}")
    write("selftest passed" if all_ok else "selftest FAILED")
    return all_ok
