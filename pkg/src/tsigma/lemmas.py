"""Executable property suites for the background facts behind the theorem audit.

Each check walks a corpus group and records a failure string whenever a
lemma's conclusion is violated while its hypothesis holds.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .lattice import (all_subgroups, are_conjugate, as_group, canonical, frattini,
                      hall_subgroups, is_normal, join, normal_subgroups, restrict)
from .numtheory import pi_part, prime_divisors
from .quotient import image_subgroup, quotient_group
from .sigma import (SigmaPartition, block_prime_sets, is_sigma_nilpotent,
                    sigma_nilpotent_residual, sigma_subnormal_subgroups)
from .structure import is_dedekind, is_dedekind_subgroup, is_nilpotent, is_soluble

SUITES = ("nilpotent-closure", "nilpotent-all-subnormal", "residual-quotient",
          "subnormal-intersection", "subnormal-image", "subnormal-transitive",
          "subnormal-hall-normal", "subnormal-hall-meet", "hall-soluble",
          "dedekind-nilpotent", "dedekind-product", "dedekind-inherited")


@dataclass
class LemmaResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)


def check_nilpotent_closure(G, sigma, r):
    normals = normal_subgroups(G)
    nil = [N for N in normals if is_sigma_nilpotent(G, sigma, N)]
    seen = {}
    for A, B in itertools.combinations(nil, 2):
        if A.mask & B.mask in (A.mask, B.mask):
            continue
        P = join(G, A, B)
        if P.mask not in seen:
            seen[P.mask] = is_sigma_nilpotent(G, sigma, P)
        r.check(seen[P.mask], f"{G.name}: product of normal sigma-nilpotent subgroups of orders "
                              f"{A.order},{B.order} is not sigma-nilpotent")
    if is_sigma_nilpotent(G, sigma):
        for N in normals:
            r.check(is_sigma_nilpotent(quotient_group(G, N).target, sigma),
                    f"{G.name}: quotient by normal subgroup of order {N.order} not sigma-nilpotent")
        for H in all_subgroups(G):
            r.check(is_sigma_nilpotent(G, sigma, H),
                    f"{G.name}: subgroup {list(H.members)} not sigma-nilpotent")
    phi = frattini(G)
    for E in normals:
        EG = as_group(E)
        top = quotient_group(EG, restrict(canonical(G, E.mask & phi.mask), EG)).target
        if is_sigma_nilpotent(top, sigma):
            r.check(is_sigma_nilpotent(G, sigma, E),
                    f"{G.name}: E of order {E.order} with E/(E∩Φ) sigma-nilpotent is not")


def check_nilpotent_all_subnormal(G, sigma, r):
    if is_sigma_nilpotent(G, sigma):
        sn = {H.mask for H in sigma_subnormal_subgroups(G, sigma)}
        for H in all_subgroups(G):
            r.check(H.mask in sn, f"{G.name}: subgroup {list(H.members)} of a sigma-nilpotent "
                                  f"group is not sigma-subnormal")


def check_residual_quotient(G, sigma, r):
    D = sigma_nilpotent_residual(G, sigma)
    for N in normal_subgroups(G):
        q = quotient_group(G, N)
        r.check(image_subgroup(q, D).mask == sigma_nilpotent_residual(q.target, sigma).mask,
                f"{G.name}: residual does not commute with quotient by order-{N.order} subgroup")


def check_subnormal_properties(G, sigma, results):
    r1, r2, r3, r4, r5 = (results[k] for k in SUITES[3:8])
    subs = all_subgroups(G)
    sn = sigma_subnormal_subgroups(G, sigma)
    sn_masks = {A.mask for A in sn}

    for K in subs:
        inside = {H.mask for H in sigma_subnormal_subgroups(G, sigma, ambient=K)}
        for A in sn:
            r1.check((A.mask & K.mask) in inside,
                     f"{G.name}: A∩K not sigma-subnormal in K (|A|={A.order}, |K|={K.order})")

    for N in normal_subgroups(G):
        q = quotient_group(G, N)
        qsn = {H.mask for H in sigma_subnormal_subgroups(q.target, sigma)}
        for A in sn:
            r2.check(image_subgroup(q, A).mask in qsn,
                     f"{G.name}: image of sigma-subnormal A (|A|={A.order}) not sigma-subnormal "
                     f"modulo normal subgroup of order {N.order}")

    for A in sn:
        for K in sigma_subnormal_subgroups(G, sigma, ambient=A):
            r3.check(K.mask in sn_masks,
                     f"{G.name}: K sigma-subnormal in A sigma-subnormal in G but not in G "
                     f"(|K|={K.order}, |A|={A.order})")

    blocks = block_prime_sets(G.order, sigma)
    labels = sorted(blocks)
    for size in range(1, len(labels) + 1):
        for chosen in itertools.combinations(labels, size):
            primes = frozenset().union(*(blocks[l] for l in chosen))
            for H in hall_subgroups(G, primes):
                if H.mask in sn_masks:
                    r4.check(is_normal(G, H), f"{G.name}: sigma-subnormal Hall "
                                              f"{sorted(primes)}-subgroup is not normal")

    for label, primes in blocks.items():
        for H in hall_subgroups(G, primes):
            if H.order == 1:
                continue
            for A in sn:
                if not prime_divisors(A.order) & primes:
                    continue
                meet = A.mask & H.mask
                ok = meet != 1 and meet.bit_count() == pi_part(A.order, primes)
                r5.check(ok, f"{G.name}: A∩H is not a nontrivial Hall {label}-subgroup of A "
                             f"(|A|={A.order}, |H|={H.order})")


def check_hall_soluble(G, r):
    if not is_soluble(G):
        return
    primes = sorted(prime_divisors(G.order))
    subs = all_subgroups(G)
    for size in range(1, len(primes) + 1):
        for pi in itertools.combinations(primes, size):
            halls = hall_subgroups(G, pi)
            r.check(bool(halls), f"{G.name}: no Hall {list(pi)}-subgroup")
            if not halls:
                continue
            r.check(len({H.order for H in halls}) == 1, f"{G.name}: Hall orders differ")
            for H in halls[1:]:
                r.check(are_conjugate(G, halls[0], H) is not None,
                        f"{G.name}: Hall {list(pi)}-subgroups not conjugate")
            for K in subs:
                if prime_divisors(K.order) <= set(pi):
                    r.check(any(K.mask & H.mask == K.mask for H in halls),
                            f"{G.name}: {list(pi)}-subgroup {list(K.members)} in no Hall subgroup")


def check_dedekind(G, results):
    ri, rii, riii = (results[k] for k in SUITES[9:])
    dedekind = is_dedekind(G)
    if dedekind:
        ri.check(is_nilpotent(G), f"{G.name}: Dedekind but not nilpotent")
    normals = normal_subgroups(G)
    for A in normals:
        if A.order in (1, G.order) or gcd(A.order, G.order // A.order) != 1:
            continue
        for B in normals:
            if B.order * A.order == G.order and A.mask & B.mask == 1:
                if is_dedekind_subgroup(A) and is_dedekind_subgroup(B):
                    rii.check(dedekind, f"{G.name}: A x B with Dedekind factors, A Hall, "
                                        f"is not Dedekind")
    if dedekind:
        for H in all_subgroups(G):
            riii.check(is_dedekind_subgroup(H), f"{G.name}: subgroup {list(H.members)} "
                                                f"of a Dedekind group is not Dedekind")
        for N in normals:
            riii.check(is_dedekind(quotient_group(G, N).target),
                       f"{G.name}: quotient by order-{N.order} subgroup not Dedekind")


def run_lemmas(corpus, sigma: SigmaPartition) -> list[LemmaResult]:
    results = {name: LemmaResult(name) for name in SUITES}
    for G in corpus:
        check_nilpotent_closure(G, sigma, results["nilpotent-closure"])
        check_nilpotent_all_subnormal(G, sigma, results["nilpotent-all-subnormal"])
        check_residual_quotient(G, sigma, results["residual-quotient"])
        check_subnormal_properties(G, sigma, results)
        check_hall_soluble(G, results["hall-soluble"])
        check_dedekind(G, results)
    return [results[name] for name in SUITES]
