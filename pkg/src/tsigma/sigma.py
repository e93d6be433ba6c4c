"""Predicates relative to a partition sigma of the primes.

Every sigma-dependent notion here reduces to lattice searches plus order
arithmetic: a step ``K <= L`` of a sigma-subnormal chain is decided from
``pi(|L : core_L(K)|)`` without building the quotient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .errors import SigmaSpecError, UncoveredPrimeError
from .groups import FiniteGroup
from .lattice import (Subgroup, all_subgroups, bits, canonical, hall_subgroups, is_normal,
                      normal_closure, normal_core, normal_hall_subgroup, normal_subgroups,
                      normalizer, normalizes, sort_key, whole)
from .numtheory import is_prime, prime_divisors
from .quotient import quotient_group
from .structure import (chief_series, is_abelian_subgroup, is_dedekind_subgroup,
                        power_automorphism_on)

COMPLEMENT = "σ*"


@dataclass(frozen=True)
class SigmaPartition:
    """Blocks of a partition of all primes.

    ``minimal`` is the partition into singletons; otherwise ``explicit_blocks``
    lists finite blocks and ``has_complement`` adds one block holding every
    remaining prime.
    """
    explicit_blocks: tuple = ()
    has_complement: bool = False
    minimal: bool = False
    spec: str = field(default="", compare=False)

    @property
    def labels(self) -> tuple:
        names = tuple(f"σ{i + 1}" for i in range(len(self.explicit_blocks)))
        return names + ((COMPLEMENT,) if self.has_complement else ())

    def block_of(self, p: int) -> str:
        if self.minimal:
            return f"{{{p}}}"
        for i, block in enumerate(self.explicit_blocks):
            if p in block:
                return f"σ{i + 1}"
        if self.has_complement:
            return COMPLEMENT
        raise UncoveredPrimeError(p)

    def block_primes(self, label: str, universe) -> frozenset:
        """Primes of ``universe`` lying in block ``label``."""
        return frozenset(p for p in universe if self.block_of(p) == label)

    def describe(self, label: str) -> str:
        if self.minimal:
            return label
        if label == COMPLEMENT:
            covered = sorted(set().union(*self.explicit_blocks)) if self.explicit_blocks else []
            return "all primes" + (" except " + ",".join(map(str, covered)) if covered else "")
        return "{" + ",".join(map(str, sorted(self.explicit_blocks[int(label[1:]) - 1]))) + "}"

    def __str__(self):
        return self.spec or "minimal"


def parse_sigma(spec: str) -> SigmaPartition:
    """Parse ``"2,3|5|*"``-style specs; ``"minimal"`` is the singleton partition."""
    text = spec.strip()
    if not text:
        raise SigmaSpecError("empty sigma spec")
    if text == "minimal":
        return SigmaPartition(minimal=True, spec="minimal")
    parts = [part.strip() for part in text.split("|")]
    blocks, seen, complement = [], set(), False
    for k, part in enumerate(parts):
        if part == "*":
            if complement:
                raise SigmaSpecError(f"{spec!r}: more than one '*' block")
            if k != len(parts) - 1:
                raise SigmaSpecError(f"{spec!r}: '*' must be the last block")
            complement = True
            continue
        block = set()
        for token in part.split(","):
            token = token.strip()
            if not token.isdigit() or not is_prime(int(token)):
                raise SigmaSpecError(f"{spec!r}: {token!r} is not a prime")
            p = int(token)
            if p in seen:
                raise SigmaSpecError(f"{spec!r}: prime {p} appears in more than one block")
            seen.add(p)
            block.add(p)
        blocks.append(frozenset(block))
    return SigmaPartition(tuple(blocks), complement, spec=text)


def primary_block(n: int, sigma: SigmaPartition):
    """The single block containing pi(n); ``""`` for n = 1, None if pi(n) spans blocks."""
    labels = {sigma.block_of(p) for p in prime_divisors(n)}
    if not labels:
        return ""
    return labels.pop() if len(labels) == 1 else None


def is_sigma_primary(n: int, sigma: SigmaPartition) -> bool:
    return primary_block(n, sigma) is not None


def sigma_of(G, sigma: SigmaPartition) -> frozenset:
    """Labels of the blocks meeting pi(|G|); ``G`` may be a group, subgroup or order."""
    n = G if isinstance(G, int) else G.order
    return frozenset(sigma.block_of(p) for p in prime_divisors(n))


def block_prime_sets(n: int, sigma: SigmaPartition) -> dict:
    """``{label: block ∩ pi(n)}`` for every block meeting pi(n)."""
    out = {}
    for p in sorted(prime_divisors(n)):
        out.setdefault(sigma.block_of(p), set()).add(p)
    return {k: frozenset(v) for k, v in out.items()}


def is_sigma_nilpotent(G: FiniteGroup, sigma: SigmaPartition, within: Subgroup | None = None) -> bool:
    """A normal Hall sigma_i-subgroup exists for every block meeting the order.

    Such subgroups are pairwise coprime and normal, so their product is the
    internal direct decomposition into sigma-primary factors.
    """
    top = whole(G) if within is None else within
    for primes in block_prime_sets(top.order, sigma).values():
        if normal_hall_subgroup(G, primes, within) is None:
            return False
    return True


def is_sigma_soluble(G: FiniteGroup, sigma: SigmaPartition) -> bool:
    return all(is_sigma_primary(f, sigma) for f in chief_series(G).factor_orders)


# --- sigma-subnormality -----------------------------------------------------

@dataclass(frozen=True)
class Step:
    kind: str  # "normal" or "sigma_primary"
    block: str | None = None
    factor_order: int | None = None


@dataclass(frozen=True)
class SigmaSubnormalWitness:
    chain: tuple  # Subgroups H = H0 <= ... <= Hn = top
    steps: tuple  # Step for each consecutive pair


def step_justification(G: FiniteGroup, K: Subgroup, L: Subgroup, sigma: SigmaPartition):
    """Why ``K <= L`` is an admissible chain step, or None if it is not."""
    if normalizes(G, L, K):
        return Step("normal")
    if primary_block(L.order // K.order, sigma) is None:
        return None
    core = normal_core(G, K, L)
    factor = L.order // core.order
    block = primary_block(factor, sigma)
    if block is None:
        return None
    return Step("sigma_primary", block, factor)


def _step_valid(G, K, L, sigma) -> bool:
    if normalizes(G, L, K):
        return True
    if primary_block(L.order // K.order, sigma) is None:
        return False
    if primary_block(L.order, sigma) is not None:
        return True
    core = normal_core(G, K, L)
    return primary_block(L.order // core.order, sigma) is not None


def _subnormal_table(G: FiniteGroup, sigma: SigmaPartition, ambient: Subgroup | None = None):
    """Shortest-chain DP over subgroups of ``ambient`` (default ``G``).

    Returns ``{mask: (distance, successor)}`` for every sigma-subnormal
    subgroup of ``ambient``; ``successor`` is the next chain term, chosen as the
    smallest (order, members) overgroup among those realising the distance.
    """
    top = whole(G) if ambient is None else ambient
    key = ("sigma_subnormal", sigma, top.mask)
    table = G._cache.get(key)
    if table is not None:
        return table
    tm = top.mask
    subs = [K for K in all_subgroups(G) if K.mask & tm == K.mask]
    table = {tm: (0, None)}
    reachable = [canonical(G, tm)]
    for K in reversed(subs):
        if K.mask == tm:
            continue
        km, ko = K.mask, K.order
        best = None
        for L in reachable:
            if L.order <= ko or L.order % ko or L.mask & km != km:
                continue
            d = table[L.mask][0] + 1
            if best is not None and (d, L.key) >= (best[0], best[1].key):
                continue
            if _step_valid(G, K, L, sigma):
                best = (d, L)
        if best is not None:
            table[km] = (best[0], best[1])
            reachable.append(K)
    G._cache[key] = table
    return table


def sigma_subnormal_subgroups(G: FiniteGroup, sigma: SigmaPartition,
                              ambient: Subgroup | None = None) -> list[Subgroup]:
    table = _subnormal_table(G, sigma, ambient)
    return sorted((canonical(G, m) for m in table), key=sort_key)


def is_sigma_subnormal(G: FiniteGroup, H: Subgroup, sigma: SigmaPartition,
                       ambient: Subgroup | None = None):
    """``(verdict, witness)``; the witness is a shortest chain from ``H`` to ``ambient``."""
    table = _subnormal_table(G, sigma, ambient)
    entry = table.get(H.mask)
    if entry is None:
        return False, None
    chain = [canonical(G, H.mask)]
    steps = []
    while entry[1] is not None:
        L = entry[1]
        steps.append(step_justification(G, chain[-1], L, sigma))
        chain.append(L)
        entry = table[L.mask]
    return True, SigmaSubnormalWitness(tuple(chain), tuple(steps))


# --- residual, T_sigma, R_sigma_i ---------------------------------------------

def sigma_nilpotent_residual(G: FiniteGroup, sigma: SigmaPartition) -> Subgroup:
    """Intersection of all normal N with G/N sigma-nilpotent."""
    key = ("sigma_residual", sigma)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    mask = (1 << G.order) - 1
    for N in normal_subgroups(G):
        if N.mask & mask == mask:
            continue  # cannot shrink the running intersection
        if is_sigma_nilpotent(quotient_group(G, N).target, sigma):
            mask &= N.mask
    D = canonical(G, mask)
    G._cache[key] = D
    return D


def is_t_sigma(G: FiniteGroup, sigma: SigmaPartition):
    """``(verdict, counterexample)``: every sigma-subnormal subgroup is normal."""
    for H in sigma_subnormal_subgroups(G, sigma):
        if not is_normal(G, H):
            return False, H
    return True, None


@dataclass(frozen=True)
class RFailure:
    primes: tuple
    hall: Subgroup
    subgroup: Subgroup


def satisfies_r_sigma(G: FiniteGroup, block: str, sigma: SigmaPartition):
    """Condition R for one block: ``(verdict, RFailure | None)``.

    Only primes dividing |G| matter, so pi ranges over the nonempty subsets of
    ``block ∩ pi(G)``.
    """
    primes = sorted(sigma.block_primes(block, prime_divisors(G.order)))
    subs = all_subgroups(G)
    for r in range(1, len(primes) + 1):
        for pi in itertools.combinations(primes, r):
            for H in hall_subgroups(G, pi):
                N = normalizer(G, H)
                hm = H.mask
                for K in subs:
                    if K.order > H.order:
                        break
                    if K.mask & hm == K.mask and not normalizes(G, N, K):
                        return False, RFailure(pi, H, K)
    return True, None


def satisfies_r_all(G: FiniteGroup, sigma: SigmaPartition):
    """R for every block meeting pi(G); returns ``(verdict, {label: RFailure})``."""
    failures = {}
    for label in sorted(sigma_of(G, sigma)):
        ok, why = satisfies_r_sigma(G, label, sigma)
        if not ok:
            failures[label] = why
    return not failures, failures


def robinson_check(G: FiniteGroup) -> bool:
    """R_p for every prime p (minimal partition)."""
    minimal = parse_sigma("minimal")
    return all(satisfies_r_sigma(G, minimal.block_of(p), minimal)[0]
               for p in prime_divisors(G.order))


def o_sigma(D, block: str, sigma: SigmaPartition) -> Subgroup:
    """Largest normal sigma_i-subgroup of ``D`` (a Subgroup, or a whole FiniteGroup).

    It is the join of the normal closures in ``D`` of those elements whose
    closure is a sigma_i-group.
    """
    if isinstance(D, FiniteGroup):
        D = whole(D)
    G = D.group
    orders = G.element_orders
    mask = 1
    for x in bits(D.mask):
        if (mask >> x) & 1:
            continue
        if any(sigma.block_of(p) != block for p in prime_divisors(orders[x])):
            continue
        N = normal_closure(G, [x], D)
        if all(sigma.block_of(p) == block for p in prime_divisors(N.order)):
            mask = normal_closure(G, list(bits(mask | N.mask)), D).mask
    return canonical(G, mask)


# --- statement (3) -------------------------------------------------------------

@dataclass
class Statement3:
    holds: bool
    i: bool
    ii: bool
    iii: bool
    residual: Subgroup
    complement: Subgroup | None
    detail: dict


def structure_check_statement3(G: FiniteGroup, sigma: SigmaPartition) -> Statement3:
    """Check the semidirect decomposition by the sigma-nilpotent residual D.

    (i) D abelian, Hall, odd, with a Dedekind complement M;
    (ii) every element of G induces a power automorphism on D;
    (iii) for every block meeting pi(G) and every Hall sigma_i-subgroup H_i,
    O_sigma_i(D) <= H_i and has a normal complement in H_i.
    """
    D = sigma_nilpotent_residual(G, sigma)
    detail = {}
    index = G.order // D.order
    abelian = is_abelian_subgroup(D)
    hall = gcd(D.order, index) == 1
    odd = D.order % 2 == 1
    complement = None
    complements = [M for M in all_subgroups(G) if M.order == index and M.mask & D.mask == 1]
    for M in complements:
        if is_dedekind_subgroup(M):
            complement = M
            break
    detail["i"] = {"abelian": abelian, "hall": hall, "odd": odd,
                   "complements": len(complements), "dedekind_complement": complement is not None}
    cond_i = abelian and hall and odd and complement is not None

    cond_ii = power_automorphism_on(G, D)

    cond_iii = True
    blocks = {}
    for label, primes in sorted(block_prime_sets(G.order, sigma).items()):
        O = o_sigma(D, label, sigma)
        halls = hall_subgroups(G, primes)
        info = {"o_sigma_order": O.order, "hall_subgroups": len(halls), "ok": True}
        if not halls:
            info["ok"] = False
            info["reason"] = "no Hall subgroup for this block"
        for H in halls:
            if O.mask & H.mask != O.mask:
                info.update(ok=False, reason="O_sigma_i(D) not contained in a Hall subgroup",
                            hall=H)
                break
            want = H.order // O.order
            found = None
            for S in all_subgroups(G):
                if S.order > want:
                    break
                if (S.order == want and S.mask & H.mask == S.mask and S.mask & O.mask == 1
                        and normalizes(G, H, S)):
                    found = S
                    break
            if found is None:
                info.update(ok=False, reason="no normal complement in a Hall subgroup", hall=H)
                break
        blocks[label] = info
        cond_iii = cond_iii and info["ok"]
    detail["iii"] = blocks
    return Statement3(cond_i and cond_ii and cond_iii, cond_i, cond_ii, cond_iii, D,
                      complement, detail)


@dataclass
class TheoremVerdict:
    group: str
    order: int
    sigma: str
    sigma_soluble: bool
    s1_t_sigma: bool
    s2_r_all: bool
    s3_structure: bool
    residual_order: int
    t_counterexample: Subgroup | None = None
    r_failures: dict = field(default_factory=dict)
    statement3: Statement3 | None = None

    @property
    def consistent(self) -> bool:
        return self.s1_t_sigma == self.s2_r_all == self.s3_structure


def theorem_verdict(G: FiniteGroup, sigma: SigmaPartition) -> TheoremVerdict:
    soluble = is_sigma_soluble(G, sigma)
    s1, counter = is_t_sigma(G, sigma)
    s2, failures = satisfies_r_all(G, sigma)
    s3 = structure_check_statement3(G, sigma)
    return TheoremVerdict(G.name, G.order, str(sigma), soluble, s1, s2, s3.holds,
                          s3.residual.order, counter, failures, s3)

