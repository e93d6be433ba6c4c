"""Classical structure: commutators, nilpotency, solubility, Dedekind groups, chief series."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .groups import FiniteGroup
from .lattice import (Subgroup, all_subgroups, bits, canonical, cyclic_subgroups, is_normal,
                      normal_closure, normal_hall_subgroup, normal_subgroups, sort_key,
                      trivial, whole)
from .numtheory import prime_divisors
from .quotient import quotient_group


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple  # ascending Subgroups, trivial .. G
    factor_orders: tuple


def commutator_subgroup(G: FiniteGroup, K: Subgroup, L: Subgroup | None = None) -> Subgroup:
    """``[K, L]`` for ``K`` normal in ``G``; ``L`` defaults to ``G``."""
    lgens = G.generators if L is None else L.generators
    seed = {G.commutator(k, g) for k in bits(K.mask) for g in lgens}
    return normal_closure(G, sorted(seed))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    gens = G.generators
    seed = {G.commutator(a, b) for a in gens for b in gens}
    return normal_closure(G, sorted(seed))


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [whole(G)]
    while True:
        H = series[-1]
        seed = {G.commutator(a, b) for a in H.generators for b in H.generators}
        nxt = normal_closure(G, sorted(seed), H)
        if nxt.mask == H.mask:
            return series
        series.append(nxt)


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    series = [whole(G)]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt.mask == series[-1].mask:
            return series
        series.append(nxt)


def is_abelian(G: FiniteGroup) -> bool:
    mul = G.mul
    return all(mul[a][b] == mul[b][a] for a in G.generators for b in G.generators)


def is_abelian_subgroup(H: Subgroup) -> bool:
    mul = H.group.mul
    gens = H.generators
    return all(mul[a][b] == mul[b][a] for a in gens for b in gens)


def is_nilpotent(G: FiniteGroup) -> bool:
    """Every Sylow subgroup is normal."""
    return all(normal_hall_subgroup(G, {p}) is not None for p in prime_divisors(G.order))


def is_soluble(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_dedekind(G: FiniteGroup) -> bool:
    # every subgroup is a join of cyclic ones, so cyclic subgroups suffice
    return all(is_normal(G, C) for C in cyclic_subgroups(G))


def is_dedekind_subgroup(H: Subgroup) -> bool:
    """Whether ``H`` itself (as an abstract group) is Dedekind."""
    G = H.group
    conj, orders, mul = G.conj, G.element_orders, G.mul
    hgens = H.generators
    for x in bits(H.mask):
        cyc = 0
        y = x
        for _ in range(orders[x]):
            cyc |= 1 << y
            y = mul[y][x]
        if not all((cyc >> conj[g][x]) & 1 for g in hgens):
            return False
    return True


def nilpotent_residual(G: FiniteGroup) -> Subgroup:
    """Terminal term of the lower central series."""
    return lower_central_series(G)[-1]


def is_hall_subgroup(G: FiniteGroup, D: Subgroup) -> bool:
    return gcd(D.order, G.order // D.order) == 1


def _chief_series(G: FiniteGroup, largest: bool) -> ChiefSeries:
    normals = normal_subgroups(G)
    full = (1 << G.order) - 1
    current = trivial(G)
    terms = [canonical(G, 1)]
    while current.mask != full:
        above = [N for N in normals if N.mask != current.mask and N.mask & current.mask == current.mask]
        minimal = [N for N in above
                   if not any(M.mask != N.mask and M.mask & N.mask == M.mask for M in above)]
        minimal.sort(key=sort_key)
        current = minimal[-1] if largest else minimal[0]
        terms.append(current)
    factors = tuple(terms[k + 1].order // terms[k].order for k in range(len(terms) - 1))
    return ChiefSeries(tuple(terms), factors)


def chief_series(G: FiniteGroup, largest_first: bool = False) -> ChiefSeries:
    """One chief series, refined bottom-up.

    At each stage the minimal normal subgroups of ``G/current`` correspond to
    normal subgroups of ``G`` minimal over ``current``; the smallest by
    (order, members) is chosen, or the largest with ``largest_first``.
    """
    return _chief_series(G, largest_first)


def power_automorphism_on(G: FiniteGroup, D: Subgroup) -> bool:
    """Every element of ``G`` maps each ``d`` in ``D`` into ``<d>``."""
    conj, orders, mul = G.conj, G.element_orders, G.mul
    for x in bits(D.mask):
        cyc, y = 0, x
        for _ in range(orders[x]):
            cyc |= 1 << y
            y = mul[y][x]
        for g in G.generators:
            if not (cyc >> conj[g][x]) & 1:
                return False
    return True


def is_subnormal(G: FiniteGroup, H: Subgroup) -> bool:
    """Classical subnormality via the descending series of successive normal closures."""
    cur = whole(G)
    while True:
        nxt = normal_closure(G, H.generators, cur)
        if nxt.mask == cur.mask:
            return cur.mask == H.mask
        cur = nxt


def is_t_group(G: FiniteGroup) -> bool:
    """Every subnormal subgroup is normal."""
    return all(is_normal(G, H) for H in all_subgroups(G) if is_subnormal(G, H))


def gaschutz_check(G: FiniteGroup) -> bool:
    R = nilpotent_residual(G)
    if not (is_abelian_subgroup(R) and is_hall_subgroup(G, R) and R.order % 2 == 1):
        return False
    if not is_dedekind(quotient_group(G, R).target):
        return False
    return power_automorphism_on(G, R)


def center(G: FiniteGroup) -> Subgroup:
    mul = G.mul
    mask = 0
    for x in range(G.order):
        if all(mul[x][g] == mul[g][x] for g in G.generators):
            mask |= 1 << x
    return canonical(G, mask)


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """Ascending central series Z_0 = 1 <= Z_1 <= ...; used to cross-check nilpotency."""
    series = [trivial(G)]
    while True:
        Z = series[-1]
        q = quotient_group(G, Z)
        zq = center(q.target)
        nxt = canonical(G, sum(1 << x for x, c in enumerate(q.fiber) if (zq.mask >> c) & 1))
        if nxt.mask == Z.mask:
            return series
        series.append(nxt)

