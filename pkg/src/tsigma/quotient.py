"""Quotient groups G/N materialised as fresh permutation groups."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNormalError
from .groups import FiniteGroup, from_cayley
from .lattice import Subgroup, bits, canonical, is_normal, mask_of


@dataclass(frozen=True, eq=False)
class QuotientMap:
    source: FiniteGroup
    kernel: Subgroup
    target: FiniteGroup
    fiber: tuple  # source element index -> target element index

    def __call__(self, x: int) -> int:
        return self.fiber[x]


def quotient_group(G: FiniteGroup, N: Subgroup, name: str | None = None) -> QuotientMap:
    """Natural projection ``G -> G/N``.

    Cosets are numbered by their smallest member; the target is the left
    regular action of the coset table, re-sorted into canonical order.
    """
    if not is_normal(G, N):
        raise NotNormalError(f"subgroup of order {N.order} is not normal in {G.name}")
    cache = G._cache.setdefault("quotients", {})
    hit = cache.get(N.mask)
    if hit is not None:
        return hit
    coset = [-1] * G.order
    reps = []
    kernel = N.members
    for x in range(G.order):
        if coset[x] < 0:
            c = len(reps)
            reps.append(x)
            row = G.mul[x]
            for k in kernel:
                coset[row[k]] = c
    table = [[coset[G.mul[a][b]] for b in reps] for a in reps]
    target, new_of = from_cayley(table, name or f"{G.name}/{N.order}",
                                 gens=[coset[g] for g in G.generators], return_map=True)
    fiber = tuple(new_of[c] for c in coset)
    q = QuotientMap(G, N, target, fiber)
    cache[N.mask] = q
    return q


def image_subgroup(q: QuotientMap, H: Subgroup) -> Subgroup:
    """``HN/N`` as a subgroup of the target."""
    return canonical(q.target, mask_of(q.fiber[h] for h in bits(H.mask)))


def preimage_subgroup(q: QuotientMap, K: Subgroup) -> Subgroup:
    km = K.mask
    return canonical(q.source, mask_of(x for x, c in enumerate(q.fiber) if (km >> c) & 1))
