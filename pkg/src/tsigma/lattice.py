"""Subgroups as element bitmasks, and the full subgroup lattice.

A subgroup is identified by its member set, stored as a Python int whose
bit ``i`` is set when element ``i`` belongs to it.  Every ordering of
subgroups in this package uses the key ``(order, sorted members)``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

from . import config
from .errors import OrderCapExceeded
from .groups import FiniteGroup
from .numtheory import pi_part, prime_divisors


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Subgroup:
    __slots__ = ("group", "mask", "_gens", "__dict__")

    def __init__(self, group: FiniteGroup, mask: int, gens=None):
        self.group = group
        self.mask = mask
        self._gens = None if gens is None else tuple(gens)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def members(self) -> tuple:
        return tuple(bits(self.mask))

    @property
    def key(self):
        return (self.order, self.members)

    @property
    def generators(self) -> tuple:
        if self._gens is None:
            self._gens = _small_generating_set(self.group, self.mask)
        return self._gens

    def __contains__(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subgroup") -> bool:
        return self.mask != other.mask and self <= other

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.group is other.group and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={list(self.members)})"

    def is_trivial(self) -> bool:
        return self.mask == 1


def sort_key(H: Subgroup):
    return H.key


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (1 << G.order) - 1, G.generators)


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, 1, ())


def _extend(G: FiniteGroup, mask: int, elems: list, gens: tuple, x: int) -> tuple[int, list]:
    """Close the subgroup ``mask`` (members ``elems``, generated by ``gens``) with ``x``."""
    mul = G.mul
    new = []
    for e in elems:
        y = mul[e][x]
        if not (mask >> y) & 1:
            mask |= 1 << y
            new.append(y)
    allgens = gens + (x,)
    i = 0
    while i < len(new):
        row = mul[new[i]]
        for g in allgens:
            y = row[g]
            if not (mask >> y) & 1:
                mask |= 1 << y
                new.append(y)
        i += 1
    return mask, elems + new


def _closure(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, tuple]:
    mask, elems, gens = 1, [0], ()
    for x in seed:
        if not (mask >> x) & 1:
            mask, elems = _extend(G, mask, elems, gens, x)
            gens = gens + (x,)
    return mask, gens


def _small_generating_set(G: FiniteGroup, mask: int) -> tuple:
    orders = G.element_orders
    members = sorted(bits(mask), key=lambda x: (-orders[x], x))
    cur, elems, gens = 1, [0], ()
    for x in members:
        if not (cur >> x) & 1:
            cur, elems = _extend(G, cur, elems, gens, x)
            gens = gens + (x,)
            if cur == mask:
                break
    return gens


def generated_subgroup(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    seed = list(seed)
    for x in seed:
        if not 0 <= x < G.order:
            raise IndexError(f"element index {x} out of range for {G.name}")
    mask, gens = _closure(G, seed)
    return canonical(G, mask, gens)


def join(G: FiniteGroup, *subgroups: Subgroup) -> Subgroup:
    seed = [g for H in subgroups for g in H.generators]
    return generated_subgroup(G, seed)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return canonical(A.group, A.mask & B.mask)


def _lattice(G: FiniteGroup):
    return G._cache.get("lattice")


def canonical(G: FiniteGroup, mask: int, gens=None) -> Subgroup:
    """Return the lattice's own Subgroup object for ``mask`` when available."""
    lat = _lattice(G)
    if lat is not None:
        H = lat[1].get(mask)
        if H is not None:
            return H
    return Subgroup(G, mask, gens)


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    found = G._cache.get("cyclic_subgroups")
    if found is None:
        seen = {}
        mul = G.mul
        for x in range(G.order):
            m, y = 1, x
            while y != 0:
                m |= 1 << y
                y = mul[y][x]
            if m not in seen:
                seen[m] = Subgroup(G, m, (x,) if x else ())
        found = sorted(seen.values(), key=sort_key)
        G._cache["cyclic_subgroups"] = found
    return found


def all_subgroups(G: FiniteGroup, cap: int | None = None) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by (order, member list).

    Cyclic subgroups seed a worklist; each subgroup is joined with every
    cyclic subgroup it does not contain until nothing new appears.
    """
    lat = _lattice(G)
    if lat is not None:
        return lat[0]
    cap = config.lattice_cap(cap)
    if G.order > cap:
        raise OrderCapExceeded(f"{G.name} has order {G.order} > lattice cap {cap}",
                               partial_count=G.order, cap=cap)
    cyclics = cyclic_subgroups(G)
    reps = [(C.mask, C.generators[0]) for C in cyclics if C.mask != 1]
    by_mask = {C.mask: C for C in cyclics}
    work = [(C.mask, list(C.members), C.generators) for C in cyclics]
    i = 0
    while i < len(work):
        mask, elems, gens = work[i]
        i += 1
        for cmask, x in reps:
            if cmask & mask == cmask:
                continue
            new_mask, new_elems = _extend(G, mask, elems, gens, x)
            if new_mask not in by_mask:
                by_mask[new_mask] = Subgroup(G, new_mask, gens + (x,))
                work.append((new_mask, new_elems, gens + (x,)))
    subs = sorted(by_mask.values(), key=sort_key)
    G._cache["lattice"] = (subs, by_mask)
    return subs


def subgroups_of(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """Lattice members contained in ``H``."""
    m = H.mask
    return [K for K in all_subgroups(G) if K.mask & m == K.mask]


def overgroups(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    m = H.mask
    return [K for K in all_subgroups(G) if K.mask & m == m]


def conjugate_mask(G: FiniteGroup, mask: int, g: int) -> int:
    """Mask of ``g H g^-1``."""
    row = G.conj[g]
    out = 0
    for x in bits(mask):
        out |= 1 << row[x]
    return out


def normalizes(G: FiniteGroup, L: Subgroup, K: Subgroup) -> bool:
    """True iff every element of ``L`` normalises ``K``."""
    conj = G.conj
    km = K.mask
    kg = K.generators
    for g in L.generators:
        row = conj[g]
        for k in kg:
            if not (km >> row[k]) & 1:
                return False
    return True


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    return normalizes(G, whole(G), H)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    conj = G.conj
    hm, hg = H.mask, H.generators
    mask = 0
    for g in range(G.order):
        row = conj[g]
        if all((hm >> row[h]) & 1 for h in hg):
            mask |= 1 << g
    return canonical(G, mask)


def normal_core(G: FiniteGroup, H: Subgroup, L: Subgroup | None = None) -> Subgroup:
    """Largest subgroup of ``H`` normal in ``L`` (default ``G``); ``H <= L`` is assumed."""
    gens = G.generators if L is None else L.generators
    core = H.mask
    changed = True
    while changed and core != 1:
        changed = False
        for g in gens:
            nxt = core & conjugate_mask(G, core, g)
            if nxt != core:
                core = nxt
                changed = True
    return canonical(G, core)


def normal_closure(G: FiniteGroup, seed: Iterable[int], L: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup normal in ``L`` (default ``G``) containing ``seed``."""
    lgens = G.generators if L is None else L.generators
    conj = G.conj
    mask, gens = _closure(G, seed)
    elems = list(bits(mask))
    frontier = list(gens)
    while frontier:
        extra = []
        for x in frontier:
            for g in lgens:
                y = conj[g][x]
                if not (mask >> y) & 1:
                    mask, elems = _extend(G, mask, elems, gens, y)
                    gens = gens + (y,)
                    extra.append(y)
        frontier = extra
    return canonical(G, mask, gens)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of single elements."""
    found = G._cache.get("normal_subgroups")
    if found is not None:
        return found
    closures = {}
    for x in range(G.order):
        N = normal_closure(G, [x])
        closures.setdefault(N.mask, N)
    seeds = [N for N in closures.values() if N.mask != 1]
    by_mask = dict(closures)
    work = list(closures.values())
    i = 0
    while i < len(work):
        S = work[i]
        i += 1
        for N in seeds:
            if N.mask & S.mask == N.mask:
                continue
            J = join(G, S, N)
            if J.mask not in by_mask:
                by_mask[J.mask] = J
                work.append(J)
    found = sorted((canonical(G, m, H._gens) for m, H in by_mask.items()), key=sort_key)
    G._cache["normal_subgroups"] = found
    return found


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    nontrivial = [N for N in normal_subgroups(G) if N.mask != 1]
    return [N for N in nontrivial
            if not any(M.mask != N.mask and M.mask & N.mask == M.mask for M in nontrivial)]


def hall_subgroups(G: FiniteGroup, primes) -> list[Subgroup]:
    """Subgroups whose order is the pi-part of |G|; empty when none exist."""
    target = pi_part(G.order, primes)
    return [H for H in all_subgroups(G) if H.order == target]


def sylow_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    return hall_subgroups(G, {p})


def maximal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    full = (1 << G.order) - 1
    proper = [H for H in all_subgroups(G) if H.mask != full]
    return [H for H in proper
            if not any(K.order > H.order and K.mask & H.mask == H.mask for K in proper)]


def frattini(G: FiniteGroup) -> Subgroup:
    mask = (1 << G.order) - 1
    for M in maximal_subgroups(G):
        mask &= M.mask
    return canonical(G, mask)


def pi_elements_mask(G: FiniteGroup, primes) -> int:
    primes = frozenset(primes)
    orders = G.element_orders
    return mask_of(x for x in range(G.order) if prime_divisors(orders[x]) <= primes)


def normal_hall_subgroup(G: FiniteGroup, primes, within: Subgroup | None = None) -> Subgroup | None:
    """The normal Hall pi-subgroup of ``within`` (default ``G``), or None.

    A normal Hall pi-subgroup contains every pi-element, so it exists iff the
    pi-elements generate a subgroup of order ``|G|_pi``.
    """
    top = whole(G) if within is None else within
    pm = pi_elements_mask(G, primes) & top.mask
    target = pi_part(top.order, primes)
    if pm.bit_count() != target:
        return None
    H = generated_subgroup(G, bits(pm))
    return H if H.mask == pm else None


def as_group(H: Subgroup, name: str | None = None):
    """Materialise ``H`` as a FiniteGroup; element ``i`` is ``H.members[i]``.

    Parent elements are sorted lexicographically, so the inherited order is
    already canonical for the new group.
    """
    from .groups import FiniteGroup as _FG

    G = H.group
    members = H.members
    pos = {m: i for i, m in enumerate(members)}
    mul = [[pos[G.mul[a][b]] for b in members] for a in members]
    gens = [pos[g] for g in H.generators]
    sub = _FG(name or f"{G.name}<{H.order}>", G.degree, [G.elements[m] for m in members], mul, gens)
    sub._cache["parent_members"] = members
    return sub


def restrict(K: Subgroup, sub: FiniteGroup) -> Subgroup:
    """Translate a subgroup ``K`` of the parent into ``sub = as_group(H)`` (needs ``K <= H``)."""
    pos = {m: i for i, m in enumerate(sub._cache["parent_members"])}
    return canonical(sub, mask_of(pos[m] for m in K.members))


def lift(K: Subgroup, sub: FiniteGroup, parent: FiniteGroup) -> Subgroup:
    members = sub._cache["parent_members"]
    return canonical(parent, mask_of(members[i] for i in K.members))


def embedded(G: FiniteGroup, label: str) -> Subgroup:
    """Embedded factor recorded by a product constructor ('left', 'right', 'normal', 'complement')."""
    return canonical(G, mask_of(G.embeddings[label]))


def conjugate(H: Subgroup, g: int) -> Subgroup:
    return canonical(H.group, conjugate_mask(H.group, H.mask, g))


def are_conjugate(G: FiniteGroup, A: Subgroup, B: Subgroup) -> int | None:
    """Some ``g`` with ``g A g^-1 = B``, or None."""
    if A.order != B.order:
        return None
    for g in range(G.order):
        if conjugate_mask(G, A.mask, g) == B.mask:
            return g
    return None
