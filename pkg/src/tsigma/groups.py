"""Concrete finite groups carried by permutations.

Permutations are tuples of 0-based images.  The product ``p * q`` is the
composition ``x -> p[q[x]]`` (apply ``q`` first), so the left regular
representation of a Cayley table is a homomorphism.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import ActionError, InvalidPermutationError, OrderCapExceeded

Perm = tuple


def validate_perm(images: Sequence[int], degree: int, label: str = "permutation") -> Perm:
    perm = tuple(int(v) for v in images)
    if len(perm) != degree:
        raise InvalidPermutationError(
            f"{label} {list(perm)} has length {len(perm)}, expected degree {degree}"
        )
    if sorted(perm) != list(range(degree)):
        raise InvalidPermutationError(f"{label} {list(perm)} is not a bijection on 0..{degree - 1}")
    return perm


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Perm:
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a] = b
    return validate_perm(images, degree, "cycle product")


def cycle_notation(p: Perm) -> str:
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


class FiniteGroup:
    """A closed permutation group with full multiplication and inverse tables.

    Elements are sorted lexicographically by image sequence, which puts the
    identity at index 0.  Instances are treated as immutable; ``_cache`` only
    holds data derived from the tables (lattice, conjugation table, ...).
    """

    def __init__(self, name, degree, elements, mul, generators, embeddings=None):
        self.name = name
        self.degree = degree
        self.elements = elements
        self.mul = mul
        self.generators = tuple(generators)
        self.identity = 0
        n = len(elements)
        self.inv = [0] * n
        for a in range(n):
            row = mul[a]
            for b in range(n):
                if row[b] == 0:
                    self.inv[a] = b
                    break
        self.embeddings = dict(embeddings or {})
        self._index = None
        self._cache = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def index_of(self, perm: Sequence[int]) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        try:
            return self._index[tuple(perm)]
        except KeyError:
            raise InvalidPermutationError(f"{list(perm)} is not an element of {self.name}") from None

    @property
    def conj(self):
        """``conj[g][x]`` is the index of ``g x g^-1``."""
        table = self._cache.get("conj")
        if table is None:
            mul, inv = self.mul, self.inv
            table = [[mul[row_g[x]][inv[g]] for x in range(self.order)]
                     for g, row_g in enumerate(mul)]
            self._cache["conj"] = table
        return table

    @property
    def element_orders(self):
        orders = self._cache.get("element_orders")
        if orders is None:
            orders = []
            for x in range(self.order):
                k, y = 1, x
                while y != 0:
                    y = self.mul[y][x]
                    k += 1
                orders.append(k)
            self._cache["element_orders"] = orders
        return orders

    def commutator(self, a: int, b: int) -> int:
        """``a^-1 b^-1 a b``."""
        mul, inv = self.mul, self.inv
        return mul[mul[inv[a]][inv[b]]][mul[a][b]]

    def power(self, x: int, k: int) -> int:
        k %= self.element_orders[x]
        y = 0
        for _ in range(k):
            y = self.mul[y][x]
        return y


def element_order(G: FiniteGroup, x: int) -> int:
    if not 0 <= x < G.order:
        raise IndexError(f"element index {x} out of range for {G.name}")
    return G.element_orders[x]


def _mul_table(elements: list) -> list:
    arr = np.asarray(elements, dtype=np.int32).reshape(len(elements), -1)
    lookup = {row.tobytes(): i for i, row in enumerate(arr)}
    table = []
    for i in range(len(elements)):
        comp = arr[i][arr]
        table.append([lookup[row.tobytes()] for row in comp])
    return table


def build_from_generators(degree: int, gens, name: str | None = None, cap: int | None = None,
                          embeddings=None) -> FiniteGroup:
    """Close ``gens`` under composition and return the resulting group."""
    cap = config.order_cap(cap)
    perms = [validate_perm(g, degree, f"generator {k}") for k, g in enumerate(gens)]
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for g in perms:
            y = tuple(e[x] for x in g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise OrderCapExceeded(
                        f"closure of {name or 'generators'} exceeds order cap {cap}",
                        partial_count=len(seen), cap=cap)
                queue.append(y)
    elements = sorted(seen)
    mul = _mul_table(elements)
    index = {e: i for i, e in enumerate(elements)}
    gen_idx = []
    for g in perms:
        i = index[g]
        if i != 0 and i not in gen_idx:
            gen_idx.append(i)
    G = FiniteGroup(name or "group", degree, elements, mul, gen_idx, embeddings)
    G._index = index
    return G


def from_cayley(table, name: str, gens: Iterable[int] = (), embeddings=None,
                return_map: bool = False):
    """Realise an abstract Cayley table faithfully via its left regular representation.

    ``gens`` and the index lists in ``embeddings`` refer to rows of ``table``
    and are translated to the new canonical indices; with ``return_map`` the
    row-to-index translation is returned alongside the group.
    """
    n = len(table)
    perms = [tuple(row) for row in table]
    order = sorted(range(n), key=lambda i: perms[i])
    new_of = [0] * n
    for new, old in enumerate(order):
        new_of[old] = new
    elements = [perms[old] for old in order]
    mul = [[new_of[table[order[a]][order[b]]] for b in range(n)] for a in range(n)]
    gen_idx = []
    for g in gens:
        if new_of[g] != 0 and new_of[g] not in gen_idx:
            gen_idx.append(new_of[g])
    emb = {k: tuple(sorted(new_of[i] for i in v)) for k, v in (embeddings or {}).items()}
    G = FiniteGroup(name, n, elements, mul, gen_idx, emb)
    return (G, new_of) if return_map else G


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None,
                   cap: int | None = None) -> FiniteGroup:
    cap = config.order_cap(cap)
    if A.order * B.order > cap:
        raise OrderCapExceeded(
            f"|{A.name}| * |{B.name}| = {A.order * B.order} exceeds order cap {cap}",
            partial_count=A.order * B.order, cap=cap)
    da, db = A.degree, B.degree
    gens = [A.elements[g] + tuple(range(da, da + db)) for g in A.generators]
    gens += [tuple(range(da)) + tuple(da + v for v in B.elements[g]) for g in B.generators]
    G = build_from_generators(da + db, gens, name or f"prod({A.name},{B.name})", cap)
    left = [i for i, e in enumerate(G.elements) if e[da:] == tuple(range(da, da + db))]
    right = [i for i, e in enumerate(G.elements) if e[:da] == tuple(range(da))]
    G.embeddings = {"left": tuple(left), "right": tuple(right)}
    return G


def _extend_hom(src: FiniteGroup, gen_images, target_mul, label):
    """Extend generator images to a full map on ``src``; check the homomorphism law."""
    phi = [None] * src.order
    phi[0] = 0
    queue = deque([0])
    gens = list(src.generators)
    while queue:
        x = queue.popleft()
        for g, img in zip(gens, gen_images):
            y = src.mul[x][g]
            v = target_mul(phi[x], img)
            if phi[y] is None:
                phi[y] = v
                queue.append(y)
            elif phi[y] != v:
                raise ActionError(f"{label} does not extend to a homomorphism")
    return phi


def semidirect_product(n: FiniteGroup, h: FiniteGroup, action, name: str | None = None,
                       cap: int | None = None) -> FiniteGroup:
    """Build ``n ⋊ h``.

    ``action`` maps element indices of ``h`` (a generating set of ``h``) to the
    images of ``n.generators`` under the automorphism that element induces.
    The product is ``(a, x)(b, y) = (a * x(b), x * y)``.
    """
    cap = config.order_cap(cap)
    total = n.order * h.order
    if total > cap:
        raise OrderCapExceeded(f"|{n.name} ⋊ {h.name}| = {total} exceeds order cap {cap}",
                               partial_count=total, cap=cap)
    autos = {}
    for hx, images in action.items():
        images = [int(v) for v in images]
        if len(images) != len(n.generators):
            raise ActionError(
                f"action of h-element {hx} gives {len(images)} images for "
                f"{len(n.generators)} generators of {n.name}")
        phi = _extend_hom(n, images, lambda a, b: n.mul[a][b], f"action of h-element {hx}")
        if len(set(phi)) != n.order:
            raise ActionError(f"action of h-element {hx} is not bijective on {n.name}")
        autos[hx] = phi

    ident = list(range(n.order))
    alpha = [None] * h.order
    alpha[0] = ident
    queue = deque([0])
    keys = list(autos)
    while queue:
        y = queue.popleft()
        for k in keys:
            z = h.mul[y][k]
            a_y, a_k = alpha[y], autos[k]
            v = [a_y[a_k[x]] for x in range(n.order)]
            if alpha[z] is None:
                alpha[z] = v
                queue.append(z)
            elif alpha[z] != v:
                raise ActionError("action does not define a homomorphism from h into Aut(n)")
    if any(a is None for a in alpha):
        raise ActionError("action keys do not generate h")

    hn = h.order
    table = [[0] * total for _ in range(total)]
    for a in range(n.order):
        row_a = n.mul[a]
        for x in range(hn):
            ax = alpha[x]
            row_x = h.mul[x]
            r = table[a * hn + x]
            for b in range(n.order):
                nb = row_a[ax[b]] * hn
                for y in range(hn):
                    r[b * hn + y] = nb + row_x[y]
    gens = [g * hn for g in n.generators] + [y for y in h.generators]
    emb = {"normal": [a * hn for a in range(n.order)], "complement": list(range(hn))}
    return from_cayley(table, name or f"semidirect({n.name},{h.name})", gens, emb)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
    return build_from_generators(n, gens, f"cyclic:{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order, acting on the polygon vertices."""
    if order < 2 or order % 2:
        raise ValueError(f"dihedral order must be even and >= 2, got {order}")
    m = order // 2
    name = f"dihedral:{order}"
    if m == 1:
        return build_from_generators(2, [(1, 0)], name)
    if m == 2:
        return build_from_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name)
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return build_from_generators(m, [rot, ref], name)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError(f"symmetric degree must be in 1..5, got {n}")
    gens = []
    if n >= 2:
        gens.append(perm_from_cycles([[0, 1]], n))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return build_from_generators(n, gens, f"sym:{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError(f"alternating degree must be in 1..5, got {n}")
    gens = [perm_from_cycles([[0, 1, k]], n) for k in range(2, n)]
    return build_from_generators(n, gens, f"alt:{n}")


def quaternion8() -> FiniteGroup:
    # signed units 1, i, j, k as (sign, unit) -> index sign * 4 + unit
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    table = [[0] * 8 for _ in range(8)]
    for a in range(8):
        for b in range(8):
            sign, unit = unit_mul[(a % 4, b % 4)]
            neg = (a >= 4) ^ (b >= 4) ^ (sign < 0)
            table[a][b] = unit + 4 * neg
    return from_cayley(table, "q8", gens=[1, 2])


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if k < 0 or p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"elementary_abelian needs a prime p and k >= 0, got ({p}, {k})")
    degree = p * k
    gens = []
    for j in range(k):
        g = list(range(degree))
        for i in range(p):
            g[j * p + i] = j * p + (i + 1) % p
        gens.append(tuple(g))
    return build_from_generators(max(degree, 1), gens if degree else [], f"elem:{p}^{k}")


def trivial_group() -> FiniteGroup:
    return build_from_generators(1, [], "trivial")
