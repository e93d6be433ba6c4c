"""Named group families and the small family-spec language used by the CLI.

Grammar::

    spec    := atom | "prod(" spec ("," spec)+ ")" | "semidirect(" spec "," spec "," action ")"
    atom    := "cyclic:" n | "dihedral:" n | "sym:" n | "alt:" n | "elem:" p "^" k | "q8" | "trivial"
    action  := "inv" | "triv" | "pow:" k

In ``semidirect`` every generator of the second factor acts on the first by
the named automorphism (inversion, identity, or k-th power of each generator).
"""
from __future__ import annotations

import math
import re

from . import config
from .errors import FamilySpecError, GroupError
from .groups import (FiniteGroup, alternating, cyclic, dihedral, direct_product,
                     elementary_abelian, quaternion8, semidirect_product, symmetric,
                     trivial_group)

_ATOM = re.compile(r"^(cyclic|dihedral|sym|alt):(\d+)$|^elem:(\d+)\^(\d+)$|^(q8|trivial)$")


def _family_order(kind, n):
    if kind == "cyclic" or kind == "dihedral":
        return n
    return math.factorial(n) // (2 if kind == "alt" and n > 1 else 1)


def _split_args(body: str) -> list[str]:
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FamilySpecError(f"unbalanced parentheses in {body!r}")
        elif ch == "," and depth == 0:
            args.append(body[start:i].strip())
            start = i + 1
    if depth:
        raise FamilySpecError(f"unbalanced parentheses in {body!r}")
    args.append(body[start:].strip())
    return args


def _action_images(n: FiniteGroup, token: str) -> list[int]:
    if token == "inv":
        return [n.inv[g] for g in n.generators]
    if token == "triv":
        return list(n.generators)
    m = re.fullmatch(r"pow:(-?\d+)", token)
    if m:
        k = int(m.group(1))
        return [n.power(g, k) for g in n.generators]
    raise FamilySpecError(f"unknown semidirect action {token!r} (expected inv, triv or pow:k)")


def builder_family(spec: str, cap: int | None = None) -> FiniteGroup:
    """Build a group from a family descriptor such as ``prod(sym:3,cyclic:5)``."""
    cap = config.order_cap(cap)
    spec = spec.strip().replace(" ", "")
    try:
        if spec.startswith("prod(") and spec.endswith(")"):
            parts = _split_args(spec[5:-1])
            if len(parts) < 2:
                raise FamilySpecError(f"prod needs at least two factors: {spec!r}")
            G = builder_family(parts[0], cap)
            for part in parts[1:]:
                G = direct_product(G, builder_family(part, cap), cap=cap)
            G.name = spec
            return G
        if spec.startswith("semidirect(") and spec.endswith(")"):
            parts = _split_args(spec[len("semidirect("):-1])
            if len(parts) != 3:
                raise FamilySpecError(f"semidirect takes (normal, complement, action): {spec!r}")
            n = builder_family(parts[0], cap)
            h = builder_family(parts[1], cap)
            images = _action_images(n, parts[2])
            action = {g: images for g in h.generators}
            return semidirect_product(n, h, action, name=spec, cap=cap)
        m = _ATOM.match(spec)
        if not m:
            raise FamilySpecError(f"unknown group family {spec!r}")
        if m.group(5) == "q8":
            return quaternion8()
        if m.group(5) == "trivial":
            return trivial_group()
        if m.group(3):
            p, k = int(m.group(3)), int(m.group(4))
            if p ** k > cap:
                raise FamilySpecError(f"{spec}: order {p ** k} exceeds cap {cap}")
            return elementary_abelian(p, k)
        kind, n = m.group(1), int(m.group(2))
        if kind in ("sym", "alt") and n > 5:
            raise FamilySpecError(f"{spec}: degree must be at most 5")
        if n >= 1 and _family_order(kind, n) > cap:
            raise FamilySpecError(f"{spec}: order {_family_order(kind, n)} exceeds cap {cap}")
        builder = {"cyclic": cyclic, "dihedral": dihedral, "sym": symmetric, "alt": alternating}[kind]
        return builder(n)
    except FamilySpecError:
        raise
    except GroupError:
        raise
    except ValueError as exc:
        raise FamilySpecError(f"{spec}: {exc}") from exc
