"""Process-wide size limits.

The group cap bounds closure enumeration; the lattice cap is lower because
subgroup enumeration dominates the cost of every analysis.
"""

ORDER_CAP = 512
LATTICE_CAP = 256


def set_caps(order_cap=None, lattice_cap=None):
    global ORDER_CAP, LATTICE_CAP
    if order_cap is not None:
        ORDER_CAP = int(order_cap)
    if lattice_cap is not None:
        LATTICE_CAP = int(lattice_cap)


def order_cap(cap=None):
    return ORDER_CAP if cap is None else cap


def lattice_cap(cap=None):
    return LATTICE_CAP if cap is None else cap
