"""Exception hierarchy shared by every module of the package."""


class GroupError(ValueError):
    """Base class for all errors raised by tsigma."""


class InvalidPermutationError(GroupError):
    pass


class OrderCapExceeded(GroupError):
    """Raised when a closure or lattice computation outgrows its configured cap."""

    def __init__(self, message, partial_count=None, cap=None):
        super().__init__(message)
        self.partial_count = partial_count
        self.cap = cap


class ActionError(GroupError):
    """A semidirect-product action is not a homomorphism into Aut(n)."""


class NotNormalError(GroupError):
    pass


class FamilySpecError(GroupError):
    pass


class SigmaSpecError(GroupError):
    pass


class UncoveredPrimeError(GroupError):
    """A prime falls outside every block of a partition that has no complement block."""

    def __init__(self, prime):
        super().__init__(f"prime {prime} is not covered by any block (add a '*' block)")
        self.prime = prime


class GroupFileError(GroupError):
    pass
