"""Custom exceptions for the Schur ring engine."""


class SchurRingError(Exception):
    """Base exception for all Schur ring engine errors."""

    def __init__(self, message: str, error_code: str = None, details: dict = None):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)


class CapExceededError(SchurRingError):
    """Exception raised when an input exceeds a configured search cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"{what} of size {size} exceeds the configured cap {cap}",
            error_code="CAP_EXCEEDED",
            details={"what": what, "size": size, "cap": cap},
        )


class SpecParseError(SchurRingError):
    """Exception raised for unparseable group, field or tuple literals."""
    pass


class GroupError(SchurRingError):
    """Exception raised for invalid group data or group operations."""
    pass


class NotAbelianError(GroupError):
    """Exception raised when an abelian group is required."""
    pass


class NotPrimePowerError(GroupError):
    """Exception raised when moduli are not prime powers."""
    pass


class CyclicGroupError(GroupError):
    """Exception raised when a non-cyclic group is required."""
    pass


class LatticeError(SchurRingError):
    """Exception raised for invalid posets or lattices."""
    pass


class NotALatticeError(LatticeError):
    """Exception raised when a poset lacks a meet or join for some pair."""
    pass


class NotDistributiveError(LatticeError):
    """Exception raised when a distributive lattice is required."""
    pass


class TupleError(SchurRingError):
    """Exception raised for out-of-range or non-canonical tuples."""
    pass


class UnsupportedPrimeError(SchurRingError):
    """Exception raised for primes outside an operation's domain (p = 2)."""
    pass


class AlgebraError(SchurRingError):
    """Exception raised during group-algebra computations."""
    pass


class FieldMismatchError(AlgebraError):
    """Exception raised when operands live over different groups or fields."""
    pass


class NotInvertibleError(AlgebraError):
    """Exception raised when a scalar is not invertible in the coefficient field."""
    pass


class NotSchurRingError(AlgebraError):
    """Exception raised when a partition or span fails the S-ring axioms."""
    pass


class ConstructionError(SchurRingError):
    """Exception raised when an S-ring construction receives invalid input."""
    pass


class CompatibilityError(ConstructionError):
    """Exception raised when wedge product factors are incompatible."""
    pass


class VerificationError(SchurRingError):
    """Exception raised when a computed result fails its self-verification."""
    pass
