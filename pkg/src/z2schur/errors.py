"""Exception types shared across the package."""


class Z2SchurError(Exception):
    """Base class for all package errors."""


class InvalidLength(Z2SchurError):
    """Sequence length is empty, negative, or above the supported cap."""


class LengthMismatch(Z2SchurError):
    """Two sequences (or blocks) that must share a length do not."""


class NotCoprime(Z2SchurError):
    """Decimation multiplier is not coprime to the sequence length."""


class InvalidWeight(Z2SchurError):
    """Weight index outside [-1, n]."""


class RingAxiomViolation(Z2SchurError):
    """A brute-force product was not uniform across a weight class.

    This signals an indexing bug in the caller or the oracle itself, never
    a property of the ring: orbit partitions always satisfy the axiom.
    """


class TheoremViolation(Z2SchurError):
    """An executable theorem check failed; carries a witness in its message."""


class NotHadamard(Z2SchurError):
    """Matrix operation requires a Hadamard matrix and the input is not one."""


class InvalidCoreOrder(Z2SchurError):
    """Core order is not a prime congruent to 3 mod 4."""


class InvalidCore(Z2SchurError):
    """Core sequence fails the weight or flat-autocorrelation precondition."""


class ScaleExceeded(Z2SchurError):
    """The requested enumeration is beyond the supported desk scale.

    Raised explicitly instead of truncating a search or enumeration.
    """
