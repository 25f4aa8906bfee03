"""Exception types shared across the package."""


class EnshError(Exception):
    """Base class for all package errors."""


class ContractViolation(EnshError):
    """An operation was called with inputs outside its contract."""


class MalformedInput(EnshError):
    """Raw input (text, digits, DIMACS, JSON) failed to parse or validate."""


class SizeGuard(EnshError):
    """An instance is too large for the requested exhaustive method."""


class OracleContract(EnshError):
    """A coloring oracle returned two different colors for one point."""


class VerificationFailure(EnshError):
    """A certificate or constructed object failed re-verification."""


class EngineError(EnshError):
    """An external engine (SAT solver subprocess) failed or misbehaved."""


class InternalInvariant(EnshError):
    """A proof-backed internal invariant was violated; indicates a bug."""
