"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the region where the requested quantity exists."""


class NoBoundStateError(DomainError):
    """The radial problem has no normalizable bound states."""


class ContractError(ValueError):
    """Inputs that are individually valid but inconsistent with each other."""


class StateNotCapturedError(RuntimeError):
    """The finite-difference box does not hold the requested eigenstate."""
