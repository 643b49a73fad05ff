"""Exception types shared across the package."""


class SpecMismatchError(ValueError):
    """Operands belong to different field specs."""


class MismatchError(ValueError):
    """Codes have incompatible length or field."""


class NotABasisError(ValueError):
    """A claimed basis is linearly dependent."""


class ZeroCodeError(ValueError):
    """Operation undefined on the zero code."""


class TooLargeError(ValueError):
    """Exhaustive search would exceed the enumeration budget."""


class PreconditionError(ValueError):
    """A stated precondition does not hold for the given inputs."""
