"""Exception hierarchy. The CLI maps each class onto an exit code."""


class FusionkitError(Exception):
    exit_code = 1


class InvalidInput(FusionkitError):
    """Bad user input (malformed type string, bad flag combination, ...)."""

    exit_code = 2


class InvalidType(InvalidInput):
    """(family, rank) pair outside the supported simple types."""


class ZeroLevel(InvalidInput):
    """A twisting level of 0 was requested; the twisting map is not injective."""


class PreconditionViolated(InvalidInput):
    pass


class UnsupportedType(InvalidInput):
    pass


class SizeExceeded(FusionkitError):
    exit_code = 3


class CapExceeded(SizeExceeded):
    """Weyl group closure grew past the element cap."""

    def __init__(self, cap: int, message: str | None = None):
        self.cap = cap
        super().__init__(message or f"Weyl group closure exceeded cap of {cap} elements")


class TooLarge(SizeExceeded):
    pass


class InternalAssertion(FusionkitError):
    """Consistency failure that indicates a bug, never a user error."""

    exit_code = 4


class NonIntegral(InternalAssertion):
    pass


class MismatchReport(InternalAssertion):
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
