"""Exception types shared across the package."""


class BraidError(ValueError):
    """Base class for domain errors (bad words, unsupported families, ...)."""


class ParseError(BraidError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotPositiveError(BraidError):
    pass


class SearchCapExceeded(BraidError):
    """A bounded search visited ``cap`` words without reaching a verdict."""

    def __init__(self, cap: int):
        super().__init__(f"search cap of {cap} visited words exceeded")
        self.cap = cap


class NotAdequateError(BraidError):
    def __init__(self, a_failures, b_failures):
        self.a_failures = tuple(a_failures)
        self.b_failures = tuple(b_failures)
        super().__init__(
            "diagram is not adequate "
            f"(A-state failures at crossings {list(self.a_failures)}, "
            f"B-state failures at crossings {list(self.b_failures)})"
        )


class UnsupportedFamilyError(BraidError):
    pass


class VerificationError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
