"""Exceptions shared across modules."""


class CapExceeded(RuntimeError):
    """A computation would exceed the configured degree cap for its root system."""

    def __init__(self, kind: str, degree: int, cap: int, what: str = "computation"):
        super().__init__(f"{what} for {kind} needs degree {degree}, above the cap {cap}")
        self.kind = kind
        self.degree = degree
        self.cap = cap


class VerificationError(AssertionError):
    """An internal consistency check failed."""
