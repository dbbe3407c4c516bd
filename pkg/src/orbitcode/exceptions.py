class OrbitCodeError(Exception):
    """Base class for errors raised by orbitcode."""


class FieldError(OrbitCodeError, ValueError):
    """Invalid field parameters or an element outside the expected field."""


class PolynomialError(OrbitCodeError, ValueError):
    pass


class CodeSpecError(OrbitCodeError, ValueError):
    pass


class DecodeFailure(OrbitCodeError):
    """The received word could not be decoded within the guaranteed radius.

    ``stage`` names the detector that fired: ``key_equation``, ``locate``,
    ``values`` or ``verification``.
    """

    def __init__(self, stage: str, message: str):
        super().__init__(f"uncorrectable ({stage}): {message}")
        self.stage = stage
        self.detail = message


class InternalInconsistency(OrbitCodeError, AssertionError):
    """A mathematical invariant failed; indicates a bug, not bad input."""
