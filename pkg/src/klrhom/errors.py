"""Exception types shared across the package."""


class NotSplittableError(ValueError):
    """A tableau does not split along the requested column cut."""


class InvalidJoinError(ValueError):
    """Multipartitions violate the column compatibility needed to join."""


class EngineInconsistencyError(RuntimeError):
    """The Specht engine produced something that fails its own certificate.

    Carries the first failed witness so the caller can report it.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
