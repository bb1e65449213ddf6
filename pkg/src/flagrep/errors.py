"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied data, with a machine-readable reason code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ResourceCapError(RuntimeError):
    """A configured resource cap was hit before the computation finished."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
