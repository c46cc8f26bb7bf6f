"""Exception types raised across the package."""


class ResourceLimitError(RuntimeError):
    """Requested system is larger than the dense-matrix cap allows."""


class UnsupportedSizeError(ValueError):
    """Chain length outside the range where a closed form has been verified."""


class NotHermitianError(ValueError):
    """Matrix handed to the eigensolver is not Hermitian."""
