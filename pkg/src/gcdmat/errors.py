"""Exception types shared across the package."""


class GcdMatError(Exception):
    """Base class for errors raised by gcdmat."""


class CapExceededError(GcdMatError, ValueError):
    """Raised when a size parameter is above the configured limit."""

    def __init__(self, what, n, cap):
        self.what = what
        self.n = n
        self.cap = cap
        super().__init__(f"{what}: n={n} exceeds cap {cap}")


class TableFormatError(GcdMatError, ValueError):
    """A custom function file could not be parsed."""

    def __init__(self, path, message, line=None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
