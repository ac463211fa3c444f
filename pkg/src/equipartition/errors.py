"""Exception types shared by all modules (the CLI maps them to exit codes)."""


class InconsistencyError(RuntimeError):
    """An internal cross-check failed (zero determinant, bad rotation amount, ...)."""


class ResourceLimitError(RuntimeError):
    """A configured size guard was exceeded; results are never silently truncated."""
