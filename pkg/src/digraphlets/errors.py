"""Exception types shared across the package."""


class InputError(ValueError):
    """User-supplied data is unusable: unreadable file, malformed line, bad parameter."""


class UnprunableError(RuntimeError):
    """No threshold keeps the weighted network connected with sufficient degree."""


class InvariantError(RuntimeError):
    """Internal consistency violation, e.g. counter disagreement or overflow guard."""
