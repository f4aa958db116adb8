"""Exception types shared across the package."""


class WordSyntaxError(SyntaxError):
    """Raised when a word string does not match the word grammar."""


class CapExceeded(OverflowError):
    """Raised when an input is longer than the configured length cap."""


class InvalidInput(ValueError):
    """Raised when an argument is outside an operation's domain."""


class InternalInvariantError(AssertionError):
    """An arithmetic invariant failed. Always a bug, never bad input."""


class SliceMismatch(InternalInvariantError):
    """The top z-slice of f_w disagrees with the syllable product formula."""
