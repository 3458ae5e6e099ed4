"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A caller-supplied parameter violates an operation's preconditions."""


class ResourceCapError(RuntimeError):
    """An enumeration or construction would exceed its configured cap.

    Raised instead of returning a possibly-wrong answer.  Caps are counted
    in enumerated objects, never wall time, so the outcome is deterministic
    across machines.
    """


class RetryExhaustedError(RuntimeError):
    """Every attempt of a randomized construction failed its acceptance test.

    ``attempts`` holds one ``(attempt_index, sample_size, bad_size)`` triple
    per failed attempt, for post-mortem reporting.
    """

    def __init__(self, message: str, attempts):
        super().__init__(message)
        self.attempts = list(attempts)
