"""Exception types shared across the package.

``DomainError`` marks a violated precondition on caller-supplied data
(bad shapes, non-unimodular matrices, unknown names, out-of-range
parameters).  The command line maps it to exit code 1.

``InternalCheckError`` marks a failed internal cross-check -- a place
where two independently derived quantities disagreed (for example the
counting formula against the elimination oracle, or a non-divisible
exact division).  It must never trigger on valid input; the command
line maps it to exit code 2.
"""


class DomainError(ValueError):
    """A precondition on user-supplied input failed."""


class InternalCheckError(RuntimeError):
    """An internal consistency assertion failed (this is a bug)."""
