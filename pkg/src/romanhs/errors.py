"""Error types shared across the package.

Two failure classes are kept apart on purpose: malformed input or a violated
precondition is the caller's problem (InputError), while a refusal to run an
exponential routine past its size guard is a policy decision (GuardRefused).
The command line maps them to exit codes 1 and 2 respectively.
"""


class InputError(ValueError):
    """Malformed instance data or a violated operation precondition."""


class GuardRefused(RuntimeError):
    """A size-guarded routine refused to run (instance too large, or the
    answer is trivially known and constructing the output would be
    degenerate)."""
