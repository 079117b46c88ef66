class BRSCError(Exception):
    """A domain precondition failed (exit code 1 on the command line)."""


class RepresentationError(BRSCError):
    pass


class NotBooleanRepresentable(BRSCError):
    pass


class PreconditionError(BRSCError):
    pass


class ParseError(ValueError):
    """Malformed input text (exit code 2 on the command line)."""
