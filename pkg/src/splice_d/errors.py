"""Exception hierarchy.

Every domain failure derives from :class:`SpliceDError`; the CLI maps those to
exit code 1 and :class:`ParseError` to exit code 2.
"""


class SpliceDError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self):
        return type(self).__name__


class NotCoprime(SpliceDError):
    pass


class BadIndex(SpliceDError):
    pass


class BadFiber(SpliceDError):
    """A fiber reference that does not resolve to exactly one multiplicity."""


class NotStabilized(SpliceDError):
    def __init__(self, message, side=None):
        super().__init__(message)
        self.side = side


class BadFraction(SpliceDError):
    pass


class NegativeOrientation(SpliceDError):
    pass


class WrongOrientation(SpliceDError):
    pass


class NotNegativeDefinite(SpliceDError):
    pass


class NotUnimodular(SpliceDError):
    pass


class Singular(SpliceDError):
    pass


class ParityViolation(SpliceDError):
    pass


class NonIntegerMuBar(SpliceDError):
    pass


class MissingData(SpliceDError):
    pass


class NegativeV(SpliceDError):
    pass


class InequalityViolated(SpliceDError):
    pass


class EqualityFailed(SpliceDError):
    pass


class SemanticError(SpliceDError):
    """Syntactically valid expression describing an invalid object."""

    def __init__(self, message, reason, offset=None):
        super().__init__(message)
        self.reason = reason
        self.offset = offset


class ParseError(Exception):
    """Syntax error at a byte offset, with the set of tokens that would fit."""

    def __init__(self, offset, expected, text=""):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        found = text[offset:offset + 10] if offset < len(text) else "end of input"
        super().__init__(
            f"at offset {offset}: expected {' or '.join(self.expected)}, found {found!r}"
        )

    @property
    def code(self):
        return "ParseError"
