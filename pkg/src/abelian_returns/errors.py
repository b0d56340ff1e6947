"""Exception hierarchy shared by every module of the package."""


class WordError(ValueError):
    """Base class for all errors raised by :mod:`abelian_returns`."""


class InvalidSpec(WordError):
    pass


class NotProlongable(InvalidSpec):
    pass


class InvalidSlope(InvalidSpec):
    pass


class DirectiveTooShort(WordError):
    pass


class EmptyFactor(WordError):
    pass


class LengthExceedsPrefix(WordError):
    pass


class TooFewOccurrences(WordError):
    """The subject occurs fewer than twice, so no return can be read off."""


class SubjectAbsent(WordError):
    pass


class NotPrimitive(WordError):
    pass


class NotCoprime(WordError):
    pass


class NotBalanced(WordError):
    pass


class ClassAbsent(WordError):
    pass


class LetterAbsent(WordError):
    pass


class SpecSyntaxError(InvalidSpec):
    """Raised by the spec-string parser."""
