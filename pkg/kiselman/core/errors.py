"""
Error hierarchy for kiselman
kiselman 라이브러리 전용 예외 정의

Every error raised on purpose by the library derives from
:class:`KiselmanError`. Input problems additionally derive from
``ValueError`` and budget problems from ``RuntimeError`` so callers that
only know the builtin types still catch them.
"""


class KiselmanError(Exception):
    """Root of all library errors."""


class WordParseError(KiselmanError, ValueError):
    """Word or content text could not be parsed."""


class LetterOutOfRangeError(KiselmanError, ValueError):
    """A letter or index lies outside ``1..n``."""


class RankMismatchError(KiselmanError, ValueError):
    """Two operands belong to semigroups of different rank."""


class StepNotApplicableError(KiselmanError, ValueError):
    """A reduction step does not match the word it is applied to."""


class NotIdempotentError(KiselmanError, ValueError):
    """An idempotent argument was expected."""


class NotNilpotentError(KiselmanError, ValueError):
    """A matrix has no vanishing power within its dimension."""


class NotUnionClosedError(KiselmanError, ValueError):
    """A family of contents is not closed under union."""


class InvalidContentError(KiselmanError, ValueError):
    """A content argument is excluded for this operation."""


class ResourceLimitError(KiselmanError, RuntimeError):
    """A configured element, table or search budget was exceeded."""
