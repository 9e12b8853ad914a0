"""Exception hierarchy shared by all ndlogic modules."""


class NdlogicError(Exception):
    """Base class for every error raised by this package."""


class LanguageError(NdlogicError):
    """Bad signature, bad theta set, or other language-level misuse."""


class ParseError(LanguageError):
    """Formula text rejected; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SemanticsError(NdlogicError):
    """Ill-formed algebra/matrix or misused semantic operation."""


class NonTotalAlgebraError(SemanticsError):
    """Semantic checking requires a total algebra; some cell is empty."""


class CalculiError(NdlogicError):
    """Ill-formed calculus, derivation tree, or proof-search misuse."""


class LogicsError(NdlogicError):
    """Bad parameter for a bundled logic family, or a bundled artifact
    failing its own construction check."""


class SerializeError(NdlogicError):
    """JSON document does not match the expected schema."""
