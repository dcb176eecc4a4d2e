"""Exception types shared across the toolkit.

Every error raised on purpose by this package derives from LdqualError so
callers can catch tool failures without swallowing genuine bugs.
"""


class LdqualError(Exception):
    """Base class for all toolkit errors."""


class StructuralError(LdqualError):
    """A term, triple or log entry violates the data model (e.g. a literal subject)."""


class EmptyTargetError(LdqualError):
    """A metric was evaluated against an empty denominator.

    Raised instead of silently returning 0.0 or 1.0, which would poison
    aggregated scores.
    """


class UnknownCategoryError(LdqualError):
    """A category id does not resolve in the taxonomy, not even as an alias."""


class DerivationError(LdqualError):
    """A taxonomy view derivation was requested from an unsuitable category."""


class UnsupportedFormatError(LdqualError):
    """The requested serialization format is recognized but not supported."""


class UnknownFormatError(LdqualError):
    """A format id has no entry in the format profile table."""


class ConfigurationError(LdqualError):
    """A profile, rule set or CLI configuration is inconsistent or incomplete."""


class ParseError(LdqualError):
    """Strict-mode parsing aborted on the first error diagnostic.

    Carries the diagnostic that triggered the abort; no partial graph is
    returned.
    """

    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super().__init__(
            f"line {diagnostic.line}, column {diagnostic.column}: {diagnostic.message}"
        )


class EncodingError(LdqualError):
    """Input bytes could not be decoded as UTF-8."""

    def __init__(self, byte_offset: int):
        self.byte_offset = byte_offset
        super().__init__(f"input is not valid UTF-8 at byte offset {byte_offset}")
