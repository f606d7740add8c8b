"""Exception types shared across the toolkit."""
from __future__ import annotations


class OwlkitError(Exception):
    """Base class for all domain errors raised by this package."""


class IriParseError(OwlkitError):
    """Raised for text that cannot be used as an IRI."""


class ParseError(OwlkitError):
    """Syntax error with source position information."""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 token: str | None = None, expected: list[str] | None = None):
        self.line = line
        self.column = column
        self.token = token
        self.expected = expected or []
        detail = message
        if token is not None:
            detail += f" (got {token!r})"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        if line:
            detail += f" at line {line}, column {column}"
        super().__init__(detail)
        self.message = message


class UnknownPrefixError(ParseError):
    """A prefixed name used a prefix with no declared namespace."""


class UnsupportedConstructError(ParseError):
    """Input used a construct outside the supported grammar subset."""


class RuleSafetyError(OwlkitError):
    """A rule head mentions a variable that never occurs in the body."""


class UnmappableAxiomError(OwlkitError):
    """The axiom has no RDF triple encoding in the supported mapping."""


class UnsupportedFormatError(OwlkitError):
    """An ontology format outside the supported set was requested."""


class UnknownIndividualError(OwlkitError):
    """A query named an individual that is not part of the ontology."""


class UnknownSymbolError(OwlkitError):
    """The embedding model has no vector for the requested entity."""


class EmptyTripleSetError(OwlkitError):
    """Training requires at least one triple."""


class UnsupportedQueryError(OwlkitError):
    """The query evaluator met a construct outside its subset."""


class ClientError(OwlkitError):
    """Transport or protocol failure talking to an extraction client."""


class ExtractionEmptyError(OwlkitError):
    """The extraction client produced no parseable triples after retries."""
