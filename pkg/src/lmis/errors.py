"""Exception types shared across the package."""

from __future__ import annotations


class LmisError(Exception):
    """Base class for all package-specific errors."""


class ParseError(LmisError):
    """Input text could not be parsed into a graph."""


class MalformedGraph6(ParseError):
    """A graph6 string violates the format (bad length, byte range, or padding)."""


class SelfLoop(ParseError):
    """An edge joins a vertex to itself; only simple graphs are supported."""


class EmptyInput(ParseError):
    """The input contains no vertices at all."""


class ForeignSet(LmisError):
    """A vertex set owned by one graph was passed to an operation on another."""


class OverlappingSides(LmisError):
    """The two sides passed to a bipartite matching routine intersect."""


class NotLocalMax(LmisError):
    """A set required to be a local maximum independent set is not one."""


class InternalContradiction(LmisError):
    """A consequence guaranteed by theory failed to hold; indicates a bug."""


class FamilyEmpty(LmisError):
    """An operation that needs a non-empty set family received an empty one."""


class GuardrailExceeded(LmisError):
    """A request exceeds the exhaustive-enumeration size guardrail."""
