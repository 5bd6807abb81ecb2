"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """Syntax error in a literal or input file, with a 1-based position."""

    def __init__(self, message, line=None, col=None, path=None):
        self.message = message
        self.line = line
        self.col = col
        self.path = path
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.path is not None:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.col is not None:
            where.append(f"col {self.col}")
        if where:
            return f"{self.message} ({', '.join(where)})"
        return self.message


class TruncationError(ValueError):
    """A dimension exceeds the configured truncation bound.

    `required` carries the bound that would have been needed, when known.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class UnboundVariableError(KeyError):
    """A formula was evaluated with a free variable missing from the environment."""

    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unbound variable {self.name!r}"


class RelationError(ValueError):
    """A relation handed to a quotient is not an equivalence; carries a witness."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness
