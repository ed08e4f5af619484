"""
Error handling
"""

from typing import Any, Dict, Optional


class CommSeriesError(Exception):
    """Exception raised by the decision procedures with detailed information for debugging."""

    # Error kinds and their meanings
    ERROR_KINDS = {
        "arity": "Arity mismatch - A polynomial or point does not match the number of variables",
        "alphabet": "Alphabet mismatch - Automata or series are defined over different alphabets",
        "symbol": "Unknown symbol - A letter or name is not declared",
        "window": "Empty window - The truncation is too short for the operation",
        "inconsistent": "Inconsistent system - Values depend on the chosen lattice path",
        "budget": "Budget exhausted - The ideal chain did not stabilise within the depth budget",
        "parse": "Syntax error - The input document is malformed",
        "usage": "Usage error - The command line arguments are invalid",
        "domain": "Domain error - The operation is undefined for this input",
    }

    kind = "domain"

    def __init__(self, message: str = "", kind: Optional[str] = None) -> None:
        if kind is not None:
            self.kind = kind
        self.message = message
        self.error_type = self._get_error_type()
        self.suggestion = self._get_suggestion()

        error_msg = self.message or self.error_type
        if self.suggestion:
            error_msg += f". {self.suggestion}"

        super().__init__(error_msg)

    def _get_error_type(self) -> str:
        """Map the error kind to a human-readable error type."""
        return self.ERROR_KINDS.get(self.kind, f"Error ({self.kind})")

    def _get_suggestion(self) -> str:
        """Provide troubleshooting suggestions based on the error kind."""
        if self.kind == "arity":
            return "Check that every polynomial lives over the automaton's nonterminals"
        elif self.kind in ("alphabet", "symbol"):
            return "Declare the letter in the alphabet block, with the same mode on both sides"
        elif self.kind == "window":
            return "Truncate with a larger length bound"
        elif self.kind == "inconsistent":
            return "Pass --allow-inconsistent-eval to accept the canonical-path value"
        elif self.kind == "budget":
            return "Increase the depth budget with --depth"
        return ""

    def get_details(self) -> Dict[str, Any]:
        """Return error details as a dictionary for logging or reporting."""
        return {
            "kind": self.kind,
            "error_type": self.error_type,
            "message": self.message,
            "suggestion": self.suggestion,
        }


class ArityError(CommSeriesError):
    kind = "arity"


class AlphabetError(CommSeriesError):
    kind = "alphabet"


class UnknownSymbolError(CommSeriesError):
    kind = "symbol"


class WindowError(CommSeriesError):
    kind = "window"


class InconsistentSystemError(CommSeriesError):
    kind = "inconsistent"


class DepthBudgetExceeded(CommSeriesError):
    kind = "budget"


class UsageError(CommSeriesError):
    kind = "usage"


class ParseError(CommSeriesError):
    """Syntax or declaration error in a DSL document, located by line and column."""

    kind = "parse"

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)

    def get_details(self) -> Dict[str, Any]:
        details = super().get_details()
        details.update({"line": self.line, "column": self.column})
        return details
