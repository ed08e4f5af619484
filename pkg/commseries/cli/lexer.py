"""
Tokenizer of the input language
"""

import re
from typing import Iterator, List, NamedTuple

from commseries.errors import ParseError

# Kinds, in matching order; the first alternative that matches wins
TOKENS = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r]+"),
    ("NUMBER", r"\d+(?:/\d+)?"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("QUOTED", r"\[[^\]\n]+\]"),
    ("OP", r"[{}(),:=+\-*^]"),
]

_TOKEN_RE = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in TOKENS))

AUTOMATON_KEYWORDS = frozenset({"alphabet", "mode", "nonterminals", "output", "delta"})
SYSTEM_KEYWORDS = frozenset({"dims", "unknowns", "init", "shift", "d", "var"})
KEYWORDS = AUTOMATON_KEYWORDS | SYSTEM_KEYWORDS | {"automaton", "polyrec", "cda"}


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int

    @property
    def value(self) -> str:
        """The text, with the brackets of a quoted name removed."""
        return self.text[1:-1] if self.kind == "QUOTED" else self.text


def tokenize(text: str) -> Iterator[Token]:
    """
    Split text into tokens, dropping spaces and comments, and append an EOF token.

    Names are identifiers or anything in square brackets, so that generated
    names such as [X/a] survive a print and parse round trip.

    Raises:
        ParseError: On a character no token starts with
    """
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"Unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = match.lastgroup
        if kind == "NEWLINE":
            line, start = line + 1, match.end()
        elif kind not in ("SPACE", "COMMENT"):
            yield Token(kind, match.group(), line, pos - start + 1)
        pos = match.end()
    yield Token("EOF", "", line, pos - start + 1)


def token_list(text: str) -> List[Token]:
    return list(tokenize(text))
