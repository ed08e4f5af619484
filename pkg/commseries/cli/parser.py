"""
Recursive-descent parser of the input language

    document   = { definition } ;
    definition = "automaton" NAME "{" { automaton_stmt } "}"
               | ( "polyrec" | "cda" ) NAME "{" { system_stmt } "}" ;
    poly       = term { ( "+" | "-" ) term } ;
    term       = unary { "*" unary } ;
    unary      = "-" unary | power ;
    power      = atom [ "^" INTEGER ] ;
    atom       = NUMBER | NAME | "(" poly ")" ;

The statements of each block are listed in docs/dsl.md. Newlines carry no
meaning; a polynomial ends at the first token that cannot continue it.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from commseries.cli.document import (
    AutomatonDef,
    BinOp,
    Definition,
    Document,
    Expr,
    Neg,
    Num,
    Pow,
    Span,
    SystemDef,
    Var,
)
from commseries.cli.lexer import AUTOMATON_KEYWORDS, SYSTEM_KEYWORDS, Token, token_list
from commseries.errors import ParseError
from commseries.product_rules import ProductMode

# Set up logging
logger = logging.getLogger(__name__)

MODES = tuple(mode.value for mode in ProductMode)

_VARIABLE = re.compile(r"x([1-9][0-9]*)\Z")


class Parser:
    """Parser state: the token list and a cursor into it."""

    def __init__(self, text: str) -> None:
        self.tokens = token_list(text)
        self.pos = 0
        self.keywords: frozenset = frozenset()

    # Token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.pos += 1
        return token

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def describe(self, token: Token) -> str:
        return "end of input" if token.kind == "EOF" else repr(token.text)

    def at_op(self, text: str) -> bool:
        return self.current.kind == "OP" and self.current.text == text

    def at_keyword(self, word: str) -> bool:
        return self.current.kind == "NAME" and self.current.text == word

    def expect_op(self, text: str) -> Token:
        if not self.at_op(text):
            raise self.error(f"Expected {text!r}, found {self.describe(self.current)}")
        return self.advance()

    def expect_name(self, what: str = "a name") -> Token:
        if self.current.kind not in ("NAME", "QUOTED"):
            raise self.error(f"Expected {what}, found {self.describe(self.current)}")
        return self.advance()

    def expect_declared(self, what: str) -> Token:
        token = self.expect_name(what)
        if token.kind == "NAME" and token.text in self.keywords:
            raise self.error(f"{what.capitalize()} name {token.text!r} is a keyword, write [{token.text}]", token)
        return token

    def expect_integer(self, what: str = "an integer") -> Tuple[int, Token]:
        token = self.current
        if token.kind != "NUMBER" or "/" in token.text:
            raise self.error(f"Expected {what}, found {self.describe(token)}")
        self.advance()
        return int(token.text), token

    def span(self, token: Token) -> Span:
        return Span(token.line, token.column)

    def number(self, token: Token) -> Fraction:
        denominator = token.text.partition("/")[2]
        if denominator and int(denominator) == 0:
            raise self.error(f"Zero denominator in {token.text!r}", token)
        return Fraction(token.text)

    # Literals and lists

    def parse_rational(self) -> Fraction:
        negative = False
        if self.at_op("-"):
            self.advance()
            negative = True
        token = self.current
        if token.kind != "NUMBER":
            raise self.error(f"Expected a rational number, found {self.describe(token)}")
        self.advance()
        value = self.number(token)
        return -value if negative else value

    def parse_name_list(self, what: str) -> List[Token]:
        """ "{" NAME { "," NAME } [ "," ] "}" """
        self.expect_op("{")
        names: List[Token] = []
        seen: Set[str] = set()
        while not self.at_op("}"):
            token = self.expect_declared(what)
            if token.value in seen:
                raise self.error(f"Duplicate {what} {token.value!r}", token)
            seen.add(token.value)
            names.append(token)
            if not self.at_op(","):
                break
            self.advance()
        self.expect_op("}")
        return names

    def parse_assignments(self, declared: Sequence[str], what: str) -> Tuple[Tuple[str, Fraction], ...]:
        """ "{" NAME "=" RATIONAL { "," ... } [ "," ] "}" """
        self.expect_op("{")
        values: Dict[str, Fraction] = {}
        while not self.at_op("}"):
            token = self.expect_name(what)
            if token.value not in declared:
                raise self.error(f"Undeclared {what} {token.value!r}", token)
            if token.value in values:
                raise self.error(f"Duplicate value for {token.value!r}", token)
            self.expect_op("=")
            values[token.value] = self.parse_rational()
            if not self.at_op(","):
                break
            self.advance()
        self.expect_op("}")
        return tuple(values.items())

    # Polynomials

    def parse_poly(self, declared: Set[str]) -> Expr:
        expr = self.parse_sum(declared)
        token = self.current
        if token.kind == "NUMBER" or (token.kind == "OP" and token.text == "("):
            raise self.error("Implicit multiplication is not allowed, write '*'", token)
        if token.kind == "QUOTED" or (token.kind == "NAME" and token.text not in self.keywords):
            raise self.error("Implicit multiplication is not allowed, write '*'", token)
        return expr

    def parse_sum(self, declared: Set[str]) -> Expr:
        expr = self.parse_term(declared)
        while self.at_op("+") or self.at_op("-"):
            op = self.advance()
            right = self.parse_term(declared)
            expr = BinOp(op.text, expr, right, self.span(op))
        return expr

    def parse_term(self, declared: Set[str]) -> Expr:
        expr = self.parse_unary(declared)
        while self.at_op("*"):
            op = self.advance()
            right = self.parse_unary(declared)
            expr = BinOp("*", expr, right, self.span(op))
        return expr

    def parse_unary(self, declared: Set[str]) -> Expr:
        if self.at_op("-"):
            op = self.advance()
            return Neg(self.parse_unary(declared), self.span(op))
        return self.parse_power(declared)

    def parse_power(self, declared: Set[str]) -> Expr:
        base = self.parse_atom(declared)
        if self.at_op("^"):
            op = self.advance()
            token = self.current
            if token.kind != "NUMBER" or "/" in token.text:
                raise self.error("Exponent must be a nonnegative integer literal", token)
            self.advance()
            return Pow(base, int(token.text), self.span(op))
        return base

    def parse_atom(self, declared: Set[str]) -> Expr:
        token = self.current
        if token.kind == "NUMBER":
            self.advance()
            return Num(self.number(token), self.span(token))
        if token.kind in ("NAME", "QUOTED"):
            if token.value not in declared:
                raise self.error(f"Undeclared symbol {token.value!r}", token)
            self.advance()
            return Var(token.value, self.span(token))
        if self.at_op("("):
            self.advance()
            expr = self.parse_sum(declared)
            self.expect_op(")")
            return expr
        raise self.error(f"Expected a polynomial, found {self.describe(token)}")

    # Definitions

    def parse_document(self) -> Document:
        items: List[Definition] = []
        names: Set[str] = set()
        while self.current.kind != "EOF":
            head = self.current
            if self.at_keyword("automaton"):
                item = self.parse_automaton()
            elif self.at_keyword("polyrec") or self.at_keyword("cda"):
                item = self.parse_system()
            else:
                raise self.error(f"Expected 'automaton', 'polyrec' or 'cda', found {self.describe(head)}")
            if item.name in names:
                raise self.error(f"Duplicate definition {item.name!r}", head)
            names.add(item.name)
            items.append(item)
        logger.debug(f"Parsed {len(items)} definitions")
        return Document(tuple(items))

    def parse_automaton(self) -> AutomatonDef:
        head = self.advance()
        name = self.expect_name("an automaton name").value
        self.keywords = AUTOMATON_KEYWORDS
        self.expect_op("{")

        letters: Optional[List[Tuple[Token, Optional[str]]]] = None
        default_mode: Optional[str] = None
        nonterminals: Optional[List[str]] = None
        output: Tuple[Tuple[str, Fraction], ...] = ()
        output_seen = False
        delta: List[Tuple[str, str, Expr]] = []
        transitions: Set[Tuple[str, str]] = set()

        while not self.at_op("}"):
            token = self.current
            if self.at_keyword("alphabet"):
                self.advance()
                if letters is not None:
                    raise self.error("Alphabet declared twice", token)
                letters = self.parse_alphabet()
            elif self.at_keyword("mode"):
                self.advance()
                if default_mode is not None:
                    raise self.error("Mode declared twice", token)
                default_mode = self.parse_mode()
            elif self.at_keyword("nonterminals"):
                self.advance()
                if nonterminals is not None:
                    raise self.error("Nonterminals declared twice", token)
                nonterminals = [t.value for t in self.parse_name_list("nonterminal")]
                if not nonterminals:
                    raise self.error("An automaton needs at least one nonterminal", token)
            elif self.at_keyword("output"):
                self.advance()
                if output_seen:
                    raise self.error("Output declared twice", token)
                if nonterminals is None:
                    raise self.error("Output given before the nonterminals are declared", token)
                output = self.parse_assignments(nonterminals, "nonterminal")
                output_seen = True
            elif self.at_keyword("delta"):
                self.advance()
                if letters is None or nonterminals is None:
                    raise self.error("Transitions given before the alphabet and nonterminals", token)
                symbol = self.expect_name("a letter")
                if symbol.value not in [t.value for t, _ in letters]:
                    raise self.error(f"Undeclared letter {symbol.value!r}", symbol)
                target = self.expect_name("a nonterminal")
                if target.value not in nonterminals:
                    raise self.error(f"Undeclared nonterminal {target.value!r}", target)
                if (symbol.value, target.value) in transitions:
                    raise self.error(f"Duplicate transition delta {symbol.value} {target.value}", token)
                transitions.add((symbol.value, target.value))
                self.expect_op("=")
                delta.append((symbol.value, target.value, self.parse_poly(set(nonterminals))))
            else:
                raise self.error(f"Unexpected {self.describe(token)} in automaton {name!r}")
        end = self.expect_op("}")

        if letters is None:
            raise self.error(f"Automaton {name!r} declares no alphabet", end)
        if nonterminals is None:
            raise self.error(f"Automaton {name!r} declares no nonterminals", end)
        alphabet = []
        for token, mode in letters:
            mode = mode or default_mode
            if mode is None:
                raise self.error(f"Letter {token.value!r} has no mode; add ': MODE' or a 'mode' line", token)
            alphabet.append((token.value, mode))
        self.keywords = frozenset()
        return AutomatonDef(name, tuple(alphabet), tuple(nonterminals), output, tuple(delta), self.span(head))

    def parse_mode(self) -> str:
        token = self.expect_name("a product mode")
        if token.value not in MODES:
            raise self.error(f"Unknown product mode {token.value!r}, expected one of {list(MODES)}", token)
        return token.value

    def parse_alphabet(self) -> List[Tuple[Token, Optional[str]]]:
        self.expect_op("{")
        letters: List[Tuple[Token, Optional[str]]] = []
        seen: Set[str] = set()
        while not self.at_op("}"):
            token = self.expect_name("a letter")
            if token.value in seen:
                raise self.error(f"Letter {token.value!r} declared twice", token)
            seen.add(token.value)
            mode = None
            if self.at_op(":"):
                self.advance()
                mode = self.parse_mode()
            letters.append((token, mode))
            if not self.at_op(","):
                break
            self.advance()
        self.expect_op("}")
        return letters

    def parse_system(self) -> SystemDef:
        head = self.advance()
        kind = head.text
        name = self.expect_name(f"a {kind} name").value
        self.keywords = SYSTEM_KEYWORDS
        self.expect_op("{")

        dims: Optional[int] = None
        unknowns: Optional[List[str]] = None
        variables: List[Tuple[str, int]] = []
        init: Tuple[Tuple[str, Fraction], ...] = ()
        init_seen = False
        equations: List[Tuple[int, str, Expr]] = []
        located: Dict[Tuple[int, str], Token] = {}

        def declared() -> List[str]:
            return (unknowns or []) + [v for v, _ in variables]

        while not self.at_op("}"):
            token = self.current
            if self.at_keyword("dims"):
                self.advance()
                if dims is not None:
                    raise self.error("Dimension declared twice", token)
                dims, number = self.expect_integer("the number of coordinates")
                if dims < 1:
                    raise self.error("A system needs at least one coordinate", number)
            elif self.at_keyword("unknowns"):
                self.advance()
                if unknowns is not None:
                    raise self.error("Unknowns declared twice", token)
                unknowns = [t.value for t in self.parse_name_list("unknown")]
                clash = [v for v, _ in variables if v in unknowns]
                if clash:
                    raise self.error(f"Unknowns {clash} are already declared as variables", token)
                if not unknowns:
                    raise self.error("A system needs at least one unknown", token)
            elif self.at_keyword("var"):
                self.advance()
                if kind != "cda":
                    raise self.error("Independent variables are only available in cda systems", token)
                variable = self.expect_declared("variable")
                if variable.value in declared():
                    raise self.error(f"Symbol {variable.value!r} declared twice", variable)
                if self.at_op("="):
                    self.advance()
                    coordinate, _ = self.expect_integer("a coordinate")
                else:
                    match = _VARIABLE.match(variable.value)
                    if match is None:
                        raise self.error(
                            f"Cannot tell the coordinate of {variable.value!r}; write 'var {variable.value} = j'",
                            variable,
                        )
                    coordinate = int(match.group(1))
                if coordinate < 1:
                    raise self.error("Coordinates are numbered from 1", variable)
                variables.append((variable.value, coordinate))
                located[(coordinate, variable.value)] = variable
            elif self.at_keyword("init"):
                self.advance()
                if init_seen:
                    raise self.error("Initial value declared twice", token)
                if unknowns is None:
                    raise self.error("Initial value given before the unknowns are declared", token)
                init = self.parse_assignments(unknowns, "unknown")
                init_seen = True
            elif self.at_keyword("shift") or self.at_keyword("d"):
                self.advance()
                expected = "shift" if kind == "polyrec" else "d"
                if token.text != expected:
                    raise self.error(f"A {kind} system uses '{expected}' equations", token)
                if unknowns is None:
                    raise self.error("Equation given before the unknowns are declared", token)
                j, number = self.expect_integer("a coordinate")
                if j < 1:
                    raise self.error("Coordinates are numbered from 1", number)
                target = self.expect_name("an unknown")
                if target.value not in unknowns:
                    raise self.error(f"Undeclared unknown {target.value!r}", target)
                if (j, target.value) in located:
                    raise self.error(f"Duplicate equation {expected} {j} {target.value}", token)
                located[(j, target.value)] = token
                self.expect_op("=")
                equations.append((j, target.value, self.parse_poly(set(declared()))))
            else:
                raise self.error(f"Unexpected {self.describe(token)} in {kind} {name!r}")
        end = self.expect_op("}")

        if unknowns is None:
            raise self.error(f"{kind} {name!r} declares no unknowns", end)
        system = SystemDef(
            kind, name, tuple(unknowns), tuple(equations), init, dims, tuple(variables), self.span(head)
        )
        d = system.coordinates
        if d < 1:
            raise self.error(f"{kind} {name!r} has no equations", end)
        for (j, _), token in located.items():
            if j > d:
                raise self.error(f"Coordinate {j} is beyond dims {d}", token)
        for j in range(1, d + 1):
            for unknown in unknowns:
                if (j, unknown) not in located:
                    keyword = "shift" if kind == "polyrec" else "d"
                    raise self.error(f"Missing equation {keyword} {j} {unknown}", end)
        self.keywords = frozenset()
        return system


def parse(text: str) -> Document:
    """
    Parse a document.

    Args:
        text: The source text

    Returns:
        The definitions, in source order

    Raises:
        ParseError: With the line and column of the first problem
    """
    return Parser(text).parse_document()


def parse_polynomial(text: str, names: Sequence[str]) -> Expr:
    """
    Parse a single polynomial over the given variable names.

    Raises:
        ParseError: On a syntax error, an undeclared name or trailing input
    """
    parser = Parser(text)
    expr = parser.parse_sum(set(names))
    if parser.current.kind != "EOF":
        raise parser.error(f"Unexpected {parser.describe(parser.current)} after the polynomial")
    return expr
