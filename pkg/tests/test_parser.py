from fractions import Fraction
from pathlib import Path

import pytest

from commseries.algebra.polynomials import constant, make_ring
from commseries.apps import CDASystem, taylor_coefficient
from commseries.automata import coefficient, to_polynomial_automaton
from commseries.cli.document import AutomatonDef, BinOp, Document, Neg, Num, Pow, SystemDef, Var, to_polynomial
from commseries.cli.lexer import token_list
from commseries.cli.parser import parse, parse_polynomial
from commseries.cli.printer import (
    format_definition,
    format_document,
    format_expr,
    format_name,
    format_polynomial_automaton,
    polynomial_to_expr,
    system_to_def,
)
from commseries.errors import ParseError, UnknownSymbolError, UsageError
from tests.builders import intro_automaton, square_system

DATA = Path(__file__).parent / "data"

INTRO = """\
automaton intro {
  alphabet { a1: hadamard, a2: hadamard }
  nonterminals { A }
  output { A = 2 }
  delta a1 A = A^2
  delta a2 A = 1 - A^2
}
"""


def read(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


def test_parse_intro() -> None:
    document = parse(read("intro.fsc"))
    assert document.names == ["intro"]
    item = document.get("intro")
    assert isinstance(item, AutomatonDef)
    assert item.alphabet == (("a1", "hadamard"), ("a2", "hadamard"))
    assert item.nonterminals == ("A",)
    assert item.output == (("A", Fraction(2)),)
    automaton = item.to_automaton()
    (A,) = automaton.gens
    assert coefficient(automaton, A, ("a1", "a2")) == 9
    assert coefficient(automaton, A, ("a2", "a1")) == -15


def test_print_intro() -> None:
    assert format_document(parse(read("intro.fsc"))) == INTRO


def test_mode_line_resolves_every_letter() -> None:
    item = parse(read("powers.fsc")).get("powers", "automaton")
    assert item.alphabet == (("a1", "hadamard"), ("a2", "hadamard"))
    automaton = item.to_automaton()
    assert coefficient(automaton, automaton.gens[0], ("a1", "a2")) == 2**15


@pytest.mark.parametrize("name", ["intro.fsc", "powers.fsc", "fibonacci.fsc", "zero.fsc", "systems.fsc"])
def test_print_then_parse(name: str) -> None:
    document = parse(read(name))
    assert parse(format_document(document)) == document


def test_spans_are_ignored_by_equality() -> None:
    assert parse(INTRO) == parse("\n\n" + INTRO.replace("  ", "      "))
    item = parse("\n" + INTRO).get()
    assert (item.span.line, item.span.column) == (2, 1)


def test_comments_and_trailing_commas() -> None:
    document = parse(
        """
        # leading comment
        automaton t {            # after the header
          alphabet { a: shuffle, }
          nonterminals { X, Y, }
          output { Y = 1/2, }
          delta a X = Y
        }
        """
    )
    item = document.get()
    assert item.nonterminals == ("X", "Y")
    assert item.output == (("Y", Fraction(1, 2)),)
    automaton = item.to_automaton()
    assert coefficient(automaton, automaton.gens[0], ("a",)) == Fraction(1, 2)


def test_quoted_names_survive_printing() -> None:
    text = """
    automaton q {
      alphabet { a: shuffle }
      nonterminals { X, [X/a] }
      delta a [X/a] = X*[X/a]
    }
    """
    document = parse(text)
    assert document.get().nonterminals == ("X", "X/a")
    printed = format_document(document)
    assert "delta a [X/a] = X*[X/a]" in printed
    assert parse(printed) == document
    assert format_name("X/a") == "[X/a]"


def test_keywords_need_brackets() -> None:
    document = parse("polyrec p { unknowns { [init] } init { [init] = 2 } shift 1 [init] = [init]^2 }")
    assert document.get().unknowns == ("init",)
    printed = format_document(document)
    assert "shift 1 [init] = [init]^2" in printed
    assert parse(printed) == document
    assert format_name("d") == "[d]"
    assert format_name("X_1") == "X_1"


def test_systems() -> None:
    document = parse(read("systems.fsc"))
    assert document.names == ["squares", "unsolvable", "binomial"]
    squares = document.get("squares", "polyrec")
    assert squares.coordinates == 2
    system = squares.to_system()
    assert system.kind == "polyrec"
    assert system.init == (2,)
    binomial = document.get("binomial").to_system()
    assert isinstance(binomial, CDASystem)
    assert binomial.unknowns == ["X1", "X2", "X3"]
    assert taylor_coefficient(binomial, (2, 1)) == 2


def test_cda_variables_are_adjoined() -> None:
    text = """
    cda drift {
      unknowns { f }
      var x1
      init { f = 1 }
      d 1 f = x1
    }
    """
    item = parse(text).get()
    assert isinstance(item, SystemDef)
    assert item.variables == (("x1", 1),)
    assert item.all_unknowns == ("f", "x1")
    system = item.to_system()
    assert system.unknowns == ["f", "x1"]
    assert system.init == (1, 0)
    assert taylor_coefficient(system, (1,), "f") == 0
    assert taylor_coefficient(system, (2,), "f") == 1
    assert taylor_coefficient(system, (2,), "f", ordinary=True) == Fraction(1, 2)
    assert parse(format_document(parse(text))) == parse(text)


def test_named_variable_with_coordinate() -> None:
    text = """
    cda timed {
      dims 2
      unknowns { f }
      var t = 2
      d 1 f = 0
      d 2 f = t
    }
    """
    item = parse(text).get()
    assert item.variables == (("t", 2),)
    assert "var t = 2" in format_definition(item)
    system = item.to_system()
    assert taylor_coefficient(system, (0, 2), "f") == 1
    assert taylor_coefficient(system, (0, 1), "t") == 1
    assert taylor_coefficient(system, (1, 0), "t") == 0


def test_dims_from_the_largest_coordinate() -> None:
    text = "polyrec p { unknowns { f } shift 1 f = f shift 2 f = 2*f }"
    assert parse(text).get().coordinates == 2
    assert parse(text.replace("{ unknowns", "{ dims 2 unknowns")).get().dims == 2


@pytest.mark.parametrize(
    "text, message, line, column",
    [
        (
            "automaton b {\n  alphabet { a: hadamard }\n  nonterminals { X }\n  delta a X = 2 X\n}",
            "Implicit multiplication is not allowed, write '*'",
            4,
            17,
        ),
        (
            "automaton b {\n  alphabet { a: hadamard }\n  nonterminals { X }\n  delta a X = 2(X)\n}",
            "Implicit multiplication is not allowed, write '*'",
            4,
            16,
        ),
        (
            "automaton b {\n  alphabet { a: hadamard }\n  nonterminals { X }\n  delta a X = B\n}",
            "Undeclared symbol 'B'",
            4,
            15,
        ),
        (
            "automaton b {\n  alphabet { a }\n  nonterminals { X }\n}",
            "Letter 'a' has no mode",
            2,
            14,
        ),
        (
            "automaton b {\n  alphabet { a: hadamard }\n  nonterminals { X }\n  delta a X = X^1/2\n}",
            "Exponent must be a nonnegative integer literal",
            4,
            17,
        ),
        (
            "automaton b {\n  alphabet { a: fancy }\n}",
            "Unknown product mode 'fancy'",
            2,
            17,
        ),
        (
            "polyrec p {\n  unknowns { f, g }\n  shift 1 f = g\n}",
            "Missing equation shift 1 g",
            4,
            1,
        ),
        (
            "polyrec p {\n  dims 2\n  unknowns { f }\n  shift 1 f = f\n  shift 2 f = f\n  shift 3 f = f\n}",
            "Coordinate 3 is beyond dims 2",
            6,
            3,
        ),
        (
            "polyrec p {\n  unknowns { f }\n  d 1 f = f\n}",
            "A polyrec system uses 'shift' equations",
            3,
            3,
        ),
        (
            "polyrec p {\n  unknowns { f }\n  var x1\n}",
            "Independent variables are only available in cda systems",
            3,
            3,
        ),
        (
            "polyrec p {\n  unknowns { f }\n  shift 1 f = f\n}\ncda p {\n  unknowns { f }\n  d 1 f = f\n}",
            "Duplicate definition 'p'",
            5,
            1,
        ),
        (
            "automaton b {\n  alphabet { a: shuffle }\n  nonterminals { X }\n  delta a X = X @ X\n}",
            "Unexpected character '@'",
            4,
            17,
        ),
        ("series s { }", "Expected 'automaton', 'polyrec' or 'cda'", 1, 1),
        (
            "automaton b {\n  alphabet { a: shuffle }\n  nonterminals { X }\n  output { X = 1/0 }\n}",
            "Zero denominator in '1/0'",
            4,
            16,
        ),
        (
            "automaton b {\n  alphabet { a: shuffle }\n  nonterminals { X }\n  delta a X = 3/0*X\n}",
            "Zero denominator in '3/0'",
            4,
            15,
        ),
        (
            "polyrec p {\n  unknowns { f, init }\n  shift 1 f = f\n}",
            "Unknown name 'init' is a keyword, write [init]",
            2,
            17,
        ),
        (
            "cda c {\n  unknowns { f }\n  var d = 1\n  d 1 f = f\n}",
            "Variable name 'd' is a keyword, write [d]",
            3,
            7,
        ),
    ],
)
def test_parse_errors_are_located(text: str, message: str, line: int, column: int) -> None:
    with pytest.raises(ParseError) as info:
        parse(text)
    error = info.value
    assert message in error.message
    assert (error.line, error.column) == (line, column)
    assert error.message.startswith(f"line {line}, column {column}: ")
    assert error.get_details()["line"] == line


def test_lexer_positions() -> None:
    tokens = token_list("a1 = 1/2\n  [X/a]^3")
    assert [(t.kind, t.text, t.line, t.column) for t in tokens] == [
        ("NAME", "a1", 1, 1),
        ("OP", "=", 1, 4),
        ("NUMBER", "1/2", 1, 6),
        ("QUOTED", "[X/a]", 2, 3),
        ("OP", "^", 2, 8),
        ("NUMBER", "3", 2, 9),
        ("EOF", "", 2, 10),
    ]
    assert tokens[3].value == "X/a"


def test_operator_precedence() -> None:
    a, b, c = Var("a"), Var("b"), Var("c")
    names = ["a", "b", "c"]
    assert parse_polynomial("-a^2", names) == Neg(Pow(a, 2))
    assert parse_polynomial("a - b - c", names) == BinOp("-", BinOp("-", a, b), c)
    assert parse_polynomial("a + b*c", names) == BinOp("+", a, BinOp("*", b, c))
    assert parse_polynomial("(a + b)^2", names) == Pow(BinOp("+", a, b), 2)
    assert parse_polynomial("1/2*a", names) == BinOp("*", Num(Fraction(1, 2)), a)


def test_parse_polynomial_rejects_trailing_input() -> None:
    with pytest.raises(ParseError):
        parse_polynomial("a b", ["a", "b"])
    with pytest.raises(ParseError):
        parse_polynomial("a + z", ["a"])


def test_to_polynomial() -> None:
    R = make_ring(["A"])
    (A,) = R.gens
    assert to_polynomial(parse_polynomial("(1 - A^2)^2 - 1", ["A"]), R) == A**4 - 2 * A**2
    assert to_polynomial(parse_polynomial("1/2*A - 1/2*A", ["A"]), R) == R.zero
    with pytest.raises(UnknownSymbolError):
        to_polynomial(Var("B"), R)


def test_format_expr_parenthesises_only_where_needed() -> None:
    a, b, c = Var("a"), Var("b"), Var("c")
    assert format_expr(BinOp("-", a, BinOp("-", b, c))) == "a - (b - c)"
    assert format_expr(BinOp("-", BinOp("-", a, b), c)) == "a - b - c"
    assert format_expr(BinOp("*", BinOp("+", a, b), c)) == "(a + b)*c"
    assert format_expr(Pow(Neg(a), 2)) == "(-a)^2"
    assert format_expr(Neg(BinOp("+", a, b))) == "-(a + b)"
    assert format_expr(Pow(Num(Fraction(1, 2)), 3)) == "(1/2)^3"


def test_polynomial_to_expr() -> None:
    R = make_ring(["A", "B"])
    A, B = R.gens
    assert format_expr(polynomial_to_expr(1 - A**2)) == "-A^2 + 1"
    assert format_expr(polynomial_to_expr(R.zero)) == "0"
    assert format_expr(polynomial_to_expr(-2 * A * B + B)) == "-2*A*B + B"
    for p in (1 - A**2, 3 * A**2 * B - B + 7, -A, constant(R, Fraction(-5, 3))):
        assert to_polynomial(parse_polynomial(format_expr(polynomial_to_expr(p)), ["A", "B"]), R) == p


def test_system_to_def() -> None:
    text = format_definition(system_to_def(square_system(-1), "s"))
    assert text == (
        "polyrec s {\n"
        "  dims 2\n"
        "  unknowns { f }\n"
        "  init { f = -1 }\n"
        "  shift 1 f = f^2\n"
        "  shift 2 f = -f^2 + 1\n"
        "}"
    )
    assert parse(text).get().to_system() == square_system(-1)


def test_format_polynomial_automaton() -> None:
    automaton = intro_automaton()
    text = format_polynomial_automaton(to_polynomial_automaton(automaton, automaton.gens[0]))
    assert text.splitlines()[0].startswith("polynomial automaton of dimension")
    assert "update a1:" in text
    assert "update a2:" in text


def test_document_lookup() -> None:
    document = parse(read("fibonacci.fsc") + "\n" + read("systems.fsc"))
    assert document.get("pq").name == "pq"
    assert document.get("squares", "polyrec").kind == "polyrec"
    assert document.get(kind="polyrec").name == "squares"
    with pytest.raises(UsageError, match="No definition named"):
        document.get("missing")
    with pytest.raises(UsageError, match="is a automaton definition"):
        document.get("fg", "cda")
    with pytest.raises(UsageError, match="choose one with --name"):
        document.get(kind="automaton")
    assert Document().names == []
    assert format_document(Document()) == ""
