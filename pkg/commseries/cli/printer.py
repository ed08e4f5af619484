"""
Printing documents back to the input language
"""

import re
from typing import List

from sympy.polys.rings import PolyElement

from commseries.algebra.polynomials import format_polynomial, leading_terms_first, variable_names
from commseries.apps.systems import EquationSystem
from commseries.automata.polynomial_automaton import PolynomialAutomaton
from commseries.cli.document import (
    AutomatonDef,
    BinOp,
    Definition,
    Document,
    Expr,
    Neg,
    Num,
    Pow,
    SystemDef,
    Var,
)
from commseries.cli.lexer import KEYWORDS
from commseries.utils import format_rational

INDENT = "  "

_PRECEDENCE = {"+": 1, "-": 1, "*": 2}
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def format_name(name: str) -> str:
    """Identifiers print as they are, keywords and other names in square brackets."""
    return name if _IDENTIFIER.match(name) and name not in KEYWORDS else f"[{name}]"


def _precedence(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return _PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return 3
    if isinstance(expr, Pow):
        return 4
    return 5


def format_expr(expr: Expr) -> str:
    """
    Render an expression so that parsing the text gives the same tree.

    >>> format_expr(BinOp("-", Var("a"), BinOp("-", Var("b"), Var("c"))))
    'a - (b - c)'
    """
    if isinstance(expr, Num):
        return format_rational(expr.value)
    if isinstance(expr, Var):
        return format_name(expr.name)
    if isinstance(expr, Neg):
        inner = format_expr(expr.operand)
        if _precedence(expr.operand) < 3:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(expr, Pow):
        base = format_expr(expr.base)
        simple = isinstance(expr.base, Var) or (
            isinstance(expr.base, Num) and expr.base.value.denominator == 1
        )
        if not simple:
            base = f"({base})"
        return f"{base}^{expr.exponent}"
    p = _PRECEDENCE[expr.op]
    left = format_expr(expr.left)
    if _precedence(expr.left) < p:
        left = f"({left})"
    right = format_expr(expr.right)
    if _precedence(expr.right) <= p:
        right = f"({right})"
    if expr.op == "*":
        return f"{left}*{right}"
    return f"{left} {expr.op} {right}"


def polynomial_to_expr(p: PolyElement) -> Expr:
    """The expression tree of a polynomial, terms in grevlex-descending order."""
    if not p:
        return Num(0)
    names = variable_names(p.ring)
    result = None
    for monom, coeff in leading_terms_first(p):
        factors: List[Expr] = []
        for name, exponent in zip(names, monom):
            if exponent == 1:
                factors.append(Var(name))
            elif exponent > 1:
                factors.append(Pow(Var(name), exponent))
        magnitude = abs(coeff)
        if magnitude != 1 or not factors:
            factors.insert(0, Num(magnitude))
        if result is None and coeff < 0:
            factors[0] = Neg(factors[0])
        term = factors[0]
        for factor in factors[1:]:
            term = BinOp("*", term, factor)
        if result is None:
            result = term
        else:
            result = BinOp("-" if coeff < 0 else "+", result, term)
    return result


def system_to_def(system: EquationSystem, name: str) -> SystemDef:
    """Describe a library system as a block of the input language."""
    unknowns = tuple(system.unknowns)
    equations = tuple(
        (j, unknown, polynomial_to_expr(p))
        for j, row in enumerate(system.equations, start=1)
        for unknown, p in zip(unknowns, row)
    )
    init = tuple(zip(unknowns, system.init))
    return SystemDef(system.kind, name, unknowns, equations, init, system.dims)


def _format_assignments(pairs) -> str:
    body = ", ".join(f"{format_name(name)} = {format_rational(value)}" for name, value in pairs)
    return f"{{ {body} }}"


def format_definition(item: Definition) -> str:
    lines: List[str] = []
    if isinstance(item, AutomatonDef):
        lines.append(f"automaton {format_name(item.name)} {{")
        letters = ", ".join(f"{format_name(symbol)}: {mode}" for symbol, mode in item.alphabet)
        lines.append(f"{INDENT}alphabet {{ {letters} }}")
        names = ", ".join(format_name(name) for name in item.nonterminals)
        lines.append(f"{INDENT}nonterminals {{ {names} }}")
        if item.output:
            lines.append(f"{INDENT}output {_format_assignments(item.output)}")
        for symbol, name, expr in item.delta:
            lines.append(f"{INDENT}delta {format_name(symbol)} {format_name(name)} = {format_expr(expr)}")
    else:
        keyword = "shift" if item.kind == "polyrec" else "d"
        lines.append(f"{item.kind} {format_name(item.name)} {{")
        if item.dims is not None:
            lines.append(f"{INDENT}dims {item.dims}")
        names = ", ".join(format_name(name) for name in item.unknowns)
        lines.append(f"{INDENT}unknowns {{ {names} }}")
        for name, coordinate in item.variables:
            if name == f"x{coordinate}":
                lines.append(f"{INDENT}var {name}")
            else:
                lines.append(f"{INDENT}var {format_name(name)} = {coordinate}")
        if item.init:
            lines.append(f"{INDENT}init {_format_assignments(item.init)}")
        for j, name, expr in item.equations:
            lines.append(f"{INDENT}{keyword} {j} {format_name(name)} = {format_expr(expr)}")
    lines.append("}")
    return "\n".join(lines)


def format_document(document: Document) -> str:
    """Render a document; parse(format_document(d)) == d."""
    return "\n\n".join(format_definition(item) for item in document.items) + ("\n" if document.items else "")


def format_polynomial_automaton(polynomial: PolynomialAutomaton) -> str:
    """Human-readable listing of a polynomial automaton."""
    coordinates = ", ".join(format_name(name) for name in variable_names(polynomial.ring))
    initial = ", ".join(format_rational(c) for c in polynomial.initial)
    lines = [
        f"polynomial automaton of dimension {polynomial.dimension} over ({coordinates})",
        f"{INDENT}initial ({initial})",
    ]
    for symbol in polynomial.alphabet:
        images = ", ".join(format_polynomial(p) for p in polynomial.updates[symbol])
        lines.append(f"{INDENT}update {symbol}: ({images})")
    lines.append(f"{INDENT}output {format_polynomial(polynomial.output)}")
    return "\n".join(lines)
