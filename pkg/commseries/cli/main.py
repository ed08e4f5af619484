"""
Command line interface

    python -m commseries check-commutative intro.fsc --json

Exit codes: 0 the property holds (or a value was computed), 1 it fails and a
witness is reported, 2 usage, parse or domain error, 3 unknown within the
depth budget.
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from commseries.algebra.polynomials import format_polynomial
from commseries.apps.cda import cda_solvable, taylor_coefficient
from commseries.apps.polyrec import diagonal, evaluate_point, polyrec_consistent, section
from commseries.apps.systems import CDASystem, EquationSystem, PolyrecConstant
from commseries.automata.mixed import MixedAutomaton
from commseries.automata.polynomial_automaton import to_polynomial_automaton
from commseries.automata.semantics import coefficient, truncate
from commseries.cli.document import AutomatonDef, Document, SystemDef, to_polynomial
from commseries.cli.parser import parse, parse_polynomial
from commseries.cli.printer import (
    format_definition,
    format_polynomial_automaton,
    system_to_def,
)
from commseries.cli.report import (
    CoefficientReport,
    Report,
    error_report,
    render,
    verdict_report,
)
from commseries.config import Settings, get_settings
from commseries.decide.commutativity import commutativity
from commseries.decide.equality import equality
from commseries.decide.zeroness import zeroness
from commseries.errors import CommSeriesError, DepthBudgetExceeded, UsageError
from commseries.groebner.orders import MonomialOrder
from commseries.utils import format_rational, format_word, to_fraction
from commseries.varieties.queries import (
    Answer,
    all_outputs_commutative,
    exists_commutative_output,
    output_membership,
    sample_commutative_output,
    stabilize,
)

# Set up logging
logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Document, Settings], Report]


def _integers(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"Expected comma-separated integers, got {text!r}")


def _letters(text: str) -> Tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _order(settings: Settings, ring: PolyRing) -> Optional[MonomialOrder]:
    if settings.monomial_order == "grevlex":
        return None
    return MonomialOrder.of(ring, settings.monomial_order)


def _configuration(automaton: MixedAutomaton, text: Optional[str]) -> PolyElement:
    """The configuration given on the command line, by default the first nonterminal."""
    if text is None:
        return automaton.gens[0]
    return to_polynomial(parse_polynomial(text, automaton.names), automaton.ring)


def _automaton(args: argparse.Namespace, document: Document) -> Tuple[AutomatonDef, MixedAutomaton, PolyElement]:
    definition = document.get(args.name, "automaton")
    automaton = definition.to_automaton()
    return definition, automaton, _configuration(automaton, args.config)


def _system(args: argparse.Namespace, document: Document, kind: Optional[str] = None) -> Tuple[SystemDef, EquationSystem]:
    if kind is None:
        candidates = [item for item in document.items if item.kind in ("polyrec", "cda")]
        if args.name is None and len(candidates) == 1:
            definition = candidates[0]
        else:
            definition = document.get(args.name)
        if not isinstance(definition, SystemDef):
            raise UsageError(f"{definition.name!r} is an automaton, expected a polyrec or cda system")
    else:
        definition = document.get(args.name, kind)
    return definition, definition.to_system()


def check_zero(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    verdict = zeroness(automaton, alpha, _order(settings, automaton.ring))
    return verdict_report(args.command, definition.name, verdict, {True: "zero", False: "nonzero"})


def check_equal(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, first, alpha = _automaton(args, document)
    other = document.get(args.other, "automaton")
    second = other.to_automaton()
    beta = _configuration(second, args.other_config)
    verdict = equality(first, alpha, second, beta, _order(settings, first.ring))
    return verdict_report(args.command, definition.name, verdict, {True: "equal", False: "not equal"})


def check_commutative(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    verdict = commutativity(
        automaton,
        alpha,
        _order(settings, automaton.ring),
        concurrent=settings.concurrent,
        max_concurrent=settings.max_concurrent,
    )
    return verdict_report(
        args.command, definition.name, verdict, {True: "commutative", False: "not commutative"}
    )


def coeff(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    word = _letters(args.word)
    value = coefficient(automaton, alpha, word)
    return Report(
        command=args.command,
        name=definition.name,
        status="value",
        exit_code=0,
        value=f"{format_word(word)} ↦ {format_rational(value)}",
    )


def truncate_series(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    if args.len < 0:
        raise UsageError(f"--len must be nonnegative, got {args.len}")
    series = truncate(automaton, alpha, args.len)
    terms = [
        CoefficientReport(word=list(word), value=format_rational(series.coefficient(word)))
        for word in series.words()
        if series.coefficient(word)
    ]
    return Report(command=args.command, name=definition.name, status="value", exit_code=0, series=terms)


def check_polyrec(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, system = _system(args, document, "polyrec")
    verdict = polyrec_consistent(
        system,
        _order(settings, system.ring),
        concurrent=settings.concurrent,
        max_concurrent=settings.max_concurrent,
    )
    return verdict_report(args.command, definition.name, verdict, {True: "consistent", False: "inconsistent"})


def check_cda(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, system = _system(args, document, "cda")
    verdict = cda_solvable(
        system,
        _order(settings, system.ring),
        concurrent=settings.concurrent,
        max_concurrent=settings.max_concurrent,
    )
    return verdict_report(args.command, definition.name, verdict, {True: "solvable", False: "unsolvable"})


def evaluate_system(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, system = _system(args, document)
    point = _integers(args.point)
    unknown = args.unknown if args.unknown is not None else 0
    if isinstance(system, CDASystem):
        value = taylor_coefficient(
            system, point, unknown, ordinary=args.ordinary, allow_inconsistent=args.allow_inconsistent_eval
        )
    else:
        if args.ordinary:
            raise UsageError("--ordinary only applies to cda systems")
        value = evaluate_point(system, point, unknown, allow_inconsistent=args.allow_inconsistent_eval)
    name = system.unknowns[system.unknown_index(unknown)]
    label = f"{name}({', '.join(str(n) for n in point)})"
    return Report(
        command=args.command,
        name=definition.name,
        status="value",
        exit_code=0,
        value=f"{label} = {format_rational(value)}",
    )


def emit_section(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, system = _system(args, document, "polyrec")
    result = section(system, args.coordinate, args.value, allow_inconsistent=args.allow_inconsistent_eval)
    report = Report(command=args.command, name=definition.name, status="value", exit_code=0)
    if isinstance(result, PolyrecConstant):
        report.values = {name: format_rational(v) for name, v in zip(result.unknowns, result.values)}
    else:
        report.document = format_definition(system_to_def(result, f"{definition.name}_section")) + "\n"
    return report


def emit_diagonal(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, system = _system(args, document, "polyrec")
    coordinates = _integers(args.coordinates)
    if len(coordinates) != 2:
        raise UsageError(f"--coordinates needs two coordinates j,h, got {args.coordinates!r}")
    result = diagonal(system, *coordinates)
    return Report(
        command=args.command,
        name=definition.name,
        status="value",
        exit_code=0,
        document=format_definition(system_to_def(result, f"{definition.name}_diagonal")) + "\n",
    )


_ANSWER_STATUS = {Answer.YES: ("holds", 0), Answer.NO: ("fails", 1), Answer.UNKNOWN: ("unknown", 3)}

_VARIETY_WORDS = {
    "exists": {
        Answer.YES: "some output is commutative",
        Answer.NO: "no output is commutative",
    },
    "forall": {
        Answer.YES: "every output is commutative",
        Answer.NO: "not every output is commutative",
    },
}


def variety(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    depth = args.depth if args.depth is not None else settings.variety_depth
    if depth < 0:
        raise UsageError(f"--depth must be nonnegative, got {depth}")
    order = _order(settings, automaton.ring)

    if args.mode == "member":
        if args.output is None:
            raise UsageError("--mode member needs --output c1,...,ck")
        try:
            output = [to_fraction(part.strip()) for part in args.output.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--output needs comma-separated rationals, got {args.output!r}")
        holds = output_membership(automaton, alpha, output, depth, order)
        return Report(
            command=args.command,
            name=definition.name,
            status="holds" if holds else "fails",
            exit_code=0 if holds else 1,
            verdict="commutative" if holds else "not commutative",
        )

    query = exists_commutative_output if args.mode == "exists" else all_outputs_commutative
    answer = query(automaton, alpha, depth, order)
    status, exit_code = _ANSWER_STATUS[answer]
    report = Report(
        command=args.command,
        name=definition.name,
        status=status,
        exit_code=exit_code,
        verdict=_VARIETY_WORDS[args.mode].get(answer, f"unknown within depth {depth}"),
    )
    if answer == Answer.YES:
        result = stabilize(automaton, alpha, depth, order)
        report.stabilization_index = result.index
        report.ideal = [format_polynomial(p) for p in result.ideal.gb.basis]
        report.trace = list(result.trace)
        if args.sample and args.mode == "exists":
            point = sample_commutative_output(automaton, alpha, depth)
            if point is not None:
                report.sample = [format_rational(c) for c in point]
    return report


def convert(args: argparse.Namespace, document: Document, settings: Settings) -> Report:
    definition, automaton, alpha = _automaton(args, document)
    polynomial = to_polynomial_automaton(automaton, alpha)
    return Report(
        command=args.command,
        name=definition.name,
        status="value",
        exit_code=0,
        document=format_polynomial_automaton(polynomial) + "\n",
    )


HANDLERS: Dict[str, Handler] = {
    "check-zero": check_zero,
    "check-equal": check_equal,
    "check-commutative": check_commutative,
    "coeff": coeff,
    "truncate": truncate_series,
    "polyrec-consistent": check_polyrec,
    "cda-solvable": check_cda,
    "eval": evaluate_system,
    "section": emit_section,
    "diagonal": emit_diagonal,
    "variety": variety,
    "convert": convert,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="Input file in the commseries language")
    common.add_argument("--name", help="Definition to use; defaults to the only candidate")
    common.add_argument("--json", action="store_true", help="Print a JSON report")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log progress (-vv for debug)")

    config = argparse.ArgumentParser(add_help=False)
    config.add_argument("--config", help="Configuration polynomial over the nonterminals (default: first nonterminal)")

    eval_flag = argparse.ArgumentParser(add_help=False)
    eval_flag.add_argument(
        "--allow-inconsistent-eval",
        action="store_true",
        help="Accept values along the canonical path without checking solvability",
    )

    parser = argparse.ArgumentParser(
        prog="commseries",
        description="Zeroness, equality and commutativity of series recognised by product automata",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check-zero", parents=[common, config], help="Is the series zero?")
    equal = sub.add_parser("check-equal", parents=[common, config], help="Are two series equal?")
    equal.add_argument("--other", required=True, help="The second automaton")
    equal.add_argument("--other-config", help="Configuration of the second automaton")
    sub.add_parser("check-commutative", parents=[common, config], help="Is the series commutative?")
    c = sub.add_parser("coeff", parents=[common, config], help="Coefficient of a word")
    c.add_argument("--word", required=True, help="Comma-separated letters, empty for ε")
    t = sub.add_parser("truncate", parents=[common, config], help="Coefficients up to a length")
    t.add_argument("--len", type=int, required=True, help="Length bound L")

    sub.add_parser("polyrec-consistent", parents=[common], help="Does the polyrec system define a sequence?")
    sub.add_parser("cda-solvable", parents=[common], help="Does the CDA system have a power series solution?")
    e = sub.add_parser("eval", parents=[common, eval_flag], help="Value of a system at a point")
    e.add_argument("--point", required=True, help="Comma-separated n1,...,nd")
    e.add_argument("--unknown", help="Unknown to report (default: the first)")
    e.add_argument("--ordinary", action="store_true", help="CDA only: coefficient of x^n instead of x^n/n!")
    s = sub.add_parser("section", parents=[common, eval_flag], help="Emit the section at a fixed coordinate")
    s.add_argument("--coordinate", type=int, required=True, help="Coordinate j, from 1")
    s.add_argument("--value", type=int, required=True, help="Value m >= 0")
    d = sub.add_parser("diagonal", parents=[common], help="Emit the diagonal of two coordinates")
    d.add_argument("--coordinates", required=True, help="Two coordinates j,h")

    v = sub.add_parser("variety", parents=[common, config], help="Which outputs make the series commutative?")
    v.add_argument("--mode", choices=["exists", "forall", "member"], required=True)
    v.add_argument("--depth", type=int, help="Depth budget (default from COMMSERIES_VARIETY_DEPTH)")
    v.add_argument("--output", help="member mode: comma-separated output values")
    v.add_argument("--sample", action="store_true", help="exists mode: look for a rational output")

    conv = sub.add_parser("convert", parents=[common, config], help="Convert a Hadamard automaton")
    conv.add_argument("--to", choices=["polynomial-automaton"], required=True)
    return parser


def configure_logging(settings: Settings, verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(args: argparse.Namespace, settings: Settings) -> Report:
    """Load the input and dispatch to the command handler, turning library errors into reports."""
    start = time.perf_counter()
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        return error_report(args.command, UsageError(f"Cannot read {args.file}: {e}"))
    try:
        report = HANDLERS[args.command](args, parse(text), settings)
    except DepthBudgetExceeded as e:
        logger.warning(f"Depth budget exhausted: {e}")
        report = error_report(args.command, e, exit_code=3)
    except CommSeriesError as e:
        logger.error(f"{args.command} failed: {e}")
        report = error_report(args.command, e)
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    configure_logging(settings, args.verbose)
    report = run(args, settings)
    if args.json:
        print(report.model_dump_json(indent=2, exclude_none=True))
    else:
        print(render(report))
    return report.exit_code
