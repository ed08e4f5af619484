"""
Machine-readable reports of the command line tool
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from commseries.decide.verdict import PathWitness, Verdict, Witness
from commseries.errors import CommSeriesError
from commseries.utils import format_rational, format_word

STATUSES = ("holds", "fails", "unknown", "value", "error")


class WitnessReport(BaseModel):
    word: List[str] = Field(description="Letters of the first witness word")
    value: str = Field(description="Its coefficient, as n or n/d")
    other_word: Optional[List[str]] = Field(None, description="Letters of the second word of a pair")
    other_value: Optional[str] = Field(None, description="Coefficient of the second word")
    text: str = Field(description="The witness as printed for humans")


class PathReport(BaseModel):
    unknown: str = Field(description="The unknown that takes two values")
    point: List[int] = Field(description="The lattice point both paths reach")
    first: List[str] = Field(description="First path, as letters a1 ... ad")
    second: List[str] = Field(description="Second path")
    first_value: str
    second_value: str


class ErrorReport(BaseModel):
    kind: str
    error_type: str
    message: str
    suggestion: str
    line: Optional[int] = None
    column: Optional[int] = None


class CoefficientReport(BaseModel):
    word: List[str]
    value: str


class Report(BaseModel):
    """
    The outcome of one command.

    status is "holds" or "fails" for decision commands, "unknown" when a depth
    budget ran out, "value" for commands that compute something and "error"
    when the command could not run.
    """

    command: str = Field(description="The subcommand that was run")
    name: Optional[str] = Field(None, description="The definition the command worked on")
    status: str = Field(description=f"One of {', '.join(STATUSES)}")
    exit_code: int = Field(description="0 holds or value, 1 fails, 2 error, 3 unknown")
    verdict: Optional[str] = Field(None, description="The answer in words, e.g. 'commutative'")
    witness: Optional[WitnessReport] = None
    path: Optional[PathReport] = None
    failed_check: Optional[str] = Field(None, description="The failing query, e.g. 'swap a1 a2'")
    stabilization_index: Optional[int] = None
    value: Optional[str] = Field(None, description="A single computed rational")
    values: Optional[Dict[str, str]] = Field(None, description="Computed rationals by name")
    series: Optional[List[CoefficientReport]] = Field(None, description="Nonzero coefficients of a truncation")
    ideal: Optional[List[str]] = Field(None, description="Reduced Gröbner basis of a commutativity ideal")
    trace: Optional[List[int]] = Field(None, description="Basis sizes along the commutativity chain")
    sample: Optional[List[str]] = Field(None, description="A rational output vector making the series commutative")
    document: Optional[str] = Field(None, description="Emitted text in the input language")
    error: Optional[ErrorReport] = None
    elapsed_seconds: float = Field(0.0, description="Wall-clock time of the computation")


def witness_report(witness: Witness) -> WitnessReport:
    return WitnessReport(
        word=list(witness.word),
        value=format_rational(witness.value),
        other_word=list(witness.other_word) if witness.is_pair else None,
        other_value=format_rational(witness.other_value) if witness.is_pair else None,
        text=str(witness),
    )


def path_report(path: PathWitness) -> PathReport:
    return PathReport(
        unknown=path.unknown,
        point=list(path.point),
        first=list(path.first),
        second=list(path.second),
        first_value=format_rational(path.first_value),
        second_value=format_rational(path.second_value),
    )


def verdict_report(command: str, name: Optional[str], verdict: Verdict, words: Dict[bool, str]) -> Report:
    """
    Report a decision.

    Args:
        command: The subcommand
        name: The definition name
        verdict: The decision
        words: How to say the answer, e.g. {True: "zero", False: "nonzero"}
    """
    return Report(
        command=command,
        name=name,
        status="holds" if verdict.answer else "fails",
        exit_code=0 if verdict.answer else 1,
        verdict=words[verdict.answer],
        witness=witness_report(verdict.witness) if verdict.witness else None,
        path=path_report(verdict.path) if verdict.path else None,
        failed_check=str(verdict.failed_check) if verdict.failed_check else None,
        stabilization_index=verdict.stabilization_index,
    )


def error_report(command: str, error: CommSeriesError, exit_code: int = 2) -> Report:
    details: Dict[str, Any] = error.get_details()
    return Report(
        command=command,
        status="unknown" if exit_code == 3 else "error",
        exit_code=exit_code,
        error=ErrorReport(**details),
    )


def render(report: Report) -> str:
    """The report as text for humans, one fact per line."""
    lines: List[str] = []
    if report.error is not None:
        lines.append(f"error: {report.error.message or report.error.error_type}")
        if report.error.suggestion:
            lines.append(f"hint: {report.error.suggestion}")
        return "\n".join(lines)
    if report.verdict is not None:
        lines.append(report.verdict)
    if report.witness is not None:
        lines.append(f"witness: {report.witness.text}")
    if report.path is not None:
        path = report.path
        lines.append(
            f"paths to {path.unknown}{tuple(path.point)}: "
            f"{format_word(tuple(path.first))} gives {path.first_value}, "
            f"{format_word(tuple(path.second))} gives {path.second_value}"
        )
    if report.failed_check is not None:
        lines.append(f"failed check: {report.failed_check}")
    if report.stabilization_index is not None:
        lines.append(f"stabilization index: {report.stabilization_index}")
    if report.value is not None:
        lines.append(report.value)
    if report.values is not None:
        lines.extend(f"{key} = {value}" for key, value in report.values.items())
    if report.series is not None:
        for term in report.series:
            lines.append(f"{format_word(tuple(term.word))}: {term.value}")
    if report.ideal is not None:
        lines.append("ideal: " + ("⟨" + ", ".join(report.ideal) + "⟩" if report.ideal else "⟨0⟩"))
    if report.trace is not None:
        lines.append(f"basis sizes: {report.trace}")
    if report.sample is not None:
        lines.append(f"sample output: ({', '.join(report.sample)})")
    if report.document is not None:
        lines.append(report.document.rstrip("\n"))
    lines.append(f"time: {report.elapsed_seconds:.3f}s")
    return "\n".join(lines)
