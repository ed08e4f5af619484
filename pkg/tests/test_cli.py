import json
from pathlib import Path
from typing import List

import pytest

from commseries.cli.main import build_parser, main
from commseries.cli.report import Report
from commseries.config import get_settings

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
SCHEMA = HERE.parent / "docs" / "report.schema.json"


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    for name in (
        "COMMSERIES_MONOMIAL_ORDER",
        "COMMSERIES_VARIETY_DEPTH",
        "COMMSERIES_CONCURRENT",
        "COMMSERIES_MAX_CONCURRENT",
        "COMMSERIES_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def data(name: str) -> str:
    return str(DATA / name)


def run_text(capsys, argv: List[str]) -> tuple:
    """Exit code and output without the timing line."""
    code = main(argv)
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("time: ")
    return code, "\n".join(lines[:-1]) + "\n"


def run_json(capsys, argv: List[str]) -> tuple:
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    report = Report.model_validate_json(out)
    assert report.exit_code == code
    return code, json.loads(out)


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["coeff", data("intro.fsc"), "--word", "a1,a2"], "coeff_intro.txt"),
        (["truncate", data("intro.fsc"), "--len", "2"], "truncate_intro.txt"),
        (["section", data("powers.fsc"), "--coordinate", "1", "--value", "1"], "section_powers.txt"),
        (["diagonal", data("powers.fsc"), "--coordinates", "1,2"], "diagonal_powers.txt"),
        (["eval", data("powers.fsc"), "--point", "1,1"], "eval_powers.txt"),
    ],
)
def test_golden_output(capsys, argv: List[str], golden: str) -> None:
    code, text = run_text(capsys, argv)
    assert code == 0
    assert text == (GOLDEN / golden).read_text(encoding="utf-8")


def test_emitted_documents_parse_back(capsys) -> None:
    from commseries.cli.parser import parse

    code, report = run_json(capsys, ["section", data("powers.fsc"), "--coordinate", "1", "--value", "1"])
    assert code == 0
    system = parse(report["document"]).get().to_system()
    assert system.dims == 1
    assert system.init == (8,)


def test_commutativity_failure(capsys) -> None:
    code, text = run_text(capsys, ["check-commutative", data("intro.fsc")])
    assert code == 1
    lines = text.splitlines()
    assert lines[0] == "not commutative"
    assert "witness: a1 a2 ↦ 9, a2 a1 ↦ -15" in lines
    assert "failed check: swap a1 a2" in lines


def test_commutativity_failure_json(capsys) -> None:
    code, report = run_json(capsys, ["check-commutative", data("intro.fsc")])
    assert code == 1
    assert report["status"] == "fails"
    assert report["verdict"] == "not commutative"
    assert report["name"] == "intro"
    assert report["witness"]["word"] == ["a1", "a2"]
    assert report["witness"]["value"] == "9"
    assert report["witness"]["other_word"] == ["a2", "a1"]
    assert report["witness"]["other_value"] == "-15"
    assert report["failed_check"] == "swap a1 a2"
    assert "error" not in report


def test_commutative_with_another_output(capsys) -> None:
    code, report = run_json(capsys, ["check-commutative", data("powers.fsc")])
    assert code == 0
    assert report["verdict"] == "commutative"
    assert "witness" not in report


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_monomial_order_from_the_environment(capsys, monkeypatch, order: str) -> None:
    monkeypatch.setenv("COMMSERIES_MONOMIAL_ORDER", order)
    get_settings.cache_clear()
    assert run_json(capsys, ["check-commutative", data("intro.fsc")])[0] == 1
    assert run_json(capsys, ["check-commutative", data("powers.fsc")])[0] == 0


def test_zeroness(capsys) -> None:
    code, report = run_json(capsys, ["check-zero", data("zero.fsc"), "--config", "X + Y"])
    assert code == 0
    assert report["verdict"] == "zero"
    code, report = run_json(capsys, ["check-zero", data("zero.fsc")])
    assert code == 1
    assert report["verdict"] == "nonzero"
    assert report["witness"]["word"] == []
    assert report["witness"]["value"] == "1"
    assert report["failed_check"] == "zeroness"


def test_equality(capsys) -> None:
    code, report = run_json(capsys, ["check-equal", data("fibonacci.fsc"), "--name", "fg", "--other", "pq"])
    assert code == 0
    assert report["verdict"] == "equal"
    code, report = run_json(
        capsys,
        ["check-equal", data("fibonacci.fsc"), "--name", "fg", "--other", "pq", "--other-config", "Q"],
    )
    assert code == 1
    assert report["verdict"] == "not equal"
    assert report["witness"]["word"] == []
    assert (report["witness"]["value"], report["witness"]["other_value"]) == ("0", "1")


def test_polyrec_consistency(capsys) -> None:
    code, report = run_json(capsys, ["polyrec-consistent", data("systems.fsc"), "--name", "squares"])
    assert code == 1
    assert report["verdict"] == "inconsistent"
    assert report["path"]["unknown"] == "f"
    assert report["path"]["first_value"] != report["path"]["second_value"]
    code, report = run_json(capsys, ["polyrec-consistent", data("powers.fsc")])
    assert code == 0
    assert report["verdict"] == "consistent"


def test_cda_solvability(capsys) -> None:
    code, text = run_text(capsys, ["cda-solvable", data("systems.fsc"), "--name", "unsolvable"])
    assert code == 1
    assert "paths to f(1, 1): a1 a2 gives 0, a2 a1 gives 1" in text.splitlines()
    code, report = run_json(capsys, ["cda-solvable", data("systems.fsc"), "--name", "binomial"])
    assert code == 0
    assert report["verdict"] == "solvable"


def test_cda_evaluation(capsys) -> None:
    code, report = run_json(
        capsys, ["eval", data("systems.fsc"), "--name", "binomial", "--point", "2,1", "--ordinary"]
    )
    assert code == 0
    assert report["value"] == "X1(2, 1) = 1"
    code, report = run_json(
        capsys, ["eval", data("systems.fsc"), "--name", "binomial", "--point", "2,1", "--unknown", "X1"]
    )
    assert report["value"] == "X1(2, 1) = 2"


def test_inconsistent_evaluation(capsys) -> None:
    argv = ["eval", data("systems.fsc"), "--name", "unsolvable", "--point", "1,1"]
    code, report = run_json(capsys, argv)
    assert code == 2
    assert report["status"] == "error"
    assert report["error"]["kind"] == "inconsistent"
    assert "--allow-inconsistent-eval" in report["error"]["suggestion"]
    code, report = run_json(capsys, argv + ["--allow-inconsistent-eval"])
    assert code == 0
    assert report["value"] == "f(1, 1) = 0"


def test_ordinary_needs_a_cda_system(capsys) -> None:
    code, report = run_json(capsys, ["eval", data("powers.fsc"), "--point", "1,1", "--ordinary"])
    assert code == 2
    assert report["error"]["kind"] == "usage"


def test_variety_exists_with_sample(capsys) -> None:
    code, report = run_json(
        capsys, ["variety", data("intro.fsc"), "--mode", "exists", "--depth", "2", "--sample"]
    )
    assert code == 0
    assert report["status"] == "holds"
    assert report["verdict"] == "some output is commutative"
    assert report["stabilization_index"] == 2
    assert report["ideal"] == ["A^4 - A^2"]
    assert report["trace"] == [0, 0, 1, 1, 1]
    assert report["sample"] == ["-1"]


def test_variety_text(capsys) -> None:
    code, text = run_text(capsys, ["variety", data("intro.fsc"), "--mode", "exists", "--depth", "2"])
    assert code == 0
    lines = text.splitlines()
    assert "ideal: ⟨A^4 - A^2⟩" in lines
    assert "basis sizes: [0, 0, 1, 1, 1]" in lines
    assert "stabilization index: 2" in lines


def test_variety_forall_and_unknown(capsys) -> None:
    code, report = run_json(capsys, ["variety", data("intro.fsc"), "--mode", "forall", "--depth", "2"])
    assert code == 1
    assert report["verdict"] == "not every output is commutative"
    code, report = run_json(capsys, ["variety", data("intro.fsc"), "--mode", "exists", "--depth", "1"])
    assert code == 3
    assert report["status"] == "unknown"
    assert report["verdict"] == "unknown within depth 1"


def test_variety_depth_from_the_environment(capsys, monkeypatch) -> None:
    monkeypatch.setenv("COMMSERIES_VARIETY_DEPTH", "1")
    get_settings.cache_clear()
    code, report = run_json(capsys, ["variety", data("intro.fsc"), "--mode", "exists"])
    assert code == 3


@pytest.mark.parametrize("output, code", [("-1", 0), ("0", 0), ("2", 1), ("1/2", 1)])
def test_variety_membership(capsys, output: str, code: int) -> None:
    argv = ["variety", data("intro.fsc"), "--mode", "member", "--depth", "2", f"--output={output}"]
    assert run_json(capsys, argv)[0] == code


def test_membership_out_of_budget(capsys) -> None:
    argv = ["variety", data("intro.fsc"), "--mode", "member", "--depth", "1", "--output=1"]
    code, report = run_json(capsys, argv)
    assert code == 3
    assert report["status"] == "unknown"
    assert report["error"]["kind"] == "budget"


def test_convert(capsys) -> None:
    code, report = run_json(capsys, ["convert", data("intro.fsc"), "--to", "polynomial-automaton"])
    assert code == 0
    assert report["document"].startswith("polynomial automaton of dimension")


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["check-zero", data("broken.fsc")], "parse"),
        (["check-zero", data("missing.fsc")], "usage"),
        (["check-zero", data("intro.fsc"), "--name", "nope"], "usage"),
        (["check-zero", data("intro.fsc"), "--config", "B"], "parse"),
        (["check-equal", data("powers.fsc"), "--other", "power_sequence"], "usage"),
        (["truncate", data("intro.fsc"), "--len", "-1"], "usage"),
        (["eval", data("powers.fsc"), "--point", "1,x"], "usage"),
        (["diagonal", data("powers.fsc"), "--coordinates", "1"], "usage"),
        (["variety", data("intro.fsc"), "--mode", "member"], "usage"),
        (["coeff", data("intro.fsc"), "--word", "a3"], "symbol"),
    ],
)
def test_errors_exit_with_two(capsys, argv: List[str], kind: str) -> None:
    code, report = run_json(capsys, argv)
    assert code == 2
    assert report["status"] == "error"
    assert report["error"]["kind"] == kind


def test_zero_denominators_exit_with_two(capsys, tmp_path) -> None:
    source = tmp_path / "bad.fsc"
    source.write_text(
        "automaton bad {\n  alphabet { a: shuffle }\n  nonterminals { X }\n  output { X = 1/0 }\n}\n",
        encoding="utf-8",
    )
    code, report = run_json(capsys, ["check-zero", str(source)])
    assert code == 2
    assert report["error"]["kind"] == "parse"
    assert (report["error"]["line"], report["error"]["column"]) == (4, 16)
    code, report = run_json(capsys, ["check-zero", data("intro.fsc"), "--config", "1/0*A"])
    assert code == 2
    assert report["error"]["kind"] == "parse"
    argv = ["variety", data("intro.fsc"), "--mode", "member", "--depth", "2", "--output=1/0"]
    code, report = run_json(capsys, argv)
    assert code == 2
    assert report["error"]["kind"] == "usage"


def test_parse_error_location(capsys) -> None:
    code, report = run_json(capsys, ["check-zero", data("broken.fsc")])
    assert (report["error"]["line"], report["error"]["column"]) == (4, 17)
    main(["check-zero", data("broken.fsc")])
    out = capsys.readouterr().out
    assert out.startswith("error: line 4, column 17: Implicit multiplication")


def test_bad_arguments_exit_through_argparse() -> None:
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["variety", data("intro.fsc"), "--mode", "sometimes"])
    assert info.value.code == 2


def test_report_schema_is_current() -> None:
    published = json.loads(SCHEMA.read_text(encoding="utf-8"))
    schema = Report.model_json_schema()
    assert published["title"] == schema["title"]
    assert set(published["properties"]) == set(schema["properties"])
    assert set(published["required"]) == set(schema["required"])
    assert set(published["$defs"]) == set(schema["$defs"])
    for name, definition in schema["$defs"].items():
        assert set(published["$defs"][name]["properties"]) == set(definition["properties"])
