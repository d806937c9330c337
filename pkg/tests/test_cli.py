import json
from pathlib import Path

import pytest

from app.main import main, parse_seed_range
from tests.helpers import FIXTURES


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MWB_DATA_DIR", str(tmp_path / "data"))
    monkeypatch.setenv("MWB_OUTPUT_DIR", str(tmp_path / "artifacts"))


def test_solve_writes_report(tmp_path: Path) -> None:
    out = tmp_path / "fig1.json"
    code = main(
        ["solve", str(FIXTURES / "fig1.json"), "--solver=tailored", f"--out={out}"]
    )
    assert code == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["esn_points"] == [["1", "10"], ["2", "6"], ["6", "2"]]
    assert report["stats"]["wall_time_s"] is None


def test_solve_prints_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["solve", str(FIXTURES / "ex28.json"), "--solver", "adjacency"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["esn_points"] == [["4", "12"], ["12", "4"]]


def test_solve_with_verify(tmp_path: Path) -> None:
    out = tmp_path / "verified.json"
    code = main(
        [
            "solve",
            str(FIXTURES / "fig1.json"),
            "--solver=dichotomic",
            "--verify",
            f"--out={out}",
        ]
    )
    assert code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["verified"] is True


def test_repeated_solves_are_byte_identical(tmp_path: Path) -> None:
    for name in ("a.json", "b.json"):
        args = ["solve", str(FIXTURES / "fig1.json"), f"--out={tmp_path / name}"]
        assert main(args) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_validation_error_exit_code(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "version": 1,
                "matroid": {"kind": "uniform", "ground_size": 5, "rank": 2},
                "costs": [[0, 0]] * 6,
            }
        ),
        encoding="utf-8",
    )
    assert main(["solve", str(bad)]) == 1
    assert "5 elements but 6 cost rows" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path: Path) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json", encoding="utf-8")
    assert main(["solve", str(bad)]) == 1


def test_missing_file_exit_code(tmp_path: Path) -> None:
    assert main(["solve", str(tmp_path / "nowhere.json")]) == 1


def test_resource_cap_exit_code(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MWB_ENUMERATION_CAP", "3")
    assert main(["solve", str(FIXTURES / "fig1.json"), "--solver=global"]) == 2
    assert main(["oracle", str(FIXTURES / "fig1.json")]) == 2


def test_gen_then_oracle(tmp_path: Path) -> None:
    instance = tmp_path / "gen.json"
    args = ["gen", "--family=uniform", "--seed=2", "--m=8", "--rank=3"]
    assert main([*args, f"--out={instance}"]) == 0
    out = tmp_path / "oracle.json"
    assert main(["oracle", str(instance), f"--out={out}"]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["basis_count"] == 56


def test_gen_rejects_infeasible_rank() -> None:
    code = main(["gen", "--family=uniform", "--seed=1", "--m=3", "--rank=5"])
    assert code == 1


def test_bench_row_count(tmp_path: Path) -> None:
    csv = tmp_path / "bench.csv"
    code = main(
        [
            "bench",
            "--family=graphic",
            "--sizes=5,6,7",
            "--seeds=1..5",
            "--solvers=tailored,dichotomic",
            f"--csv={csv}",
        ]
    )
    assert code == 0
    assert len(csv.read_text(encoding="utf-8").splitlines()) == 31


def test_seed_range_parsing() -> None:
    assert list(parse_seed_range("1..5")) == [1, 2, 3, 4, 5]
    assert list(parse_seed_range("7")) == [7]


def test_unreadable_inputs_exit_code(tmp_path: Path) -> None:
    binary = tmp_path / "binary.json"
    binary.write_bytes(b"\xff\xfe")
    assert main(["solve", str(binary)]) == 1
    assert main(["solve", str(tmp_path)]) == 1


def test_usage_errors_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["solve", str(FIXTURES / "fig1.json"), "--solver=simplex"]) == 1
    assert main(["bench", "--family=graphic"]) == 1
    assert main([]) == 1
    assert "usage:" in capsys.readouterr().err
    assert main(["--help"]) == 0
