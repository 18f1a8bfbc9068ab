"""Tests for the qa command line front end, driven in process via main()."""

import json

import pytest

from quorum_algebra import cli
from quorum_algebra.cli import load_system_file, main
from quorum_algebra.oracle import OracleReport


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write_input(tmp_path, doc, name="system.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


TRIANGLE = {"n": 3, "quorums": [[1, 2], [1, 3], [2, 3]], "fail_prone": [[1], [2], [3]]}


def test_check_consistency_holds(tmp_path, capsys):
    path = write_input(tmp_path, TRIANGLE)
    code, out, err = run(["check", "consistency", "--input", path], capsys)
    assert code == 0
    assert out == (
        "property: consistency\n"
        "n: 3\n"
        "quorums: 3 sets\n"
        "algebraic: holds (9 = 9)\n"
        "oracle: holds\n"
        "verdict: holds\n"
    )
    timing = [line for line in err.splitlines() if line.startswith("timing: ")]
    assert len(timing) == 2


def test_check_consistency_fails(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "quorums": [[1], [2]]})
    code, out, _ = run(["check", "consistency", "--input", path], capsys)
    assert code == 1
    assert "oracle: fails (witness {P1}, {P2})" in out
    assert out.endswith("verdict: fails\n")


def test_check_single_method(tmp_path, capsys):
    path = write_input(tmp_path, TRIANGLE)
    code, out, _ = run(
        ["check", "consistency", "--input", path, "--method", "algebraic"], capsys
    )
    assert code == 0
    assert "algebraic: holds (9 = 9)" in out
    assert "oracle" not in out
    code, out, _ = run(
        ["check", "consistency", "--input", path, "--method", "oracle"], capsys
    )
    assert code == 0
    assert "oracle: holds" in out
    assert "algebraic" not in out


def test_check_q3_needs_only_fail_prone(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "fail_prone": [[1], [2], [3]]})
    code, out, _ = run(["check", "q3", "--input", path], capsys)
    assert code == 1
    assert "witness" in out


def test_check_availability(tmp_path, capsys):
    path = write_input(tmp_path, TRIANGLE)
    code, out, _ = run(["check", "availability", "--input", path], capsys)
    assert code == 0
    assert "fail_prone: 3 sets" in out


def test_check_json_like(tmp_path, capsys):
    path = write_input(tmp_path, TRIANGLE)
    code, out, _ = run(
        ["check", "consistency", "--input", path, "--format", "json-like"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == [
        "property", "n", "quorums", "method", "algebraic", "oracle", "verdict",
    ]
    assert doc["algebraic"]["expected_count"] == 9
    assert doc["algebraic"]["observed_count"] == 9
    assert doc["algebraic"]["holds"] is True
    assert doc["oracle"] == {"holds": True, "witness": None}
    assert doc["verdict"] == "holds"


def test_check_json_like_witness(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "fail_prone": [[1], [2], [3]]})
    code, out, _ = run(
        ["check", "q3", "--input", path, "--format", "json-like"], capsys
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["fail_prone"] == [[1], [2], [3]]
    covers = doc["oracle"]["witness"]
    assert sorted(i for w in covers for i in w) == [1, 2, 3]


def test_check_missing_required_system(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "quorums": [[1, 2]]})
    code, _, err = run(["check", "availability", "--input", path], capsys)
    assert code == 2
    assert "needs 'fail_prone'" in err


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 3, "quorums": [[0, 1]]},
        {"n": 3, "quorums": [[1, 4]]},
        {"n": 0, "quorums": [[1]]},
        {"n": True, "quorums": [[1]]},
        {"n": 3, "quorums": [[1, "a"]]},
        {"n": 3, "quorums": [1, 2]},
        {"n": 3, "quorums": [[1]], "extra": 1},
        {"quorums": [[1]]},
    ],
)
def test_check_malformed_documents(tmp_path, capsys, doc):
    path = write_input(tmp_path, doc)
    code, _, err = run(["check", "consistency", "--input", path], capsys)
    assert code == 2
    assert err.startswith("error: ")


def test_check_unreadable_inputs(tmp_path, capsys):
    code, _, err = run(
        ["check", "consistency", "--input", str(tmp_path / "missing.json")], capsys
    )
    assert code == 2 and "cannot read" in err
    broken = tmp_path / "broken.json"
    broken.write_text("{nope", encoding="utf-8")
    code, _, err = run(["check", "consistency", "--input", str(broken)], capsys)
    assert code == 2 and "not valid JSON" in err


def test_check_is_deterministic(tmp_path, capsys):
    path = write_input(tmp_path, TRIANGLE)
    outs = set()
    for _ in range(2):
        for fmt in ("text", "json-like"):
            _, out, _ = run(
                ["check", "masking", "--input", path, "--format", fmt], capsys
            )
            outs.add((fmt, out))
    assert len(outs) == 2


def test_cross_validation_disagreement(tmp_path, capsys, monkeypatch):
    path = write_input(tmp_path, TRIANGLE)

    def bogus(prop, quorums, fail_prone):
        return OracleReport("classical-consistency", False, None)

    monkeypatch.setattr(cli, "_run_oracle", bogus)
    code, out, _ = run(["check", "consistency", "--input", path], capsys)
    assert code == 3
    assert "verdict: CROSS-VALIDATION FAILURE" in out


def test_groebner_trivial_ideal(capsys):
    code, out, _ = run(["groebner", "--polys", "x1, x1+1"], capsys)
    assert code == 0
    assert out == "order: x\nn: 1\nreduced basis:\n  1\nstandard monomials: 0\n"


def test_groebner_single_monomial(capsys):
    code, out, _ = run(["groebner", "--polys", "x1*x2"], capsys)
    assert code == 0
    assert "reduced basis:\n  x1*x2\n" in out
    assert out.endswith("standard monomials: 3\n")


def test_groebner_empty_input_is_the_zero_ideal(capsys):
    code, out, _ = run(["groebner", "--polys", "", "--n", "3"], capsys)
    assert code == 0
    assert out.endswith("standard monomials: 8\n")


def test_groebner_explicit_order_and_file(tmp_path, capsys):
    path = tmp_path / "polys.txt"
    path.write_text("x1*y1 + y1\ny1*y2\n", encoding="utf-8")
    code, out, _ = run(["groebner", "--polys", str(path), "--order", "y,x"], capsys)
    assert code == 0
    assert out.startswith("order: y,x\nn: 2\n")


def test_groebner_errors(capsys):
    code, _, err = run(["groebner", "--polys", ""], capsys)
    assert code == 2 and "pass --n" in err
    code, _, err = run(["groebner", "--polys", "x1 +"], capsys)
    assert code == 2
    code, _, err = run(["groebner", "--polys", "x1", "--n", "0"], capsys)
    assert code == 2
    code, _, err = run(["groebner", "--polys", "y1", "--order", "x"], capsys)
    assert code == 2


def test_gen_threshold_round_trip(tmp_path, capsys):
    out_path = str(tmp_path / "gen.json")
    code, out, err = run(
        ["gen-threshold", "--n", "4", "--f", "1", "--kind", "dissemination",
         "--out", out_path], capsys
    )
    assert code == 0
    assert out == f"wrote {out_path}: 4 quorums, 4 fail-prone sets over n=4\n"
    assert "warning" not in err
    n, quorums, fail_prone = load_system_file(out_path)
    assert n == 4 and len(quorums) == 4 and len(fail_prone) == 4
    code, _, _ = run(["check", "dissemination", "--input", out_path], capsys)
    assert code == 0
    code, _, _ = run(["check", "availability", "--input", out_path], capsys)
    assert code == 0


def test_gen_threshold_warns_when_q3_fails(tmp_path, capsys):
    out_path = str(tmp_path / "gen.json")
    code, _, err = run(
        ["gen-threshold", "--n", "3", "--f", "1", "--kind", "dissemination",
         "--out", out_path], capsys
    )
    assert code == 0
    assert "warning: three fail-prone sets cover all processes" in err
    code, _, _ = run(["check", "dissemination", "--input", out_path], capsys)
    assert code == 0
    code, _, _ = run(["check", "availability", "--input", out_path], capsys)
    assert code == 1


def test_gen_threshold_empty_fail_prone(tmp_path, capsys):
    out_path = str(tmp_path / "gen.json")
    code, _, _ = run(
        ["gen-threshold", "--n", "3", "--f", "0", "--kind", "classical",
         "--out", out_path], capsys
    )
    assert code == 0
    doc = json.loads(open(out_path, encoding="utf-8").read())
    assert doc["quorums"] == [[1, 2], [1, 3], [2, 3]]
    assert doc["fail_prone"] == [[]]


def test_gen_threshold_no_system(tmp_path, capsys):
    code, _, err = run(
        ["gen-threshold", "--n", "3", "--f", "2", "--kind", "masking",
         "--out", str(tmp_path / "gen.json")], capsys
    )
    assert code == 1
    assert "no masking threshold system exists" in err


def test_gen_threshold_bad_arguments(tmp_path, capsys):
    code, _, _ = run(
        ["gen-threshold", "--n", "0", "--f", "0", "--kind", "classical",
         "--out", str(tmp_path / "gen.json")], capsys
    )
    assert code == 2
    code, _, _ = run(
        ["gen-threshold", "--n", "3", "--f", "-1", "--kind", "classical",
         "--out", str(tmp_path / "gen.json")], capsys
    )
    assert code == 2
