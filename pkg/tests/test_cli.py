from __future__ import annotations

import json

import pytest

from ielie.cli import run


def ok(*argv):
    code, out = run(list(argv))
    assert code == 0, out
    return json.loads(out)


def test_trees_enumerate():
    assert ok("trees", "enumerate", "--n", "4") == ["(((())))", "((()()))", "((())())", "(()()())"]
    rows = ok("trees", "enumerate", "--n", "3", "--stats")
    assert rows[1] == {"tree": "(()())", "size": 3, "depth": 1, "rdeg": 2, "compsize": 1, "xi": 2}


def test_trees_xi():
    assert ok("trees", "xi", "((()())()()())") == {"tree": "((()())()()())", "xi": 12}


def test_bracket_fixture():
    assert ok("bracket", "+()", "+(()())") == {
        "plus": {"((()()))": "-1", "((())())": "2", "(()()())": "1"}
    }
    assert ok("bracket", "-()", "+()") == {"d": "1"}
    assert ok("bracket", "d", "-(())") == {"minus": {"(())": "-2"}}


def test_sigma_and_tau():
    assert ok("sigma", "+(()())") == {"minus": {"(()())": "2"}}
    assert ok("sigma", '{"plus": {"()": "3"}, "d": "1"}') == {"d": "1", "minus": {"()": "3"}}
    assert ok("tau", "--zeta", "1/3", "-(())") == {"minus": {"(())": "9"}}
    assert ok("tau", "--zero", "d") == {"d": "-1"}


def test_latex_output():
    code, out = run(["bracket", "+()", "+(()())", "--format", "latex"])
    assert code == 0
    assert out == b"-D^{+}_{((()()))} + 2 D^{+}_{((())())} + D^{+}_{(()()())}\n"


def test_decompose_check():
    doc = ok("decompose", "+(()())", "--check")
    assert doc["check"] is True
    assert doc["polynomial"] == {"bracket": [{"gen": "+()"}, {"gen": "+(())"}]}


def test_verify_report(tmp_path):
    out = tmp_path / "r.json"
    code, text = run(["verify", "xi-identity", "--max-degree", "7", "--out", str(out)])
    doc = json.loads(text)
    assert code == 0 and doc["pass"] is True and doc["suite"] == "xi_identity"
    assert json.loads(out.read_text()) == doc


def test_verify_is_byte_identical():
    argv = ["verify", "self-centralizing", "--max-degree", "2", "--trials", "5", "--seed", "3"]
    assert run(argv) == run(argv)
    assert run(argv + ["--jobs", "2"]) == run(argv)


def test_verify_timing_flag():
    doc = ok("verify", "grading", "--max-degree", "2", "--timing")
    assert "elapsed_ms" in doc
    assert "elapsed_ms" not in ok("verify", "grading", "--max-degree", "2")


def test_ladder_free_verb():
    doc = ok("verify", "ladder-free", "--max-degree", "4")
    assert doc["cases"] == 1 + 1 + 3 + 6


def test_derivations():
    doc = ok("derivations", "--truncate", "3")
    assert doc["dimension"] == 1 and doc["inner_ad_d"] is True


def test_virasoro_verbs():
    assert ok("virasoro", "bracket", "--q", "1", "--alpha", "1", "--beta", "-1") == {
        "z": "-1",
        "e": {"0": "-2"},
    }
    assert ok("virasoro", "verify", "kappa-hom", "--q", "2", "--bound", "4")["pass"] is True


def test_failed_verification_exits_1(monkeypatch):
    from ielie import verify

    def broken(name, k, jobs=1):
        report = verify.Report(name, {"max_degree": k}, cases=1)
        report.violations.append({"inputs": [], "expected": "0", "got": "1"})
        return report

    monkeypatch.setattr(verify, "run_suite", broken)
    code, text = run(["verify", "jacobi", "--max-degree", "2"])
    assert code == 1 and json.loads(text)["pass"] is False


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["bracket", "+()"],
        ["bracket", "+((", "+()"],
        ["bracket", "x()", "+()"],
        ["tau", "--zeta", "0", "+()"],
        ["tau", "--zeta", "1.5", "+()"],
        ["trees", "enumerate", "--n", "0"],
        ["verify", "nope", "--max-degree", "3"],
        ["verify", "jacobi"],
        ["decompose", "-(())"],
        ["virasoro", "bracket", "--q", "1", "--alpha", "1/2", "--beta", "1"],
        ["bracket", "+()", "+()", "--bogus"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out = run(argv)
    assert code == 2 and out == b""
    assert "usage" in capsys.readouterr().err
