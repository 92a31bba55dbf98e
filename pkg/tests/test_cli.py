import json

import pytest

from prolongkit.cli import main

XT_DOC = '{"name": "xt", "n": 1, "matrix": [["t/x"]]}'
CONST_DOC = '{"n": 2, "matrix": [["0", "1"], ["0", "0"]]}'
CONST_SOL = '{"n": 2, "matrix": [["x", "1"], ["1", "0"]]}'


@pytest.fixture
def xt_file(tmp_path):
    p = tmp_path / "xt.json"
    p.write_text(XT_DOC)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out else None
    return code, report, out.err


def test_prolong_binomial(capsys, xt_file):
    code, report, err = run(capsys, "prolong", xt_file, "-i", "2")
    assert code == 0
    assert report["outcome"] == "result"
    assert report["result"]["matrix"] == [
        ["t/x", "0", "0"],
        ["1/x", "t/x", "0"],
        ["0", "2/x", "t/x"],
    ]
    assert "prolong" in err


def test_prolong_kinds_differ_at_block_1_0(capsys, xt_file):
    _, binom, _ = run(capsys, "prolong", xt_file, "-i", "2")
    _, lemma, _ = run(capsys, "prolong", xt_file, "-i", "2", "--kind", "lemma")
    assert binom["result"]["matrix"][1][0] == "1/x"
    assert lemma["result"]["matrix"][1][0] == "2/x"


def test_prolong_iterated(capsys, xt_file):
    code, report, _ = run(capsys, "prolong", xt_file, "-i", "2",
                          "--kind", "iterated")
    assert code == 0
    assert report["result"]["n"] == 4


def test_prolong_order_zero_echoes(capsys, xt_file):
    for kind in ("binomial", "lemma", "iterated"):
        code, report, _ = run(capsys, "prolong", xt_file, "-i", "0",
                              "--kind", kind)
        assert code == 0
        assert report["result"]["matrix"] == [["t/x"]]


def test_verify_example_passes(capsys, xt_file):
    code, report, _ = run(capsys, "verify", xt_file, "-i", "2",
                          "--example", "xt")
    assert code == 0
    assert report["outcome"] == "pass"
    assert report["result"]["first_mismatch"] is None


def test_verify_stripped_fails_with_witness(capsys, xt_file):
    code, report, _ = run(capsys, "verify", xt_file, "-i", "2",
                          "--example", "xt", "--strip-binomials")
    assert code == 1
    assert report["outcome"] == "fail"
    assert report["result"]["first_mismatch"] == [2, 1]
    assert report["result"]["first_mismatch_block"] == [2, 1]
    assert any("block (2,1)" in f for f in report["failures"])


def test_verify_solution_file(capsys, tmp_path):
    mod = tmp_path / "const.json"
    mod.write_text(CONST_DOC)
    sol = tmp_path / "sol.json"
    sol.write_text(CONST_SOL)
    code, report, _ = run(capsys, "verify", str(mod), "-i", "2",
                          "--solution", str(sol))
    assert code == 0
    assert report["outcome"] == "pass"


def test_verify_unrepresentable_solution_is_input_error(capsys, tmp_path):
    mod = tmp_path / "m.json"
    mod.write_text(XT_DOC)
    sol = tmp_path / "bad.json"
    sol.write_text('{"n": 1, "matrix": [["1/theta"]]}')
    code = main(["verify", str(mod), "-i", "1", "--solution", str(sol)])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""
    assert "error" in out.err


def test_missing_file_is_input_error(capsys):
    code = main(["prolong", "/nonexistent/m.json", "-i", "1"])
    out = capsys.readouterr()
    assert code == 2
    assert "error" in out.err


def test_malformed_module_is_input_error(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 2, "matrix": [["0"]]}')
    code = main(["prolong", str(p), "-i", "1"])
    assert code == 2
    capsys.readouterr()


def test_unknown_check_is_usage_error(capsys):
    code = main(["check", "nonsense"])
    assert code == 2
    capsys.readouterr()


def test_check_conjugation_small(capsys):
    code, report, _ = run(capsys, "check", "conjugation", "--n", "2",
                          "--i", "2", "--seed", "7", "--cases", "5")
    assert code == 0
    assert report["outcome"] == "pass"
    assert report["result"]["cases"] == 5
    assert report["inputs"]["seed"] == 7


def test_check_stdout_is_byte_stable(capsys):
    code1, _, _ = run(capsys, "check", "exactness", "--seed", "3",
                      "--cases", "4")
    out1 = main(["check", "exactness", "--seed", "3", "--cases", "4"])
    first = capsys.readouterr()
    main(["check", "exactness", "--seed", "3", "--cases", "4"])
    second = capsys.readouterr()
    assert first.out == second.out
    assert code1 == out1 == 0


def test_seed_env_var_used_as_default(capsys, monkeypatch):
    monkeypatch.setenv("PROLONGKIT_SEED", "99")
    _, with_env, _ = run(capsys, "check", "exactness", "--cases", "3")
    monkeypatch.delenv("PROLONGKIT_SEED")
    _, explicit, _ = run(capsys, "check", "exactness", "--seed", "99",
                         "--cases", "3")
    assert with_env == explicit


def test_bad_seed_env_var(capsys, monkeypatch):
    monkeypatch.setenv("PROLONGKIT_SEED", "not-a-number")
    code = main(["check", "exactness", "--cases", "2"])
    assert code == 2
    capsys.readouterr()


def test_check_exactness_from_file(capsys, xt_file):
    code, report, _ = run(capsys, "check", "exactness", "--file", xt_file)
    assert code == 0
    assert report["result"]["cases"] == 1


def test_check_hopf(capsys):
    code, report, _ = run(capsys, "check", "hopf", "--group", "ga",
                          "--order", "3")
    assert code == 0
    assert report["result"]["details"]["printed_antipode_first_conflict"] == 1
    code2, report2, _ = run(capsys, "check", "hopf", "--group", "gm",
                            "--order", "4")
    assert code2 == 0
    assert report2["result"]["details"]["printed_antipode_first_conflict"] is None


def test_check_hopf_requires_group(capsys):
    code = main(["check", "hopf"])
    assert code == 2
    capsys.readouterr()


def test_tensor_command(capsys, tmp_path, xt_file):
    code, report, _ = run(capsys, "tensor", xt_file, xt_file)
    assert code == 0
    assert report["result"]["matrix"] == [["2*t/x"]]


def test_dual_command(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text('{"n": 2, "matrix": [["0", "x"], ["t", "0"]]}')
    code, report, _ = run(capsys, "dual", str(p))
    assert code == 0
    assert report["result"]["matrix"] == [["0", "-t"], ["-x", "0"]]


def test_dsum_command(capsys, tmp_path, xt_file):
    code, report, _ = run(capsys, "dsum", xt_file, xt_file)
    assert code == 0
    assert report["result"]["matrix"] == [["t/x", "0"], ["0", "t/x"]]


def test_negative_order_rejected(capsys, xt_file):
    code = main(["prolong", xt_file, "-i", "-1"])
    assert code == 2
    capsys.readouterr()
