import json

import pytest

from repcontain import config
from repcontain.main import main

FAST = ["--nmax", "5", "--converse-samples", "10", "--catalyst-boxes", "2", "--catalyst-terms", "2"]


@pytest.fixture(autouse=True)
def threads_from_flags(monkeypatch):
    monkeypatch.setattr(config, "THREADS_FROM_ENV", False)


@pytest.fixture
def main_pair_files(write_rep):
    rho = write_rep("rho", 2, {(1,): 2})
    sigma = write_rep("sigma", 2, {(): 1, (1,): 1, (2,): 1})
    return rho, sigma


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check(capsys, main_pair_files):
    rho, sigma = main_pair_files
    code, out, _ = run(capsys, "check", "--rho", rho, "--sigma", sigma, *FAST)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["condition_real"]["status"] == "certified_strict"
    assert verdict["condition_real"]["certificate"]["polynomial"] == [1, -1, 2, -1, 1]
    assert verdict["condition_tropical"] is True
    assert verdict["asymptotic"]["minimal_n"] == 3
    assert verdict["catalyst"] == {"n": 2, "terms": [
        {"partition": [], "mult": 1},
        {"partition": [1], "mult": 1},
        {"partition": [2], "mult": 1},
    ]}
    assert all(r["passed"] for r in verdict["converse_report"])


def test_output_does_not_depend_on_threads(capsys, main_pair_files):
    rho, sigma = main_pair_files
    outputs = [
        run(capsys, "check", "--rho", rho, "--sigma", sigma, "--threads", t, *FAST)[1]
        for t in ("1", "8")
    ]
    assert outputs[0] == outputs[1]


def test_environment_threads_win(monkeypatch):
    monkeypatch.setattr(config, "THREADS_FROM_ENV", True)
    monkeypatch.setattr(config, "THREADS", 3)
    assert config.effective_threads(8) == 3


def test_asymptotic_and_catalyst(capsys, main_pair_files):
    rho, sigma = main_pair_files
    code, out, _ = run(capsys, "asymptotic", "--rho", rho, "--sigma", sigma, "--nmax", "5")
    assert code == 0
    result = json.loads(out)
    assert result["result"]["minimal_n"] == 3
    assert result["converse_report"]["witness"] == "exponent"

    code, out, _ = run(capsys, "catalyst", "--rho", rho, "--sigma", sigma, "--exponent", "3")
    assert code == 0
    assert json.loads(out)["converse_report"]["passed"] is True


def test_no_catalyst_is_null(capsys, write_rep):
    rho = write_rep("rho", 2, {(2,): 1})
    sigma = write_rep("sigma", 2, {(1,): 2})
    code, out, _ = run(capsys, "catalyst", "--rho", rho, "--sigma", sigma)
    assert code == 0
    assert json.loads(out)["catalyst"] is None


def test_char_and_trop(capsys, write_rep):
    rep = write_rep("s2", 2, {(2,): 1})
    code, out, _ = run(capsys, "char", "--rep", rep, "--point", "2,1/2")
    assert code == 0
    assert json.loads(out)["value"] == "21/4"

    code, out, _ = run(capsys, "trop", "--rep", rep, "--direction", "1,-1")
    assert code == 0
    assert json.loads(out)["value"] == "2/1"

    code, _, err = run(capsys, "char", "--rep", rep, "--point", "2,1/2,1")
    assert code == 1
    assert "detail" in json.loads(err.strip().splitlines()[-1])


def test_trop_gl(capsys, write_rep):
    rep = write_rep("s31", 2, {(3, 1): 1})
    code, out, _ = run(capsys, "trop", "--rep", rep, "--direction", "2,-2", "--gl")
    assert code == 0
    assert json.loads(out)["value"] == "4/1"


def test_tensor(capsys, write_rep):
    rep = write_rep("s1", 2, {(1,): 1})
    code, out, _ = run(capsys, "tensor", "--rho", rep, "--power", "2")
    assert code == 0
    result = json.loads(out)
    assert result["result"]["terms"] == [{"partition": [], "mult": 1}, {"partition": [2], "mult": 1}]
    assert result["dimension"] == 4


def test_wp(capsys, main_pair_files):
    rho, sigma = main_pair_files
    code, out, _ = run(capsys, "wp", "--rho", rho, "--sigma", sigma, "--point", "1/3,-1/3")
    assert code == 0
    result = json.loads(out)
    assert result["affine_dimension"] == 1
    assert result["strictly_contained"] is True
    assert result["membership"]["inside_relint"] is True


def test_su2_certify(capsys, main_pair_files):
    rho, sigma = main_pair_files
    code, out, _ = run(capsys, "su2-certify", "--rho", rho, "--sigma", sigma)
    assert code == 0
    result = json.loads(out)
    assert result["certificate"]["status"] == "certified"
    assert result["mult_rho"] == {"2": 2}
    assert result["tropical"] is True


def test_su2_certify_needs_n2(capsys, write_rep):
    rep = write_rep("s1", 3, {(1,): 1})
    code, _, err = run(capsys, "su2-certify", "--rho", rep, "--sigma", rep)
    assert code == 1
    assert "SU(2)" in err


def test_input_errors_exit_1(capsys, tmp_path, write_rep):
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    good = write_rep("s1", 2, {(1,): 1})
    assert run(capsys, "check", "--rho", str(broken), "--sigma", good)[0] == 1
    assert run(capsys, "check", "--rho", good)[0] == 1
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys, "check", "--rho", good, "--sigma", good, "--grid-depth", "1")[0] == 1
    assert run(capsys, "tensor", "--rho", good, "--log-level", "chatty")[0] == 1
    other_n = write_rep("other", 3, {(1,): 1})
    assert run(capsys, "check", "--rho", good, "--sigma", other_n)[0] == 1


def test_selftest_command(capsys, tmp_path):
    code, out, _ = run(capsys, "selftest", "--quick", "--corpus", str(tmp_path))
    assert code == 0
    result = json.loads(out)
    assert result["passed"] is True
    corpus = next(c for c in result["checks"] if c["name"] == "corpus")
    assert corpus["skipped"] is True


def test_malformed_environment_is_an_input_error(monkeypatch, capsys, write_rep):
    monkeypatch.setenv("REPCONTAIN_NMAX", "twelve")
    monkeypatch.setattr(config, "ENV_ERRORS", [])
    assert config._int_env("REPCONTAIN_NMAX", 12) == 12
    rep = write_rep("s1", 2, {(1,): 1})
    code, _, err = run(capsys, "tensor", "--rho", rep, "--power", "2")
    assert code == 1
    assert "REPCONTAIN_NMAX" in json.loads(err.strip().splitlines()[-1])["detail"]
