import json
import subprocess
import sys

import jsonschema
import pytest

from kchevalley import cli, render
from kchevalley.cli import RunConfig, UsageError, main, parse_args, run
from kchevalley.errors import UnsupportedRank
from kchevalley.report import Report

A2_W0_RHO1 = ["expand", "--type", "A2", "--word", "2,1,2", "--weight", "1,0"]
G2_S1S2S1S2_RHO2 = ["expand", "--type", "G2", "--word", "1,2,1,2", "--weight", "0,1"]


def run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# parsing

def test_parse_valid():
    config = parse_args(A2_W0_RHO1)
    assert isinstance(config, RunConfig)
    assert config.subcommand == "expand"
    assert config.word == (2, 1, 2)
    assert config.weights == [(1, 0)]
    assert config.cartan.name == "A2"


def test_parse_negative_weight_and_matrix():
    config = parse_args(["expand", "--type", "[[2,-1],[-1,2]]", "--word", "1", "--weight=-1,1"])
    assert config.weights == [(-1, 1)]
    assert config.cartan.type_letter is None
    assert config.cartan.matrix == ((2, -1), (-1, 2))


def test_parse_errors():
    with pytest.raises(UnsupportedRank):
        parse_args(["expand", "--type", "G3", "--word", "1", "--weight", "0,1"])
    with pytest.raises(UsageError, match="--word"):
        parse_args(["expand", "--type", "A2", "--word", "1,x", "--weight", "1,0"])
    with pytest.raises(UsageError):
        parse_args(A2_W0_RHO1 + ["--validate-json"])
    with pytest.raises(UsageError):
        parse_args(A2_W0_RHO1 + ["--max-length", "-1"])


def test_env_caps(monkeypatch):
    monkeypatch.setenv("KCHEVALLEY_MAX_LENGTH", "2")
    assert parse_args(A2_W0_RHO1).max_length == 2
    monkeypatch.setenv("KCHEVALLEY_MAX_GROUP", "nope")
    with pytest.raises(UsageError):
        parse_args(A2_W0_RHO1)


def test_env_cap_enforced(monkeypatch, capsys):
    monkeypatch.setenv("KCHEVALLEY_MAX_LENGTH", "2")
    code, _, err = run_main(A2_W0_RHO1, capsys)
    assert code == 2
    assert "WordTooLong" in err


# exit codes and errors

def test_not_reduced_exit_code(capsys):
    code, out, err = run_main(["expand", "--type", "A2", "--word", "2,2", "--weight", "1,0"], capsys)
    assert code == 2
    assert out == ""
    assert "kchevalley.chevalley" in err and "NotReduced" in err


def test_unsupported_rank_exit_code(capsys):
    code, _, err = run_main(["expand", "--type", "G3", "--word", "1", "--weight", "0,1"], capsys)
    assert code == 2
    assert "UnsupportedRank" in err


def test_argparse_usage_exit_code(capsys):
    code, _, _ = run_main(["expand", "--type", "A2"], capsys)
    assert code == 2


def test_dimension_mismatch(capsys):
    code, _, err = run_main(["expand", "--type", "A2", "--word", "1", "--weight", "1,0,0"], capsys)
    assert code == 2 and "DimensionMismatch" in err


def test_auto_reduce(capsys):
    code, out, _ = run_main(["expand", "--type", "A2", "--word", "1,2,2", "--weight", "1,0", "--auto-reduce",
                             "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["auto_reduced"] is True
    assert payload["word"] == [1]


def test_verification_failure_exit_code(monkeypatch, capsys):
    def broken(ctx, weight, expansion=None):
        rep = Report("localization")
        rep.record(False, "forced")
        return rep

    monkeypatch.setattr(cli, "verify_localization", broken)
    code, out, _ = run_main(A2_W0_RHO1 + ["--verify", "--format", "json"], capsys)
    assert code == 1
    assert json.loads(out)["verified"] is False
    code, _, _ = run_main(["bott-samelson", "--type", "A2", "--word", "2,1,2", "--weight", "1,0", "--verify"], capsys)
    assert code == 1


# outputs

def test_a2h_text(capsys):
    code, out, _ = run_main(A2_W0_RHO1, capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[1:] == ["  O[s1s2s1]: e^(-rho2)", "  O[s1s2]: e^(-rho1+rho2)", "  O[s2]: e^(rho1)"]


def test_g2_ordinary_text(capsys):
    code, out, _ = run_main(G2_S1S2S1S2_RHO2 + ["--ordinary"], capsys)
    assert code == 0
    coeffs = [int(line.rsplit(":", 1)[1]) for line in out.splitlines()[1:]]
    assert coeffs == [1, 3, 1, 3, 2, 2, 1]


def test_g2_root_coords_display(capsys):
    code, out, _ = run_main(G2_S1S2S1S2_RHO2 + ["--display", "root-coords"], capsys)
    assert code == 0
    assert "  O[s1s2]: e^(-a1) + 1" in out.splitlines()
    assert "  O[s2]: 1 + e^(a1)" in out.splitlines()


def test_root_coords_input(capsys):
    # rho_2 = 3 alpha_1 + 2 alpha_2 in G2
    code, out, _ = run_main(["expand", "--type", "G2", "--word", "1,2,1,2", "--weight", "3,2", "--root-coords",
                             "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["weight"] == [0, 1]


def test_json_schema_and_content(capsys):
    code, out, _ = run_main(A2_W0_RHO1 + ["--format", "json", "--validate-json", "--verify"], capsys)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, render.EXPAND_SCHEMA)
    assert payload["verified"] is True
    assert [t["v_word"] for t in payload["terms"]] == [[1, 2, 1], [1, 2], [2]]
    assert payload["terms"][0]["coefficient"] == [{"exponent": [0, -1], "coeff": 1}]


@pytest.mark.parametrize("argv, schema", [
    (["bott-samelson", "--type", "G2", "--word", "1,2,1,2", "--weight", "0,1", "--verify"], render.BOTT_SAMELSON_SCHEMA),
    (["table", "--type", "B2", "--weight", "1,1"], render.TABLE_SCHEMA),
    (["table", "--type", "B2", "--weight", "1,1", "--ordinary"], render.TABLE_SCHEMA),
    (["verify", "--type", "A2", "--weight", "1,0", "--weight=-1,1"], render.VERIFY_SCHEMA),
    (G2_S1S2S1S2_RHO2 + ["--ordinary"], render.EXPAND_SCHEMA),
])
def test_every_json_output_validates(argv, schema, capsys):
    code, out, _ = run_main(argv + ["--format", "json", "--validate-json"], capsys)
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_bott_samelson_verify(capsys):
    code, out, _ = run_main(["bott-samelson", "--type", "G2", "--word", "1,2,1,2", "--weight", "0,1", "--verify"],
                            capsys)
    assert code == 0
    assert out.rstrip().endswith("verified: yes")
    assert len([line for line in out.splitlines() if line.startswith("  O_")]) == 11


def test_latex(capsys):
    code, out, _ = run_main(A2_W0_RHO1 + ["--format", "latex"], capsys)
    assert code == 0
    assert out.startswith("$$")
    assert r"e^{-\rho_{2}} \mathcal{O}_{s_{1}s_{2}s_{1}}^H" in out
    code, out, _ = run_main(["bott-samelson", "--type", "A2", "--word", "2,1,2", "--weight", "1,0",
                             "--format", "latex"], capsys)
    assert r"\mathcal{O}_{3,(1,1,1)}^H" in out


def test_table_a2(capsys):
    code, out, _ = run_main(["table", "--type", "A2", "--weight", "1,0", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 6
    assert [r["w_length"] for r in rows] == [0, 1, 1, 2, 2, 3]
    assert [t["v_word"] for t in rows[-1]["terms"]] == [[1, 2, 1], [1, 2], [2]]


def test_verify_text(capsys):
    code, out, _ = run_main(["verify", "--type", "G2", "--weight", "0,1"], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "overall: PASS"
    assert any(line.startswith("PASS positivity") for line in out.splitlines())


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_main(A2_W0_RHO1 + ["--format", "json", "-o", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["group"] == "A2"


@pytest.mark.parametrize("argv", [
    G2_S1S2S1S2_RHO2 + ["--format", "json"],
    G2_S1S2S1S2_RHO2 + ["--format", "latex", "--display", "root-coords"],
    ["table", "--type", "G2", "--weight", "1,1"],
    ["verify", "--type", "B2", "--weight", "1,1", "--format", "json"],
])
def test_deterministic(argv, capsys):
    outputs = {run(parse_args(argv))[1] for _ in range(3)}
    assert len(outputs) == 1


def test_threads_match_serial(capsys):
    argv = ["verify", "--type", "B2", "--weight", "1,0", "--format", "json"]
    assert run(parse_args(argv))[1] == run(parse_args(argv + ["--threads", "2"]))[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kchevalley", *G2_S1S2S1S2_RHO2, "--ordinary", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert [t["coefficient"] for t in json.loads(proc.stdout)["terms"]] == [1, 3, 1, 3, 2, 2, 1]
