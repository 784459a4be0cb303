import json
import subprocess
import sys

import pytest

from pfaffkit.cli import COMMANDS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_engel_check_example_one(capsys):
    report = run_json(capsys, "engel-check", "--vars", "5", "--corpus", "example1")
    assert report["command"] == "engel-check"
    v = report["verdict"]
    assert v["is_engel"] is True
    assert v["sing_system"] == {"ambient": 5, "dimension": 4, "codimension": 1}
    assert v["sing_dbeta"]["codimension"] == 3
    assert v["derived_length"] == 2
    assert v["witnesses"]["condition_i"] == {"index": [0, 1, 2, 3], "coefficient": "z0^4*z4"}
    assert set(report) == {"command", "ambient", "input", "verdict", "timing"}


def test_engel_check_canonical_golden(capsys):
    report = run_json(capsys, "engel-check", "--vars", "4", "--corpus", "canonical", "--no-timing")
    assert report == {
        "command": "engel-check",
        "ambient": "z1..z4",
        "input": {"forms": ["-z3*dz1 + dz4", "-z2*dz1 + dz3"]},
        "verdict": {
            "is_engel": True,
            "condition_i": True,
            "condition_ii": True,
            "condition_iii": True,
            "role": {"beta_generator": 1, "alpha": "-z2*dz1 + dz3", "beta": "-z3*dz1 + dz4"},
            "role_failure": None,
            "extra_iii_prime": True,
            "class_of_beta": 1,
            "derived_length": 2,
            "sing_system": {"ambient": 4, "dimension": "empty", "codimension": "empty"},
            "sing_dbeta": {"ambient": 4, "dimension": "empty", "codimension": "empty"},
            "witnesses": {
                # alpha ^ beta ^ d alpha = dz3^dz4^dz1^dz2 = dz1^dz2^dz3^dz4
                "condition_i": {"index": [1, 2, 3, 4], "coefficient": "1"},
                "condition_iii": {"index": [1, 3, 4], "coefficient": "1"},
            },
        },
    }


def test_class_text(capsys):
    code, out, _ = run(capsys, "class", "--vars", "4", "dz4 - z3*dz1")
    assert code == 0
    assert "- 1" in out.splitlines()[2]


def test_sing_example_two(capsys):
    v = run_json(capsys, "sing", "--vars", "5", "--corpus", "example2")["verdict"]
    assert v["variety"] == "{z0=0}"
    assert v["atypical"] is True and v["expected_codimension"] == 3


def test_sing_against(capsys):
    v = run_json(capsys, "sing", "--vars", "5", "--corpus", "example1", "--against", "z0")["verdict"]
    assert v["same_variety_as"]["verdict"] is True
    v = run_json(capsys, "sing", "--vars", "4", "--corpus", "canonical")["verdict"]
    assert v["variety"] == "empty"


def test_not_engel_is_not_an_error(capsys):
    v = run_json(capsys, "engel-check", "--vars", "4", "dz1", "dz2")["verdict"]
    assert v["is_engel"] is False
    assert v["role_failure"]


def test_other_subcommands(capsys):
    v = run_json(capsys, "dim", "--vars", "5", "z0, z1", "z2")["verdict"]
    assert v["codimension"] == 3
    v = run_json(capsys, "derived", "--vars", "4", "--corpus", "canonical", "--gamma", "dz1")["verdict"]
    assert v["generators"] == [True, False] and v["candidates"][0]["in_derived"] is True
    v = run_json(capsys, "integral", "--vars", "4", "--corpus", "canonical", "--gens", "z1, z3, z4")["verdict"]
    assert v == {"integral": True}
    v = run_json(capsys, "same-system", "--vars", "4", "dz1", "dz2", "--with", "dz1 + dz2; dz1 - dz2")["verdict"]
    assert v == {"same_system": True}
    v = run_json(capsys, "euler", "--vars", "5", "--corpus", "example2")["verdict"]
    assert [r["euler"] for r in v["results"]] == [False, True]
    assert v["results"][0]["contraction"] == "2*z0*z3^2*z4"
    v = run_json(capsys, "degree", "--vars", "5", "z0*dz1 - z1*dz0")["verdict"]
    assert v["results"] == [{"coefficient_degree": 1, "degree": 0, "twist": 2}]
    v = run_json(capsys, "jouanolou", "--vars", "5", "z0*dz1")["verdict"]
    assert v["results"][0] == {"form": "z0*dz1", "factor": 2, "lhs": "2*z0*dz1", "identity": True}
    v = run_json(capsys, "degeneracy", "--vars", "5", "z0", "z1", "z0*z1/2", "z0^2*z1/6")["verdict"]
    assert v["degenerate"] is True
    v = run_json(capsys, "atypical", "--vars", "5", "--corpus", "example1")["verdict"]
    assert v["containment"] is True and v["contraction_factor"] == 3
    v = run_json(capsys, "atypical", "--vars", "5", "--corpus", "example2-signfix", "--beta-generator", "2")["verdict"]
    assert v["sing_dbeta"]["codimension"] == 2
    v = run_json(capsys, "groebner", "--vars", "3", "--order", "lex", "z0 - z1, z1 - z2")["verdict"]
    assert v == {"basis": ["z0 - z2", "z1 - z2"]}
    v = run_json(capsys, "member", "--vars", "5", "z0", "z0^2")["verdict"]
    assert v == {"member": False, "radical_member": True}
    v = run_json(capsys, "pullback", "--vars", "4", "--map", "z1; z2; z3; z3*z4", "dz4")["verdict"]
    assert v == {"pullback": ["z4*dz3 + z3*dz4"]}
    v = run_json(capsys, "corpus", "--vars", "5")["verdict"]
    assert all(e["round_trip"] for e in v["entries"])


def test_file_input(capsys, tmp_path):
    path = tmp_path / "canonical.txt"
    path.write_text("# beta first\ndz4 - z3*dz1\ndz3 - z2*dz1\n")
    v = run_json(capsys, "engel-check", "--vars", "4", "--file", str(path))["verdict"]
    assert v["is_engel"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["sing", "--vars", "5", "dz7"],
        ["class", "--vars", "4", "dz1 +"],
        ["engel-check", "--vars", "4", "dz1"],
        ["engel-check", "--vars", "5", "--corpus", "canonical"],
        ["atypical", "--vars", "5", "--corpus", "example2"],
        ["degeneracy", "--vars", "5", "z0", "z1"],
        ["integral", "--vars", "4", "--corpus", "canonical"],
        ["sing", "--vars", "4", "dz1", "dz1"],
    ],
)
def test_input_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and "error" in err


def test_usage_errors_exit_two(capsys):
    for argv in (["nonsense", "--vars", "4"], ["class", "dz1"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_every_subcommand_registered():
    assert set(COMMANDS) == {
        "engel-check", "sing", "dim", "class", "derived", "integral", "same-system", "euler",
        "degree", "jouanolou", "degeneracy", "atypical", "groebner", "member", "pullback", "corpus",
    }


def test_deterministic_output(capsys):
    argv = ["engel-check", "--vars", "5", "--corpus", "example1", "--json"]
    outs = [run(capsys, *argv, "--no-timing")[1] for _ in range(3)]
    assert outs[0] == outs[1] == outs[2]
    a = json.loads(run(capsys, *argv)[1])
    b = json.loads(run(capsys, *argv)[1])
    assert json.dumps(a["verdict"], sort_keys=True) == json.dumps(b["verdict"], sort_keys=True)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pfaffkit", "class", "--vars", "4", "dz4", "--json", "--no-timing"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == {"class": [0]}
