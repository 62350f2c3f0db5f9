import json
import subprocess
import sys

import pytest

from qumbral.audit import REGISTRY
from qumbral.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_table_classical_genocchi(capsys):
    code, out, _ = run(capsys, "table", "--family", "genocchi", "--q", "1", "--n", "8", "--numbers")
    assert code == 0
    assert out.splitlines() == ["0", "1", "-1", "0", "1", "0", "-3", "0", "17"]


def test_table_rows(capsys):
    assert run(capsys, "table", "--family", "bernoulli", "--q", "1/2", "--n", "1")[1].splitlines() == ["1", "-2/3"]
    assert run(capsys, "table", "--family", "euler", "--q", "1", "--n", "0")[1] == "1"


def test_table_polynomials_and_formats(capsys):
    code, out, _ = run(capsys, "table", "--family", "genocchi^2", "--q", "1/2", "--n", "3", "--polynomials",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["polynomials"][:2] == [[], []] and data["polynomials"][2] == ["3/2"]
    code, out, _ = run(capsys, "table", "--family", "euler", "--q", "1/2", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["n,value", "0,1", "1,-1/2", "2,-1/8"]


def test_poly(capsys):
    assert run(capsys, "poly", "--family", "bernoulli", "--q", "1/2", "--n", "1")[1] == "1*x^1 - 2/3"


def test_functional_examples(capsys):
    assert run(capsys, "functional", "--f", "eq(y*t)", "--y", "2", "--p", "0,0,1", "--q", "1/2")[1] == "4"
    assert run(capsys, "functional", "--f", "t^2", "--p", "0,0,1", "--q", "1/3")[1] == "4/3"
    assert run(capsys, "functional", "--f", "eq+1", "--p", "5", "--q", "1/3")[1] == "10"
    assert run(capsys, "functional", "--f", "t^-1", "--p", "1,1", "--q", "1/3")[1] == "0"
    assert run(capsys, "functional", "--f", "geno-g", "--p", "1", "--q", "1/3")[1] == "1/2"


def test_expand_examples(capsys):
    code, out, _ = run(capsys, "expand", "--basis", "genocchi", "--p", "0,1", "--q", "1")
    assert code == 0
    assert out.splitlines()[1:3] == ["offset 1", "coeffs [1/2, 1/2]"]
    code, out, _ = run(capsys, "expand", "--basis", "genocchi^m", "--m", "2", "--p", "1", "--q", "1/2", "--format", "json")
    data = json.loads(out)
    assert (data["offset"], data["coeffs"]) == (2, ["2/3"])
    code, out, _ = run(capsys, "expand", "--basis", "xm1", "--p", "0,0,1", "--q", "1", "--format", "json")
    assert json.loads(out)["coeffs"] == ["1", "2", "1"]


def test_audit_examples(capsys):
    code, out, _ = run(capsys, "audit", "--identity", "eq-particular", "--q-grid", "1/2", "--nmax", "6")
    assert code == 0 and out.splitlines()[0] == "eq-particular: verified"
    code, out, _ = run(capsys, "audit", "--identity", "genint-closed-form", "--format", "json")
    (v,) = json.loads(out)
    printed, plain = v["variants"]
    assert printed["status"] == "falsified" and printed["counterexample"]["inputs"]["p"] == "1"
    assert plain["status"] == "verified" and plain["counterexample"] is None
    assert v["resolved_variant"] == "without-p0"


def test_audit_all_json(capsys, tmp_path):
    target = tmp_path / "audit.json"
    code, _, _ = run(capsys, "audit", "--all", "--nmax", "4", "--mmax", "2", "--format", "json", "--output", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert [d["identity"] for d in data] == list(REGISTRY)
    for d in data:
        for rec in d["variants"]:
            assert set(rec) >= {"identity", "variant", "status", "grid", "counterexample"}
            assert rec["status"] in ("verified", "falsified")


def test_audit_output_is_deterministic(capsys):
    argv = ("audit", "--identity", "recurrence", "--identity", "genocchi-order-m-closed-form", "--nmax", "4", "--format", "csv")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv, "--jobs", "3")[1] == first


def test_audit_list(capsys):
    out = run(capsys, "audit", "--list")[1]
    assert [line.split("\t")[0] for line in out.splitlines()] == list(REGISTRY)


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--family", "foo", "--q", "1"],
        ["table", "--family", "euler", "--q", "2"],
        ["table", "--family", "euler", "--q", "0.5"],
        ["functional", "--f", "eq", "--p", "1,x"],
        ["functional", "--f", "eq(y*t)", "--p", "1"],
        ["functional", "--f", "sin", "--p", "1"],
        ["expand", "--basis", "hermite", "--p", "1"],
        ["audit", "--identity", "no-such-id"],
        ["audit"],
        [],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qumbral", "table", "--family", "bernoulli", "--q", "1", "--n", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.split() == ["1", "-1/2", "1/6"]


def test_consistency_error_exits_2(capsys, monkeypatch):
    from qumbral import cli
    from qumbral.errors import ConsistencyError

    def broken(args):
        raise ConsistencyError("two constructions disagree")

    monkeypatch.setitem(cli.COMMANDS, "table", broken)
    code, _, err = run(capsys, "table", "--family", "euler")
    assert code == 2 and "consistency" in err
