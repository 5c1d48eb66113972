import io
import json
import subprocess
import sys

import pytest

from recurseq.cli import run
from recurseq.divisors import DivisorReport

FIB = '{"type":"linear","coeffs":[1,1],"initial":[0,1]}'
DEGEN = '{"type":"linear","coeffs":[0,1],"initial":[0,1]}'


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def payload(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_divisors_report(tmp_path):
    spec = tmp_path / "fib.json"
    spec.write_text(FIB, encoding="utf-8")
    code, d = payload("divisors", "--spec", str(spec), "--bound", "100")
    assert code == 0
    assert {"source", "bound", "divisors", "non_divisors", "errors", "checkpoints"} <= d.keys()
    assert {"p": 11, "first_n": 10} in d["divisors"]
    assert DivisorReport.from_dict(d).to_dict() == d


def test_verify_linear_degenerate():
    code, d = payload("verify", "linear", "--spec", DEGEN)
    assert code == 1 and d["status"] == "PRECONDITION_DEGENERATE" and d["witness"] == 2


def test_phi_b_table():
    code, text = call("phi-b", "--g", "1,-1,-1", "--b", "2", "--format", "table")
    assert code == 0 and text.strip() == "1,-3,1"
    code, d = payload("phi-b", "--g", "1,-1,-1", "--b", "2")
    assert d["phi_b"] == "1,-3,1"


def test_basic_subcommands():
    assert payload("terms", "--spec", FIB, "--n-max", "6")[1]["terms"] == [0, 1, 1, 2, 3, 5, 8]
    assert payload("gf", "--spec", FIB)[1] == {"numerator": "0,1", "denominator": "1,-1,-1"}
    m = payload("minimal", "--spec", '{"type":"linear","coeffs":[3,-1,-2],"initial":[0,1,1]}')[1]
    assert m["coeffs"] == [1, 1] and m["input_order"] == 3
    d = payload("degenerate", "--spec", DEGEN)[1]
    assert d["witness_cyclotomic_index"] == 2
    sub = payload("subseq", "--spec", DEGEN, "--c", "0", "--b", "2")[1]
    assert sub["flags"] == ["MINIMALITY_LOST"]
    assert payload("period", "--spec", FIB, "--m", "10")[1]["period"] == 60
    assert payload("null-divisor", "--spec", FIB, "--m", "2")[1]["null_divisor"] is False


def test_prime_index_cap_exceeded():
    code, d = payload("prime-index", "--spec", '{"type":"linear","coeffs":[2],"initial":[4]}', "--p", "2")
    assert code == 3 and d["status"] == "CAP_EXCEEDED" and "GCD(r)=2" in d["note"]
    code, d = payload("prime-index", "--spec", FIB, "--p", "2")
    assert code == 0 and d["index"] == 0


def test_scaling_and_strip():
    rec = '{"type":"linear","coeffs":[2,4],"initial":[0,1]}'
    code, d = payload("scaling", "--spec", rec, "--s", "2")
    assert code == 0 and d["t"] == 4 and d["scaled_coeffs"] == [3, -1]
    code, d = payload("scaling", "--spec", rec, "--s", "1", "--t", "2")
    assert code == 1 and d["failure_witness"] == {"n": 1, "term": 1, "required_power": 2}
    code, d = payload("strip-prime", "--spec", FIB, "--p", "2")
    assert code == 0 and d["j"] % 3 == 0 and d["r"] == 0


def test_verify_variants():
    assert payload("verify", "schur", "--poly", "1,0,1", "--bound", "1000", "--checkpoints", "100,1000")[1][
        "status"
    ] == "VERIFIED"
    nl = '{"type":"nonlinear","k":1,"sign":1,"poly":[{"exps":[2],"c":1}],"initial":[1,1]}'
    code, d = payload("verify", "generalized", "--spec", nl, "--bound", "100", "--checkpoints", "30,100")
    assert code == 0
    code, d = payload("verify", "coprime", "--spec", FIB, "--m", "2", "--bound", "50")
    assert code == 1 and d["status"] == "HYPOTHESIS_FAILED"
    code, d = payload("verify", "linear", "--spec", FIB, "--bound", "300", "--checkpoints", "50,300", "--trace")
    assert code == 0 and d["trace"][-1]["stage"] == "result"


def test_topology_subcommands():
    assert payload("topology", "intersect", "1,2", "2,3")[1]["intersection"] == "Con(5,6)"
    assert payload("topology", "intersect", "0,2", "1,4")[1]["intersection"] == "EMPTY"
    assert payload("topology", "witness", "--primes", "2,3")[1]["witness"] == 7
    assert payload("topology", "continuity", "--spec", FIB, "--b", "2")[1]["period"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["divisors", "--spec", '{"type":"linear","coeffs":[1,"x"],"initial":[0,1]}'],
        ["divisors", "--spec", '{"type":"linear",'],
        ["divisors", "--spec", "/nonexistent/spec.json"],
        ["phi-b", "--g", "2,1", "--b", "2"],
        ["phi-b", "--g", "1,a", "--b", "2"],
        ["period", "--spec", FIB, "--m", "0"],
        ["nosuch"],
        ["topology", "intersect", "1,2"],
    ],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


def test_malformed_spec_message_has_position(capsys):
    call("terms", "--spec", '{"type":"linear","coeffs":[1,"x"],"initial":[0,1]}')
    assert "$.coeffs[1]" in capsys.readouterr().err


def test_state_cap_env(monkeypatch):
    monkeypatch.setenv("RECURSEQ_STATE_CAP", "10")
    code, d = payload("period", "--spec", FIB, "--m", "1009")
    assert code == 3 and d["status"] == "BOUND_EXCEEDED"


def test_bound_errors_listed_in_report():
    code, d = payload("divisors", "--spec", FIB, "--bound", "50", "--cap", "20")
    assert code == 3 and d["errors"]
    listed = {e["p"] for e in d["errors"]} | {e["p"] for e in d["divisors"]} | set(d["non_divisors"])
    assert len(listed) == 15


def test_table_output_is_ascii():
    code, text = call("divisors", "--spec", FIB, "--bound", "60", "--format", "table")
    assert code == 0 and text.isascii() and "first_n" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "recurseq", "phi-b", "--g", "1,-1,-1", "--b", "2", "--format", "table"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1,-3,1"
