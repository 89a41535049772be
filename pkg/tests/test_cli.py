"""Command line contract: exit codes, report documents, caps, determinism.

Everything routes through run_command so the tests see both the code and the
document; one subprocess smoke test at the end proves the module entry point
and console wiring actually exist.
"""

import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

import ringlab.cli as cli_mod
import ringlab.theorem as theorem_mod
from ringlab import TableRing, ZmodRing, payload_bytes
from ringlab.cli import EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main, run_command


@pytest.fixture(scope="module")
def schema():
    text = (resources.files("ringlab") / "schemas" / "report-v1.json").read_text()
    return json.loads(text)


def run_ok(argv, schema):
    code, doc = run_command(argv)
    assert doc is not None
    jsonschema.validate(doc, schema)
    return code, doc


# happy paths ----------------------------------------------------------------


def test_classify(schema):
    code, doc = run_ok(["classify", "--ring", "Z6"], schema)
    assert code == EXIT_PASS and doc["status"] == "pass"
    assert doc["command"] == "classify" and doc["ring"] == "Z6"
    assert doc["argv"] == ["classify", "--ring", "Z6"]
    assert doc["payload"]["unit_regular_set"] == [0, 1, 2, 3, 4, 5]
    assert doc["payload"]["is_unit_regular_ring"] is True
    assert doc["timing_ms"] >= 0


def test_classify_reports_failures_as_data_not_exit_codes(schema):
    # a non-unit-regular ring is a finding, not a failed run
    code, doc = run_ok(["classify", "--ring", "Z4"], schema)
    assert code == EXIT_PASS
    assert doc["payload"]["is_unit_regular_ring"] is False
    assert doc["payload"]["unit_regular_set"] == [0, 1, 3]


def test_verify_theorem_all_idempotents(schema):
    code, doc = run_ok(["verify-theorem", "--ring", "Z6"], schema)
    assert code == EXIT_PASS and doc["status"] == "pass"
    payload = doc["payload"]
    assert payload["idempotents"] == [0, 1, 3, 4]
    assert payload["axioms"]["ok"] is True
    assert all(block["all_consistent"] for block in payload["verdicts"])
    assert payload["inheritance"]["ok"] is True


def test_verify_theorem_single_idempotent(schema):
    code, doc = run_ok(["verify-theorem", "--ring", "Z6", "--idempotent", "3"],
                       schema)
    assert code == EXIT_PASS
    assert doc["payload"]["idempotents"] == [3]
    assert len(doc["payload"]["verdicts"]) == 1


def test_witness_pass_and_fail(schema):
    code, doc = run_ok(
        ["witness", "--ring", "Z6", "--e", "3", "--a", "3", "--b", "4",
         "--u", "1"], schema)
    assert code == EXIT_PASS
    assert doc["payload"]["witness"]["u_prime"] == 3
    assert doc["payload"]["v"] == 1  # resolved inverse is echoed back

    code, doc = run_ok(
        ["witness", "--ring", "Z6", "--e", "3", "--a", "3", "--b", "2",
         "--u", "1"], schema)
    assert code == EXIT_FAIL and doc["status"] == "fail"
    assert doc["payload"]["reason"] == "middle_identity_fails"


def test_shift_demo(schema):
    code, doc = run_ok(["shift-demo", "--truncation", "4"], schema)
    assert code == EXIT_PASS and doc["ring"] == "band"
    assert doc["payload"]["kernel_dim"] == 0
    assert doc["payload"]["cokernel_dim"] == 1


@pytest.fixture(scope="module")
def family_doc(schema):
    code, doc = run_command(["family", "--json"])
    assert code == EXIT_PASS
    jsonschema.validate(doc, schema)
    return doc


def test_family(family_doc):
    payload = family_doc["payload"]
    assert family_doc["ring"] is None
    assert [e["spec"] for e in payload["family"]] == [
        "Z4", "Z6", "Z8", "Z12", "Z2xZ4", "T2(Z2)", "T2(Z3)",
        "M2(Z2)", "M2(Z3)", "M2(Z2)xZ2"]
    assert payload["all_ok"]


def test_family_payload_is_deterministic(family_doc):
    code, again = run_command(["family", "--json"])
    assert code == EXIT_PASS
    assert payload_bytes(again) == payload_bytes(family_doc)


# failure and usage paths -------------------------------------------------------


def test_injected_axiom_failure_fails_verify(monkeypatch, schema):
    broken = TableRing.from_ring(ZmodRing(4), override_mul={(3, 3): 0},
                                 label="Z4")
    monkeypatch.setattr(cli_mod, "build_ring",
                        lambda text, size_cap: broken)
    code, doc = run_ok(["verify-theorem", "--ring", "Z4"], schema)
    assert code == EXIT_FAIL and doc["status"] == "fail"
    axioms = doc["payload"]["axioms"]
    assert axioms["ok"] is False
    failed = [c for c in axioms["checks"] if not c["ok"]]
    assert failed and all(c["counterexample"] for c in failed)
    assert doc["payload"]["verdicts"] is None  # sweep never ran


def test_injected_inconsistency_fails_verify(monkeypatch, schema):
    real = theorem_mod.check_condition

    def rigged(ring, idem, a, label):
        holds, witness = real(ring, idem, a, label)
        if label == "5" and a == 3:
            return (not holds, None)
        return holds, witness

    monkeypatch.setattr(theorem_mod, "check_condition", rigged)
    code, doc = run_ok(["verify-theorem", "--ring", "Z6"], schema)
    assert code == EXIT_FAIL
    bundle = doc["payload"]["inconsistency"]
    # the sweep runs idempotents in ascending order, so the full corner
    # at e = 1 is the first place the rigged element 3 shows up
    assert bundle["a"] == 3 and bundle["e"] == 1
    assert doc["payload"]["verdicts"] is None


def test_usage_errors():
    assert run_command([]) == (EXIT_USAGE, None)
    assert run_command(["no-such-command"]) == (EXIT_USAGE, None)
    assert run_command(["classify"]) == (EXIT_USAGE, None)  # --ring required
    assert run_command(["classify", "--ring", "Q5"]) == (EXIT_USAGE, None)
    assert run_command(["classify", "--ring", "Z0"]) == (EXIT_USAGE, None)
    assert run_command(["verify-theorem", "--ring", "Z6",
                        "--idempotent", "banana"]) == (EXIT_USAGE, None)
    # element exists but is not idempotent: still a bad request
    assert run_command(["verify-theorem", "--ring", "Z6",
                        "--idempotent", "2"]) == (EXIT_USAGE, None)
    assert run_command(["classify", "--ring", "Z6",
                        "--size-cap", "0"]) == (EXIT_USAGE, None)
    assert run_command(["shift-demo", "--truncation", "1"]) == (EXIT_USAGE, None)
    # out-of-range element codes are bad requests, not witness failures
    wit = ["witness", "--ring", "Z6", "--e", "3", "--b", "4", "--u", "1"]
    assert run_command(wit + ["--a", "-1"]) == (EXIT_USAGE, None)
    assert run_command(wit + ["--a", "17"]) == (EXIT_USAGE, None)


def test_help_is_not_an_error():
    assert run_command(["--help"]) == (EXIT_PASS, None)
    assert run_command(["classify", "--help"]) == (EXIT_PASS, None)


def test_size_cap_flag(schema):
    code, doc = run_ok(["classify", "--ring", "Z999999999"], schema)
    assert code == EXIT_CAP and doc["status"] == "capped"
    assert doc["payload"]["cardinality"] == 999999999
    code, doc = run_ok(["classify", "--ring", "Z40", "--size-cap", "10"], schema)
    assert code == EXIT_CAP
    assert doc["payload"]["cap"] == 10


def test_size_cap_env_and_flag_priority(monkeypatch, schema):
    monkeypatch.setenv("RINGLAB_SIZE_CAP", "10")
    code, doc = run_ok(["classify", "--ring", "Z12"], schema)
    assert code == EXIT_CAP and doc["payload"]["cap"] == 10
    # explicit flag beats the environment
    code, doc = run_ok(["classify", "--ring", "Z12", "--size-cap", "128"], schema)
    assert code == EXIT_PASS


def test_invalid_cap_env_is_a_usage_error(monkeypatch):
    monkeypatch.setenv("RINGLAB_SIZE_CAP", "banana")
    assert run_command(["classify", "--ring", "Z4"]) == (EXIT_USAGE, None)


def test_axiom_cap_env_skips_axiom_sweep(monkeypatch, schema):
    monkeypatch.setenv("RINGLAB_AXIOM_CAP", "5")
    code, doc = run_ok(["verify-theorem", "--ring", "Z6"], schema)
    assert code == EXIT_PASS  # conditions still verified
    assert doc["payload"]["axioms"]["ok"] is None
    assert "skipped" in doc["payload"]["axioms"]


# output formats -----------------------------------------------------------------


def test_json_output_parses_and_validates(capsys, schema):
    assert main(["classify", "--ring", "Z4", "--json"]) == EXIT_PASS
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, schema)
    assert doc["ring"] == "Z4"


def test_human_output(capsys):
    assert main(["verify-theorem", "--ring", "Z6"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert out.startswith("command: verify-theorem")
    assert "status: pass" in out
    assert "(3')" in out and "(4')" in out  # condition labels shown verbatim
    assert "corner inheritance: ok" in out


def test_human_output_witness_failure(capsys):
    code = main(["witness", "--ring", "Z6", "--e", "3", "--a", "3",
                 "--b", "2", "--u", "1"])
    assert code == EXIT_FAIL
    out = capsys.readouterr().out
    assert "error:" in out and "middle_identity_fails" in out


def test_human_output_capped(capsys):
    assert main(["classify", "--ring", "Z40", "--size-cap", "10"]) == EXIT_CAP
    out = capsys.readouterr().out
    assert "status: capped" in out
    assert "exceeds cap 10" in out


def test_usage_error_prints_to_stderr_only(capsys):
    assert main(["classify", "--ring", "Q5"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "bad ring description" in captured.err


def test_entry_raises_system_exit(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["ringlab", "classify", "--ring", "Z4"])
    from ringlab.cli import entry
    with pytest.raises(SystemExit) as exc:
        entry()
    assert exc.value.code == EXIT_PASS


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ringlab", "classify", "--ring", "Z4", "--json"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == EXIT_PASS, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["payload"]["unit_regular_set"] == [0, 1, 3]
