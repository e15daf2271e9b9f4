import json

import pytest

from scv.errors import AmbiguousTwist, BadRange, NoConsistentTwist, UnknownCase
from scv import harness
from scv.harness import (
    CASES,
    STATEMENTS,
    CaseDef,
    CaseSpec,
    CaseRecord,
    calibrate_d1_twist,
    emit_report,
    list_cases,
    registry_selftest,
    run_case,
)
from scv import cli


def test_registry_selftest_clean():
    assert registry_selftest() == []


def test_every_case_names_a_statement():
    for name, cd in CASES.items():
        assert cd.statement_id in STATEMENTS, name


def test_unknown_case():
    with pytest.raises(UnknownCase):
        run_case(CaseSpec("no-such-case"))


def test_rv_d5_example_record():
    report = run_case(CaseSpec("rv-d5", primes=(7, 7)))
    assert report.ok
    rec = report.records[0]
    assert rec.p == 7 and rec.modulus == 343 and rec.status == "pass"
    assert rec.lhs == rec.rhs == 6  # c(7), balanced


def test_skip_record_for_p5():
    report = run_case(CaseSpec("rv-d5", primes=(5, 7)))
    by_p = {r.p: r for r in report.records}
    assert by_p[5].status == "skip"
    assert by_p[5].reason == "p divides d"
    assert by_p[7].status == "pass"


def test_empty_range_report():
    report = run_case(CaseSpec("rv-d5", primes=(8, 10)))
    assert report.records == []
    assert report.summary == {"pass": 0, "fail": 0, "skip": 0}
    text = emit_report(report, "json")
    assert json.loads(text)["records"] == []


def test_gamma_cap_skip():
    report = run_case(CaseSpec("cor-5.2", primes=(7, 31), gamma_cap=12))
    by_p = {r.p: r for r in report.records}
    assert by_p[11].status == "pass"
    assert by_p[13].status == "skip" and "cap" in by_p[13].reason


def test_json_schema_and_determinism():
    a = run_case(CaseSpec("thm-4.3-d2", primes=(3, 31)))
    b = run_case(CaseSpec("thm-4.3-d2", primes=(3, 31)))
    da, db = a.as_dict(), b.as_dict()
    # wall-clock excluded: everything else must be byte-identical
    da["elapsed_ms"] = db["elapsed_ms"] = 0
    assert json.dumps(da) == json.dumps(db)
    assert set(da) == {"case", "params", "records", "summary", "elapsed_ms"}
    rec = da["records"][0]
    assert set(rec) <= {"p", "lhs", "rhs", "modulus", "status", "reason"}
    assert da["summary"] == {"pass": len(da["records"]), "fail": 0, "skip": 0}


def test_csv_flattening(tmp_path):
    report = run_case(CaseSpec("rv-d5", primes=(7, 13)))
    out = tmp_path / "r.csv"
    emit_report(report, "csv", out)
    lines = out.read_text().splitlines()
    assert lines[0] == "case,p,lhs,rhs,modulus,status,reason"
    assert lines[1].startswith("rv-d5,7,6,6,343,pass")
    assert len(lines) == 1 + len(report.records)


def test_threads_match_serial():
    serial = run_case(CaseSpec("thm-4.3-d3", primes=(3, 31), threads=1))
    threaded = run_case(CaseSpec("thm-4.3-d3", primes=(3, 31), threads=3))
    assert [r.as_dict() for r in serial.records] == [r.as_dict() for r in threaded.records]


def test_domain_case_labels():
    report = run_case(CaseSpec("apery-beukers"))
    assert report.ok
    labels = {r.p for r in report.records}
    assert "A,p=5,m=1,r=1" in labels and "B,p=13,m=2,r=2" in labels


def test_calibrate_twists():
    assert calibrate_d1_twist(2) == 1
    assert calibrate_d1_twist(3) == 3
    assert calibrate_d1_twist(4) == 2
    assert calibrate_d1_twist(6) == 1


def test_calibrate_ambiguous_with_single_prime():
    # at q = 11 the symbols of -1 and -3 coincide, so one calibration prime
    # cannot separate the twists
    with pytest.raises(AmbiguousTwist):
        calibrate_d1_twist(2, calibration_primes=[11])


def test_calibrate_rejects_bad_primes():
    with pytest.raises(BadRange):
        calibrate_d1_twist(2, calibration_primes=[3])
    with pytest.raises(BadRange):
        calibrate_d1_twist(3, calibration_primes=[7, 13, 3])


def test_calibrate_no_consistent_twist(monkeypatch):
    monkeypatch.setattr(harness, "legendre", lambda a, p: 0)
    with pytest.raises(NoConsistentTwist):
        calibrate_d1_twist(2, calibration_primes=[7, 11])


def test_identity_case_format():
    report = run_case(CaseSpec("identity-3.2", params={"max_m": 4}))
    assert report.ok
    assert {r.p for r in report.records} == {
        f"m={m},n={n}" for m in range(1, 5) for n in range(1, m + 1)
    }


def test_prop42_records_include_mixed_families():
    report = run_case(CaseSpec("prop-4.2", primes=(13, 13)))
    assert report.ok
    # p = 13: d = 3 and d = 4 families run (including the three-term ones), d = 5 skips
    statuses = [(r.status, r.reason) for r in report.records]
    assert ("skip", "d=5: requires p = 1 (mod 5)") in statuses
    assert sum(1 for s, _ in statuses if s == "pass") == 4


# --- CLI ------------------------------------------------------------------------


def test_cli_verify_pass(capsys):
    rc = cli.main(["verify", "--case", "rv-d5", "--primes", "7..13"])
    out = capsys.readouterr()
    assert rc == 0
    payload = json.loads(out.out)
    assert payload["case"] == "rv-d5"
    assert payload["summary"]["fail"] == 0


def test_cli_verify_unknown_case(capsys):
    assert cli.main(["verify", "--case", "bogus"]) == 2


def test_cli_verify_failure_exit_code(monkeypatch, capsys):
    def always_fails(p, k, ctx, params, shared):
        return [CaseRecord(p, 0, 1, 7, "fail", "rigged")]

    monkeypatch.setitem(
        CASES, "rigged-fail", CaseDef("rigged-fail", "thm-4.3", "prime", always_fails, (7, 7), 1)
    )
    assert cli.main(["verify", "--case", "rigged-fail"]) == 1


def test_cli_count(capsys):
    rc = cli.main(["count", "--prime", "7"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "N_p = 401" in out


def test_cli_gamma(capsys):
    rc = cli.main(["gamma", "--prime", "7", "--power", "1", "--at", "1/2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "= 6" in out


def test_cli_gamma_rejects_composite(capsys):
    assert cli.main(["gamma", "--prime", "9", "--power", "1", "--at", "1/2"]) == 2


def test_cli_etaq(capsys):
    rc = cli.main(["etaq", "--form", "c", "--upto", "8"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[7].split() == ["7", "6"]


def test_cli_identity(capsys):
    assert cli.main(["identity", "--which", "3.2", "--m", "6", "--n", "3"]) == 0
    assert cli.main(["identity", "--which", "3.3", "--m", "3", "--n", "2", "--p-int", "4"]) == 0
    # hypothesis violation -> usage error
    assert cli.main(["identity", "--which", "3.3", "--m", "3", "--n", "1", "--p-int", "4"]) == 2


def test_cli_list(capsys):
    rc = cli.main(["list"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out == list_cases()
    assert "rv-d5" in out
