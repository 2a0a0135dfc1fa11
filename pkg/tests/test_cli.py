"""End-to-end and unit tests for the command-line front end."""

import csv
import json
import subprocess
import sys

import pytest

from carlitzscan.cli import (
    CSV_HEADER,
    DEFAULT_IDENTITIES,
    ReportRecord,
    ScanConfig,
    UsageError,
    _parse_a_values,
    run_oracle_quantities,
    run_verify,
    sieve_odd_primes,
)
from carlitzscan.congruences import CongruenceCheck
from carlitzscan.residues import is_odd_prime


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "carlitzscan", *args],
        capture_output=True,
        text=True,
        timeout=600,
    )


# ---------------------------------------------------------------------------
# unit-level pieces


def test_sieve_odd_primes_small():
    assert sieve_odd_primes(3, 30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert sieve_odd_primes(3, 2) == []
    assert sieve_odd_primes(14, 16) == []
    assert sieve_odd_primes(97, 97) == [97]
    brute = [n for n in range(3, 1000) if is_odd_prime(n)]
    assert sieve_odd_primes(1, 999) == brute


def test_sieve_odd_primes_segmented_window():
    lo, hi = 10_000_000, 10_000_200
    got = sieve_odd_primes(lo, hi)
    assert got == [n for n in range(lo, hi + 1) if is_odd_prime(n)]
    assert 10_000_019 in got


def test_parse_a_values():
    assert _parse_a_values("1,2,3") == (1, 2, 3)
    assert _parse_a_values("1..8") == tuple(range(1, 9))
    assert _parse_a_values("4") == (4,)
    with pytest.raises(UsageError):
        _parse_a_values("x,y")
    with pytest.raises(UsageError):
        _parse_a_values("3..z")


def test_scan_config_validation():
    ScanConfig().validate()
    with pytest.raises(UsageError):
        ScanConfig(p_min=10, p_max=9).validate()
    with pytest.raises(UsageError):
        ScanConfig(p_min=1, p_max=5).validate()
    with pytest.raises(UsageError):
        ScanConfig(jobs=0).validate()
    with pytest.raises(UsageError):
        ScanConfig(fmt="yaml").validate()
    with pytest.raises(UsageError):
        ScanConfig(a_values=(0, 1)).validate()
    with pytest.raises(UsageError):
        ScanConfig(oracle_cap=1001).validate()
    with pytest.raises(UsageError):
        ScanConfig(identities=("nope",)).validate()
    with pytest.raises(UsageError):
        ScanConfig(identities=("exact_1_3",), n_max=301).validate()
    with pytest.raises(UsageError):
        ScanConfig(identities=("exact_1_4",), n_max=201).validate()
    with pytest.raises(UsageError):
        ScanConfig(cd_triples=((0, 0, 1),)).validate()


def test_report_record_serialization():
    c = CongruenceCheck("morley", 7, (), 343, 323, 323, True)
    r = ReportRecord.from_check(c, 12)
    obj = json.loads(r.jsonl())
    assert list(obj) == ["identity", "p", "params", "modulus", "lhs", "rhs", "match", "us"]
    assert obj["modulus"] == "343" and obj["lhs"] == "323" and obj["rhs"] == "323"
    assert obj["match"] is True and obj["us"] == 12
    row = r.csv_row()
    assert row == ["morley", "7", "[]", "343", "323", "323", "true", "12"]


def test_run_verify_identity_filters():
    cfg = ScanConfig(p_min=5, p_max=31, identities=("lemma_2_1_i",), no_timing=True)
    records, code = run_verify(cfg)
    assert code == 0
    assert {r.identity for r in records} == {"lemma_2_1_i"}
    assert len(records) == len(sieve_odd_primes(5, 31))

    cfg = ScanConfig(p_min=5, p_max=31, identities=("eq_2_9",), no_timing=True)
    records, code = run_verify(cfg)
    assert code == 0
    assert {r.identity for r in records} == {"eq_2_9"}

    cfg = ScanConfig(p_min=3, p_max=31, identities=("corollary",), no_timing=True)
    records, code = run_verify(cfg)
    assert code == 0
    assert {r.identity for r in records} == {"corollary_a3", "corollary_a4", "corollary_a5"}


def test_run_verify_sorted_output():
    cfg = ScanConfig(p_min=3, p_max=60, no_timing=True)
    records, code = run_verify(cfg)
    assert code == 0
    keys = [(r.p, r.identity, r.params) for r in records]
    assert keys == sorted(keys)


def test_run_verify_reports_failures_with_exit_1():
    # eps=1, a=0, b=1 sums the alternating binomial row, which is 0,
    # while the closed form wants -1: a genuine mismatch, not an error
    cfg = ScanConfig(
        p_min=5,
        p_max=11,
        identities=("chamberland_dilcher",),
        cd_triples=((1, 0, 1),),
        no_timing=True,
    )
    records, code = run_verify(cfg)
    assert code == 1
    assert records and all(not r.match for r in records)
    assert all(r.lhs == 0 for r in records)


def test_oracle_quantity_filter_runs_clean():
    cfg = ScanConfig(p_min=5, p_max=31, identities=("lemma_2_2",))
    assert run_oracle_quantities(cfg, quiet=True) is None


# ---------------------------------------------------------------------------
# subprocess-level contract


def test_cli_verify_theorem_small_range():
    res = run_cli(
        "verify", "--identity", "theorem_1_1",
        "--p-min", "3", "--p-max", "100", "--a", "1,2,3,4,5",
    )
    assert res.returncode == 0, res.stderr
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 24 * 5  # odd primes up to 100, five powers each
    first = json.loads(lines[0])
    assert first["identity"] == "theorem_1_1" and first["p"] == 3
    assert all(json.loads(l)["match"] is True for l in lines)


def test_cli_verify_exact_identity_count():
    res = run_cli("verify", "--identity", "exact_1_4", "--n-max", "50")
    assert res.returncode == 0, res.stderr
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 50
    assert json.loads(lines[0])["modulus"] == "0"


def test_cli_verify_bad_range_exits_2():
    res = run_cli("verify", "--p-min", "10", "--p-max", "9")
    assert res.returncode == 2
    assert "error" in res.stderr.lower()


def test_cli_verify_unknown_identity_exits_2():
    res = run_cli("verify", "--identity", "nonsense")
    assert res.returncode == 2


def test_cli_verify_unwritable_out_exits_3():
    res = run_cli("verify", "--p-max", "10", "--out", "/no/such/dir/out.jsonl")
    assert res.returncode == 3
    assert "i/o" in res.stderr.lower()


def test_cli_verify_mismatch_exits_1():
    res = run_cli(
        "verify", "--identity", "chamberland_dilcher", "--cd", "1,0,1",
        "--p-min", "5", "--p-max", "7",
    )
    assert res.returncode == 1
    assert '"match": false' in res.stdout


def test_cli_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    res = run_cli(
        "verify", "--identity", "morley", "--p-min", "5", "--p-max", "31",
        "--format", "csv", "--out", str(out), "--no-timing",
    )
    assert res.returncode == 0, res.stderr
    rows = list(csv.reader(out.open()))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 1 + len(sieve_odd_primes(5, 31))
    assert all(r[0] == "morley" and r[6] == "true" and r[7] == "0" for r in rows[1:])


def test_cli_jobs_do_not_change_output(tmp_path):
    f1, f2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["verify", "--p-min", "3", "--p-max", "80", "--no-timing"]
    r1 = run_cli(*args, "--jobs", "1", "--out", str(f1))
    r2 = run_cli(*args, "--jobs", "2", "--out", str(f2))
    assert r1.returncode == 0 and r2.returncode == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_cli_sums_7_profile():
    res = run_cli("sums", "7")
    assert res.returncode == 0
    assert "even double 1/(j^1 k^2)      mod p^1 = 1" in res.stdout
    assert "even double 1/(j^2 k^1)      mod p^1 = 5" in res.stdout
    assert "B_(p-3)                      mod p   = 3" in res.stdout


def test_cli_sums_5_quotient_line():
    res = run_cli("sums", "5")
    assert res.returncode == 0
    assert "q2" in res.stdout and "= 3" in res.stdout


def test_cli_sums_3_rejected():
    res = run_cli("sums", "3")
    assert res.returncode == 2


def test_cli_oracle_small():
    res = run_cli("oracle", "--p-max", "31", "--identity", "lemma_2_2")
    assert res.returncode == 0, res.stderr


def test_cli_oracle_cap_exceeded():
    res = run_cli("oracle", "--p-max", "5000")
    assert res.returncode == 2


def test_cli_default_identity_set():
    res = run_cli("verify", "--p-max", "20", "--no-timing")
    assert res.returncode == 0
    tags = {json.loads(l)["identity"] for l in res.stdout.strip().splitlines()}
    assert tags == {
        "theorem_1_1", "carlitz", "morley",
        "lemma_2_1_i", "lemma_2_1_ii", "lemma_2_2_a", "lemma_2_2_b",
        "eq_2_9", "eq_2_10",
    }
    assert set(DEFAULT_IDENTITIES) == {
        "theorem_1_1", "carlitz", "morley", "lemma_2_1", "lemma_2_2",
        "eq_2_9", "eq_2_10",
    }
