"""Smoke tests for the python extension and the CLI binary."""

import json
import os
import subprocess

import pytest

vanishcheck = pytest.importorskip("vanishcheck")

CLI = os.environ.get("VANISHCHECK_CLI")


def test_factorize():
    assert vanishcheck.factorize(280) == [(2, 3), (5, 1), (7, 1)]
    assert vanishcheck.factorize(1) == []
    assert vanishcheck.factorize(2**100) == [(2, 100)]
    with pytest.raises(Exception):
        vanishcheck.factorize(0)


def test_number_theory():
    assert vanishcheck.sieve_primes(10) == [2, 3, 5, 7]
    assert vanishcheck.legendre_valuation(7, 2) == 4
    assert vanishcheck.multiplicative_order(2, 7) == 3
    assert vanishcheck.zsigmondy_prime(2, 6) is None
    assert vanishcheck.zsigmondy_prime(2, 4) == 5
    assert vanishcheck.largest_prime_with_square_below(50) == 7
    assert vanishcheck.check_nagura_interval(100)["verdict"] == "pass"
    assert vanishcheck.check_p_square_lemma(74)["verdict"] == "pass"


def test_partitions_and_characters():
    assert vanishcheck.conjugate([5, 2]) == [2, 2, 1, 1, 1]
    assert vanishcheck.is_self_conjugate([2, 1])
    assert not vanishcheck.is_self_conjugate([5, 2])
    assert len(vanishcheck.partitions_of(8)) == 22
    assert vanishcheck.mn_value([5, 2], [4, 2, 1]) == 0
    assert vanishcheck.mn_value([3], [3]) == 1
    assert vanishcheck.mn_value([2, 2], [2, 2]) == 2
    assert vanishcheck.partition_string([9, 1, 1, 1, 1, 1, 1, 1, 1]) == "(9,1^8)"


def test_class_sizes():
    assert vanishcheck.class_size_alt([4, 2]) == [(2, 1), (3, 2), (5, 1)]  # 90
    assert vanishcheck.splits_in_alternating([9, 1])
    assert vanishcheck.prime_set_of_alternating_order(10) == {2, 3, 5, 7}
    assert vanishcheck.brute_force_classes(4, True)[0][1] == 1


def test_witness_report():
    report = vanishcheck.verify_alternating_witness(10)
    assert report["verdict"] == "pass"
    assert report["p"] == 3 and report["k"] == 1 and report["r"] == 1
    assert report["prime_sets_equal"]
    assert report["mn_value"] == 0

    flagged = vanishcheck.verify_alternating_witness(17)
    assert flagged["verdict"] == "flagged"
    assert flagged["sigma_self_conjugate"]


def test_lie_and_psl2():
    assert "2B2" in vanishcheck.lie_family_ids()
    out = vanishcheck.lie_divisor_check("2B2", 8)
    assert out["verdict"] == "pass"
    assert out["evidence"]["value"] == "280"
    assert vanishcheck.admissible_q("2G2", 1024) == [27, 243]

    c = vanishcheck.psl2_classify(32)
    assert c["branch"] == "mersenne"
    assert c["expression"] == [(3, 1), (11, 1), (31, 1)]
    assert vanishcheck.psl2_classify(5)["canonical_q"] == 4


def test_ingestion_record():
    good = vanishcheck.check_record("PSL3(3)", "4A", 4, 702)
    assert good["verdict"] == "pass"
    bad = vanishcheck.check_record("X", "6A", 6, 360)
    assert bad["verdict"] == "fail"
    wide = vanishcheck.check_record("X", "2A", 2, 10**40)
    assert wide["verdict"] == "unverifiable"


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
class TestCli:
    def run(self, *args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    def test_char_eval(self):
        result = self.run("char-eval", "--sigma", "5,2", "--lambda", "4,2,1")
        assert result.returncode == 0
        assert "value=0" in result.stdout

    def test_usage_error_is_exit_2(self):
        assert self.run("verify-alternating", "--min", "6", "--max", "5").returncode == 2
        assert self.run("no-such-command").returncode == 2
        assert self.run("verify-lie", "--family", "E9").returncode == 2

    def test_records_deterministic_across_jobs(self):
        a = self.run("--format", "records", "--jobs", "1",
                     "verify-alternating", "--min", "6", "--max", "30")
        b = self.run("--format", "records", "--jobs", "8",
                     "verify-alternating", "--min", "6", "--max", "30")
        assert a.returncode == 0 and b.returncode == 0
        assert a.stdout == b.stdout
        lines = [json.loads(line) for line in a.stdout.splitlines()]
        assert lines[0]["command"] == "verify-alternating"
        assert lines[-1]["exit_code"] == 0

    def test_known_exception_toggle(self):
        default = self.run("verify-alternating", "--min", "17", "--max", "17")
        assert default.returncode == 0
        strict = self.run("--no-allow-known-exceptions",
                          "verify-alternating", "--min", "17", "--max", "17")
        assert strict.returncode == 1

    def test_ingest_check(self, tmp_path):
        records = tmp_path / "records.jsonl"
        records.write_text(
            '{"group_label":"A6","class_label":"4B","element_order":4,"class_size":"90"}\n'
        )
        result = self.run("ingest-check", str(records))
        assert result.returncode == 0
        empty = tmp_path / "empty.jsonl"
        empty.write_text("")
        assert self.run("ingest-check", str(empty)).returncode == 0

    def test_selftest(self):
        result = self.run("selftest")
        assert result.returncode == 0
