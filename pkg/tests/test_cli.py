import csv
import io
import json

import pytest

from milnor_mu.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_json_record_for_h8(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--h", "8", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record == {
            "h": 8,
            "euler": 1,
            "p1_magnitude": 30,
            "signature": 1,
            "p1_squared": 900,
            "mu": "0",
            "diffeo_s7": True,
            "theta7": 0,
        }

    def test_exotic_h_reports_fraction(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--h", "2", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["mu"] == "1/28"
        assert record["diffeo_s7"] is False
        assert record["theta7"] == 1

    def test_table_format(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--h", "8")
        assert code == 0
        assert "p1_squared" in out and "900" in out

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--h", "8", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:3] == ["h", "euler", "p1_magnitude"]
        assert rows[1][0] == "8"

    def test_huge_h(self, capsys):
        h = str(10**40 + 1)
        code, out, _ = run_cli(capsys, "invariants", "--h", h, "--format", "json")
        assert code == 0
        assert json.loads(out)["h"] == 10**40 + 1


class TestQuotient:
    def test_rp7_for_h8(self, capsys):
        code, out, _ = run_cli(capsys, "quotient", "--h", "8", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["verdict"] == "RP7"
        assert record["mu_quotient"] == ["1/32", "31/32"]
        assert record["a1"] == ["-15/16", "15/16"]
        assert record["a2"] == "1"
        assert record["equivariant_signature"] == 1

    def test_not_applicable_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "quotient", "--h", "2", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["verdict"] == "not_applicable"
        assert record["mu_quotient"] is None


class TestEnumerate:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--modulus", "56", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"modulus": 56, "residues": [0, 1, 8, 49]}

    def test_oversized_modulus_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--modulus", str(10**6 + 1))
        assert code == 1
        assert "modulus" in err


class TestCases:
    def test_all_four_match(self, capsys):
        code, out, _ = run_cli(capsys, "cases", "--k-range", "-10..10", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_match"] is True
        constants = [(c["quad_constant"], c["linear_constant"]) for c in payload["cases"]]
        assert constants == [("0", "-1/32"), ("0", "1/32"), ("1/2", "15/32"), ("0", "1/32")]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "cases", "--k-range", "0..5", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["case", "h_residue", "quad_constant", "linear_constant", "matches"]
        assert [r[0] for r in rows[1:]] == ["I", "II", "III", "IV"]


class TestVerify:
    def test_csv_rows_and_exit(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--h-range", "-56..56", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["h", "residue_class", "mu_quotient_set", "verdict", "pass"]
        assert len(rows) - 1 == 9
        assert all(r[2] == "1/32;31/32" and r[4] == "true" for r in rows[1:])
        assert "checked 9" in err

    def test_json_summary(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--h-range", "0..112", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["checked"] == 9
        assert payload["failed"] == 0
        assert payload["rows"][0]["h"] == 0

    def test_hundred_period_sweep(self, capsys):
        # 4 admissible h per 56-period plus the admissible endpoints
        code, out, _ = run_cli(capsys, "verify", "--h-range", "-5600..5600", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) - 1 == 801
        assert all(r[4] == "true" for r in rows[1:])

    def test_range_with_no_admissible_h(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--h-range", "2..7", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["h,residue_class,mu_quotient_set,verdict,pass"]

    def test_parallel_output_matches_sequential(self, capsys):
        code_a, out_a, _ = run_cli(capsys, "verify", "--h-range", "-200..200", "--format", "csv")
        code_b, out_b, _ = run_cli(
            capsys, "verify", "--h-range", "-200..200", "--format", "csv", "--parallel", "2"
        )
        assert (code_a, code_b) == (0, 0)
        assert out_a == out_b

    def test_parallel_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("MILNOR_MU_PARALLEL", "2")
        code, out, _ = run_cli(capsys, "verify", "--h-range", "-56..56", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 10


class TestCliContract:
    def test_unknown_subcommand_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "bogus")
        assert code == 1

    def test_missing_required_flag_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "invariants")
        assert code == 1

    def test_backwards_range_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--h-range", "5..1")
        assert code == 1

    def test_malformed_range_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "cases", "--k-range", "17")
        assert code == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ("invariants", "--h", "8", "--format", "json"),
            ("quotient", "--h", "49", "--format", "json"),
            ("enumerate", "--modulus", "112", "--format", "csv"),
            ("cases", "--k-range", "-5..5", "--format", "json"),
            ("verify", "--h-range", "-56..56", "--format", "csv"),
        ],
    )
    def test_identical_invocations_are_byte_identical(self, capsys, argv):
        code_a, out_a, _ = run_cli(capsys, *argv)
        code_b, out_b, _ = run_cli(capsys, *argv)
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_json_round_trips(self, capsys):
        for argv in (
            ("invariants", "--h", "8"),
            ("quotient", "--h", "0"),
            ("enumerate", "--modulus", "56"),
            ("cases", "--k-range", "0..0"),
            ("verify", "--h-range", "0..1"),
        ):
            _, out, _ = run_cli(capsys, *argv, "--format", "json")
            payload = json.loads(out)
            assert json.loads(json.dumps(payload)) == payload
