"""Command-line surface: output formats, exit codes, cross-check flags."""

import json

import pytest

from qpl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFigurate:
    def test_csv_rows(self, capsys):
        code, out, _ = run(capsys, "figurate", "--k", "3", "--ell", "1", "--bound", "7")
        assert code == 0
        assert out.splitlines() == ["j,value", "0,0", "1,1", "-1,2", "2,5", "-2,7"]

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "figurate", "--k", "4", "--ell", "2", "--bound", "4",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["rows"] == [
            {"j": 0, "value": 0},
            {"j": -1, "value": 2},
            {"j": 1, "value": 2},
        ]

    def test_bad_params(self, capsys):
        code, _, err = run(capsys, "figurate", "--k", "3", "--ell", "9", "--bound", "5")
        assert code == 2
        assert "ell" in err


class TestPartitions:
    def test_recursion_row_ends_at_42(self, capsys):
        code, out, _ = run(
            capsys, "partitions", "--set", "Jbar:3,1", "--mode", "unrestricted",
            "--n", "10", "--method", "recursion",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,value"
        assert lines[-1] == "10,42"

    def test_check_agrees(self, capsys):
        code, out, _ = run(
            capsys, "partitions", "--set", "J:4,1", "--mode", "distinct",
            "--gamma", "-1", "--n", "20", "--check",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,gf,oracle,recursion,agree"
        assert all(line.endswith(",yes") for line in lines[1:])

    def test_oracle_bound_respected(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, "partitions", "--set", "Jbar:3,1", "--n", "200",
            "--method", "oracle",
        )
        assert code == 2 and "bound" in err
        monkeypatch.setenv("QPL_ORACLE_BOUND", "200")
        code, out, _ = run(
            capsys, "partitions", "--set", "Jbar:3,1", "--n", "200",
            "--method", "oracle",
        )
        assert code == 0
        assert out.splitlines()[-1] == "200,3972999029388"

    def test_hypothesis_violation_named(self, capsys):
        code, _, err = run(
            capsys, "partitions", "--set", "Jbar:4,2", "--n", "10",
            "--method", "recursion",
        )
        assert code == 2
        assert "k/2" in err or "interior" in err

    def test_at_most_needs_d(self, capsys):
        code, _, err = run(
            capsys, "partitions", "--set", "Jbar:3,1", "--mode", "at-most", "--n", "5"
        )
        assert code == 2

    def test_at_most_table(self, capsys):
        code, out, _ = run(
            capsys, "partitions", "--set", "Jbar:3,1", "--mode", "at-most",
            "--d", "1", "--n", "10", "--method", "recursion",
        )
        assert code == 0
        assert out.splitlines()[1:] == [
            f"{n},{v}" for n, v in enumerate((1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10))
        ]


class TestDivisors:
    def test_scan_row(self, capsys):
        code, out, _ = run(capsys, "divisors", "--k", "3", "--ell", "1", "--n", "12")
        assert code == 0
        assert out.splitlines()[-1] == "12,28"

    def test_methods_agree(self, capsys):
        code, out, _ = run(
            capsys, "divisors", "--k", "5", "--ell", "2", "--n", "40", "--check"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,kim,recursion,scan,agree"
        assert all(line.endswith(",yes") for line in lines[1:])

    def test_boundary_rejected(self, capsys):
        code, _, err = run(
            capsys, "divisors", "--k", "4", "--ell", "2", "--n", "10",
            "--method", "recursion",
        )
        assert code == 2
        assert "interior" in err


class TestVerify:
    def test_single_identity(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--identity", "specialized", "--k", "7", "--ell", "2",
            "--sign", "1", "--order", "80",
        )
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 1
        assert reports[0]["outcome"] == "pass"
        assert reports[0]["schema"] == 1
        assert reports[0]["parameters"] == {"ell": 2, "k": 7, "sign": 1}

    @pytest.mark.parametrize(
        "args",
        [
            ("--identity", "triple_product", "--order", "30", "--zwindow", "5"),
            ("--identity", "berger", "--k", "5", "--order", "40"),
            ("--identity", "hermite", "--s", "3"),
            ("--identity", "boundary_half", "--k", "4", "--order", "40"),
            ("--identity", "sylvester", "--k", "5", "--ell", "2", "--order", "40"),
            ("--identity", "partition_shift", "--k", "4", "--ell", "1", "--order", "40"),
            ("--identity", "bounded_mult_shift", "--k", "4", "--ell", "1", "--d", "2", "--order", "40"),
            ("--identity", "apostol", "--k", "4", "--ell", "1", "--order", "40"),
            ("--identity", "kim", "--k", "4", "--ell", "1", "--order", "40"),
        ],
    )
    def test_each_identity_passes(self, capsys, args):
        code, out, _ = run(capsys, "verify", *args)
        assert code == 0
        assert all(r["outcome"] == "pass" for r in json.loads(out))

    def test_all_small_grid(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--all", "--grid", "k=3..4", "--order", "40"
        )
        assert code == 0
        reports = json.loads(out)
        assert len(reports) > 20
        assert all(r["outcome"] == "pass" for r in reports)

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "verify", "--all", "--grid", "k=3..4", "--order", "30")
        _, second, _ = run(capsys, "verify", "--all", "--grid", "k=3..4", "--order", "30")
        assert first == second
        _, threaded, _ = run(
            capsys, "verify", "--all", "--grid", "k=3..4", "--order", "30",
            "--jobs", "3",
        )
        assert first == threaded

    def test_unknown_identity(self, capsys):
        code, _, err = run(capsys, "verify", "--identity", "nope", "--order", "10")
        assert code == 2

    def test_bad_grid(self, capsys):
        code, _, err = run(capsys, "verify", "--all", "--grid", "m=1..2")
        assert code == 2

    def test_missing_action(self, capsys):
        code, _, _ = run(capsys, "verify")
        assert code == 2


class TestTheta:
    def test_value_and_residual(self, capsys):
        code, out, _ = run(
            capsys, "theta", "--variant", "a", "--k", "2", "--ell", "1",
            "--q", "0.3,0", "--z", "1,0", "--tol", "1e-12",
        )
        assert code == 0
        payload = json.loads(out)
        direct = sum(0.3 ** (n * n) for n in range(-20, 21))
        assert abs(payload["value"]["re"] - direct) < 1e-10
        assert abs(payload["value"]["im"]) < 1e-12
        r1, r2 = payload["quasi_periodicity_residual"]
        assert r1 < 1e-10 and r2 == 0.0

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "theta", "--q", "1.5,0", "--z", "1,0")
        assert code == 2

    def test_bad_complex(self, capsys):
        code, _, err = run(capsys, "theta", "--q", "abc", "--z", "1,0")
        assert code == 2


class TestOutputFile:
    def test_write_to_path(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        code, out, _ = run(
            capsys, "figurate", "--k", "3", "--ell", "1", "--bound", "2",
            "--output", str(target),
        )
        assert code == 0 and out == ""
        assert target.read_text().splitlines() == ["j,value", "0,0", "1,1", "-1,2"]
