import json

import pytest

from sdlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSemigroupCommand:
    def test_pair(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "--pair", "3,5")
        assert code == 0
        assert "genus: 4" in out
        assert "frobenius: 7" in out
        assert "gaps: 1, 2, 4, 7" in out

    def test_trivial(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "--gens", "1")
        assert code == 0
        assert "genus: 0" in out

    def test_apery(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "--gens", "4,7,9", "--apery", "4")
        assert code == 0
        assert "apery(4): 0, 9, 14, 7" in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "--pair", "3,5", "--format", "json",
                               "--gap-poly", "--quotient", "2")
        assert code == 0
        obj = json.loads(out)
        assert obj["generators"] == [3, 5]
        assert obj["frobenius"] == 7
        assert obj["genus"] == 4
        assert obj["gaps"] == [1, 2, 4, 7]
        assert obj["gap_poly"] == {"terms": [[1, "1/1"], [2, "1/1"], [4, "1/1"], [7, "1/1"]]}
        assert obj["quotient"]["genus"] == 2

    def test_polynomials_text(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "--pair", "2,3", "--semigroup-poly", "--hilbert", "5")
        assert code == 0
        assert "semigroup_poly: 1 - q + q^2" in out

    def test_gcd_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "semigroup", "--pair", "4,6")
        assert code == 2
        assert "error" in err

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["semigroup"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["semigroup", "--pair", "3,5", "--bogus"])
        assert exc.value.code == 2


class TestDedekindCommand:
    def test_sum(self, capsys):
        code, out, _ = run_cli(capsys, "dedekind", "3", "5", "--sum")
        assert code == 0
        assert "s(3, 5) = 0" in out

    def test_sum_one_third(self, capsys):
        code, out, _ = run_cli(capsys, "dedekind", "1", "3", "--sum")
        assert code == 0
        assert "1/18" in out

    def test_voronoi(self, capsys):
        code, out, _ = run_cli(capsys, "dedekind", "3", "5", "--voronoi", "1", "1")
        assert code == 0
        assert "= 13" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "dedekind", "3", "5", "--sum", "--zolotarev", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["dedekind_sum"]["sawtooth"] == "0"
        assert obj["zolotarev"] == [0, 3, 1, 4, 2]

    def test_gcd_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "dedekind", "4", "6", "--sum")
        assert code == 2


class TestVerifyCommand:
    ARGS = ("verify", "--pairs-max", "7", "--semigroups", "1", "--member-max", "6", "--seed", "0")

    def test_exit_zero_and_report(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code, _, err = run_cli(capsys, *self.ARGS, "--out", str(out_file))
        assert code == 0
        objs = json.loads(out_file.read_text())
        assert objs
        assert all(o["verdict"] in ("pass", "expected-discrepancy") for o in objs)
        assert "checked" in err

    def test_byte_identical_runs(self, capsys, tmp_path):
        f1, f2 = tmp_path / "r1.json", tmp_path / "r2.json"
        run_cli(capsys, *self.ARGS, "--out", str(f1))
        run_cli(capsys, *self.ARGS, "--out", str(f2))
        assert f1.read_bytes() == f2.read_bytes()

    def test_csv_and_json_same_content(self, capsys, tmp_path):
        fj, fc = tmp_path / "r.json", tmp_path / "r.csv"
        run_cli(capsys, *self.ARGS, "--out", str(fj))
        run_cli(capsys, *self.ARGS, "--format", "csv", "--out", str(fc))
        objs = json.loads(fj.read_text())
        lines = fc.read_text().strip().split("\n")
        assert len(lines) - 1 == len(objs)
        for line, obj in zip(lines[1:], objs):
            ident, params, mode, residual, verdict, _ = line.split(",", 5)
            assert ident == obj["id"]
            assert mode == obj["mode"]
            assert verdict == obj["verdict"]
            parsed = {k: int(v) for k, v in (kv.split("=") for kv in params.split(";"))} if params else {}
            assert parsed == obj["params"]
            assert float(residual) == obj["residual"]

    def test_empty_run(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--pairs-max", "0")
        assert code == 0
        assert json.loads(out) == []
        assert "empty" in err

    def test_identity_filter(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--pairs-max", "10", "--semigroups", "0",
                               "--identity", "prop6")
        assert code == 0
        objs = json.loads(out)
        assert objs and all(o["id"] == "prop6.eq7" for o in objs)

    def test_expected_discrepancy_does_not_fail_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--pairs-max", "6", "--semigroups", "0",
                               "--identity", "prop4")
        assert code == 0
        objs = json.loads(out)
        assert any(o["verdict"] == "expected-discrepancy" for o in objs)

    def test_threads_match_single(self, capsys, tmp_path):
        f1, f2 = tmp_path / "t1.json", tmp_path / "t2.json"
        run_cli(capsys, *self.ARGS, "--out", str(f1))
        run_cli(capsys, *self.ARGS, "--threads", "4", "--out", str(f2))
        assert f1.read_bytes() == f2.read_bytes()

    def test_thread_env_cap(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SDLAB_THREADS", "1")
        f1 = tmp_path / "capped.json"
        code, _, _ = run_cli(capsys, *self.ARGS, "--threads", "16", "--out", str(f1))
        assert code == 0 and json.loads(f1.read_text())


class TestTableCommand:
    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--pairs-max", "6")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "a,b,genus,frobenius,dedekind_sum,v11"
        assert "3,5,4,7,0,13" in lines

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--pairs-max", "5", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert {"a": 3, "b": 5, "genus": 4, "frobenius": 7, "dedekind_sum": "0", "v11": 13} in rows
