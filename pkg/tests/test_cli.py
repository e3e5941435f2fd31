import io
import json
import os

from cyclolab.cli import dispatch


def run_cli(argv):
    out = io.StringIO()
    code = dispatch(argv, out)
    return code, out.getvalue()


class TestPoly:
    def test_json_coefficient(self):
        code, out = run_cli(["poly", "105", "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 105
        assert obj["coeffs"][7] == "-2"

    def test_text(self):
        code, out = run_cli(["poly", "6"])
        assert code == 0
        assert out.strip() == "x^2 - x + 1"


class TestEval:
    def test_integer_point(self):
        assert run_cli(["eval", "6", "2"]) == (0, "3\n")

    def test_fraction_point(self):
        assert run_cli(["eval", "4", "1/2"]) == (0, "5/4\n")


class TestOrder:
    def test_class(self):
        code, out = run_cli(["order", "class", "8"])
        assert code == 0
        assert out.split() == ["15", "20", "24", "16", "30"]

    def test_prefix_json(self):
        code, out = run_cli(["order", "prefix", "2", "--format", "json"])
        assert json.loads(out) == [1, 2, 6, 4, 3]

    def test_gap(self):
        assert run_cli(["order", "gap", "12"]) == (0, "2\n")

    def test_consecutive(self):
        code, out = run_cli(["order", "consecutive", "18", "9"])
        assert code == 0 and out.strip() == "consecutive"

    def test_consecutive_needs_two(self):
        code, _ = run_cli(["order", "consecutive", "18"])
        assert code == 2


class TestRoots:
    def test_exception_pair(self):
        code, out = run_cli(["roots", "2", "6", "--digits", "6"])
        assert code == 0
        obj = json.loads(out)
        assert [r["value"] for r in obj["roots"]] == ["0.000000", "2.000000"]

    def test_complex_flag(self):
        code, out = run_cli(["roots", "1", "3", "--digits", "6", "--complex"])
        obj = json.loads(out)
        kinds = [r["kind"] for r in obj["roots"]]
        assert kinds == ["complex", "complex"]


class TestBang:
    def test_exception(self):
        assert run_cli(["bang", "2", "1", "6"]) == (0, "bang_2_6\n")

    def test_prime(self):
        assert run_cli(["bang", "2", "1", "4"]) == (0, "5\n")

    def test_bad_input(self):
        code, _ = run_cli(["bang", "4", "2", "3"])
        assert code == 2


class TestTable:
    def test_csv_shape_and_first_row(self):
        code, out = run_cli(["table1"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "p,q,r,beta,alpha,inv_gap,scaled_gap"
        assert len(lines) == 11
        first = lines[1].split(",")
        assert first[:3] == ["3", "5", "7"]
        assert first[3] == "1.90040519768798"
        assert first[4] == "1.92756197548293"


class TestBounds:
    def test_grid_ok(self):
        code, out = run_cli(["bounds", "--n-max", "8", "--xs", "2,5/2"])
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert len(rows) == 16
        assert all(r["holds"] for r in rows)
        eq = [(r["n"], r["point"]) for r in rows if r["equality"]]
        assert eq == [(1, "2")]


class TestVerifyRational:
    def test_small(self):
        code, out = run_cli(["verify-rational", "--height", "3", "--max-index", "8"])
        assert code == 0
        obj = json.loads(out)
        assert obj["integers"]["coincidences"] == [[2, 2, 6]]
        assert obj["fractions"]["coincidences"] == []


class TestScan:
    def test_deterministic_across_jobs(self):
        _, out1 = run_cli(["scan", "--max-index", "8", "--jobs", "1", "--digits", "10"])
        _, out2 = run_cli(["scan", "--max-index", "8", "--jobs", "2", "--digits", "10"])
        assert out1 == out2

    def test_exit_zero_and_exception_flag(self):
        code, out = run_cli(["scan", "--max-index", "8", "--digits", "10"])
        assert code == 0
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["window_holds"] and summary["exception_found"]

    def test_resume_matches_fresh(self, tmp_path):
        full = tmp_path / "full.jsonl"
        part = tmp_path / "part.jsonl"
        run_cli(["scan", "--max-index", "7", "--digits", "10", "--out", str(full)])
        lines = full.read_text().splitlines()
        part.write_text("\n".join(lines[:5]) + "\n")
        code, _ = run_cli(
            ["scan", "--max-index", "7", "--digits", "10", "--out", str(part), "--resume"]
        )
        assert code == 0
        fresh = {tuple(json.loads(l).get(k) for k in ("m", "n")) for l in lines if '"m"' in l}
        resumed_lines = part.read_text().splitlines()
        resumed = {
            tuple(json.loads(l).get(k) for k in ("m", "n")) for l in resumed_lines if '"m"' in l
        }
        assert fresh == resumed

    def test_resume_requires_out(self):
        code, _ = run_cli(["scan", "--max-index", "6", "--resume"])
        assert code == 2

    def test_complex_scan_summary(self):
        code, out = run_cli(["scan", "--max-index", "5", "--complex", "--digits", "10"])
        assert code == 0
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["boundary_upper"] == [[1, 3], [1, 4], [1, 5]]
        assert summary["outside"] == []


class TestUsage:
    def test_unknown_command(self):
        code, _ = run_cli(["frobnicate"])
        assert code == 2

    def test_no_command(self):
        code, _ = run_cli([])
        assert code == 2


class TestJobsEnv:
    def test_env_overrides(self, monkeypatch):
        from cyclolab.roots import effective_jobs

        monkeypatch.setenv("CYCLOLAB_JOBS", "3")
        assert effective_jobs(1) == 3
        monkeypatch.delenv("CYCLOLAB_JOBS")
        assert effective_jobs(4) == 4
        assert effective_jobs(None) >= 1
