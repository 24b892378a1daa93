"""Command-line interface: commands, JSON envelopes, exit codes."""

import json
import subprocess
import sys

from saitodual import __version__
from saitodual.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestAnalyze:
    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "x^3*y+y^3")
        assert code == 0
        assert "(2, 3; 9)" in out
        assert "chain(3,3)" in out
        assert "Z9" in out

    def test_smallest_case(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "x^2")
        assert code == 0
        assert "(1; 2)" in out
        assert "chain(2)" in out
        assert "Z2" in out

    def test_matrix_literal(self, capsys):
        code, data = run_json(capsys, "analyze",
                              '{"E": [[3, 0], [1, 2]]}', "--json")
        assert code == 0
        result = data["result"]
        assert result["weights"]["canonical"] == [2, 2]
        assert result["weights"]["degree"] == 6
        assert result["weights"]["gcd"] == 2

    def test_envelope(self, capsys):
        code, data = run_json(capsys, "analyze", "x^2", "--json")
        assert data["tool"] == "saitodual"
        assert data["version"] == __version__
        assert data["command"] == "analyze"
        assert data["input"] == "x^2"
        assert "result" in data

    def test_parse_error_exit_code_and_position(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "x^2 + y^-1")
        assert code == 1
        assert "line 1" in err and "column" in err

    def test_shape_error(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "x^2 + y^2 + x*y")
        assert code == 1
        assert "square" in err


class TestZeta:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "x^3*y+y^3")
        assert code == 0
        assert "(1-t^3)(1-t^9)^-1" in out
        assert "I={y}" in out

    def test_json_shape(self, capsys):
        code, data = run_json(capsys, "zeta", "x^3+x*y^2", "--json")
        assert code == 0
        result = data["result"]
        assert result["classical"] == {"d": 3, "factors": {"3": -1}}
        assert result["group"]["order"] == 6
        assert [t["I"] for t in result["perSubsetTerms"]] == [[1], [1, 2]]


class TestDual:
    def test_pass(self, capsys):
        code, out, _ = run_cli(capsys, "dual", "x^3*y+y^3")
        assert code == 0
        assert "PASS" in out

    def test_json(self, capsys):
        code, data = run_json(capsys, "dual", "x^2", "--json")
        assert code == 0
        assert data["result"]["equal"] is True
        assert data["result"]["kind"] == "theorem"


class TestRoots:
    def test_cyclic_with_roots(self, capsys):
        code, out, _ = run_cli(capsys, "roots", "x^3+x*y^2")
        assert code == 0
        assert "root duality: PASS" in out

    def test_non_cyclic(self, capsys):
        code, out, _ = run_cli(capsys, "roots", "x^2+y^2")
        assert code == 0
        assert "none" in out

    def test_json(self, capsys):
        code, data = run_json(capsys, "roots", "x^3+x*y^2", "--json")
        assert code == 0
        result = data["result"]
        assert result["gcdFactor"] == 2
        assert len(result["roots"]) == 2
        assert result["corollary"]["equal"] is True


class TestEnumerate:
    def test_tiny_family(self, capsys):
        code, data = run_json(capsys, "enumerate", "--max-vars", "1",
                              "--max-exp", "3", "--json")
        assert code == 0
        result = data["result"]
        assert result["total"] == 2
        assert result["theoremFail"] == 0
        assert result["corollaryChecked"] == 2
        assert result["corollaryFail"] == 0

    def test_two_variable_family(self, capsys):
        code, data = run_json(capsys, "enumerate", "--max-vars", "2",
                              "--max-exp", "3", "--sums", "--json")
        assert code == 0
        result = data["result"]
        assert result["theoremFail"] == 0
        assert result["corollaryFail"] == 0
        assert result["failures"] == []
        assert result["total"] == 12

    def test_text_summary(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--max-vars", "1",
                               "--max-exp", "2")
        assert code == 0
        assert "polynomials:" in out

    def test_byte_stable_json(self, capsys):
        _, out1, _ = run_cli(capsys, "enumerate", "--max-vars", "2",
                             "--max-exp", "3", "--json")
        _, out2, _ = run_cli(capsys, "enumerate", "--max-vars", "2",
                             "--max-exp", "3", "--json")
        assert out1 == out2

    def test_truncation_marker_and_exit(self, capsys):
        code, data = run_json(capsys, "enumerate", "--max-vars", "2",
                              "--max-exp", "3", "--limit", "3", "--json")
        assert code == 4
        assert data["result"]["truncated"] is True
        assert data["result"]["total"] == 3

    def test_bounds_validation(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--max-vars", "9")
        assert code == 1
        assert "max-vars" in err
        code, _, err = run_cli(capsys, "enumerate", "--max-exp", "1")
        assert code == 1

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "enumerate", "--max-vars", "1",
                               "--max-exp", "2", "--out", str(target))
        assert code == 0
        data = json.loads(target.read_text())
        assert data["result"]["total"] == 1

    def test_workers_match_serial(self, capsys):
        _, serial = run_json(capsys, "enumerate", "--max-vars", "2",
                             "--max-exp", "3", "--sums", "--json")
        _, parallel = run_json(capsys, "enumerate", "--max-vars", "2",
                               "--max-exp", "3", "--sums", "--workers", "2",
                               "--json")
        assert serial == parallel


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "saitodual", "analyze", "x^2", "--json"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["result"]["group"]["order"] == 2

    def test_version_flag(self):
        proc = subprocess.run(
            [sys.executable, "-m", "saitodual", "--version"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert __version__ in proc.stdout
